#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "cobcoh/cobordism.hpp"

namespace cobcoh {

/// Arrow of 1Cob+: a finite multiset of parallel cobordisms, kept sorted.
/// The empty multiset is the zero arrow.
class MultiCob {
 public:
  MultiCob() = default;
  MultiCob(Boundary source, Boundary target);
  MultiCob(Boundary source, Boundary target, std::vector<Cobordism> elements);
  explicit MultiCob(Cobordism single);

  const Boundary& source() const { return source_; }
  const Boundary& target() const { return target_; }
  const std::vector<Cobordism>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  friend bool operator==(const MultiCob&, const MultiCob&) = default;
  friend std::strong_ordering operator<=>(const MultiCob& a,
                                          const MultiCob& b);

 private:
  Boundary source_;
  Boundary target_;
  std::vector<Cobordism> elements_;
};

/// Multiset union; requires equal source and target.
MultiCob operator+(const MultiCob& f, const MultiCob& g);
MultiCob& operator+=(MultiCob& f, const MultiCob& g);
/// { g_j . f_i } over all pairs.
MultiCob compose(const MultiCob& g, const MultiCob& f);
MultiCob tensor(const MultiCob& f, const MultiCob& g);
MultiCob dual(const MultiCob& f);
MultiCob dagger(const MultiCob& f);

}  // namespace cobcoh
