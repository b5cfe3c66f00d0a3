#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cobcoh {

enum class Sign : std::uint8_t { Plus, Minus };

/// Object of 1Cob: an ordered sequence of oriented points.
using Boundary = std::vector<Sign>;

Boundary flip(const Boundary& b);
Boundary concat(const Boundary& a, const Boundary& b);

/// "+-+" style; the empty boundary is the empty string.
std::string to_string(const Boundary& b);
Boundary parse_boundary(std::string_view text);

/// Arrow of 1Cob. Points are numbered source first (0 .. s-1), then target
/// (s .. s+t-1); `pairs` is a perfect matching on them, stored as sorted
/// (low, high) pairs. `circles` counts closed components.
class Cobordism {
 public:
  using Pair = std::pair<std::uint32_t, std::uint32_t>;

  /// Validates the matching and sign rule, then canonicalizes.
  Cobordism(Boundary source, Boundary target, std::vector<Pair> pairs,
            std::uint64_t circles = 0);

  static Cobordism identity(const Boundary& b);
  /// a (x) b -> b (x) a, crossing the two blocks.
  static Cobordism braid(const Boundary& a, const Boundary& b);

  const Boundary& source() const { return source_; }
  const Boundary& target() const { return target_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::uint64_t circles() const { return circles_; }

  Sign sign_at(std::size_t point) const;

  friend bool operator==(const Cobordism&, const Cobordism&) = default;
  friend std::strong_ordering operator<=>(const Cobordism& a,
                                          const Cobordism& b);

 private:
  struct Trusted {};
  Cobordism(Trusted, Boundary source, Boundary target,
            std::vector<Pair> pairs, std::uint64_t circles);

  Boundary source_;
  Boundary target_;
  std::vector<Pair> pairs_;
  std::uint64_t circles_ = 0;

  friend Cobordism glue(const Cobordism& g, const Cobordism& f);
  friend Cobordism tensor_cob(const Cobordism& f, const Cobordism& g);
  friend Cobordism dual_cob(const Cobordism& f);
  friend Cobordism dagger_cob(const Cobordism& f);
};

/// g after f; requires target(f) == source(g).
Cobordism glue(const Cobordism& g, const Cobordism& f);
Cobordism tensor_cob(const Cobordism& f, const Cobordism& g);
/// f : a -> b gives flip(b) -> flip(a).
Cobordism dual_cob(const Cobordism& f);
/// f : a -> b gives b -> a with the orientation reversed.
Cobordism dagger_cob(const Cobordism& f);

}  // namespace cobcoh
