#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "cobcoh/arrow.hpp"
#include "cobcoh/object.hpp"

namespace cobcoh {

/// Splitting of an object into oplus-free components a^i together with the
/// injections iota^i : a^i -> a and projections pi^i : a -> a^i.
struct Decomposition {
  std::vector<Object> components;
  std::vector<Arrow> injections;
  std::vector<Arrow> projections;

  std::size_t size() const { return components.size(); }
};

/// Recursive clauses: oplus-free objects decompose trivially; (x) and -o
/// take row-major products of the factor sequences (index i splits as
/// i / n2, i % n2), with iota and pi swapped on the left of -o; (+)
/// concatenates the left block and then the right block. A dual a* uses the
/// duals of the components of a, with iota and pi exchanged and dualised.
/// Results are memoized in a process-wide thread-safe cache.
std::shared_ptr<const Decomposition> decompose(const Object& a);

enum class Valuation { IValued, ZeroValued, Neither };

Valuation valuation(const Object& a);

/// First subformula b -o c (pre-order) with c I-valued and b neither
/// I-valued nor 0-valued.
std::optional<Object> find_improper_subformula(const Object& a);

inline bool is_proper(const Object& a) {
  return !find_improper_subformula(a).has_value();
}

}  // namespace cobcoh
