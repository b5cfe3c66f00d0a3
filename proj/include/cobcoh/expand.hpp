#pragma once

#include "cobcoh/arrow.hpp"
#include "cobcoh/mode.hpp"

namespace cobcoh {

/// Contravariant action of -o on a single arrow: for f : a -> a',
///   f -o b = [a -o eps[a',b]] . [a -o f (x) id[a' -o b]] . eta[a, a' -o b]
/// of type a' -o b -> a -o b.
Arrow hom_contravariant(const Arrow& f, const Object& a, const Object& a_prime,
                        const Object& b);

/// Dual of f : a -> b in a compact mode, f* : b* -> a*, spelled with
/// eta[a], eps[b] and the structural isomorphisms.
Arrow dual_arrow(const Arrow& f, const Object& a, const Object& b);

/// Rewrites derived forms into primitives for the mode: hom(f,g) in SMCB;
/// alpha', lambda', eta[a], inj1, inj2 in DCCB (via the dagger). Terms
/// already in primitive form are returned unchanged (same node).
Arrow expand_derived(const Arrow& t, Mode mode);

}  // namespace cobcoh
