#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cobcoh/arrow.hpp"
#include "cobcoh/mode.hpp"

namespace cobcoh {

/// mt19937_64 with modulo reduction, so that sequences are identical on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[below(xs.size())];
  }

 private:
  std::mt19937_64 engine_;
};

/// Seed for an independent stream, e.g. one per axiom family.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

struct TermShape {
  Mode mode = Mode::Smcb;
  std::size_t object_depth = 2;
  std::size_t term_depth = 3;
  /// Depth of objects introduced by annotations inside terms (eta[a,..],
  /// zero[..,b], inj1[..,b]).
  std::size_t annotation_depth = 1;
  std::vector<std::string> generators{"p", "q"};
  bool units = true;  // draw I and 0 as atoms
};

Object random_object(Rng& rng, const TermShape& shape, std::size_t depth);
inline Object random_object(Rng& rng, const TermShape& shape) {
  return random_object(rng, shape, shape.object_depth);
}

/// Well-typed term of the given source with a random target.
Arrow random_arrow_from(Rng& rng, const TermShape& shape, const Object& source,
                        std::size_t depth);
/// Well-typed term of the given target with a random source.
Arrow random_arrow_into(Rng& rng, const TermShape& shape, const Object& target,
                        std::size_t depth);
/// Generator node (no combinators) with the given source or target.
Arrow random_leaf_from(Rng& rng, const TermShape& shape, const Object& source);
Arrow random_leaf_into(Rng& rng, const TermShape& shape, const Object& target);

/// Random source of depth shape.object_depth, then random_arrow_from.
Arrow random_arrow(Rng& rng, const TermShape& shape);

/// A second term parallel to f: zero, f itself, padded by identities or
/// unit isomorphisms, or f plus zero.
Arrow random_parallel(Rng& rng, const Arrow& f, const Object& source,
                      const Object& target);

/// random_arrow restricted to proper endpoints (retries, then falls back to
/// an identity on a generator).
Arrow random_proper_arrow(Rng& rng, const TermShape& shape);

}  // namespace cobcoh
