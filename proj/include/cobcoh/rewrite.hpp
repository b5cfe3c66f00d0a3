#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cobcoh/arrow.hpp"
#include "cobcoh/random_terms.hpp"

namespace cobcoh {

struct RewriteStep {
  std::string rule;
  /// Child-index path of the rewritten subterm.
  std::vector<std::size_t> path;
};

/// Two terms related by a chain of equational rewrites, hence equal in the
/// free category of the mode.
struct RewritePair {
  Arrow lhs;
  Arrow rhs;
  std::vector<RewriteStep> steps;
};

/// Names of the rewrite rules usable in `mode`.
std::vector<std::string> rewrite_rules(Mode mode);

/// Applies one axiom instance, in a random direction, at a random subterm.
/// Returns nullopt when no rule matches anywhere.
std::optional<Arrow> apply_random_rewrite(Rng& rng, const TermShape& shape,
                                          const Arrow& t,
                                          RewriteStep* step = nullptr);

/// A proper random seed term and the result of `steps` rewrites of it.
RewritePair rewrite_pair(Rng& rng, const TermShape& shape, std::size_t steps);

}  // namespace cobcoh
