#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cobcoh/arrow.hpp"

namespace cobcoh {

/// Matrix of formal sums of pure terms, indexed by the components of the
/// target (rows) and the source (columns). An empty sum is the zero arrow.
struct TermMatrix {
  std::vector<Object> rows;
  std::vector<Object> cols;
  std::vector<std::vector<Arrow>> entries;  // row-major, summands sorted

  const std::vector<Arrow>& at(std::size_t i, std::size_t j) const {
    return entries[i * cols.size() + j];
  }

  /// The entry as one term: summands joined by +, or zero[col, row].
  Arrow entry_term(std::size_t i, std::size_t j) const;
};

/// SMCB only: eliminates (+), inj and proj. hom(f,g) is expanded first.
TermMatrix normalize_syntactic(const Arrow& t);

/// "[e00, e01; e10, e11]", with an empty sum written 0.
std::string render(const TermMatrix& m);

}  // namespace cobcoh
