#pragma once

#include <string>

#include "cobcoh/cob_matrix.hpp"

namespace cobcoh {

/// One digraph per matrix entry, named <name>_<i>_<j>. Each cobordism of the
/// multiset is a cluster with source points on the top rank, target points
/// on the bottom rank, one edge per matched pair, and its circle count in
/// the label.
std::string to_dot(const CobMatrix& m, const std::string& name);

}  // namespace cobcoh
