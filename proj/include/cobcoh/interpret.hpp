#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cobcoh/arrow.hpp"
#include "cobcoh/cob_matrix.hpp"
#include "cobcoh/mode.hpp"

namespace cobcoh {

/// G on objects: generator -> <+>, I -> <()>, 0 -> <>, (x) and -o by
/// Kronecker concatenation (flipping the left factor of -o), (+) by
/// concatenation, * by flipping every boundary.
std::vector<Boundary> interpret_object(const Object& a);

/// For each component a^i of decompose(a), its position in interpret_object(a),
/// or nullopt when G(a^i) is empty (a 0-valued component).
std::vector<std::optional<std::size_t>> component_slots(const Object& a);

/// G on arrows, by structural recursion. Accepts the sugar forms (hom, and
/// the dagger-derived families in DCCB) directly. Throws TypeError or
/// ModeError on ill-formed input.
CobMatrix interpret_arrow(const Arrow& t, Mode mode);

/// Entrywise cardinality of interpret_arrow(t), computed in Mat_N without
/// building any cobordism for composite nodes.
NatMatrix interpret_cardinality(const Arrow& t, Mode mode);

/// G(pi^i_target . t . iota^j_source), the direct definition of entry (i, j)
/// over the component indices of decompose. nullopt when either component
/// is 0-valued, so that its image has no entry. Throws CobError when an
/// index is out of range.
std::optional<MultiCob> entry_oracle(const Arrow& t, std::size_t i,
                                     std::size_t j, Mode mode);

}  // namespace cobcoh

namespace cobcoh {

/// Largest rows * cols over the images of all subterms of t, computed from
/// object sizes alone.
std::size_t max_image_cells(const Arrow& t);

}  // namespace cobcoh
