#pragma once

#include <string>

#include "json.hpp"

#include "cobcoh/cob_matrix.hpp"

namespace cobcoh {

using Json = nlohmann::ordered_json;

/// Fields in fixed order: shape, rows, cols, entries. Boundaries are sign
/// strings; each entry is a list of {pairs, circles} in multiset order.
Json to_json(const Cobordism& c);
Json to_json(const MultiCob& m);
Json to_json(const CobMatrix& m);

CobMatrix matrix_from_json(const Json& j);

/// Line-oriented rendering with the same fields as the JSON form.
std::string to_text(const MultiCob& m);
std::string to_text(const CobMatrix& m);

}  // namespace cobcoh
