#pragma once

#include <string>

#include "cobcoh/arrow.hpp"
#include "cobcoh/object.hpp"

namespace cobcoh {

/// Concrete syntax accepted by the parser, with the fewest parentheses that
/// still parse back to the same tree.
std::string render(const Object& a);
std::string render(const Arrow& t);

}  // namespace cobcoh
