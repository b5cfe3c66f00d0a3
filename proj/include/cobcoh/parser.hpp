#pragma once

#include <map>
#include <string>
#include <string_view>

#include "cobcoh/arrow.hpp"
#include "cobcoh/error.hpp"
#include "cobcoh/mode.hpp"
#include "cobcoh/object.hpp"

namespace cobcoh {

/// Named definitions visible to the parser. Object names shadow generators;
/// arrow names are the only bare identifiers allowed in arrow expressions.
struct Environment {
  std::map<std::string, Object, std::less<>> objects;
  std::map<std::string, Arrow, std::less<>> arrows;
};

struct ParseOptions {
  Mode mode = Mode::Smcb;
  const Environment* env = nullptr;
  /// Position of the first character of the text, for error reporting.
  Position origin{};
};

/// Words that can never name a generator.
bool is_reserved_word(std::string_view word);

Object parse_object(std::string_view text, const ParseOptions& opts);
inline Object parse_object(std::string_view text, Mode mode = Mode::Smcb) {
  return parse_object(text, ParseOptions{mode, nullptr, {}});
}

/// Parses and typechecks. Throws SyntaxError, ModeError or TypeError.
Arrow parse_arrow(std::string_view text, const ParseOptions& opts);
inline Arrow parse_arrow(std::string_view text, Mode mode = Mode::Smcb) {
  return parse_arrow(text, ParseOptions{mode, nullptr, {}});
}

/// Parses without typechecking (mode legality is still enforced).
Arrow parse_arrow_untyped(std::string_view text, const ParseOptions& opts);

}  // namespace cobcoh
