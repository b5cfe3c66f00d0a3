#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cobcoh/arrow.hpp"
#include "cobcoh/error.hpp"
#include "cobcoh/mode.hpp"
#include "cobcoh/object.hpp"
#include "cobcoh/parser.hpp"

namespace cobcoh {

/// Any failure while reading a query file, located as file:line:col.
class QueryError : public Error {
 public:
  QueryError(const std::string& file, Position pos, const std::string& message);

  const Position& position() const { return pos_; }

 private:
  Position pos_;
};

struct Directive {
  enum class Kind { Check, Normalize, Interpret, Decompose };

  Kind kind;
  Position pos;
  std::string text;  // the directive line without comment or padding
  Arrow lhs;         // check, normalize, interpret
  Arrow rhs;         // check
  Object object;     // decompose
};

std::string_view to_string(Directive::Kind kind);

struct QueryFile {
  Mode mode = Mode::Smcb;
  Environment env;
  std::vector<Directive> directives;
};

/// Reads `mode`, `obj`, `arrow` lines and directives in order. A `mode` line
/// must precede every other line; `fallback` applies when there is none,
/// and it is an error for an explicit `forced` mode to disagree with the
/// file.
QueryFile parse_query_file(std::string_view text, const std::string& file,
                           Mode fallback = Mode::Smcb,
                           std::optional<Mode> forced = std::nullopt);

/// Parses the argument of a single directive against an existing file, as
/// with `-e`.
Directive parse_directive(Directive::Kind kind, std::string_view argument,
                          const QueryFile& context, const std::string& file,
                          Position origin = {});

}  // namespace cobcoh
