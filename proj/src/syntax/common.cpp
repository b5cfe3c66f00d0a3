#include <string>

#include "cobcoh/error.hpp"
#include "cobcoh/mode.hpp"

namespace cobcoh {

std::string to_string(const Position& pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

SyntaxError::SyntaxError(Position pos, const std::string& message)
    : Error(to_string(pos) + ": " + message), pos_(pos), message_(message) {}

TypeError::TypeError(std::string path, const std::string& message)
    : Error("type error at " + path + ": " + message), path_(std::move(path)) {}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Smcb: return "smcb";
    case Mode::Ccb: return "ccb";
    case Mode::Dccb: return "dccb";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "smcb") return Mode::Smcb;
  if (text == "ccb") return Mode::Ccb;
  if (text == "dccb") return Mode::Dccb;
  return std::nullopt;
}

}  // namespace cobcoh
