#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cobcoh {

/// 1-based line/column inside the text handed to a parser.
struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

std::string to_string(const Position& pos);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(Position pos, const std::string& message);

  const Position& position() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  Position pos_;
  std::string message_;
};

/// A construct that exists in the language but not in the active mode,
/// e.g. a dual object in SMCB.
class ModeError : public Error {
 public:
  using Error::Error;
};

/// Ill-typed arrow term. `path()` lists child indices from the root down to
/// the offending subterm, rendered as "root", "root.0.1", ...
class TypeError : public Error {
 public:
  TypeError(std::string path, const std::string& message);

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Shape or boundary mismatch inside the cobordism model.
class CobError : public Error {
 public:
  using Error::Error;
};

}  // namespace cobcoh
