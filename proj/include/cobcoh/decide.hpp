#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cobcoh/arrow.hpp"
#include "cobcoh/cob_matrix.hpp"
#include "cobcoh/mode.hpp"
#include "cobcoh/serialize.hpp"

namespace cobcoh {

struct Verdict {
  enum class Kind { Equal, NotEqual, Inconclusive };

  Kind kind = Kind::Equal;
  std::string reason;  // Inconclusive only
  /// G-images of the two sides, when requested.
  std::optional<std::pair<CobMatrix, CobMatrix>> images;

  /// "equal", "not-equal" or "inconclusive: <reason>".
  std::string to_string() const;
  Json to_json() const;
};

struct DecideOptions {
  /// Always compute both images and attach them to the verdict, skipping
  /// the cardinality shortcut.
  bool certificate = false;
};

/// Equal when the terms are identical, or when the images agree and the
/// endpoints are proper (always, in the compact modes). NotEqual when the
/// images differ. Inconclusive otherwise. Throws TypeError if f and g are
/// not parallel.
Verdict decide_equal(const Arrow& f, const Arrow& g, Mode mode,
                     const DecideOptions& options = {});

}  // namespace cobcoh
