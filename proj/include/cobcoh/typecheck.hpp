#pragma once

#include "cobcoh/arrow.hpp"
#include "cobcoh/mode.hpp"
#include "cobcoh/object.hpp"

namespace cobcoh {

struct ArrowType {
  Object source;
  Object target;

  friend bool operator==(const ArrowType&, const ArrowType&) = default;
};

/// Whether a node kind may appear in a term of the given mode (sugar
/// included). DCCB accepts alpha', lambda', eta[a], inj1/inj2 as sugar.
bool kind_allowed(ArrowKind kind, Mode mode);

/// Whether a node kind survives expand_derived in the given mode.
bool kind_primitive(ArrowKind kind, Mode mode);

/// Throws ModeError on the first node kind or object connective not legal
/// in `mode`.
void check_arrow_mode(const Arrow& t, Mode mode);

/// Source and target of a well-typed term; throws TypeError naming the
/// path of the offending subterm, or ModeError.
ArrowType infer_type(const Arrow& t, Mode mode);

/// Type of a generator node from its subscripts alone.
ArrowType generator_type(const Arrow& t);

}  // namespace cobcoh
