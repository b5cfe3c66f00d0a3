#include "cobcoh/decide.hpp"

#include "cobcoh/biproduct.hpp"
#include "cobcoh/error.hpp"
#include "cobcoh/interpret.hpp"
#include "cobcoh/render.hpp"
#include "cobcoh/typecheck.hpp"

namespace cobcoh {

std::string Verdict::to_string() const {
  switch (kind) {
    case Kind::Equal: return "equal";
    case Kind::NotEqual: return "not-equal";
    case Kind::Inconclusive: return "inconclusive: " + reason;
  }
  return {};
}

Json Verdict::to_json() const {
  Json out;
  switch (kind) {
    case Kind::Equal: out["verdict"] = "equal"; break;
    case Kind::NotEqual: out["verdict"] = "not-equal"; break;
    case Kind::Inconclusive:
      out["verdict"] = "inconclusive";
      out["reason"] = reason;
      break;
  }
  if (images) {
    out["certificate"]["lhs"] = cobcoh::to_json(images->first);
    out["certificate"]["rhs"] = cobcoh::to_json(images->second);
  }
  return out;
}

namespace {

std::optional<std::string> improper_reason(const ArrowType& ty) {
  for (const auto& [role, a] : {std::pair<const char*, const Object&>{"source", ty.source},
                                {"target", ty.target}}) {
    if (auto bad = find_improper_subformula(a))
      return std::string(role) + " " + render(a) + " is not proper (" +
             render(*bad) + ")";
  }
  return std::nullopt;
}

}  // namespace

Verdict decide_equal(const Arrow& f, const Arrow& g, Mode mode,
                     const DecideOptions& options) {
  ArrowType tf = infer_type(f, mode);
  ArrowType tg = infer_type(g, mode);
  if (tf != tg)
    throw TypeError("root", "arrows are not parallel: " + render(tf.source) +
                                " -> " + render(tf.target) + " versus " +
                                render(tg.source) + " -> " + render(tg.target));
  Verdict v;
  if (f == g && !options.certificate) return v;
  if (!options.certificate &&
      interpret_cardinality(f, mode) != interpret_cardinality(g, mode)) {
    v.kind = Verdict::Kind::NotEqual;
    return v;
  }
  CobMatrix gf = interpret_arrow(f, mode);
  CobMatrix gg = interpret_arrow(g, mode);
  bool same = gf == gg;
  if (options.certificate) v.images.emplace(std::move(gf), std::move(gg));
  if (f == g) return v;
  if (!same) {
    v.kind = Verdict::Kind::NotEqual;
  } else if (mode == Mode::Smcb) {
    if (auto reason = improper_reason(tf)) {
      v.kind = Verdict::Kind::Inconclusive;
      v.reason = *reason;
    }
  }
  return v;
}

}  // namespace cobcoh
