#include "cobcoh/axioms.hpp"

#include <optional>
#include <sstream>

#include "cobcoh/expand.hpp"
#include "cobcoh/interpret.hpp"
#include "cobcoh/render.hpp"
#include "cobcoh/typecheck.hpp"

namespace cobcoh {

namespace {

using A = Arrow;
using O = Object;

struct Typed {
  Arrow f;
  Object source;
  Object target;
};

class Draw {
 public:
  Draw(Rng& rng, const TermShape& shape) : rng_(rng), shape_(shape) {
    arrows_ = shape;
    arrows_.term_depth = 2;
    arrows_.annotation_depth = 1;
  }

  O obj() {
    O a = random_object(rng_, shape_);
    out_.objects.push_back(a);
    return a;
  }

  Typed from(const O& a) {
    Arrow f = random_arrow_from(rng_, arrows_, a, arrows_.term_depth);
    ArrowType ty = infer_type(f, shape_.mode);
    return {f, ty.source, ty.target};
  }

  Typed arrow() { return from(obj()); }

  Arrow parallel(const Typed& t) {
    return random_parallel(rng_, t.f, t.source, t.target);
  }

  void eq(Arrow lhs, Arrow rhs) {
    out_.equations.emplace_back(std::move(lhs), std::move(rhs));
  }

  AxiomInstance take() { return std::move(out_); }

 private:
  Rng& rng_;
  const TermShape& shape_;
  TermShape arrows_;
  AxiomInstance out_;
};

using Body = std::function<void(Draw&)>;

void category(Draw& d) {
  Typed f = d.arrow();
  Typed g = d.from(f.target);
  Typed h = d.from(g.target);
  d.eq(A::compose(f.f, A::id(f.source)), f.f);
  d.eq(A::compose(A::id(f.target), f.f), f.f);
  d.eq(A::compose(A::compose(h.f, g.f), f.f), A::compose(h.f, A::compose(g.f, f.f)));
}

void bifunctor(Draw& d, bool tensor) {
  auto pair_obj = tensor ? O::tensor : O::oplus;
  auto pair_arr = tensor ? A::tensor : A::oplus;
  O a = d.obj();
  O b = d.obj();
  d.eq(pair_arr(A::id(a), A::id(b)), A::id(pair_obj(a, b)));
  Typed f1 = d.from(a);
  Typed f2 = d.from(f1.target);
  Typed g1 = d.from(b);
  Typed g2 = d.from(g1.target);
  d.eq(A::compose(pair_arr(f2.f, g2.f), pair_arr(f1.f, g1.f)),
       pair_arr(A::compose(f2.f, f1.f), A::compose(g2.f, g1.f)));
}

void whisker_functor(Draw& d) {
  O a = d.obj();
  O b = d.obj();
  d.eq(A::whisker(a, A::id(b)), A::id(O::lollipop(a, b)));
  Typed g1 = d.from(b);
  Typed g2 = d.from(g1.target);
  d.eq(A::compose(A::whisker(a, g2.f), A::whisker(a, g1.f)),
       A::whisker(a, A::compose(g2.f, g1.f)));
}

void alpha_natural(Draw& d) {
  Typed f = d.arrow();
  Typed g = d.arrow();
  Typed h = d.arrow();
  d.eq(A::compose(A::tensor(A::tensor(f.f, g.f), h.f),
                  A::alpha(f.source, g.source, h.source)),
       A::compose(A::alpha(f.target, g.target, h.target),
                  A::tensor(f.f, A::tensor(g.f, h.f))));
  const O &a = f.source, &b = g.source, &c = h.source;
  d.eq(A::compose(A::alpha_inv(a, b, c), A::alpha(a, b, c)),
       A::id(O::tensor(a, O::tensor(b, c))));
  d.eq(A::compose(A::alpha(a, b, c), A::alpha_inv(a, b, c)),
       A::id(O::tensor(O::tensor(a, b), c)));
}

void lambda_natural(Draw& d) {
  Typed f = d.arrow();
  const O& a = f.source;
  d.eq(A::compose(f.f, A::lambda(a)),
       A::compose(A::lambda(f.target), A::tensor(A::id(O::unit()), f.f)));
  d.eq(A::compose(A::lambda_inv(a), A::lambda(a)), A::id(O::tensor(O::unit(), a)));
  d.eq(A::compose(A::lambda(a), A::lambda_inv(a)), A::id(a));
}

void sigma_natural(Draw& d) {
  Typed f = d.arrow();
  Typed g = d.arrow();
  d.eq(A::compose(A::tensor(g.f, f.f), A::sigma(f.source, g.source)),
       A::compose(A::sigma(f.target, g.target), A::tensor(f.f, g.f)));
  d.eq(A::compose(A::sigma(g.source, f.source), A::sigma(f.source, g.source)),
       A::id(O::tensor(f.source, g.source)));
}

void eta_natural(Draw& d) {
  O a = d.obj();
  Typed g = d.arrow();
  d.eq(A::compose(A::whisker(a, A::tensor(A::id(a), g.f)), A::eta_smc(a, g.source)),
       A::compose(A::eta_smc(a, g.target), g.f));
}

void eps_natural(Draw& d) {
  O a = d.obj();
  Typed g = d.arrow();
  d.eq(A::compose(g.f, A::eps_smc(a, g.source)),
       A::compose(A::eps_smc(a, g.target), A::tensor(A::id(a), A::whisker(a, g.f))));
}

void inj_natural(Draw& d) {
  Typed f = d.arrow();
  Typed g = d.arrow();
  A fg = A::oplus(f.f, g.f);
  d.eq(A::compose(fg, A::inj1(f.source, g.source)),
       A::compose(A::inj1(f.target, g.target), f.f));
  d.eq(A::compose(fg, A::inj2(f.source, g.source)),
       A::compose(A::inj2(f.target, g.target), g.f));
}

void proj_natural(Draw& d) {
  Typed f = d.arrow();
  Typed g = d.arrow();
  A fg = A::oplus(f.f, g.f);
  d.eq(A::compose(f.f, A::proj1(f.source, g.source)),
       A::compose(A::proj1(f.target, g.target), fg));
  d.eq(A::compose(g.f, A::proj2(f.source, g.source)),
       A::compose(A::proj2(f.target, g.target), fg));
}

void closed_triangle(Draw& d) {
  O a = d.obj();
  O b = d.obj();
  d.eq(A::compose(A::whisker(a, A::eps_smc(a, b)), A::eta_smc(a, O::lollipop(a, b))),
       A::id(O::lollipop(a, b)));
  d.eq(A::compose(A::eps_smc(a, O::tensor(a, b)),
                  A::tensor(A::id(a), A::eta_smc(a, b))),
       A::id(O::tensor(a, b)));
}

void biproduct_retract(Draw& d) {
  O a = d.obj();
  O b = d.obj();
  d.eq(A::compose(A::proj1(a, b), A::inj1(a, b)), A::id(a));
  d.eq(A::compose(A::proj2(a, b), A::inj2(a, b)), A::id(b));
}

void biproduct_orthogonal(Draw& d) {
  O a = d.obj();
  O b = d.obj();
  d.eq(A::compose(A::proj2(a, b), A::inj1(a, b)), A::zero(a, b));
  d.eq(A::compose(A::proj1(a, b), A::inj2(a, b)), A::zero(b, a));
}

void biproduct_sum(Draw& d) {
  O a = d.obj();
  O b = d.obj();
  d.eq(A::plus(A::compose(A::inj1(a, b), A::proj1(a, b)),
               A::compose(A::inj2(a, b), A::proj2(a, b))),
       A::id(O::oplus(a, b)));
}

void commutative_monoid(Draw& d) {
  Typed f = d.arrow();
  A f2 = d.parallel(f);
  A f3 = d.parallel(f);
  d.eq(A::plus(f.f, A::plus(f2, f3)), A::plus(A::plus(f.f, f2), f3));
  d.eq(A::plus(f.f, f2), A::plus(f2, f.f));
  d.eq(A::plus(f.f, A::zero(f.source, f.target)), f.f);
}

void bilinear(Draw& d) {
  Typed f = d.arrow();
  Typed g = d.from(f.target);
  A g2 = d.parallel(g);
  A f2 = d.parallel(f);
  d.eq(A::compose(A::plus(g.f, g2), f.f),
       A::plus(A::compose(g.f, f.f), A::compose(g2, f.f)));
  d.eq(A::compose(g.f, A::plus(f.f, f2)),
       A::plus(A::compose(g.f, f.f), A::compose(g.f, f2)));
}

void zero_absorbs(Draw& d) {
  Typed f = d.arrow();
  O b = d.obj();
  d.eq(A::compose(A::zero(f.target, b), f.f), A::zero(f.source, b));
  d.eq(A::compose(f.f, A::zero(b, f.source)), A::zero(b, f.target));
}

void pentagon(Draw& d) {
  O a = d.obj(), b = d.obj(), c = d.obj(), e = d.obj();
  d.eq(A::compose(A::alpha(O::tensor(a, b), c, e), A::alpha(a, b, O::tensor(c, e))),
       compose_all(std::vector<A>{A::tensor(A::alpha(a, b, c), A::id(e)),
                                  A::alpha(a, O::tensor(b, c), e),
                                  A::tensor(A::id(a), A::alpha(b, c, e))}));
}

void unit_triangle(Draw& d) {
  O a = d.obj(), b = d.obj();
  d.eq(A::lambda(O::tensor(a, b)),
       A::compose(A::tensor(A::lambda(a), A::id(b)), A::alpha(O::unit(), a, b)));
}

void hexagon(Draw& d) {
  O a = d.obj(), b = d.obj(), c = d.obj();
  d.eq(compose_all(std::vector<A>{A::alpha(c, a, b), A::sigma(O::tensor(a, b), c),
                                  A::alpha(a, b, c)}),
       compose_all(std::vector<A>{A::tensor(A::sigma(a, c), A::id(b)),
                                  A::alpha(a, c, b),
                                  A::tensor(A::id(a), A::sigma(b, c))}));
}

void zero_object(Draw& d) {
  d.eq(A::zero(O::zero(), O::zero()), A::id(O::zero()));
}

void eta_dinatural(Draw& d) {
  Typed f = d.arrow();
  O b = d.obj();
  const O &a = f.source, &a2 = f.target;
  d.eq(A::compose(A::whisker(a, A::tensor(f.f, A::id(b))), A::eta_smc(a, b)),
       A::compose(A::hom(f.f, A::id(O::tensor(a2, b))), A::eta_smc(a2, b)));
}

void eps_dinatural(Draw& d) {
  Typed f = d.arrow();
  O b = d.obj();
  const O &a = f.source, &a2 = f.target;
  d.eq(A::compose(A::eps_smc(a, b), A::tensor(A::id(a), A::hom(f.f, A::id(b)))),
       A::compose(A::eps_smc(a2, b), A::tensor(f.f, A::id(O::lollipop(a2, b)))));
}

void additive(Draw& d, bool tensor) {
  auto op = tensor ? A::tensor : A::hom;
  Typed f = d.arrow();
  Typed g = d.arrow();
  A f2 = d.parallel(f);
  A g2 = d.parallel(g);
  d.eq(op(f.f, A::plus(g.f, g2)), A::plus(op(f.f, g.f), op(f.f, g2)));
  d.eq(op(A::plus(f.f, f2), g.f), A::plus(op(f.f, g.f), op(f2, g.f)));
}

void zero_factor(Draw& d, bool tensor) {
  Typed f = d.arrow();
  Typed g = d.arrow();
  const O &a = f.source, &a2 = f.target, &b = g.source, &b2 = g.target;
  if (tensor) {
    A z = A::zero(O::tensor(a, b), O::tensor(a2, b2));
    d.eq(A::tensor(f.f, A::zero(b, b2)), z);
    d.eq(A::tensor(A::zero(a, a2), g.f), z);
  } else {
    A z = A::zero(O::lollipop(a2, b), O::lollipop(a, b2));
    d.eq(A::hom(f.f, A::zero(b, b2)), z);
    d.eq(A::hom(A::zero(a, a2), g.f), z);
  }
}

void compact_triangle(Draw& d) {
  O a = d.obj();
  O as = O::dual(a);
  d.eq(compose_all(std::vector<A>{A::tensor(A::id(as), A::eps_cc(a)),
                                  A::alpha_inv(as, a, as),
                                  A::tensor(A::eta_cc(a), A::id(as))}),
       A::sigma(O::unit(), as));
  d.eq(compose_all(std::vector<A>{A::tensor(A::eps_cc(a), A::id(a)),
                                  A::alpha(a, as, a),
                                  A::tensor(A::id(a), A::eta_cc(a))}),
       A::sigma(a, O::unit()));
}

void dagger_involution(Draw& d) {
  Typed f = d.arrow();
  d.eq(A::dagger(A::dagger(f.f)), f.f);
}

void dagger_tensor(Draw& d) {
  Typed f = d.arrow();
  Typed g = d.arrow();
  d.eq(A::dagger(A::tensor(f.f, g.f)), A::tensor(A::dagger(f.f), A::dagger(g.f)));
}

void dagger_structure(Draw& d) {
  O a = d.obj(), b = d.obj(), c = d.obj();
  d.eq(A::dagger(A::alpha(a, b, c)), A::alpha_inv(a, b, c));
  d.eq(A::dagger(A::lambda(a)), A::lambda_inv(a));
  d.eq(A::dagger(A::sigma(a, b)), A::sigma(b, a));
}

void dagger_compact(Draw& d) {
  O a = d.obj();
  d.eq(A::compose(A::sigma(a, O::dual(a)), A::dagger(A::eps_cc(a))), A::eta_cc(a));
}

void dagger_functor(Draw& d) {
  Typed f = d.arrow();
  Typed g = d.from(f.target);
  d.eq(A::dagger(A::compose(g.f, f.f)), A::compose(A::dagger(f.f), A::dagger(g.f)));
  d.eq(A::dagger(A::id(f.source)), A::id(f.source));
}

void dagger_enriched(Draw& d) {
  Typed f = d.arrow();
  A f2 = d.parallel(f);
  d.eq(A::dagger(A::plus(f.f, f2)), A::plus(A::dagger(f.f), A::dagger(f2)));
  d.eq(A::dagger(A::zero(f.source, f.target)), A::zero(f.target, f.source));
}

void dagger_biproduct(Draw& d) {
  O a = d.obj(), b = d.obj();
  d.eq(A::inj1(a, b), A::dagger(A::proj1(a, b)));
  d.eq(A::inj2(a, b), A::dagger(A::proj2(a, b)));
}

AxiomFamily family(std::string name, Body body, bool primary = true) {
  return AxiomFamily{std::move(name), primary,
                     [body](Rng& rng, const TermShape& shape) {
                       Draw d(rng, shape);
                       body(d);
                       return d.take();
                     }};
}

}  // namespace

std::vector<AxiomFamily> axiom_families(Mode mode) {
  bool closed = mode == Mode::Smcb;
  std::vector<AxiomFamily> out;
  out.push_back(family("category", category));
  out.push_back(family("tensor-bifunctor", [](Draw& d) { bifunctor(d, true); }));
  out.push_back(family("oplus-bifunctor", [](Draw& d) { bifunctor(d, false); }));
  if (closed) out.push_back(family("whisker-functor", whisker_functor));
  out.push_back(family("alpha-natural-iso", alpha_natural));
  out.push_back(family("lambda-natural-iso", lambda_natural));
  out.push_back(family("sigma-natural-iso", sigma_natural));
  if (closed) {
    out.push_back(family("eta-natural", eta_natural));
    out.push_back(family("eps-natural", eps_natural));
  }
  out.push_back(family("inj-natural", inj_natural));
  out.push_back(family("proj-natural", proj_natural));
  if (closed) out.push_back(family("closed-triangle", closed_triangle));
  out.push_back(family("biproduct-retract", biproduct_retract));
  out.push_back(family("biproduct-orthogonal", biproduct_orthogonal));
  out.push_back(family("biproduct-sum", biproduct_sum));
  out.push_back(family("commutative-monoid", commutative_monoid));
  out.push_back(family("composition-bilinear", bilinear));
  out.push_back(family("zero-absorbs", zero_absorbs));
  out.push_back(family("pentagon", pentagon));
  out.push_back(family("unit-triangle", unit_triangle));
  out.push_back(family("hexagon", hexagon));
  out.push_back(family("zero-object", zero_object));
  if (!closed) out.push_back(family("compact-triangle", compact_triangle));
  if (mode == Mode::Dccb) {
    out.push_back(family("dagger-involution", dagger_involution));
    out.push_back(family("dagger-tensor", dagger_tensor));
    out.push_back(family("dagger-structure", dagger_structure));
    out.push_back(family("dagger-compact", dagger_compact));
    out.push_back(family("dagger-functor", dagger_functor));
    out.push_back(family("dagger-enriched", dagger_enriched));
    out.push_back(family("dagger-biproduct", dagger_biproduct));
  }
  if (closed) {
    out.push_back(family("eta-dinatural", eta_dinatural, false));
    out.push_back(family("eps-dinatural", eps_dinatural, false));
  }
  out.push_back(family("tensor-additive", [](Draw& d) { additive(d, true); }, false));
  if (closed)
    out.push_back(family("hom-additive", [](Draw& d) { additive(d, false); }, false));
  out.push_back(family("tensor-zero", [](Draw& d) { zero_factor(d, true); }, false));
  if (closed)
    out.push_back(family("hom-zero", [](Draw& d) { zero_factor(d, false); }, false));
  return out;
}

AxiomInstance draw_instance(const AxiomFamily& family, Rng& rng,
                            const TermShape& shape) {
  auto fits = [](const AxiomInstance& inst) {
    for (const auto& [l, r] : inst.equations)
      if (max_image_cells(l) > kInstanceCellBudget ||
          max_image_cells(r) > kInstanceCellBudget)
        return false;
    return true;
  };
  auto informative = [&](const AxiomInstance& inst) {
    for (const auto& [l, r] : inst.equations) {
      ArrowType ty = infer_type(l, shape.mode);
      if (interpret_object(ty.source).empty() || interpret_object(ty.target).empty())
        return false;
    }
    return true;
  };
  std::optional<AxiomInstance> fallback;
  AxiomInstance inst;
  for (int attempt = 0; attempt < 200; ++attempt) {
    inst = family.make(rng, shape);
    if (!fits(inst)) continue;
    if (informative(inst)) {
      fallback.reset();
      break;
    }
    if (!fallback) fallback = inst;
  }
  if (fallback) inst = std::move(*fallback);
  if (shape.mode == Mode::Dccb)
    for (auto& [l, r] : inst.equations) {
      l = expand_derived(l, Mode::Dccb);
      r = expand_derived(r, Mode::Dccb);
    }
  return inst;
}

SuiteReport axiom_suite(Mode mode, std::size_t object_depth,
                        std::size_t instance_count, std::uint64_t seed,
                        const std::vector<std::string>& generators) {
  SuiteReport report;
  report.mode = mode;
  TermShape shape;
  shape.mode = mode;
  shape.object_depth = object_depth;
  shape.generators = generators;
  auto families = axiom_families(mode);
  for (std::size_t k = 0; k < families.size(); ++k) {
    const auto& fam = families[k];
    FamilyReport fr;
    fr.name = fam.name;
    fr.primary = fam.primary;
    Rng rng(derive_seed(seed, k));
    for (std::size_t n = 0; n < instance_count; ++n) {
      AxiomInstance inst = draw_instance(fam, rng, shape);
      ++fr.tried;
      for (const auto& [l, r] : inst.equations) {
        CobMatrix gl = interpret_arrow(l, mode);
        CobMatrix gr = interpret_arrow(r, mode);
        if (gl == gr) continue;
        AxiomFailure fail;
        fail.instance = n;
        for (const auto& o : inst.objects) fail.objects.push_back(render(o));
        fail.lhs = render(l);
        fail.rhs = render(r);
        fail.lhs_image = to_json(gl);
        fail.rhs_image = to_json(gr);
        fr.failures.push_back(std::move(fail));
        break;
      }
    }
    report.families.push_back(std::move(fr));
  }
  return report;
}

std::size_t SuiteReport::failure_count() const {
  std::size_t n = 0;
  for (const auto& f : families) n += f.failures.size();
  return n;
}

Json SuiteReport::to_json() const {
  Json out;
  out["mode"] = std::string(cobcoh::to_string(mode));
  Json fams = Json::array();
  for (const auto& f : families) {
    Json j;
    j["family"] = f.name;
    j["derived"] = !f.primary;
    j["tried"] = f.tried;
    Json fails = Json::array();
    for (const auto& x : f.failures) {
      Json e;
      e["instance"] = x.instance;
      e["objects"] = x.objects;
      e["lhs"] = x.lhs;
      e["rhs"] = x.rhs;
      e["lhs_image"] = x.lhs_image;
      e["rhs_image"] = x.rhs_image;
      fails.push_back(std::move(e));
    }
    j["failures"] = std::move(fails);
    fams.push_back(std::move(j));
  }
  out["families"] = std::move(fams);
  out["failures"] = failure_count();
  return out;
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "mode: " << cobcoh::to_string(mode) << "\n";
  for (const auto& f : families) {
    out << f.name << (f.primary ? "" : " (derived)") << ": " << f.tried
        << " tried, " << f.failures.size() << " failed\n";
    for (const auto& x : f.failures) {
      out << "  instance " << x.instance << ":";
      for (const auto& o : x.objects) out << " " << o;
      out << "\n    lhs: " << x.lhs << "\n    rhs: " << x.rhs << "\n";
    }
  }
  out << "failures: " << failure_count() << "\n";
  return out.str();
}

}  // namespace cobcoh
