#include "cobcoh/rewrite.hpp"

#include <functional>

#include "cobcoh/axioms.hpp"
#include "cobcoh/error.hpp"
#include "cobcoh/interpret.hpp"
#include "cobcoh/typecheck.hpp"

namespace cobcoh {

namespace {

using A = Arrow;
using O = Object;
using K = ArrowKind;
using Result = std::optional<Arrow>;

struct Site {
  Rng& rng;
  const TermShape& shape;
  const Arrow& t;
  ArrowType ty;

  Mode mode() const { return shape.mode; }
  O fresh() { return random_object(rng, shape, shape.annotation_depth); }
  bool flip() { return rng.chance(1, 2); }
  ArrowType type_of(const Arrow& f) const { return infer_type(f, shape.mode); }
};

using Rule = std::function<Result(Site&)>;

struct NamedRule {
  std::string name;
  bool closed_only = false;
  bool compact_only = false;
  bool dagger_only = false;
  Rule apply;
};

bool is_id(const Arrow& t) { return t.is(K::Id); }

Result id_unit(Site& s) {
  const Arrow& t = s.t;
  if (t.is(K::Compose)) {
    if (is_id(t.child(0))) return t.child(1);
    if (is_id(t.child(1))) return t.child(0);
  }
  if (s.flip()) return A::compose(A::id(s.ty.target), t);
  return A::compose(t, A::id(s.ty.source));
}

Result plus_zero(Site& s) {
  const Arrow& t = s.t;
  if (t.is(K::Plus)) {
    if (t.child(1).is(K::Zero)) return t.child(0);
    if (t.child(0).is(K::Zero)) return t.child(1);
  }
  A z = A::zero(s.ty.source, s.ty.target);
  return s.flip() ? A::plus(t, z) : A::plus(z, t);
}

Result compose_assoc(Site& s) {
  const Arrow& t = s.t;
  if (!t.is(K::Compose)) return std::nullopt;
  const A &g = t.child(0), &f = t.child(1);
  if (g.is(K::Compose) && (f.is(K::Compose) ? s.flip() : true))
    return A::compose(g.child(0), A::compose(g.child(1), f));
  if (f.is(K::Compose)) return A::compose(A::compose(g, f.child(0)), f.child(1));
  return std::nullopt;
}

Result interchange(Site& s, K kind) {
  const Arrow& t = s.t;
  auto pair = [&](A l, A r) { return A::make(kind, {}, {std::move(l), std::move(r)}); };
  if (t.is(kind) && t.child(0).is(K::Compose) && t.child(1).is(K::Compose)) {
    const A &l = t.child(0), &r = t.child(1);
    return A::compose(pair(l.child(0), r.child(0)), pair(l.child(1), r.child(1)));
  }
  if (t.is(K::Compose) && t.child(0).is(kind) && t.child(1).is(kind)) {
    const A &g = t.child(0), &f = t.child(1);
    return pair(A::compose(g.child(0), f.child(0)), A::compose(g.child(1), f.child(1)));
  }
  if (t.is(kind)) {
    ArrowType l = s.type_of(t.child(0)), r = s.type_of(t.child(1));
    if (s.flip())
      return pair(A::compose(A::id(l.target), t.child(0)),
                  A::compose(t.child(1), A::id(r.source)));
    return A::compose(pair(A::id(l.target), t.child(1)), pair(t.child(0), A::id(r.source)));
  }
  return std::nullopt;
}

Result plus_comm_assoc(Site& s) {
  const Arrow& t = s.t;
  if (!t.is(K::Plus)) return std::nullopt;
  const A &f = t.child(0), &g = t.child(1);
  if (s.flip()) return A::plus(g, f);
  if (f.is(K::Plus)) return A::plus(f.child(0), A::plus(f.child(1), g));
  if (g.is(K::Plus)) return A::plus(A::plus(f, g.child(0)), g.child(1));
  return A::plus(g, f);
}

Result distribute(Site& s) {
  const Arrow& t = s.t;
  if (t.is(K::Compose)) {
    const A &g = t.child(0), &f = t.child(1);
    if (f.is(K::Plus))
      return A::plus(A::compose(g, f.child(0)), A::compose(g, f.child(1)));
    if (g.is(K::Plus))
      return A::plus(A::compose(g.child(0), f), A::compose(g.child(1), f));
  }
  if (t.is(K::Plus) && t.child(0).is(K::Compose) && t.child(1).is(K::Compose)) {
    const A &l = t.child(0), &r = t.child(1);
    if (l.child(0) == r.child(0))
      return A::compose(l.child(0), A::plus(l.child(1), r.child(1)));
    if (l.child(1) == r.child(1))
      return A::compose(A::plus(l.child(0), r.child(0)), l.child(1));
  }
  return std::nullopt;
}

Result zero_absorb(Site& s) {
  const Arrow& t = s.t;
  if (t.is(K::Compose) && (t.child(0).is(K::Zero) || t.child(1).is(K::Zero)))
    return A::zero(s.ty.source, s.ty.target);
  if (t.is(K::Zero)) {
    O c = s.fresh();
    return A::compose(A::zero(c, s.ty.target), A::zero(s.ty.source, c));
  }
  return std::nullopt;
}

Result biproduct_sum(Site& s) {
  const Arrow& t = s.t;
  if (is_id(t) && t.object(0).is(ObjectKind::Oplus)) {
    const O &a = t.object(0).left(), &b = t.object(0).right();
    return A::plus(A::compose(A::inj1(a, b), A::proj1(a, b)),
                   A::compose(A::inj2(a, b), A::proj2(a, b)));
  }
  if (t.is(K::Plus) && t.child(0).is(K::Compose) && t.child(1).is(K::Compose)) {
    const A &l = t.child(0), &r = t.child(1);
    if (l.child(0).is(K::Inj1) && l.child(1).is(K::Proj1) && r.child(0).is(K::Inj2) &&
        r.child(1).is(K::Proj2)) {
      O ab = s.ty.source;
      if (l.child(0) == A::inj1(ab.left(), ab.right()) && r.child(0) == A::inj2(ab.left(), ab.right()) &&
          l.child(1) == A::proj1(ab.left(), ab.right()) && r.child(1) == A::proj2(ab.left(), ab.right()))
        return A::id(ab);
    }
  }
  return std::nullopt;
}

Result biproduct_retract(Site& s) {
  const Arrow& t = s.t;
  if (t.is(K::Compose)) {
    const A &p = t.child(0), &i = t.child(1);
    bool same = p.objects().size() == 2 && i.objects().size() == 2 &&
                p.object(0) == i.object(0) && p.object(1) == i.object(1);
    if (same && i.is(K::Inj1) && p.is(K::Proj1)) return A::id(s.ty.source);
    if (same && i.is(K::Inj2) && p.is(K::Proj2)) return A::id(s.ty.source);
    if (same && ((i.is(K::Inj1) && p.is(K::Proj2)) || (i.is(K::Inj2) && p.is(K::Proj1))))
      return A::zero(s.ty.source, s.ty.target);
  }
  if (is_id(t)) {
    O a = t.object(0), b = s.fresh();
    if (s.flip()) return A::compose(A::proj1(a, b), A::inj1(a, b));
    return A::compose(A::proj2(b, a), A::inj2(b, a));
  }
  return std::nullopt;
}

Result id_split(Site& s) {
  const Arrow& t = s.t;
  if (is_id(t)) {
    const O& a = t.object(0);
    if (a.is(ObjectKind::Tensor)) return A::tensor(A::id(a.left()), A::id(a.right()));
    if (a.is(ObjectKind::Oplus)) return A::oplus(A::id(a.left()), A::id(a.right()));
    if (a.is(ObjectKind::Lollipop)) return A::whisker(a.left(), A::id(a.right()));
    return std::nullopt;
  }
  if ((t.is(K::Tensor) || t.is(K::Oplus)) && is_id(t.child(0)) && is_id(t.child(1)))
    return A::id(s.ty.source);
  if (t.is(K::Whisker) && is_id(t.child(0))) return A::id(s.ty.source);
  return std::nullopt;
}

Result whisker_functor(Site& s) {
  const Arrow& t = s.t;
  if (t.is(K::Whisker) && t.child(0).is(K::Compose)) {
    const O& a = t.object(0);
    return A::compose(A::whisker(a, t.child(0).child(0)), A::whisker(a, t.child(0).child(1)));
  }
  if (t.is(K::Compose) && t.child(0).is(K::Whisker) && t.child(1).is(K::Whisker) &&
      t.child(0).object(0) == t.child(1).object(0))
    return A::whisker(t.child(0).object(0),
                      A::compose(t.child(0).child(0), t.child(1).child(0)));
  return std::nullopt;
}

Result alpha_natural(Site& s) {
  const Arrow& t = s.t;
  if (t.is(K::Tensor) && t.child(0).is(K::Tensor)) {
    const A &f = t.child(0).child(0), &g = t.child(0).child(1), &h = t.child(1);
    ArrowType tf = s.type_of(f), tg = s.type_of(g), th = s.type_of(h);
    return compose_all(std::vector<A>{A::alpha(tf.target, tg.target, th.target),
                                      A::tensor(f, A::tensor(g, h)),
                                      A::alpha_inv(tf.source, tg.source, th.source)});
  }
  return std::nullopt;
}

Result alpha_iso(Site& s) {
  const Arrow& t = s.t;
  if (t.is(K::Compose)) {
    const A &g = t.child(0), &f = t.child(1);
    bool inverse = (g.is(K::AlphaInv) && f.is(K::Alpha)) || (g.is(K::Alpha) && f.is(K::AlphaInv));
    if (inverse && g.object(0) == f.object(0) && g.object(1) == f.object(1) &&
        g.object(2) == f.object(2))
      return A::id(s.ty.source);
  }
  if (is_id(t) && t.object(0).is(ObjectKind::Tensor)) {
    const O& x = t.object(0);
    if (x.right().is(ObjectKind::Tensor)) {
      const O &a = x.left(), &b = x.right().left(), &c = x.right().right();
      return A::compose(A::alpha_inv(a, b, c), A::alpha(a, b, c));
    }
    if (x.left().is(ObjectKind::Tensor)) {
      const O &a = x.left().left(), &b = x.left().right(), &c = x.right();
      return A::compose(A::alpha(a, b, c), A::alpha_inv(a, b, c));
    }
  }
  return std::nullopt;
}

Result sigma_iso(Site& s) {
  const Arrow& t = s.t;
  if (t.is(K::Compose) && t.child(0).is(K::Sigma) && t.child(1).is(K::Sigma)) {
    const A &g = t.child(0), &f = t.child(1);
    if (g.object(0) == f.object(1) && g.object(1) == f.object(0)) return A::id(s.ty.source);
  }
  if (is_id(t) && t.object(0).is(ObjectKind::Tensor)) {
    const O &a = t.object(0).left(), &b = t.object(0).right();
    return A::compose(A::sigma(b, a), A::sigma(a, b));
  }
  return std::nullopt;
}

Result lambda_natural(Site& s) {
  const Arrow& t = s.t;
  if (t.is(K::Compose) && t.child(1).is(K::LambdaInv) && t.child(0).is(K::Compose) &&
      t.child(0).child(0).is(K::Lambda)) {
    const A& mid = t.child(0).child(1);
    if (mid.is(K::Tensor) && mid.child(0) == A::id(O::unit())) return mid.child(1);
  }
  return compose_all(std::vector<A>{A::lambda(s.ty.target),
                                    A::tensor(A::id(O::unit()), t),
                                    A::lambda_inv(s.ty.source)});
}

Result sigma_natural(Site& s) {
  const Arrow& t = s.t;
  if (!t.is(K::Tensor)) return std::nullopt;
  const A &f = t.child(0), &g = t.child(1);
  ArrowType tf = s.type_of(f), tg = s.type_of(g);
  return compose_all(std::vector<A>{A::sigma(tg.target, tf.target), A::tensor(g, f),
                                    A::sigma(tf.source, tg.source)});
}

Result closed_triangle(Site& s) {
  const Arrow& t = s.t;
  if (!is_id(t)) return std::nullopt;
  const O& x = t.object(0);
  if (x.is(ObjectKind::Lollipop) && s.flip()) {
    const O &a = x.left(), &b = x.right();
    return A::compose(A::whisker(a, A::eps_smc(a, b)), A::eta_smc(a, x));
  }
  if (x.is(ObjectKind::Tensor)) {
    const O &a = x.left(), &b = x.right();
    return A::compose(A::eps_smc(a, x), A::tensor(A::id(a), A::eta_smc(a, b)));
  }
  return std::nullopt;
}

Result compact_triangle(Site& s) {
  const Arrow& t = s.t;
  if (!is_id(t)) return std::nullopt;
  const O& a = t.object(0);
  O as = O::dual(a);
  A snake = compose_all(std::vector<A>{A::tensor(A::eps_cc(a), A::id(a)),
                                       A::alpha(a, as, a),
                                       A::tensor(A::id(a), A::eta_cc(a))});
  return compose_all(std::vector<A>{A::lambda(a), snake, A::sigma(O::unit(), a),
                                    A::lambda_inv(a)});
}

Result eta_natural(Site& s) {
  const Arrow& t = s.t;
  if (t.is(K::Compose) && t.child(0).is(K::EtaSmc)) {
    const A& g = t.child(1);
    const O& a = t.child(0).object(0);
    return A::compose(A::whisker(a, A::tensor(A::id(a), g)),
                      A::eta_smc(a, s.ty.source));
  }
  if (t.is(K::Compose) && t.child(1).is(K::EtaSmc) && t.child(0).is(K::Whisker)) {
    const O& a = t.child(1).object(0);
    const A& w = t.child(0);
    if (w.object(0) == a && w.child(0).is(K::Tensor) && w.child(0).child(0) == A::id(a)) {
      const A& g = w.child(0).child(1);
      return A::compose(A::eta_smc(a, s.type_of(g).target), g);
    }
  }
  return std::nullopt;
}

Result eps_natural(Site& s) {
  const Arrow& t = s.t;
  if (t.is(K::Compose) && t.child(1).is(K::EpsSmc)) {
    const A& g = t.child(0);
    const O& a = t.child(1).object(0);
    return A::compose(A::eps_smc(a, s.ty.target),
                      A::tensor(A::id(a), A::whisker(a, g)));
  }
  return std::nullopt;
}

Result inj_natural(Site& s) {
  const Arrow& t = s.t;
  if (t.is(K::Compose) && t.child(0).is(K::Oplus) &&
      (t.child(1).is(K::Inj1) || t.child(1).is(K::Inj2))) {
    const A &fg = t.child(0);
    ArrowType tf = s.type_of(fg.child(0)), tg = s.type_of(fg.child(1));
    if (t.child(1).is(K::Inj1))
      return A::compose(A::inj1(tf.target, tg.target), fg.child(0));
    return A::compose(A::inj2(tf.target, tg.target), fg.child(1));
  }
  return std::nullopt;
}

Result dagger_involution(Site& s) {
  const Arrow& t = s.t;
  if (t.is(K::Dagger) && t.child(0).is(K::Dagger)) return t.child(0).child(0);
  return A::dagger(A::dagger(t));
}

Result dagger_distribute(Site& s) {
  const Arrow& t = s.t;
  if (t.is(K::Dagger)) {
    const A& f = t.child(0);
    if (f.is(K::Compose)) return A::compose(A::dagger(f.child(1)), A::dagger(f.child(0)));
    if (f.is(K::Tensor)) return A::tensor(A::dagger(f.child(0)), A::dagger(f.child(1)));
    if (f.is(K::Plus)) return A::plus(A::dagger(f.child(0)), A::dagger(f.child(1)));
    if (f.is(K::Oplus)) return A::oplus(A::dagger(f.child(0)), A::dagger(f.child(1)));
    if (f.is(K::Id)) return f;
    if (f.is(K::Sigma)) return A::sigma(f.object(1), f.object(0));
    if (f.is(K::Zero)) return A::zero(f.object(1), f.object(0));
    if (f.is(K::Alpha)) return A::alpha_inv(f.object(0), f.object(1), f.object(2));
    if (f.is(K::Lambda)) return A::lambda_inv(f.object(0));
    if (f.is(K::Proj1)) return A::inj1(f.object(0), f.object(1));
    if (f.is(K::Proj2)) return A::inj2(f.object(0), f.object(1));
  }
  if (t.is(K::Compose) && t.child(0).is(K::Dagger) && t.child(1).is(K::Dagger))
    return A::dagger(A::compose(t.child(1).child(0), t.child(0).child(0)));
  return std::nullopt;
}

const std::vector<NamedRule>& all_rules() {
  static const std::vector<NamedRule> rules = {
      {"id-unit", false, false, false, id_unit},
      {"plus-zero", false, false, false, plus_zero},
      {"compose-assoc", false, false, false, compose_assoc},
      {"tensor-interchange", false, false, false,
       [](Site& s) { return interchange(s, K::Tensor); }},
      {"oplus-interchange", false, false, false,
       [](Site& s) { return interchange(s, K::Oplus); }},
      {"plus-comm-assoc", false, false, false, plus_comm_assoc},
      {"distribute", false, false, false, distribute},
      {"zero-absorb", false, false, false, zero_absorb},
      {"biproduct-sum", false, false, false, biproduct_sum},
      {"biproduct-retract", false, false, false, biproduct_retract},
      {"id-split", false, false, false, id_split},
      {"whisker-functor", true, false, false, whisker_functor},
      {"alpha-natural", false, false, false, alpha_natural},
      {"alpha-iso", false, false, false, alpha_iso},
      {"sigma-iso", false, false, false, sigma_iso},
      {"lambda-natural", false, false, false, lambda_natural},
      {"sigma-natural", false, false, false, sigma_natural},
      {"closed-triangle", true, false, false, closed_triangle},
      {"compact-triangle", false, true, false, compact_triangle},
      {"eta-natural", true, false, false, eta_natural},
      {"eps-natural", true, false, false, eps_natural},
      {"inj-natural", false, false, false, inj_natural},
      {"dagger-involution", false, false, true, dagger_involution},
      {"dagger-distribute", false, false, true, dagger_distribute},
  };
  return rules;
}

std::vector<const NamedRule*> rules_for(Mode mode) {
  std::vector<const NamedRule*> out;
  for (const auto& r : all_rules()) {
    if (r.closed_only && mode != Mode::Smcb) continue;
    if (r.compact_only && !is_compact(mode)) continue;
    if (r.dagger_only && mode != Mode::Dccb) continue;
    out.push_back(&r);
  }
  return out;
}

void collect(const Arrow& t, std::vector<std::size_t>& path,
             std::vector<std::pair<std::vector<std::size_t>, Arrow>>& out) {
  out.emplace_back(path, t);
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    path.push_back(i);
    collect(t.child(i), path, out);
    path.pop_back();
  }
}

Arrow replace_at(const Arrow& t, std::span<const std::size_t> path, const Arrow& with) {
  if (path.empty()) return with;
  std::vector<Arrow> kids(t.children().begin(), t.children().end());
  kids[path[0]] = replace_at(kids[path[0]], path.subspan(1), with);
  return Arrow::make(t.kind(), std::vector<Object>(t.objects().begin(), t.objects().end()),
                     std::move(kids));
}

}  // namespace

std::vector<std::string> rewrite_rules(Mode mode) {
  std::vector<std::string> out;
  for (const auto* r : rules_for(mode)) out.push_back(r->name);
  return out;
}

std::optional<Arrow> apply_random_rewrite(Rng& rng, const TermShape& shape,
                                          const Arrow& t, RewriteStep* step) {
  std::vector<std::pair<std::vector<std::size_t>, Arrow>> sites;
  std::vector<std::size_t> path;
  collect(t, path, sites);
  auto rules = rules_for(shape.mode);
  auto shuffle = [&](auto& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[rng.below(i)]);
  };
  shuffle(rules);
  std::vector<std::size_t> order(sites.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (const NamedRule* rule : rules) {
    shuffle(order);
    for (std::size_t k : order) {
      const auto& [where, sub] = sites[k];
      Site site{rng, shape, sub, infer_type(sub, shape.mode)};
      Result out = rule->apply(site);
      if (!out) continue;
      try {
        check_arrow_mode(*out, shape.mode);
      } catch (const ModeError&) {
        continue;
      }
      if (infer_type(*out, shape.mode) != site.ty)
        throw std::logic_error("rewrite rule " + rule->name + " changed the type");
      Arrow whole = replace_at(t, where, *out);
      if (max_image_cells(whole) > kInstanceCellBudget) continue;
      infer_type(whole, shape.mode);
      if (step) *step = RewriteStep{rule->name, where};
      return whole;
    }
  }
  return std::nullopt;
}

RewritePair rewrite_pair(Rng& rng, const TermShape& shape, std::size_t steps) {
  RewritePair out;
  out.lhs = random_proper_arrow(rng, shape);
  out.rhs = out.lhs;
  for (std::size_t i = 0; i < steps; ++i) {
    RewriteStep step;
    if (auto next = apply_random_rewrite(rng, shape, out.rhs, &step)) {
      out.rhs = *next;
      out.steps.push_back(std::move(step));
    }
  }
  return out;
}

}  // namespace cobcoh
