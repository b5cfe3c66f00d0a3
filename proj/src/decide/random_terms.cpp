#include "cobcoh/random_terms.hpp"

#include <functional>

#include "cobcoh/biproduct.hpp"
#include "cobcoh/typecheck.hpp"

namespace cobcoh {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

Object random_object(Rng& rng, const TermShape& shape, std::size_t depth) {
  auto atom = [&] {
    std::size_t n = shape.generators.size() + (shape.units ? 2 : 0);
    std::size_t k = rng.below(n);
    if (k < shape.generators.size()) return Object::generator(shape.generators[k]);
    return k == shape.generators.size() ? Object::unit() : Object::zero();
  };
  if (depth == 0 || rng.chance(1, 4)) return atom();
  bool compact = is_compact(shape.mode);
  switch (rng.below(3)) {
    case 0:
      return Object::tensor(random_object(rng, shape, depth - 1),
                            random_object(rng, shape, depth - 1));
    case 1:
      return Object::oplus(random_object(rng, shape, depth - 1),
                           random_object(rng, shape, depth - 1));
    default:
      if (compact) return Object::dual(random_object(rng, shape, depth - 1));
      return Object::lollipop(random_object(rng, shape, depth - 1),
                              random_object(rng, shape, depth - 1));
  }
}

namespace {

struct Typed {
  Arrow term;
  Object source;
  Object target;
};

Typed typed(Arrow t, Mode mode) {
  ArrowType ty = infer_type(t, mode);
  return {std::move(t), std::move(ty.source), std::move(ty.target)};
}

Object annotation(Rng& rng, const TermShape& shape) {
  return random_object(rng, shape, shape.annotation_depth);
}

std::vector<Arrow> leaves_from(Rng& rng, const TermShape& shape,
                               const Object& s) {
  Mode mode = shape.mode;
  std::vector<Arrow> out{Arrow::id(s), Arrow::zero(s, annotation(rng, shape)),
                         Arrow::lambda_inv(s), Arrow::inj1(s, annotation(rng, shape)),
                         Arrow::inj2(annotation(rng, shape), s)};
  if (mode == Mode::Smcb) out.push_back(Arrow::eta_smc(annotation(rng, shape), s));
  if (s.is(ObjectKind::Unit) && is_compact(mode))
    out.push_back(Arrow::eta_cc(annotation(rng, shape)));
  if (s.is(ObjectKind::Tensor)) {
    const Object& a = s.left();
    const Object& b = s.right();
    out.push_back(Arrow::sigma(a, b));
    if (b.is(ObjectKind::Tensor))
      out.push_back(Arrow::alpha(a, b.left(), b.right()));
    if (a.is(ObjectKind::Tensor))
      out.push_back(Arrow::alpha_inv(a.left(), a.right(), b));
    if (a.is(ObjectKind::Unit)) out.push_back(Arrow::lambda(b));
    if (mode == Mode::Smcb && b.is(ObjectKind::Lollipop) && b.left() == a)
      out.push_back(Arrow::eps_smc(a, b.right()));
    if (is_compact(mode) && b.is(ObjectKind::Dual) && b.inner() == a)
      out.push_back(Arrow::eps_cc(a));
  }
  if (s.is(ObjectKind::Oplus)) {
    out.push_back(Arrow::proj1(s.left(), s.right()));
    out.push_back(Arrow::proj2(s.left(), s.right()));
  }
  return out;
}

std::vector<Arrow> leaves_into(Rng& rng, const TermShape& shape,
                               const Object& t) {
  Mode mode = shape.mode;
  std::vector<Arrow> out{Arrow::id(t), Arrow::zero(annotation(rng, shape), t),
                         Arrow::lambda(t), Arrow::proj1(t, annotation(rng, shape)),
                         Arrow::proj2(annotation(rng, shape), t)};
  if (mode == Mode::Smcb) out.push_back(Arrow::eps_smc(annotation(rng, shape), t));
  if (t.is(ObjectKind::Unit) && is_compact(mode))
    out.push_back(Arrow::eps_cc(annotation(rng, shape)));
  if (t.is(ObjectKind::Tensor)) {
    const Object& a = t.left();
    const Object& b = t.right();
    out.push_back(Arrow::sigma(b, a));
    if (a.is(ObjectKind::Tensor))
      out.push_back(Arrow::alpha(a.left(), a.right(), b));
    if (b.is(ObjectKind::Tensor))
      out.push_back(Arrow::alpha_inv(a, b.left(), b.right()));
    if (a.is(ObjectKind::Unit)) out.push_back(Arrow::lambda_inv(b));
    if (is_compact(mode) && a.is(ObjectKind::Dual) && a.inner() == b)
      out.push_back(Arrow::eta_cc(b));
  }
  if (mode == Mode::Smcb && t.is(ObjectKind::Lollipop) &&
      t.right().is(ObjectKind::Tensor) && t.right().left() == t.left())
    out.push_back(Arrow::eta_smc(t.left(), t.right().right()));
  if (t.is(ObjectKind::Oplus)) {
    out.push_back(Arrow::inj1(t.left(), t.right()));
    out.push_back(Arrow::inj2(t.left(), t.right()));
  }
  return out;
}

Typed from(Rng& rng, const TermShape& shape, const Object& s, std::size_t d);
Typed into(Rng& rng, const TermShape& shape, const Object& t, std::size_t d);

Typed from(Rng& rng, const TermShape& shape, const Object& s, std::size_t d) {
  Mode mode = shape.mode;
  if (d <= 1 || rng.chance(1, 5))
    return typed(rng.pick(leaves_from(rng, shape, s)), mode);
  std::vector<std::function<Typed()>> options;
  options.push_back([&] {
    Typed f = from(rng, shape, s, d - 1);
    Typed g = from(rng, shape, f.target, d - 1);
    return Typed{Arrow::compose(g.term, f.term), s, g.target};
  });
  options.push_back([&] {
    Typed f = from(rng, shape, s, d - 1);
    return Typed{Arrow::plus(f.term, random_parallel(rng, f.term, s, f.target)),
                 s, f.target};
  });
  if (s.is(ObjectKind::Tensor)) {
    options.push_back([&] {
      Typed f = from(rng, shape, s.left(), d - 1);
      Typed g = from(rng, shape, s.right(), d - 1);
      return Typed{Arrow::tensor(f.term, g.term), s,
                   Object::tensor(f.target, g.target)};
    });
    if (mode == Mode::Smcb && d >= 3) {
      options.push_back([&] {
        const Object& a = s.left();
        const Object& b = s.right();
        Arrow zig = Arrow::compose(
            Arrow::eps_smc(a, s),
            Arrow::tensor(Arrow::id(a), Arrow::eta_smc(a, b)));
        return Typed{zig, s, s};
      });
    }
  }
  if (s.is(ObjectKind::Oplus)) {
    options.push_back([&] {
      Typed f = from(rng, shape, s.left(), d - 1);
      Typed g = from(rng, shape, s.right(), d - 1);
      return Typed{Arrow::oplus(f.term, g.term), s,
                   Object::oplus(f.target, g.target)};
    });
  }
  if (mode == Mode::Smcb && s.is(ObjectKind::Lollipop)) {
    options.push_back([&] {
      Typed g = from(rng, shape, s.right(), d - 1);
      return Typed{Arrow::whisker(s.left(), g.term), s,
                   Object::lollipop(s.left(), g.target)};
    });
    options.push_back([&] {
      Typed f = into(rng, shape, s.left(), d - 1);
      Typed g = from(rng, shape, s.right(), d - 1);
      return Typed{Arrow::hom(f.term, g.term), s,
                   Object::lollipop(f.source, g.target)};
    });
  }
  if (mode == Mode::Dccb) {
    options.push_back([&] {
      Typed h = into(rng, shape, s, d - 1);
      return Typed{Arrow::dagger(h.term), s, h.source};
    });
  }
  return rng.pick(options)();
}

Typed into(Rng& rng, const TermShape& shape, const Object& t, std::size_t d) {
  Mode mode = shape.mode;
  if (d <= 1 || rng.chance(1, 5))
    return typed(rng.pick(leaves_into(rng, shape, t)), mode);
  std::vector<std::function<Typed()>> options;
  options.push_back([&] {
    Typed g = into(rng, shape, t, d - 1);
    Typed f = into(rng, shape, g.source, d - 1);
    return Typed{Arrow::compose(g.term, f.term), f.source, t};
  });
  options.push_back([&] {
    Typed f = into(rng, shape, t, d - 1);
    return Typed{Arrow::plus(f.term, random_parallel(rng, f.term, f.source, t)),
                 f.source, t};
  });
  if (t.is(ObjectKind::Tensor)) {
    options.push_back([&] {
      Typed f = into(rng, shape, t.left(), d - 1);
      Typed g = into(rng, shape, t.right(), d - 1);
      return Typed{Arrow::tensor(f.term, g.term),
                   Object::tensor(f.source, g.source), t};
    });
  }
  if (t.is(ObjectKind::Oplus)) {
    options.push_back([&] {
      Typed f = into(rng, shape, t.left(), d - 1);
      Typed g = into(rng, shape, t.right(), d - 1);
      return Typed{Arrow::oplus(f.term, g.term),
                   Object::oplus(f.source, g.source), t};
    });
  }
  if (mode == Mode::Smcb && t.is(ObjectKind::Lollipop)) {
    options.push_back([&] {
      Typed g = into(rng, shape, t.right(), d - 1);
      return Typed{Arrow::whisker(t.left(), g.term),
                   Object::lollipop(t.left(), g.source), t};
    });
    options.push_back([&] {
      Typed f = from(rng, shape, t.left(), d - 1);
      Typed g = into(rng, shape, t.right(), d - 1);
      return Typed{Arrow::hom(f.term, g.term),
                   Object::lollipop(f.target, g.source), t};
    });
  }
  if (mode == Mode::Dccb) {
    options.push_back([&] {
      Typed h = from(rng, shape, t, d - 1);
      return Typed{Arrow::dagger(h.term), h.target, t};
    });
  }
  return rng.pick(options)();
}

}  // namespace

Arrow random_arrow_from(Rng& rng, const TermShape& shape, const Object& source,
                        std::size_t depth) {
  return from(rng, shape, source, depth).term;
}

Arrow random_arrow_into(Rng& rng, const TermShape& shape, const Object& target,
                        std::size_t depth) {
  return into(rng, shape, target, depth).term;
}

Arrow random_leaf_from(Rng& rng, const TermShape& shape, const Object& source) {
  return rng.pick(leaves_from(rng, shape, source));
}

Arrow random_leaf_into(Rng& rng, const TermShape& shape, const Object& target) {
  return rng.pick(leaves_into(rng, shape, target));
}

Arrow random_arrow(Rng& rng, const TermShape& shape) {
  Object s = random_object(rng, shape);
  return random_arrow_from(rng, shape, s, shape.term_depth);
}

Arrow random_parallel(Rng& rng, const Arrow& f, const Object& source,
                      const Object& target) {
  switch (rng.below(6)) {
    case 0: return Arrow::zero(source, target);
    case 1: return f;
    case 2: return Arrow::compose(Arrow::id(target), f);
    case 3: return Arrow::compose(f, Arrow::id(source));
    case 4: return Arrow::plus(f, Arrow::zero(source, target));
    default:
      return Arrow::compose(
          Arrow::lambda(target),
          Arrow::compose(Arrow::lambda_inv(target), f));
  }
}

Arrow random_proper_arrow(Rng& rng, const TermShape& shape) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Object s = random_object(rng, shape);
    if (!is_proper(s)) continue;
    Typed t = from(rng, shape, s, shape.term_depth);
    if (is_proper(t.target)) return t.term;
  }
  return Arrow::id(Object::generator(shape.generators.front()));
}

}  // namespace cobcoh
