#include <gtest/gtest.h>

#include "cobcoh/error.hpp"
#include "cobcoh/expand.hpp"
#include "cobcoh/parser.hpp"
#include "cobcoh/render.hpp"
#include "cobcoh/typecheck.hpp"

namespace cobcoh {
namespace {

const Object p = Object::generator("p");
const Object q = Object::generator("q");
const Object r = Object::generator("r");

TEST(ParseObject, TensorOfOplus) {
  Object a = parse_object("p (x) (q (+) I)");
  EXPECT_EQ(a, Object::tensor(p, Object::oplus(q, Object::unit())));
}

TEST(ParseObject, LollipopInSmcb) {
  EXPECT_EQ(parse_object("p -o I"), Object::lollipop(p, Object::unit()));
}

TEST(ParseObject, LollipopIsRightAssociativeAndLowest) {
  EXPECT_EQ(parse_object("p -o q -o r"),
            Object::lollipop(p, Object::lollipop(q, r)));
  EXPECT_EQ(parse_object("p (x) q -o r (+) p"),
            Object::lollipop(Object::tensor(p, q), Object::oplus(r, p)));
}

TEST(ParseObject, TensorBindsTighterThanOplus) {
  EXPECT_EQ(parse_object("p (+) q (x) r"),
            Object::oplus(p, Object::tensor(q, r)));
}

TEST(ParseObject, DualRejectedInSmcb) {
  try {
    parse_object("p*", Mode::Smcb);
    FAIL() << "expected a mode violation";
  } catch (const ModeError& e) {
    EXPECT_NE(std::string(e.what()).find("Dual not allowed in SMCB"),
              std::string::npos);
  }
}

TEST(ParseObject, DualInCcb) {
  EXPECT_EQ(parse_object("(p (x) q)**", Mode::Ccb),
            Object::dual(Object::dual(Object::tensor(p, q))));
  EXPECT_THROW(parse_object("p -o q", Mode::Ccb), ModeError);
}

TEST(ParseObject, SyntaxErrorCarriesPosition) {
  try {
    parse_object("p (x) ");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position().line, 1u);
    EXPECT_EQ(e.position().column, 7u);
  }
  EXPECT_THROW(parse_object("p q"), SyntaxError);
  EXPECT_THROW(parse_object("sigma"), SyntaxError);
  EXPECT_THROW(parse_object("p $ q"), SyntaxError);
}

TEST(ParseArrow, ProjectionAfterInjection) {
  Arrow t = parse_arrow("proj1[p,q] . inj1[p,q]");
  EXPECT_EQ(t, Arrow::compose(Arrow::proj1(p, q), Arrow::inj1(p, q)));
  EXPECT_EQ(infer_type(t, Mode::Smcb), (ArrowType{p, p}));
}

TEST(ParseArrow, IdentityPlusZero) {
  EXPECT_EQ(parse_arrow("id[p] + zero[p,p]"),
            Arrow::plus(Arrow::id(p), Arrow::zero(p, p)));
}

TEST(ParseArrow, SigmaTwiceIsIllTyped) {
  try {
    parse_arrow("sigma[p,q] . sigma[p,q]");
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_EQ(e.path(), "root");
  }
}

TEST(ParseArrow, SemicolonIsDiagrammaticOrder) {
  EXPECT_EQ(parse_arrow("inj1[p,q] ; proj1[p,q]"),
            parse_arrow("proj1[p,q] . inj1[p,q]"));
}

TEST(ParseArrow, PrecedenceOfCombinators) {
  Arrow t = parse_arrow(
      "inj1[p,q] . proj1[p,q] + inj2[p,q] . proj2[p,q]");
  EXPECT_EQ(t, Arrow::plus(Arrow::compose(Arrow::inj1(p, q), Arrow::proj1(p, q)),
                           Arrow::compose(Arrow::inj2(p, q), Arrow::proj2(p, q))));
  EXPECT_EQ(parse_arrow("id[p] (x) id[q] . sigma[q,p]"),
            Arrow::compose(Arrow::tensor(Arrow::id(p), Arrow::id(q)),
                           Arrow::sigma(q, p)));
}

TEST(ParseArrow, WhiskerAndHom) {
  EXPECT_EQ(parse_arrow("[p -o id[q]]"), Arrow::whisker(p, Arrow::id(q)));
  EXPECT_EQ(parse_arrow("[(p -o q) -o id[r]]"),
            Arrow::whisker(Object::lollipop(p, q), Arrow::id(r)));
  EXPECT_EQ(parse_arrow("hom(id[p], lambda[q])"),
            Arrow::hom(Arrow::id(p), Arrow::lambda(q)));
}

TEST(ParseArrow, ModeViolations) {
  EXPECT_THROW(parse_arrow("eta[p]", Mode::Smcb), ModeError);
  EXPECT_THROW(parse_arrow("eta[p,q]", Mode::Ccb), ModeError);
  EXPECT_THROW(parse_arrow("dg(id[p])", Mode::Ccb), ModeError);
  EXPECT_THROW(parse_arrow("[p -o id[q]]", Mode::Dccb), ModeError);
  EXPECT_NO_THROW(parse_arrow("dg(eps[p])", Mode::Dccb));
}

TEST(ParseArrow, ArityErrors) {
  EXPECT_THROW(parse_arrow("sigma[p]"), SyntaxError);
  EXPECT_THROW(parse_arrow("alpha[p,q]"), SyntaxError);
  EXPECT_THROW(parse_arrow("f"), SyntaxError);
}

TEST(ParseArrow, EnvironmentNames) {
  Environment env;
  env.objects.emplace("A", Object::tensor(p, q));
  env.arrows.emplace("s", Arrow::sigma(p, q));
  ParseOptions opts{Mode::Smcb, &env, {}};
  EXPECT_EQ(parse_object("A (+) r", opts),
            Object::oplus(Object::tensor(p, q), r));
  EXPECT_EQ(parse_arrow("sigma[q,p] . s", opts),
            Arrow::compose(Arrow::sigma(q, p), Arrow::sigma(p, q)));
}

TEST(ParseArrow, DeepLeftChainParsesAndRenders) {
  std::string text = "id[p]";
  for (int i = 0; i < 20000; ++i) text += " . id[p]";
  Arrow t = parse_arrow(text);
  EXPECT_EQ(depth(t), 20001u);
  EXPECT_EQ(render(t), text);
  EXPECT_EQ(infer_type(t, Mode::Smcb), (ArrowType{p, p}));
}

TEST(ParseArrow, ExcessiveNestingIsAnError) {
  std::string text(3000, '(');
  text += "id[p]";
  text += std::string(3000, ')');
  EXPECT_THROW(parse_arrow(text), SyntaxError);
}

TEST(InferType, ComponentTable) {
  EXPECT_EQ(infer_type(Arrow::eta_smc(p, q), Mode::Smcb),
            (ArrowType{q, Object::lollipop(p, Object::tensor(p, q))}));
  EXPECT_EQ(infer_type(Arrow::eps_smc(p, q), Mode::Smcb),
            (ArrowType{Object::tensor(p, Object::lollipop(p, q)), q}));
  EXPECT_EQ(infer_type(Arrow::eta_cc(p), Mode::Ccb),
            (ArrowType{Object::unit(),
                       Object::tensor(Object::dual(p), p)}));
  EXPECT_EQ(infer_type(Arrow::dagger(Arrow::inj1(p, q)), Mode::Dccb),
            (ArrowType{Object::oplus(p, q), p}));
  EXPECT_EQ(
      infer_type(Arrow::hom(Arrow::inj1(p, q), Arrow::lambda(r)), Mode::Smcb),
      (ArrowType{Object::lollipop(Object::oplus(p, q), Object::tensor(Object::unit(), r)),
                 Object::lollipop(p, r)}));
}

TEST(InferType, PathOfNestedMismatch) {
  Arrow bad = Arrow::tensor(Arrow::id(p),
                            Arrow::plus(Arrow::id(q), Arrow::id(r)));
  try {
    infer_type(bad, Mode::Smcb);
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_EQ(e.path(), "root.1");
  }
}

TEST(Render, Examples) {
  EXPECT_EQ(render(Object::tensor(p, Object::oplus(q, Object::unit()))),
            "p (x) (q (+) I)");
  EXPECT_EQ(render(Arrow::compose(Arrow::proj1(p, q), Arrow::inj1(p, q))),
            "proj1[p,q] . inj1[p,q]");
  EXPECT_EQ(render(Arrow::zero(Object::zero(), Object::zero())), "zero[0,0]");
  EXPECT_EQ(render(Object::lollipop(Object::lollipop(p, q), r)),
            "(p -o q) -o r");
  EXPECT_EQ(render(Arrow::compose(Arrow::id(p),
                                  Arrow::compose(Arrow::id(p), Arrow::id(p)))),
            "id[p] . (id[p] . id[p])");
}

TEST(ExpandDerived, HomWithIdentityCovariantPart) {
  Object pp = Object::generator("p2");
  Arrow f = Arrow::zero(p, pp);
  Arrow expanded = expand_derived(Arrow::hom(f, Arrow::id(q)), Mode::Smcb);
  Object hom = Object::lollipop(pp, q);
  Arrow expected = Arrow::compose(
      Arrow::whisker(p, Arrow::eps_smc(pp, q)),
      Arrow::compose(Arrow::whisker(p, Arrow::tensor(f, Arrow::id(hom))),
                     Arrow::eta_smc(p, hom)));
  EXPECT_EQ(expanded, expected);
  EXPECT_EQ(infer_type(expanded, Mode::Smcb),
            infer_type(Arrow::hom(f, Arrow::id(q)), Mode::Smcb));
}

TEST(ExpandDerived, DaggerSugar) {
  EXPECT_EQ(expand_derived(Arrow::eta_cc(p), Mode::Dccb),
            Arrow::compose(Arrow::sigma(p, Object::dual(p)),
                           Arrow::dagger(Arrow::eps_cc(p))));
  EXPECT_EQ(expand_derived(Arrow::inj2(p, q), Mode::Dccb),
            Arrow::dagger(Arrow::proj2(p, q)));
  EXPECT_EQ(expand_derived(Arrow::alpha_inv(p, q, r), Mode::Dccb),
            Arrow::dagger(Arrow::alpha(p, q, r)));
  EXPECT_EQ(expand_derived(Arrow::lambda_inv(p), Mode::Dccb),
            Arrow::dagger(Arrow::lambda(p)));
  // CCB keeps these as primitives.
  EXPECT_EQ(expand_derived(Arrow::eta_cc(p), Mode::Ccb), Arrow::eta_cc(p));
}

TEST(ExpandDerived, PrimitiveTermIsFixpoint) {
  Arrow t = parse_arrow("sigma[q,p] . sigma[p,q] + zero[p (x) q, p (x) q]");
  Arrow e = expand_derived(t, Mode::Smcb);
  EXPECT_EQ(e.node_id(), t.node_id());
}

TEST(DualArrow, Typing) {
  Arrow f = Arrow::inj1(p, q);
  Arrow d = dual_arrow(f, p, Object::oplus(p, q));
  EXPECT_EQ(infer_type(d, Mode::Ccb),
            (ArrowType{Object::dual(Object::oplus(p, q)), Object::dual(p)}));
}

}  // namespace
}  // namespace cobcoh
