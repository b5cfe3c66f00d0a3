#include <gtest/gtest.h>

#include <thread>

#include "cobcoh/biproduct.hpp"
#include "cobcoh/parser.hpp"
#include "cobcoh/random_terms.hpp"
#include "cobcoh/render.hpp"
#include "cobcoh/tree.hpp"
#include "cobcoh/typecheck.hpp"

namespace cobcoh {
namespace {

Object obj(const char* text, Mode mode = Mode::Smcb) { return parse_object(text, mode); }

TEST(Decompose, OplusFreeIsTrivial) {
  auto d = decompose(obj("p"));
  ASSERT_EQ(d->size(), 1u);
  EXPECT_EQ(d->components[0], obj("p"));
  EXPECT_EQ(d->injections[0], Arrow::id(obj("p")));
  EXPECT_EQ(d->projections[0], Arrow::id(obj("p")));
  auto t = decompose(obj("p (x) (q -o I)"));
  ASSERT_EQ(t->size(), 1u);
  EXPECT_EQ(t->injections[0], Arrow::id(obj("p (x) (q -o I)")));
  EXPECT_EQ(decompose(obj("0"))->size(), 1u);
}

TEST(Decompose, OplusTimesGenerator) {
  Object p = obj("p"), q = obj("q"), r = obj("r");
  auto d = decompose(obj("(p (+) q) (x) r"));
  ASSERT_EQ(d->size(), 2u);
  EXPECT_EQ(d->components[0], obj("p (x) r"));
  EXPECT_EQ(d->components[1], obj("q (x) r"));
  EXPECT_EQ(d->injections[0],
            Arrow::tensor(Arrow::compose(Arrow::inj1(p, q), Arrow::id(p)),
                          Arrow::id(r)));
  EXPECT_EQ(d->projections[1],
            Arrow::tensor(Arrow::compose(Arrow::id(q), Arrow::proj2(p, q)),
                          Arrow::id(r)));
}

struct WorkedExample {
  Object a1 = obj("(p (+) q) (+) r");
  Object a2 = obj("q (+) I");
  std::shared_ptr<const Decomposition> d1 = decompose(a1);
  std::shared_ptr<const Decomposition> d2 = decompose(a2);
  // Index pairs in the order the sequences are listed for n1 = 3, n2 = 2.
  std::vector<std::pair<int, int>> order{{0, 0}, {0, 1}, {1, 0},
                                         {1, 1}, {2, 0}, {2, 1}};
};

TEST(Decompose, WorkedExampleTensor) {
  WorkedExample w;
  ASSERT_EQ(w.d1->size(), 3u);
  ASSERT_EQ(w.d2->size(), 2u);
  auto d = decompose(Object::tensor(w.a1, w.a2));
  ASSERT_EQ(d->size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    auto [x, y] = w.order[i];
    EXPECT_EQ(d->injections[i],
              Arrow::tensor(w.d1->injections[x], w.d2->injections[y]));
    EXPECT_EQ(d->projections[i],
              Arrow::tensor(w.d1->projections[x], w.d2->projections[y]));
  }
}

TEST(Decompose, WorkedExampleLollipop) {
  WorkedExample w;
  auto d = decompose(Object::lollipop(w.a1, w.a2));
  ASSERT_EQ(d->size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    auto [x, y] = w.order[i];
    EXPECT_EQ(d->injections[i],
              Arrow::hom(w.d1->projections[x], w.d2->injections[y]));
    EXPECT_EQ(d->projections[i],
              Arrow::hom(w.d1->injections[x], w.d2->projections[y]));
  }
}

TEST(Decompose, WorkedExampleOplus) {
  WorkedExample w;
  auto d = decompose(Object::oplus(w.a1, w.a2));
  ASSERT_EQ(d->size(), 5u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(d->injections[i],
              Arrow::compose(Arrow::inj1(w.a1, w.a2), w.d1->injections[i]));
    EXPECT_EQ(d->projections[i],
              Arrow::compose(w.d1->projections[i], Arrow::proj1(w.a1, w.a2)));
  }
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(d->injections[3 + i],
              Arrow::compose(Arrow::inj2(w.a1, w.a2), w.d2->injections[i]));
    EXPECT_EQ(d->projections[3 + i],
              Arrow::compose(w.d2->projections[i], Arrow::proj2(w.a1, w.a2)));
  }
}

std::size_t expected_count(const Object& a) {
  switch (a.kind()) {
    case ObjectKind::Oplus:
      return expected_count(a.left()) + expected_count(a.right());
    case ObjectKind::Tensor:
    case ObjectKind::Lollipop:
      return expected_count(a.left()) * expected_count(a.right());
    case ObjectKind::Dual:
      return expected_count(a.inner());
    default:
      return 1;
  }
}

TEST(Decompose, TypesCountsAndProperness) {
  for (Mode mode : {Mode::Smcb, Mode::Ccb}) {
    Rng rng(derive_seed(17, static_cast<int>(mode)));
    TermShape shape;
    shape.mode = mode;
    shape.generators = {"p", "q"};
    for (int n = 0; n < 150; ++n) {
      Object a = random_object(rng, shape, 4);
      auto d = decompose(a);
      ASSERT_EQ(d->injections.size(), d->size());
      ASSERT_EQ(d->projections.size(), d->size());
      EXPECT_EQ(d->size(), expected_count(a)) << render(a);
      for (std::size_t i = 0; i < d->size(); ++i) {
        const Object& c = d->components[i];
        EXPECT_TRUE(is_oplus_free(c));
        EXPECT_EQ(infer_type(d->injections[i], mode), (ArrowType{c, a}));
        EXPECT_EQ(infer_type(d->projections[i], mode), (ArrowType{a, c}));
      }
    }
  }
}

TEST(Decompose, ComponentOfProperObjectNeedNotBeProper) {
  // I (+) I is neither I-valued nor 0-valued, so the right side hides the
  // I-valued I (x) I that appears once the left side is split.
  Object a = obj("((I (+) p) (x) I) -o (I (x) (I (+) I))");
  EXPECT_TRUE(is_proper(a));
  auto d = decompose(a);
  ASSERT_EQ(d->size(), 4u);
  EXPECT_EQ(d->components[2], obj("(p (x) I) -o (I (x) I)"));
  EXPECT_FALSE(is_proper(d->components[2]));
}

TEST(Decompose, ProperComponentsWithoutHiddenUnits) {
  // With no I (+) I style summands every component of a proper object stays
  // proper.
  Rng rng(23);
  TermShape shape;
  shape.generators = {"p", "q"};
  int checked = 0;
  for (int n = 0; n < 400; ++n) {
    Object a = random_object(rng, shape, 4);
    bool hidden = false;
    tree::visit_preorder(a, [&](const Object& x) {
      if (x.is(ObjectKind::Oplus) && valuation(x) == Valuation::Neither &&
          (valuation(x.left()) != Valuation::Neither ||
           valuation(x.right()) != Valuation::Neither))
        hidden = true;
      return !hidden;
    });
    if (hidden || !is_proper(a)) continue;
    ++checked;
    for (const auto& c : decompose(a)->components)
      EXPECT_TRUE(is_proper(c)) << render(a);
  }
  EXPECT_GT(checked, 50);
}

TEST(Decompose, ConcurrentCallsAgree) {
  std::vector<Object> objects;
  Rng rng(3);
  TermShape shape;
  for (int n = 0; n < 40; ++n) objects.push_back(random_object(rng, shape, 4));
  std::vector<std::vector<std::size_t>> seen(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (const auto& a : objects) seen[t].push_back(decompose(a)->size());
    });
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) EXPECT_EQ(seen[t], seen[0]);
}

TEST(Valuation, Clauses) {
  EXPECT_EQ(valuation(obj("I (+) 0")), Valuation::IValued);
  EXPECT_EQ(valuation(obj("0 (+) I")), Valuation::IValued);
  EXPECT_EQ(valuation(obj("I (+) I")), Valuation::Neither);
  EXPECT_EQ(valuation(obj("0 (+) 0")), Valuation::ZeroValued);
  EXPECT_EQ(valuation(obj("p (x) 0")), Valuation::ZeroValued);
  EXPECT_EQ(valuation(obj("I (x) I")), Valuation::IValued);
  EXPECT_EQ(valuation(obj("I -o I")), Valuation::IValued);
  EXPECT_EQ(valuation(obj("0 -o p")), Valuation::ZeroValued);
  EXPECT_EQ(valuation(obj("p")), Valuation::Neither);
  EXPECT_EQ(valuation(obj("I*", Mode::Ccb)), Valuation::IValued);
  EXPECT_EQ(valuation(obj("(p (x) 0)*", Mode::Ccb)), Valuation::ZeroValued);
}

TEST(Proper, Definition) {
  EXPECT_FALSE(is_proper(obj("p -o I")));
  EXPECT_TRUE(is_proper(obj("p -o q")));
  EXPECT_TRUE(is_proper(obj("(I (+) 0) -o I")));
  EXPECT_TRUE(is_proper(obj("0 -o I")));
  EXPECT_FALSE(is_proper(obj("q (x) ((p (+) I) -o (I (x) I))")));
  auto bad = find_improper_subformula(obj("q (x) (p -o I)"));
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(render(*bad), "p -o I");
  EXPECT_TRUE(is_proper(obj("p* (x) I", Mode::Ccb)));
}

}  // namespace
}  // namespace cobcoh
