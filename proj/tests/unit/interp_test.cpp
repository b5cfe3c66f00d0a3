#include <gtest/gtest.h>

#include "cobcoh/biproduct.hpp"
#include "cobcoh/expand.hpp"
#include "cobcoh/interpret.hpp"
#include "cobcoh/normalize.hpp"
#include "cobcoh/parser.hpp"
#include "cobcoh/random_terms.hpp"
#include "cobcoh/render.hpp"
#include "cobcoh/tree.hpp"
#include "cobcoh/typecheck.hpp"

namespace cobcoh {
namespace {

Object obj(const char* text, Mode mode = Mode::Smcb) {
  return parse_object(text, mode);
}
Arrow arr(const char* text, Mode mode = Mode::Smcb) {
  return parse_arrow(text, mode);
}

const Boundary kP{Sign::Plus};

TEST(InterpretObject, Examples) {
  EXPECT_EQ(interpret_object(obj("p (x) (q (+) I)")),
            (std::vector<Boundary>{parse_boundary("++"), parse_boundary("+")}));
  EXPECT_TRUE(interpret_object(obj("0")).empty());
  EXPECT_EQ(interpret_object(obj("p -o q")),
            (std::vector<Boundary>{parse_boundary("-+")}));
  EXPECT_EQ(interpret_object(obj("(p (x) q*)*", Mode::Ccb)),
            (std::vector<Boundary>{parse_boundary("-+")}));
}

TEST(InterpretObject, StrictAndSlotted) {
  Rng rng(99);
  TermShape shape;
  shape.generators = {"p", "q", "r"};
  for (int n = 0; n < 200; ++n) {
    Object a = random_object(rng, shape, 3);
    Object b = random_object(rng, shape, 3);
    EXPECT_EQ(interpret_object(Object::tensor(a, b)),
              kronecker_types(interpret_object(a), interpret_object(b)));
    auto slots = component_slots(a);
    auto d = decompose(a);
    auto g = interpret_object(a);
    std::size_t filled = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      bool zero = valuation(d->components[i]) == Valuation::ZeroValued;
      EXPECT_EQ(!slots[i].has_value(), zero) << render(d->components[i]);
      if (slots[i]) {
        EXPECT_EQ(*slots[i], filled++);
        EXPECT_EQ(interpret_object(d->components[i]),
                  std::vector<Boundary>{g[*slots[i]]});
      }
    }
    EXPECT_EQ(filled, g.size());
  }
}

TEST(InterpretArrow, TriangleEqualityIsIdentity) {
  CobMatrix lhs = interpret_arrow(arr("[p -o eps[p,p]] . eta[p, p -o p]"),
                                  Mode::Smcb);
  EXPECT_EQ(lhs, identity_matrix({parse_boundary("-+")}));
  CobMatrix rhs = interpret_arrow(arr("eps[p, p (x) p] . (id[p] (x) eta[p,p])"), Mode::Smcb);
  EXPECT_EQ(rhs, identity_matrix({parse_boundary("++")}));
}

TEST(InterpretArrow, InjectionAndSums) {
  CobMatrix inj = interpret_arrow(arr("inj1[p,q]"), Mode::Smcb);
  CobMatrix expect({kP, kP}, {kP});
  expect.set(0, 0, MultiCob(Cobordism::identity(kP)));
  EXPECT_EQ(inj, expect);
  CobMatrix two = interpret_arrow(arr("id[p] + id[p]"), Mode::Smcb);
  ASSERT_EQ(two.row_count(), 1u);
  EXPECT_EQ(two.at(0, 0).size(), 2u);
}

TEST(InterpretArrow, CompactLoopHasOneCircle) {
  CobMatrix m = interpret_arrow(arr("eps[p] . sigma[p*,p] . eta[p]", Mode::Ccb),
                                Mode::Ccb);
  ASSERT_EQ(m.row_count(), 1u);
  ASSERT_EQ(m.col_count(), 1u);
  ASSERT_EQ(m.at(0, 0).size(), 1u);
  EXPECT_TRUE(m.at(0, 0).elements()[0].pairs().empty());
  EXPECT_EQ(m.at(0, 0).elements()[0].circles(), 1u);
}

TEST(InterpretArrow, RejectsIllTyped) {
  Arrow bad = Arrow::compose(Arrow::id(obj("p (x) (q (x) r)")),
                             Arrow::id(obj("(p (x) q) (x) r")));
  EXPECT_THROW(interpret_arrow(bad, Mode::Smcb), TypeError);
}

TEST(EntryOracle, Examples) {
  Arrow id = arr("id[p (+) q]");
  auto e00 = entry_oracle(id, 0, 0, Mode::Smcb);
  ASSERT_TRUE(e00.has_value());
  EXPECT_EQ(*e00, MultiCob(Cobordism::identity(kP)));
  auto e10 = entry_oracle(id, 1, 0, Mode::Smcb);
  ASSERT_TRUE(e10.has_value());
  EXPECT_TRUE(e10->empty());
  EXPECT_THROW(entry_oracle(id, 2, 0, Mode::Smcb), CobError);
  EXPECT_FALSE(entry_oracle(arr("id[p (+) 0]"), 1, 1, Mode::Smcb).has_value());
}

void check_oracle(const Arrow& t, Mode mode) {
  ArrowType ty = infer_type(t, mode);
  CobMatrix m = interpret_arrow(t, mode);
  auto rows = component_slots(ty.target);
  auto cols = component_slots(ty.source);
  ASSERT_EQ(m.row_count(), interpret_object(ty.target).size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto e = entry_oracle(t, i, j, mode);
      ASSERT_EQ(e.has_value(), rows[i] && cols[j]);
      if (e) {
        EXPECT_EQ(*e, m.at(*rows[i], *cols[j])) << render(t);
      }
    }
}

TEST(EntryOracle, AgreesWithStructuralRecursion) {
  for (Mode mode : {Mode::Smcb, Mode::Ccb, Mode::Dccb}) {
    Rng rng(derive_seed(5, static_cast<int>(mode)));
    TermShape shape;
    shape.mode = mode;
    shape.object_depth = 2;
    shape.term_depth = 3;
    for (int n = 0; n < 40; ++n) check_oracle(random_arrow(rng, shape), mode);
  }
}

TEST(InterpretArrow, SugarMatchesExpansion) {
  for (Mode mode : {Mode::Smcb, Mode::Dccb}) {
    Rng rng(derive_seed(6, static_cast<int>(mode)));
    TermShape shape;
    shape.mode = mode;
    for (int n = 0; n < 80; ++n) {
      Arrow t = random_arrow(rng, shape);
      EXPECT_EQ(interpret_arrow(t, mode),
                interpret_arrow(expand_derived(t, mode), mode))
          << render(t);
    }
  }
}

TEST(InterpretCardinality, MatchesFullEvaluation) {
  for (Mode mode : {Mode::Smcb, Mode::Ccb, Mode::Dccb}) {
    Rng rng(derive_seed(7, static_cast<int>(mode)));
    TermShape shape;
    shape.mode = mode;
    for (int n = 0; n < 80; ++n) {
      Arrow t = random_arrow(rng, shape);
      EXPECT_EQ(interpret_cardinality(t, mode),
                cardinality(interpret_arrow(t, mode)));
    }
  }
}

TEST(BiproductLaws, HoldSemantically) {
  Rng rng(8);
  TermShape shape;
  shape.generators = {"p", "q"};
  for (int n = 0; n < 60; ++n) {
    Object a = random_object(rng, shape, 4);
    auto d = decompose(a);
    for (std::size_t i = 0; i < d->size(); ++i)
      for (std::size_t j = 0; j < d->size(); ++j) {
        Arrow lhs = Arrow::compose(d->projections[j], d->injections[i]);
        Arrow rhs = i == j ? Arrow::id(d->components[i])
                           : Arrow::zero(d->components[i], d->components[j]);
        EXPECT_EQ(interpret_arrow(lhs, Mode::Smcb),
                  interpret_arrow(rhs, Mode::Smcb));
      }
    Arrow sum = Arrow::compose(d->injections[0], d->projections[0]);
    for (std::size_t i = 1; i < d->size(); ++i)
      sum = Arrow::plus(sum, Arrow::compose(d->injections[i], d->projections[i]));
    EXPECT_EQ(interpret_arrow(sum, Mode::Smcb),
              interpret_arrow(Arrow::id(a), Mode::Smcb));
  }
}

TEST(Normalize, Examples) {
  TermMatrix id = normalize_syntactic(arr("id[p (+) q]"));
  ASSERT_EQ(id.rows.size(), 2u);
  EXPECT_EQ(id.at(0, 0), std::vector<Arrow>{arr("id[p]")});
  EXPECT_TRUE(id.at(0, 1).empty());
  EXPECT_EQ(render(id), "[id[p], 0; 0, id[q]]");
  EXPECT_EQ(render(normalize_syntactic(arr("inj1[p,q]"))), "[id[p]; 0]");
  TermMatrix zero = normalize_syntactic(arr("proj2[p,q] . inj1[p,q]"));
  ASSERT_EQ(zero.rows.size(), 1u);
  EXPECT_TRUE(zero.at(0, 0).empty());
  Arrow pure = arr("[q -o sigma[q,p]] . eta[q,p] . lambda[p] . sigma[p,I]");
  TermMatrix one = normalize_syntactic(pure);
  ASSERT_EQ(one.entries.size(), 1u);
  EXPECT_EQ(one.at(0, 0), std::vector<Arrow>{pure});
  EXPECT_THROW(normalize_syntactic(arr("eta[p]", Mode::Ccb)), ModeError);
}

bool is_pure(const Arrow& t) {
  bool pure = true;
  tree::visit_preorder(t, [&](const Arrow& n) {
    switch (n.kind()) {
      case ArrowKind::Oplus:
      case ArrowKind::Inj1:
      case ArrowKind::Inj2:
      case ArrowKind::Proj1:
      case ArrowKind::Proj2:
      case ArrowKind::HomMap:
        pure = false;
        break;
      default:
        break;
    }
    for (const auto& o : n.objects())
      if (!is_oplus_free(o)) pure = false;
    return pure;
  });
  return pure;
}

TEST(Normalize, PureAndSound) {
  Rng rng(12);
  TermShape shape;
  for (int n = 0; n < 80; ++n) {
    Arrow t = random_arrow(rng, shape);
    ArrowType ty = infer_type(t, Mode::Smcb);
    TermMatrix m = normalize_syntactic(t);
    CobMatrix g = interpret_arrow(t, Mode::Smcb);
    auto rows = component_slots(ty.target);
    auto cols = component_slots(ty.source);
    ASSERT_EQ(m.rows.size(), rows.size());
    ASSERT_EQ(m.cols.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) {
        for (const auto& s : m.at(i, j)) EXPECT_TRUE(is_pure(s)) << render(s);
        Arrow e = m.entry_term(i, j);
        EXPECT_EQ(infer_type(e, Mode::Smcb), (ArrowType{m.cols[j], m.rows[i]}));
        CobMatrix ge = interpret_arrow(e, Mode::Smcb);
        if (rows[i] && cols[j]) {
          EXPECT_EQ(ge.at(0, 0), g.at(*rows[i], *cols[j])) << render(t);
        } else {
          EXPECT_TRUE(ge.row_count() == 0 || ge.col_count() == 0);
        }
      }
  }
}

}  // namespace
}  // namespace cobcoh
