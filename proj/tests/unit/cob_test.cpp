#include <gtest/gtest.h>

#include <map>
#include <random>

#include "cobcoh/cob_matrix.hpp"
#include "cobcoh/error.hpp"
#include "cobcoh/serialize.hpp"
#include "path_following.hpp"
#include "random_cob.hpp"

namespace cobcoh {
namespace {

using testing::path_following;
using testing::random_cob_from;
using testing::random_cob_into;
using testing::random_matrix;
using testing::random_types;

const Boundary kP{Sign::Plus};
const Boundary kM{Sign::Minus};
const Boundary kE{};

TEST(Boundary, DualFlipsEachSign) {
  EXPECT_EQ(flip(parse_boundary("+--")), parse_boundary("-++"));
  EXPECT_EQ(to_string(parse_boundary("+-")), "+-");
  EXPECT_THROW(parse_boundary("+x"), CobError);
}

TEST(Cobordism, RejectsBadMatchings) {
  EXPECT_THROW(Cobordism(kP, kM, {{0, 1}}), CobError);
  EXPECT_THROW(Cobordism(kP, kP, {}), CobError);
  EXPECT_THROW(Cobordism(concat(kP, kP), kE, {{0, 1}}), CobError);
  EXPECT_NO_THROW(Cobordism(concat(kP, kM), kE, {{0, 1}}));
  EXPECT_NO_THROW(Cobordism(kE, concat(kM, kP), {{1, 0}}));
}

TEST(Glue, IdentityIsUnit) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 200; ++n) {
    Cobordism f = random_cob_into(rng, testing::random_boundary(rng, 4));
    EXPECT_EQ(glue(Cobordism::identity(f.target()), f), f);
    EXPECT_EQ(glue(f, Cobordism::identity(f.source())), f);
  }
}

TEST(Glue, EpsilonBraidEtaIsOneCircle) {
  // eta_p : () -> (-,+), braid to (+,-), eps_p : (+,-) -> ().
  Cobordism eta(kE, concat(kM, kP), {{0, 1}});
  Cobordism braid = Cobordism::braid(kM, kP);
  Cobordism eps(concat(kP, kM), kE, {{0, 1}});
  Cobordism loop = glue(eps, glue(braid, eta));
  EXPECT_TRUE(loop.pairs().empty());
  EXPECT_EQ(loop.circles(), 1u);
  auto oracle = path_following(eps, glue(braid, eta));
  EXPECT_EQ(oracle.circles, 1u);
  EXPECT_TRUE(oracle.pairs.empty());
}

TEST(Glue, TriangleEqualityIsAStraightWire) {
  // (id_{-} (x) eps) . (eta (x) id_{-}) on a* = (-) is the identity wire.
  Cobordism eta(kE, concat(kM, kP), {{0, 1}});
  Cobordism eps(concat(kP, kM), kE, {{0, 1}});
  Cobordism left = tensor_cob(eta, Cobordism::identity(kM));
  Cobordism right = tensor_cob(Cobordism::identity(kM), eps);
  Cobordism zig = glue(right, left);
  EXPECT_EQ(zig, Cobordism::identity(kM));
  EXPECT_EQ(zig.circles(), 0u);
}

TEST(Glue, AgreesWithPathFollowing) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 500; ++n) {
    Boundary mid = testing::random_boundary(rng, 6);
    Cobordism f = random_cob_into(rng, mid);
    Cobordism g = random_cob_from(rng, mid);
    Cobordism h = glue(g, f);
    auto oracle = path_following(g, f);
    EXPECT_EQ(h.pairs(), oracle.pairs);
    EXPECT_EQ(h.circles(), oracle.circles);
  }
}

TEST(Glue, Associative) {
  std::mt19937_64 rng(8);
  for (int n = 0; n < 300; ++n) {
    Cobordism f = random_cob_into(rng, testing::random_boundary(rng, 4));
    Cobordism g = random_cob_from(rng, f.target());
    Cobordism h = random_cob_from(rng, g.target());
    EXPECT_EQ(glue(h, glue(g, f)), glue(glue(h, g), f));
  }
}

TEST(Glue, BoundaryMismatchThrows) {
  EXPECT_THROW(glue(Cobordism::identity(kP), Cobordism::identity(kM)),
               CobError);
}

TEST(Cobordism, TensorDualDaggerLaws) {
  EXPECT_EQ(tensor_cob(Cobordism::identity(kP), Cobordism::identity(kP)),
            Cobordism::identity(concat(kP, kP)));
  std::mt19937_64 rng(3);
  for (int n = 0; n < 200; ++n) {
    Cobordism f = random_cob_into(rng, testing::random_boundary(rng, 4));
    Cobordism g = random_cob_into(rng, testing::random_boundary(rng, 3));
    EXPECT_EQ(dagger_cob(dagger_cob(f)), f);
    EXPECT_EQ(dual_cob(dual_cob(f)), f);
    EXPECT_EQ(dagger_cob(tensor_cob(f, g)),
              tensor_cob(dagger_cob(f), dagger_cob(g)));
    EXPECT_EQ(tensor_cob(f, g).circles(), f.circles() + g.circles());
    EXPECT_EQ(dagger_cob(f).circles(), f.circles());
    EXPECT_EQ(dual_cob(f).circles(), f.circles());
    EXPECT_EQ(dual_cob(f).source(), flip(f.target()));
    Cobordism h = random_cob_from(rng, f.target());
    EXPECT_EQ(dagger_cob(glue(h, f)), glue(dagger_cob(f), dagger_cob(h)));
    EXPECT_EQ(dual_cob(glue(h, f)), glue(dual_cob(f), dual_cob(h)));
  }
  Boundary ab = parse_boundary("+-");
  Boundary c = parse_boundary("+");
  EXPECT_EQ(dagger_cob(Cobordism::braid(ab, c)), Cobordism::braid(c, ab));
}

TEST(MultiCob, MultiplicityMatters) {
  MultiCob one(Cobordism::identity(kP));
  MultiCob two = one + one;
  EXPECT_NE(two, one);
  EXPECT_EQ(two.size(), 2u);
  EXPECT_EQ(one + MultiCob(kP, kP), one);
  EXPECT_THROW(one + MultiCob(kM, kM), CobError);
}

TEST(CobMatrix, IdentityDiffersFromBraid) {
  Boundary pp = concat(kP, kP);
  CobMatrix id = identity_matrix({pp});
  CobMatrix braid({pp}, {pp}, {MultiCob(Cobordism::braid(kP, kP))});
  EXPECT_FALSE(equal(id, braid));
  EXPECT_TRUE(equal(id, id));
}

TEST(CobMatrix, RowTimesColumn) {
  std::mt19937_64 rng(2);
  Boundary m = parse_boundary("+-");
  std::vector<Boundary> mids{kE, m};
  CobMatrix row = random_matrix(rng, {kE}, mids);
  CobMatrix col = random_matrix(rng, mids, {kE});
  row.set(0, 1, MultiCob(m, kE, {Cobordism(m, kE, {{0, 1}})}));
  col.set(1, 0, MultiCob(kE, m, {Cobordism(kE, m, {{0, 1}})}));
  CobMatrix prod = mat_compose(row, col);
  MultiCob expect = compose(row.at(0, 0), col.at(0, 0)) +
                    compose(row.at(0, 1), col.at(1, 0));
  EXPECT_EQ(prod.at(0, 0), expect);
}

TEST(CobMatrix, KroneckerLayout) {
  // Label each entry by a distinct circle count and read back positions.
  std::vector<Boundary> r2{kE, kE}, r3{kE, kE, kE};
  auto labeled = [](std::size_t m, std::size_t n, std::uint64_t base) {
    std::vector<Boundary> rows(m), cols(n);
    CobMatrix out(rows, cols);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out.set(i, j, MultiCob(Cobordism(kE, kE, {}, base * (i * n + j + 1))));
    return out;
  };
  CobMatrix x = labeled(2, 3, 1);    // x_ij -> 1..6
  CobMatrix y = labeled(2, 2, 100);  // y_kl -> 100..400
  CobMatrix k = mat_tensor(x, y);
  ASSERT_EQ(k.row_count(), 4u);
  ASSERT_EQ(k.col_count(), 6u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::uint64_t xv = (i / 2) * 3 + (j / 2) + 1;
      std::uint64_t yv = 100 * ((i % 2) * 2 + (j % 2) + 1);
      EXPECT_EQ(k.at(i, j).elements().at(0).circles(), xv + yv)
          << i << "," << j;
    }
}

TEST(CobMatrix, AlgebraLaws) {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 150; ++n) {
    auto a = random_types(rng, 3, 2);
    auto b = random_types(rng, 3, 2);
    auto c = random_types(rng, 3, 2);
    CobMatrix f = random_matrix(rng, b, a);
    CobMatrix f2 = random_matrix(rng, b, a);
    CobMatrix g = random_matrix(rng, c, b);
    CobMatrix g2 = random_matrix(rng, c, b);
    EXPECT_EQ(mat_add(f, zero_matrix(b, a)), f);
    EXPECT_EQ(mat_add(f, f2), mat_add(f2, f));
    EXPECT_EQ(mat_compose(g, mat_add(f, f2)),
              mat_add(mat_compose(g, f), mat_compose(g, f2)));
    EXPECT_EQ(mat_compose(mat_add(g, g2), f),
              mat_add(mat_compose(g, f), mat_compose(g2, f)));
    EXPECT_EQ(mat_compose(identity_matrix(b), f), f);
    EXPECT_EQ(mat_compose(f, identity_matrix(a)), f);
    EXPECT_EQ(mat_dagger(mat_dagger(f)), f);
    EXPECT_EQ(mat_dagger(mat_compose(g, f)),
              mat_compose(mat_dagger(f), mat_dagger(g)));
    EXPECT_EQ(mat_dagger(mat_add(f, f2)),
              mat_add(mat_dagger(f), mat_dagger(f2)));
    EXPECT_EQ(mat_dagger(mat_tensor(f, g)),
              mat_tensor(mat_dagger(f), mat_dagger(g)));
    EXPECT_EQ(mat_dual(mat_compose(g, f)),
              mat_compose(mat_dual(f), mat_dual(g)));
    EXPECT_EQ(mat_tensor(mat_compose(g, f), mat_compose(g2, f2)),
              mat_compose(mat_tensor(g, g2), mat_tensor(f, f2)));
    EXPECT_EQ(mat_dsum(mat_compose(g, f), mat_compose(g2, f2)),
              mat_compose(mat_dsum(g, g2), mat_dsum(f, f2)));
    EXPECT_EQ(cardinality(mat_compose(g, f)),
              nat_compose(cardinality(g), cardinality(f)));
    EXPECT_EQ(cardinality(mat_add(f, f2)),
              nat_add(cardinality(f), cardinality(f2)));
    EXPECT_EQ(cardinality(mat_tensor(f, g)),
              nat_kronecker(cardinality(f), cardinality(g)));
    EXPECT_EQ(cardinality(mat_hom(f, g)),
              nat_kronecker(nat_transpose(cardinality(f)), cardinality(g)));
    // -o is functorial: contravariant in the left argument.
    auto d = random_types(rng, 2, 2);
    CobMatrix h = random_matrix(rng, d, d);
    CobMatrix id = identity_matrix(d);
    EXPECT_EQ(mat_hom(mat_compose(g, f), mat_compose(h, h)),
              mat_compose(mat_hom(f, h), mat_hom(g, h)));
    EXPECT_EQ(mat_hom(identity_matrix(a), id), identity_matrix(
        kronecker_types(flip_types(a), d)));
  }
}

TEST(CobMatrix, CongruenceChecksTypes) {
  CobMatrix a = identity_matrix({kP});
  CobMatrix b = identity_matrix({kM});
  EXPECT_THROW(mat_add(a, b), CobError);
  EXPECT_THROW(mat_compose(a, b), CobError);
  EXPECT_FALSE(equal(a, b));
}

TEST(Cardinality, ZeroAndIdentity) {
  EXPECT_EQ(cardinality(zero_matrix({kP, kE}, {kP})), NatMatrix(2, 1));
  EXPECT_EQ(cardinality(identity_matrix({kP, kE, kM})), nat_identity(3));
}

TEST(Serialize, JsonRoundTripAndStableText) {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 50; ++n) {
    auto a = random_types(rng, 3, 3);
    auto b = random_types(rng, 3, 3);
    CobMatrix m = random_matrix(rng, b, a);
    Json j = to_json(m);
    EXPECT_EQ(matrix_from_json(Json::parse(j.dump())), m);
    EXPECT_EQ(to_text(m), to_text(matrix_from_json(j)));
  }
  CobMatrix inj({kP, kE}, {kP});
  inj.set(0, 0, MultiCob(Cobordism::identity(kP)));
  EXPECT_EQ(to_json(inj).dump(),
            R"({"shape":[2,1],"rows":["+",""],"cols":["+"],)"
            R"("entries":[[[{"pairs":[[0,1]],"circles":0}]],[[]]]})");
  EXPECT_EQ(to_text(inj),
            "shape: 2x1\nrows: [\"+\", \"\"]\ncols: [\"+\"]\nentries:\n"
            "  (0,0): [{pairs: [[0,1]], circles: 0}]\n  (1,0): []\n");
}

}  // namespace
}  // namespace cobcoh
