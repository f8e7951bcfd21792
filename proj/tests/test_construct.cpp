#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "srlab/construct.hpp"
#include "srlab/cyclic.hpp"
#include "srlab/error.hpp"
#include "srlab/polytext.hpp"
#include "srlab/random.hpp"

using namespace srlab;

namespace {

FieldPtr f4() { return Field::gf(4); }

// F2-rank of x -> a0 x + a1 x^2 on GF(4), read off the image size.
unsigned image_rank(unsigned a0, unsigned a1) {
  std::set<unsigned> img;
  for (unsigned x = 0; x < 4; ++x) img.insert(oracle::f4_add(oracle::f4_mul(a0, x), oracle::f4_mul(a1, oracle::f4_mul(x, x))));
  return img.size() == 1 ? 0 : img.size() == 2 ? 1 : 2;
}

LinearCode bch(std::size_t n, unsigned delta, std::uint64_t b) { return cyclic_code(bch_generator(f4(), n, delta, b), n); }

}  // namespace

TEST(Construct, RankTableAgainstImageSizes) {
  const auto& t = f4_rank_table();
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      EXPECT_EQ(t[a][b], image_rank(a, b)) << a << "," << b;
      EXPECT_EQ(t[a][b], (a == 0 && b == 0) ? 0u : (a && b) ? 1u : 2u);
    }
}

TEST(Construct, QPolyMatrixActsOnCoordinates) {
  Rng rng(1);
  for (auto E : {Field::gf(4), Field::gf(8), Field::gf(16)}) {
    const Field& F = *E->base();
    unsigned m = E->degree();
    for (int i = 0; i < 10; ++i) {
      Basis B = random_basis(E, rng);
      std::vector<Elem> a(m);
      for (auto& x : a) x = random_element(*E, rng);
      Matrix M = qpoly_matrix(a, B);
      for (Elem x = 0; x < E->order(); ++x) {
        Elem y = 0, xp = x;
        for (unsigned j = 0; j < m; ++j, xp = E->pow(xp, F.order())) y = E->add(y, E->mul(a[j], xp));
        auto cx = B.expand(x), cy = B.expand(y);
        for (unsigned r = 0; r < m; ++r) {
          Elem s = 0;
          for (unsigned c = 0; c < m; ++c) s = F.add(s, F.mul(M.at(r, c), cx[c]));
          ASSERT_EQ(s, cy[r]);
        }
      }
    }
    std::vector<Elem> id(m, 0);
    id[0] = 1;
    EXPECT_EQ(qpoly_matrix(id, Basis::polynomial(E)), Matrix::identity(E->base(), m));
  }
}

TEST(Construct, SrDimensionIsTwiceTheSum) {
  Rng rng(2);
  for (int i = 0; i < 40; ++i) {
    std::size_t t = 1 + i % 6;
    auto c0 = random_code(f4(), t, rng() % (t + 1), rng), c1 = random_code(f4(), t, rng() % (t + 1), rng);
    auto S = sr_construct({c0, c1}, random_basis(f4(), rng));
    EXPECT_EQ(S.dim(), 2 * (c0.k() + c1.k()));
    EXPECT_EQ(S.profile().num_blocks(), t);
  }
}

TEST(Construct, SmallestSelfDualPair) {
  auto c = LinearCode::from_rows(f4(), 2, {{1, 1}});
  auto S = sr_construct({c, c}, self_dual_basis(f4()));
  EXPECT_EQ(S.dim(), 4u);
  EXPECT_TRUE(is_self_dual_sr(S));
  EXPECT_EQ(min_sr_distance(S).distance, 2u);
  EXPECT_EQ(pairwise_sr_distance(c, c).distance, 2u);
  auto M = matb_construct(c, self_dual_basis(f4()), AmbientProfile::uniform(Field::gf(2), 2, 2, 1));
  EXPECT_EQ(M.dim(), 2u);
  EXPECT_EQ(min_sr_distance(M).distance, 1u);
}

TEST(Construct, PairwiseOnLengthThirteen) {
  auto a = bch(13, 2, 1);
  EXPECT_EQ(pairwise_sr_distance(a, a).distance, 5u);
  EXPECT_EQ(pairwise_sr_distance(bch(13, 3, 0), bch(13, 13, 1)).distance, 12u);
}

TEST(Construct, PairwiseAgreesWithExhaustive) {
  Rng rng(3);
  for (int i = 0; i < 60; ++i) {
    std::size_t t = 1 + i % 5;
    auto c0 = random_code(f4(), t, 1 + i % std::min<std::size_t>(t, 3), rng);
    auto c1 = random_code(f4(), t, rng() % (std::min<std::size_t>(t, 3) + 1), rng);
    auto p = pairwise_sr_distance(c0, c1);
    auto e = min_sr_distance(sr_construct({c0, c1}, random_basis(f4(), rng)));
    ASSERT_TRUE(p.exact);
    EXPECT_EQ(p.distance, e.distance);
  }
}

TEST(Construct, DistanceDoesNotDependOnTheBasis) {
  Rng rng(4);
  auto c0 = random_code(f4(), 5, 2, rng), c1 = random_code(f4(), 5, 2, rng);
  std::set<unsigned> seen;
  for (Elem a = 1; a < 4; ++a)
    for (Elem b = 1; b < 4; ++b)
      if (a != b) seen.insert(min_sr_distance(sr_construct({c0, c1}, Basis(f4(), {a, b}))).distance);
  EXPECT_EQ(seen.size(), 1u);
}

TEST(Construct, LengthSixtyThreePair) {
  auto c0 = cyclic_code(parse_polynomial(f4(), "x+1"), 63);
  auto c1 = bch(63, 4, 0);
  ASSERT_EQ(c0.k(), 62u);
  ASSERT_EQ(c1.k(), 56u);
  auto S = sr_construct({c0, c1}, self_dual_basis(f4()));
  EXPECT_EQ(S.dim(), 236u);
  BoundPair b = sr_distance_bounds(2, {2, 4});
  EXPECT_EQ(b.lower, 4u);
  EXPECT_EQ(b.upper, 4u);
}

TEST(Construct, MatbOfTheRepetitionCode) {
  auto c = bch(13, 13, 1);
  ASSERT_EQ(c.k(), 1u);
  auto P = default_matb_profile(Field::gf(2), 2, 13);
  EXPECT_EQ(P.blocks().front(), (std::pair<unsigned, unsigned>{2, 3}));
  EXPECT_EQ(P.num_blocks(), 6u);
  auto M = matb_construct(c, self_dual_basis(f4()), P);
  EXPECT_EQ(M.dim(), 2u);
  EXPECT_EQ(min_sr_distance(M).distance, 6u);
}

TEST(Construct, BoundFormulas) {
  auto b = sr_distance_bounds(2, {5, 13});
  EXPECT_TRUE(b.exact());
  EXPECT_EQ(b.lower, 10u);
  b = sr_distance_bounds(2, {5, 5});
  EXPECT_EQ(b.lower, 5u);
  EXPECT_EQ(b.upper, 10u);

  auto P = default_matb_profile(Field::gf(2), 2, 13);
  b = matb_distance_bounds(13, P);
  EXPECT_EQ(b.lower, 6u);
  EXPECT_EQ(b.upper, 12u);
  auto Q = default_matb_profile(Field::gf(2), 2, 205);
  EXPECT_EQ(matb_distance_bounds(41, Q).lower, 20u);
  EXPECT_EQ(matb_distance_bounds(41, Q).upper, 41u);
  EXPECT_EQ(matb_distance_bounds(164, Q).lower, 82u);
  EXPECT_THROW(matb_distance_bounds(14, P), Error);

  EXPECT_EQ(matb_square_bounds(7, 4).lower, 4u);
  EXPECT_EQ(matb_square_bounds(7, 4).upper, 7u);
  EXPECT_EQ(selfdual_sr_distance_upper(2), 8u);
  EXPECT_EQ(selfdual_sr_distance_upper(12), 16u);
}

TEST(Construct, DualityOnFixedInstances) {
  Rng rng(5);
  auto c0 = random_code(f4(), 4, 2, rng), c1 = random_code(f4(), 4, 1, rng);
  EXPECT_TRUE(verify_duality_sr({c0, c1}, random_basis(f4(), rng)));
  LinearCode z(f4(), 4);
  EXPECT_TRUE(verify_duality_sr({z, z}, self_dual_basis(f4())));
  auto sd = LinearCode::from_rows(f4(), 4, {{1, 0, 2, 3}, {0, 1, 3, 2}});
  auto P = AmbientProfile::uniform(Field::gf(2), 2, 2, 2);
  EXPECT_TRUE(verify_duality_matb(sd, self_dual_basis(f4()), P));
  EXPECT_TRUE(is_self_dual_sr(matb_construct(sd, self_dual_basis(f4()), P)));
}

TEST(Construct, ShapeErrors) {
  auto a = LinearCode::from_rows(f4(), 2, {{1, 1}});
  auto b = LinearCode::from_rows(f4(), 3, {{1, 1, 0}});
  EXPECT_THROW(sr_construct({a, b}, self_dual_basis(f4())), Error);
  EXPECT_THROW(matb_construct(b, self_dual_basis(f4()), AmbientProfile::uniform(Field::gf(2), 2, 2, 1)), Error);
}
