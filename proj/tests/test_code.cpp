#include <gtest/gtest.h>

#include "oracle.hpp"
#include "srlab/code.hpp"
#include "srlab/cyclic.hpp"
#include "srlab/error.hpp"
#include "srlab/polytext.hpp"
#include "srlab/random.hpp"

using namespace srlab;

namespace {

std::vector<std::vector<unsigned>> rows_of(const LinearCode& c) {
  std::vector<std::vector<unsigned>> out;
  for (std::size_t r = 0; r < c.k(); ++r) {
    auto v = c.generator().row_vector(r);
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

}  // namespace

TEST(Code, BidualityAndOrthogonality) {
  Rng rng(1);
  for (auto f : {Field::gf(2), Field::gf(3), Field::gf(4)})
    for (int i = 0; i < 60; ++i) {
      std::size_t n = 1 + i % 7, k = i % (n + 1);
      auto c = random_code(f, n, k, rng);
      auto d = dual(c);
      EXPECT_EQ(d.k(), n - k);
      EXPECT_EQ(dual(d), c);
      for (std::size_t a = 0; a < c.k(); ++a)
        for (std::size_t b = 0; b < d.k(); ++b) EXPECT_EQ(dot(*f, c.generator().row(a), d.generator().row(b)), 0u);
    }
}

TEST(Code, DualOfZeroCodeIsEverything) {
  auto f = Field::gf(4);
  LinearCode z(f, 5);
  EXPECT_EQ(dual(z).k(), 5u);
  EXPECT_THROW(min_hamming_distance(z), Error);
}

TEST(Code, HullViaGramAgreesWithIntersection) {
  Rng rng(2);
  auto f = Field::gf(4);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 2 + i % 6;
    auto c = random_code(f, n, 1 + i % n, rng);
    std::size_t h = intersection_dimension(c, dual(c));
    EXPECT_EQ(hull_dimension(c), h);
    EXPECT_EQ(is_lcd(c), h == 0);
    EXPECT_EQ(is_self_orthogonal(c), h == c.k());
  }
}

TEST(Code, KnownSelfDualCodes) {
  auto f = Field::gf(4);
  EXPECT_TRUE(is_self_dual(LinearCode::from_rows(f, 2, {{1, 1}})));
  EXPECT_TRUE(is_self_dual(LinearCode::from_rows(f, 4, {{1, 0, 2, 3}, {0, 1, 3, 2}})));
  EXPECT_FALSE(is_self_dual(LinearCode::from_rows(f, 2, {{1, 2}})));
  EXPECT_FALSE(is_self_dual(LinearCode::from_rows(f, 3, {{1, 1, 0}})));
}

TEST(Code, ExhaustiveDistanceMatchesBruteForce) {
  Rng rng(3);
  auto f = Field::gf(4);
  for (int i = 0; i < 150; ++i) {
    std::size_t n = 1 + i % 9, k = 1 + i % std::min<std::size_t>(n, 5);
    auto c = random_code(f, n, k, rng);
    auto r = min_hamming_distance(c);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.distance, oracle::f4_min_distance(rows_of(c), n));
    EXPECT_EQ(r.lower_bound, r.distance);
    EXPECT_TRUE(c.contains(r.witness));
    EXPECT_EQ(hamming_weight(r.witness), r.distance);
  }
}

TEST(Code, InformationSetsAgreeWithExhaustive) {
  Rng rng(4);
  for (auto f : {Field::gf(2), Field::gf(3), Field::gf(4), Field::gf(8)})
    for (int i = 0; i < 40; ++i) {
      std::size_t n = 6 + i % 14, k = 2 + i % 5;
      auto c = random_code(f, n, k, rng);
      auto a = search_min_weight(c.generator(), {}, {});
      auto b = hamming_by_information_sets(c.generator(), {});
      ASSERT_TRUE(a.exact);
      ASSERT_TRUE(b.exact);
      EXPECT_EQ(a.distance, b.distance);
      EXPECT_TRUE(c.contains(b.witness));
      EXPECT_EQ(hamming_weight(b.witness), b.distance);
    }
}

TEST(Code, InformationSetsReportHonestBoundsWhenCut) {
  Rng rng(5);
  auto f = Field::gf(4);
  auto c = random_code(f, 40, 12, rng);
  auto full = hamming_by_information_sets(c.generator(), {});
  ASSERT_TRUE(full.exact);
  auto cut = hamming_by_information_sets(c.generator(), {200, 1});
  EXPECT_FALSE(cut.exact);
  EXPECT_LE(cut.evaluated, 200u);
  EXPECT_LE(cut.lower_bound, full.distance);
  EXPECT_GE(cut.distance, full.distance);
}

TEST(Code, BudgetedSearchIsAnUpperBound) {
  Rng rng(6);
  auto f = Field::gf(4);
  auto c = random_code(f, 12, 6, rng);
  auto exact = search_min_weight(c.generator(), {}, {});
  auto cut = search_min_weight(c.generator(), {}, {100, 1});
  EXPECT_FALSE(cut.exact);
  EXPECT_EQ(cut.evaluated, 100u);
  EXPECT_GE(cut.distance, exact.distance);
  EXPECT_TRUE(c.contains(cut.witness));
}

TEST(Code, JobsDoNotChangeTheResult) {
  Rng rng(7);
  auto f = Field::gf(4);
  auto c = random_code(f, 20, 7, rng);
  auto a = search_min_weight(c.generator(), {}, {1ull << 20, 1});
  auto b = search_min_weight(c.generator(), {}, {1ull << 20, 3});
  EXPECT_EQ(a.distance, b.distance);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(Code, PeriodicSubcodeWordsLieInTheCode) {
  auto f = Field::gf(4);
  // (x^15 - 1)/(x^3 - 1) generates period-3 words of weight 5 a(x)
  LinearCode c = cyclic_code(parse_polynomial(f, "1+x^3+x^6+x^9+x^12"), 15);
  auto r = periodic_subcode_search(c);
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.distance, 5u);
  EXPECT_TRUE(c.contains(r.witness));
  EXPECT_EQ(min_hamming_distance(c).distance, 5u);
}

TEST(Code, SelfDualF4Bound) {
  EXPECT_EQ(selfdual_f4_distance_upper(2), 4u);
  EXPECT_EQ(selfdual_f4_distance_upper(12), 8u);
  EXPECT_EQ(selfdual_f4_distance_upper(30), 12u);
  auto f = Field::gf(4);
  auto c = LinearCode::from_rows(f, 4, {{1, 0, 2, 3}, {0, 1, 3, 2}});
  EXPECT_TRUE(check_selfdual_f4_bound(c, 3));
  EXPECT_THROW(check_selfdual_f4_bound(LinearCode::from_rows(f, 2, {{1, 2}}), 1), Error);
  EXPECT_THROW(check_selfdual_f4_bound(LinearCode::from_rows(Field::gf(2), 2, {{1, 1}}), 2), Error);
}

TEST(Code, RandomSelfDualAndLcdGenerators) {
  Rng rng(8);
  for (auto f : {Field::gf(2), Field::gf(4), Field::gf(8)})
    for (std::size_t n : {2u, 4u, 6u, 8u}) {
      EXPECT_TRUE(is_self_dual(random_self_dual_code(f, n, rng)));
      EXPECT_TRUE(is_lcd(random_lcd_code(f, n, n / 2, rng)));
    }
}
