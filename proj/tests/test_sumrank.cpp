#include <gtest/gtest.h>

#include "oracle.hpp"
#include "srlab/error.hpp"
#include "srlab/random.hpp"
#include "srlab/sumrank.hpp"

using namespace srlab;

namespace {

std::vector<Elem> random_flat(const AmbientProfile& p, Rng& rng) {
  std::vector<Elem> v(p.length());
  for (auto& x : v) x = random_element(*p.field(), rng);
  return v;
}

SumRankCode random_sr_code(const AmbientProfile& p, std::size_t k, Rng& rng) {
  return SumRankCode(p, random_code(p.field(), p.length(), k, rng).generator());
}

std::vector<std::vector<unsigned>> rows_of(const Matrix& g) {
  std::vector<std::vector<unsigned>> out;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    auto v = g.row_vector(r);
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

const BlockShapes kShapes{{2, 3}, {2, 2}, {1, 3}};

}  // namespace

TEST(SumRank, TraceProductIsTheFlatDotProduct) {
  Rng rng(1);
  for (auto f : {Field::gf(2), Field::gf(3), Field::gf(4)}) {
    AmbientProfile p(f, kShapes);
    for (int i = 0; i < 100; ++i) {
      auto x = random_flat(p, rng), y = random_flat(p, rng);
      Elem s = 0;
      for (std::size_t j = 0; j < x.size(); ++j) s = f->add(s, f->mul(x[j], y[j]));
      EXPECT_EQ(trace_ip(SumRankVector::unflatten(p, x), SumRankVector::unflatten(p, y)), s);
    }
  }
}

TEST(SumRank, WeightMatchesBitmaskRanks) {
  Rng rng(2);
  AmbientProfile p(Field::gf(2), kShapes);
  for (int i = 0; i < 500; ++i) {
    auto x = random_flat(p, rng);
    std::vector<unsigned> u(x.begin(), x.end());
    EXPECT_EQ(sr_weight(SumRankVector::unflatten(p, x)), oracle::f2_sum_rank(u, kShapes));
  }
}

TEST(SumRank, MetricAxioms) {
  Rng rng(3);
  AmbientProfile p(Field::gf(4), {{2, 2}, {2, 3}});
  for (int i = 0; i < 200; ++i) {
    auto a = SumRankVector::unflatten(p, random_flat(p, rng));
    auto b = SumRankVector::unflatten(p, random_flat(p, rng));
    auto c = SumRankVector::unflatten(p, random_flat(p, rng));
    EXPECT_EQ(sr_distance(a, a), 0u);
    EXPECT_EQ(sr_distance(a, b), sr_distance(b, a));
    EXPECT_LE(sr_distance(a, c), sr_distance(a, b) + sr_distance(b, c));
    EXPECT_LE(sr_weight(a), p.rank_sum());
  }
}

TEST(SumRank, TraceDualIsAnInvolution) {
  Rng rng(4);
  for (auto f : {Field::gf(2), Field::gf(4)}) {
    AmbientProfile p(f, kShapes);
    for (std::size_t k = 0; k <= p.length(); k += 3) {
      auto c = random_sr_code(p, k, rng);
      auto d = dual_tr(c);
      EXPECT_EQ(d.dim(), p.length() - k);
      EXPECT_EQ(dual_tr(d), c);
    }
  }
}

TEST(SumRank, ExhaustiveMinimumMatchesOracle) {
  Rng rng(5);
  AmbientProfile p(Field::gf(2), kShapes);
  for (int i = 0; i < 40; ++i) {
    auto c = random_sr_code(p, 1 + i % 8, rng);
    auto r = min_sr_distance(c);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.distance, oracle::f2_min_sum_rank(rows_of(c.generator()), kShapes));
    EXPECT_TRUE(c.contains(r.witness));
  }
}

TEST(SumRank, LowWeightSyndromesAgreeWithExhaustive) {
  Rng rng(6);
  AmbientProfile p(Field::gf(2), kShapes);
  for (int i = 0; i < 40; ++i) {
    auto c = random_sr_code(p, 2 + i % 9, rng);
    unsigned d = oracle::f2_min_sum_rank(rows_of(c.generator()), kShapes);
    auto r = sr_low_weight_search(c, p.rank_sum());
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.distance, d);
    EXPECT_TRUE(c.contains(r.witness));
    if (d > 1) {
      auto cut = sr_low_weight_search(c, d - 1);
      EXPECT_FALSE(cut.exact);
      EXPECT_EQ(cut.lower_bound, d);
    }
  }
}

TEST(SumRank, SelfDualStructure) {
  auto f = Field::gf(2);
  AmbientProfile p = AmbientProfile::uniform(f, 1, 2, 1);
  SumRankCode c(p, Matrix::from_rows(f, {{1, 1}}, 2));
  EXPECT_TRUE(is_self_dual_sr(c));
  auto rep = structural_checks(c);
  EXPECT_TRUE(rep.passed());
  EXPECT_TRUE(rep.contains_all_ones);
  EXPECT_FALSE(is_lcd_sr(c));
  EXPECT_TRUE(is_lcd_sr(SumRankCode(p, Matrix::from_rows(f, {{1, 0}}, 2))));
}

TEST(SumRank, CyclicShiftMovesWholeBlocks) {
  auto f = Field::gf(2);
  AmbientProfile p = AmbientProfile::uniform(f, 2, 2, 3);
  std::vector<Elem> x{1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1};
  EXPECT_EQ(cyclic_shift_flat(p, x), (std::vector<Elem>{1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 0, 0}));
  EXPECT_TRUE(is_cyclic_sr(SumRankCode::full(p)));
  EXPECT_FALSE(is_cyclic_sr(SumRankCode(p, Matrix::from_rows(f, {x}, 12))));
}

TEST(SumRank, ProfileErrors) {
  auto f = Field::gf(2);
  AmbientProfile p(f, kShapes), q(f, {{2, 2}});
  EXPECT_THROW(trace_ip(SumRankVector::zero(p), SumRankVector::zero(q)), Error);
  EXPECT_THROW(SumRankVector::unflatten(q, std::vector<Elem>(3, 0)), Error);
}
