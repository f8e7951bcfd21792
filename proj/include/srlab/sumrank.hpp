#pragma once

#include <utility>
#include <vector>

#include "srlab/matrix.hpp"
#include "srlab/search.hpp"

namespace srlab {

// Ambient space F_q^{(m_1,n_1),...,(m_t,n_t)} with m_i <= n_i.
class AmbientProfile {
 public:
  AmbientProfile(FieldPtr f, BlockShapes blocks);
  // t blocks of shape (m, n).
  static AmbientProfile uniform(FieldPtr f, unsigned m, unsigned n, std::size_t t);

  const FieldPtr& field() const { return f_; }
  const BlockShapes& blocks() const { return blocks_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  std::size_t length() const { return length_; }  // sum of m_i n_i
  std::size_t offset(std::size_t i) const { return offs_[i]; }
  std::size_t rank_sum() const;                    // sum of m_i
  bool is_uniform() const;

  bool operator==(const AmbientProfile& o) const { return same_field(f_, o.f_) && blocks_ == o.blocks_; }

 private:
  FieldPtr f_;
  BlockShapes blocks_;
  std::vector<std::size_t> offs_;
  std::size_t length_ = 0;
};

class SumRankVector {
 public:
  SumRankVector(const AmbientProfile& p, std::vector<Matrix> blocks);
  static SumRankVector zero(const AmbientProfile& p);
  static SumRankVector unflatten(const AmbientProfile& p, std::span<const Elem> flat);

  const AmbientProfile& profile() const { return p_; }
  const std::vector<Matrix>& blocks() const { return blocks_; }
  std::vector<Elem> flatten() const;

 private:
  AmbientProfile p_;
  std::vector<Matrix> blocks_;
};

unsigned sr_weight(const SumRankVector& v);
unsigned sr_distance(const SumRankVector& a, const SumRankVector& b);
Elem trace_ip(const SumRankVector& u, const SumRankVector& v);

// Linear sum-rank code; generator rows are flattened vectors in rref.
class SumRankCode {
 public:
  SumRankCode(AmbientProfile p, const Matrix& gen);
  static SumRankCode full(const AmbientProfile& p);

  const AmbientProfile& profile() const { return p_; }
  const FieldPtr& field() const { return p_.field(); }
  const Matrix& generator() const { return gen_; }
  std::size_t dim() const { return gen_.rows(); }
  bool contains(std::span<const Elem> flat) const { return in_row_space(gen_, pivots_, flat); }
  bool operator==(const SumRankCode& o) const { return p_ == o.p_ && gen_ == o.gen_; }

 private:
  AmbientProfile p_;
  Matrix gen_;
  std::vector<std::size_t> pivots_;
};

SumRankCode dual_tr(const SumRankCode& c);
bool is_self_dual_sr(const SumRankCode& c);
bool is_lcd_sr(const SumRankCode& c);
DistanceResult min_sr_distance(const SumRankCode& c, const SearchOptions& opt = {});

/* Walks ambient vectors of sum-rank weight 1, 2, ..., max_weight block by block
   and tests membership by syndrome; budget counts visited vectors. exact is
   set when a codeword turns up, and its weight is then the minimum distance.
   Otherwise lower_bound is the first weight not excluded and distance is 0. */
DistanceResult sr_low_weight_search(const SumRankCode& c, unsigned max_weight, const SearchOptions& opt = {});

struct StructuralReport {
  bool half_dimension = false;
  bool contains_all_ones = false;
  bool all_ones_checked = false;  // characteristic 2 only
  bool passed() const { return half_dimension && (!all_ones_checked || contains_all_ones); }
};
// Requires a self-dual code.
StructuralReport structural_checks(const SumRankCode& c);

SumRankVector cyclic_shift(const SumRankVector& v);
std::vector<Elem> cyclic_shift_flat(const AmbientProfile& p, std::span<const Elem> flat);
bool is_cyclic_sr(const SumRankCode& c);

}  // namespace srlab
