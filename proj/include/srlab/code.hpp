#pragma once

#include <vector>

#include "srlab/matrix.hpp"
#include "srlab/search.hpp"

namespace srlab {

// Linear code stored by its reduced row echelon generator (no zero rows).
class LinearCode {
 public:
  LinearCode(FieldPtr f, std::size_t n);  // zero code
  static LinearCode from_generator(const Matrix& g);
  static LinearCode from_rows(FieldPtr f, std::size_t n, const std::vector<std::vector<Elem>>& rows);

  const FieldPtr& field() const { return gen_.field(); }
  std::size_t n() const { return gen_.cols(); }
  std::size_t k() const { return gen_.rows(); }
  const Matrix& generator() const { return gen_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool contains(std::span<const Elem> v) const { return in_row_space(gen_, pivots_, v); }

  bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }

 private:
  LinearCode(Matrix g, std::vector<std::size_t> piv) : gen_(std::move(g)), pivots_(std::move(piv)) {}
  Matrix gen_;
  std::vector<std::size_t> pivots_;
};

LinearCode dual(const LinearCode& c);
// Gram matrix G G^T of the canonical generator.
Matrix gram(const LinearCode& c);
std::size_t hull_dimension(const LinearCode& c);
bool is_self_orthogonal(const LinearCode& c);
bool is_self_dual(const LinearCode& c);
bool is_lcd(const LinearCode& c);
std::size_t intersection_dimension(const LinearCode& a, const LinearCode& b);

DistanceResult min_hamming_distance(const LinearCode& c, const SearchOptions& opt = {});

/* Lightest word found in the subcodes of vectors fixed by a cyclic shift of
   s positions, s a proper divisor of n. An upper bound only (exact is false);
   distance 0 when every such subcode is zero. Each subcode gets budget/4. */
DistanceResult periodic_subcode_search(const LinearCode& c, const SearchOptions& opt = {});

// Upper bound 4 floor(n/12) + 4 on the distance of self-dual codes over GF(4).
unsigned selfdual_f4_distance_upper(std::size_t n);
// c must be self-dual over GF(4); true when d respects the bound above.
bool check_selfdual_f4_bound(const LinearCode& c, unsigned d);

}  // namespace srlab
