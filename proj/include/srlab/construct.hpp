#pragma once

#include <array>
#include <vector>

#include "srlab/code.hpp"
#include "srlab/sumrank.hpp"

namespace srlab {

/* Matrix over F_q of x -> a_0 x + a_1 x^q + ... + a_{m-1} x^{q^{m-1}} in the
   basis B of F_{q^m}; column j expands the image of B[j]. */
Matrix qpoly_matrix(std::span<const Elem> coeffs, const Basis& B);

// SR(C_0, ..., C_{m-1}): codes over F_{q^m} of a common length t, blocks (m, m).
SumRankCode sr_construct(const std::vector<LinearCode>& codes, const Basis& B);

// (2,3) + (2,2)^{t-1} style profile: blocks (m, m) with the remainder of N
// appended to the first block.
AmbientProfile default_matb_profile(const FieldPtr& base, unsigned m, std::size_t N);
SumRankCode matb_construct(const LinearCode& C, const Basis& B, const AmbientProfile& profile);

// Rank of the q-polynomial matrix of (a_0, a_1) over GF(4)/GF(2).
using F4RankTable = std::array<std::array<std::uint8_t, 4>, 4>;
const F4RankTable& f4_rank_table();

/* Minimum sum-rank weight of SR(C0, C1) over GF(4) from codeword pairs:
   wt(c0, c1) = sum_j table[c0_j][c1_j]. Budget counts pairs. */
DistanceResult pairwise_sr_distance(const LinearCode& c0, const LinearCode& c1, const SearchOptions& opt = {});

struct BoundPair {
  unsigned lower = 0, upper = 0;
  bool exact() const { return lower == upper; }
};

// Sandwich for d_sr(SR(C_0..C_{m-1})) from the Hamming distances d_i.
BoundPair sr_distance_bounds(unsigned m, const std::vector<unsigned>& d);
// Sandwich for d_sr(Mat_B(C)) with d = d_H(C): (s + 1, min(d, sum m_i)).
BoundPair matb_distance_bounds(unsigned d, const AmbientProfile& profile);
// (ceil(d/2), d) for t blocks of shape (2,2).
BoundPair matb_square_bounds(unsigned d, std::size_t t);
// 8 (floor(t/12) + 1) for self-dual codes in F_q^{(2,2) x t}.
unsigned selfdual_sr_distance_upper(std::size_t t);

bool verify_duality_sr(const std::vector<LinearCode>& codes, const Basis& B);
bool verify_duality_matb(const LinearCode& C, const Basis& B, const AmbientProfile& profile);

}  // namespace srlab
