#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "srlab/matrix.hpp"

namespace srlab {

struct SearchOptions {
  std::uint64_t budget = 1ull << 28;  // codewords evaluated in the main enumeration
  unsigned jobs = 1;
};

/* When exact is false the enumeration stopped at the budget; distance is the
   lightest weight seen, an upper bound on the true minimum. */
struct DistanceResult {
  unsigned distance = 0;
  bool exact = false;
  unsigned lower_bound = 1;  // equals distance when exact
  std::uint64_t evaluated = 0;
  std::uint64_t total = 0;  // saturates at 2^63
  std::vector<Elem> witness;
  std::string method;
};

// Row-major (rows, cols) blocks concatenated; empty means Hamming weight.
using BlockShapes = std::vector<std::pair<unsigned, unsigned>>;

/* Minimum nonzero weight of the row space of gen (rows independent).
   Codewords are visited up to scalar multiples: for each leading row j,
   g_j + span(g_{j+1}, ...) in a p-ary Gray order over the prime subfield,
   smaller spans first. The split across jobs does not change the result. */
DistanceResult search_min_weight(const Matrix& gen, const BlockShapes& blocks, const SearchOptions& opt);

/* Minimum Hamming weight by enumerating low-weight messages on disjoint
   information sets. Stops once the lower bound from the finished weight
   levels meets the lightest codeword found; budget counts codewords. */
DistanceResult hamming_by_information_sets(const Matrix& gen, const SearchOptions& opt);

unsigned hamming_weight(std::span<const Elem> v);
// Sum of ranks of the row-major blocks of a flattened vector.
unsigned block_rank_weight(const Field& F, std::span<const Elem> v, const BlockShapes& blocks);

}  // namespace srlab
