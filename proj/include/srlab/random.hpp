#pragma once

#include <random>

#include "srlab/code.hpp"
#include "srlab/field.hpp"
#include "srlab/sumrank.hpp"

namespace srlab {

using Rng = std::mt19937_64;

Elem random_element(const Field& F, Rng& rng);
Elem random_nonzero(const Field& F, Rng& rng);
// Uniform code of dimension exactly k.
LinearCode random_code(const FieldPtr& f, std::size_t n, std::size_t k, Rng& rng);
/* Self-dual code of even length n in characteristic 2, grown one vector at a
   time from C^perp intersected with the even-weight-sum hyperplane. */
LinearCode random_self_dual_code(const FieldPtr& f, std::size_t n, Rng& rng);
// Random LCD code of dimension k (rejection sampling).
LinearCode random_lcd_code(const FieldPtr& f, std::size_t n, std::size_t k, Rng& rng);
Basis random_basis(const FieldPtr& ext, Rng& rng);
// Blocks (m, n_i) with n_i >= m and sum n_i = N.
AmbientProfile random_profile(const FieldPtr& base, unsigned m, std::size_t N, Rng& rng);

}  // namespace srlab
