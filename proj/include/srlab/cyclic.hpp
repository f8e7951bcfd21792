#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "srlab/code.hpp"
#include "srlab/polynomial.hpp"

namespace srlab {

struct CosetTable {
  std::uint64_t q = 0, n = 0;
  std::vector<std::vector<std::uint64_t>> cosets;  // sorted, ordered by minimal element
  std::vector<std::size_t> index;                  // index[i] = coset containing i

  const std::vector<std::uint64_t>& coset_of(std::uint64_t i) const { return cosets[index[i % n]]; }
};

CosetTable cyclotomic_cosets(std::uint64_t q, std::uint64_t n);
unsigned mu(std::uint64_t q, std::uint64_t n);
unsigned multiplicative_order(std::uint64_t q, std::uint64_t n);
// Dimension of the BCH code from the coset union alone.
std::size_t bch_dimension(std::uint64_t q, std::uint64_t n, unsigned delta, std::uint64_t b);

/* Roots of x^n - 1 over F_q: the splitting field F_{q^m}, m = ord_n(q), and
   beta = alpha^((q^m - 1)/n) for the primitive element alpha. */
class RootContext {
 public:
  RootContext(FieldPtr fq, std::uint64_t n);

  const FieldPtr& base() const { return fq_; }
  const FieldPtr& ext() const { return ext_; }
  std::uint64_t n() const { return n_; }
  Elem beta() const { return beta_; }
  Elem root(std::uint64_t i) const { return ext_->pow(beta_, i % n_); }
  const CosetTable& cosets() const { return cosets_; }

  Polynomial minimal_poly(std::uint64_t i) const;
  Polynomial bch_generator(unsigned delta, std::uint64_t b) const;
  // g(beta^(b+j)) = 0 for j = 0..delta-2.
  bool has_consecutive_roots(const Polynomial& g, unsigned delta, std::uint64_t b) const;

 private:
  FieldPtr fq_, ext_;
  std::uint64_t n_;
  Elem beta_;
  CosetTable cosets_;
  mutable std::mutex mu_;
  mutable std::map<std::size_t, Polynomial> cache_;
};

Polynomial minimal_poly(const FieldPtr& fq, std::uint64_t n, std::uint64_t i);
Polynomial bch_generator(const FieldPtr& fq, std::uint64_t n, unsigned delta, std::uint64_t b);

LinearCode cyclic_code(const Polynomial& g, std::size_t n);
Polynomial cyclic_dual_generator(const Polynomial& g, std::size_t n);
std::vector<Elem> cyclic_shift(std::span<const Elem> c);
bool is_cyclic(const LinearCode& c);

}  // namespace srlab
