#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace srlab {

/* Field elements are canonical integers: an element of an extension of
   degree d over a base of order Q with coordinates (c_0, ..., c_{d-1}) in
   the power basis is sum c_i Q^i, applied recursively down the tower. */
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static FieldPtr prime(std::uint32_t p);
  // Lexicographically smallest monic irreducible of the given degree.
  static FieldPtr extension(FieldPtr base, unsigned degree);
  // modulus: monic, constant term first, length degree + 1.
  static FieldPtr extension(FieldPtr base, std::vector<Elem> modulus);
  // Tower F_p < F_{p^d0} < F_{p^(d0 d1)} < ... with default moduli.
  static FieldPtr tower(std::uint32_t p, const std::vector<unsigned>& degrees);
  // GF(p^e) as a single extension of the prime field.
  static FieldPtr gf(std::uint64_t q);

  std::uint32_t characteristic() const { return p_; }
  std::uint64_t order() const { return order_; }
  unsigned degree() const { return degree_; }
  unsigned absolute_degree() const { return absdeg_; }
  bool is_prime() const { return base_ == nullptr; }
  const FieldPtr& base() const { return base_; }
  const std::vector<Elem>& modulus() const { return modulus_; }
  Elem primitive() const { return prim_; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    return add_digits(a, b, false);
  }
  Elem sub(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    return add_digits(a, b, true);
  }
  Elem neg(Elem a) const { return sub(0, a); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[log_[a] + log_[b]];
    if (base_ == nullptr) return static_cast<Elem>(std::uint64_t(a) * b % p_);
    return mul_poly(a, b);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  // Coordinates over the immediate base field in the power basis.
  std::vector<Elem> coords(Elem a) const;
  Elem from_coords(const std::vector<Elem>& c) const;

  bool same_as(const Field& other) const;
  // True when sub occurs in this field's tower (including this field).
  bool has_subfield(const Field& sub) const;
  bool contains_element_of(const Field& sub, Elem a) const { return has_subfield(sub) && a < sub.order(); }
  Elem trace_to(Elem a, const Field& sub) const;
  Elem trace(Elem a) const;  // to the immediate base

  std::string describe() const;

 private:
  Field() = default;
  Elem add_digits(Elem a, Elem b, bool subtract) const;
  Elem mul_poly(Elem a, Elem b) const;
  void finish();

  std::uint32_t p_ = 0;
  std::uint64_t order_ = 0;
  unsigned degree_ = 1;
  unsigned absdeg_ = 1;
  FieldPtr base_;
  std::vector<Elem> modulus_;
  Elem prim_ = 0;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);
void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where);

/* A basis of an extension E over its immediate base F. */
class Basis {
 public:
  Basis(FieldPtr ext, std::vector<Elem> elems);
  static Basis polynomial(FieldPtr ext);

  const FieldPtr& field() const { return ext_; }
  const FieldPtr& base() const { return ext_->base(); }
  const std::vector<Elem>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  Elem operator[](std::size_t i) const { return elems_[i]; }

  std::vector<Elem> expand(Elem x) const;
  Elem combine(const std::vector<Elem>& c) const;

  bool operator==(const Basis& o) const { return same_field(ext_, o.ext_) && elems_ == o.elems_; }

 private:
  FieldPtr ext_;
  std::vector<Elem> elems_;
  std::vector<Elem> inv_;  // m x m over the base, maps power coords to basis coords
};

Basis dual_basis(const Basis& b);
bool self_dual_basis_exists(std::uint64_t q, unsigned m);
// Deterministic backtracking search; throws NoSelfDualBasis or SearchExceeded.
Basis self_dual_basis(const FieldPtr& ext, std::uint64_t budget = 1ull << 26);
bool is_self_dual_basis(const Basis& b);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime_number(std::uint64_t n);

}  // namespace srlab
