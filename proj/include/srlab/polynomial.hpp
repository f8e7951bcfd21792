#pragma once

#include <string>
#include <utility>
#include <vector>

#include "srlab/field.hpp"

namespace srlab {

// Univariate polynomial over a field, constant coefficient first.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr f) : f_(std::move(f)) {}
  Polynomial(FieldPtr f, std::vector<Elem> coeffs);

  static Polynomial monomial(FieldPtr f, std::size_t deg, Elem c = 1);
  static Polynomial x_pow_minus_one(FieldPtr f, std::size_t n);

  const FieldPtr& field() const { return f_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Elem eval(Elem x) const;
  // Evaluate at x in an extension E whose tower contains this polynomial's field.
  Elem eval_in(const Field& E, Elem x) const;

  Polynomial monic() const;
  // x^deg p(1/x), made monic.
  Polynomial reciprocal_monic() const;

  bool operator==(const Polynomial& o) const { return same_field(f_, o.f_) && c_ == o.c_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(Elem s) const;

 private:
  void trim();
  FieldPtr f_;
  std::vector<Elem> c_;
};

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic
Polynomial lcm(const Polynomial& a, const Polynomial& b);  // monic
Polynomial mul_mod(const Polynomial& a, const Polynomial& b, const Polynomial& m);
Polynomial pow_mod(const Polynomial& a, std::uint64_t e, const Polynomial& m);
bool divides(const Polynomial& d, const Polynomial& a);
bool is_irreducible(const Polynomial& f);

}  // namespace srlab
