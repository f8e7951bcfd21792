#include "srlab/polynomial.hpp"

#include "srlab/error.hpp"

namespace srlab {

Polynomial::Polynomial(FieldPtr f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  for (Elem c : c_)
    if (c >= f_->order()) throw Error(ErrorKind::FieldMismatch, "coefficient outside field");
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(FieldPtr f, std::size_t deg, Elem c) {
  std::vector<Elem> v(deg + 1, 0);
  v[deg] = c;
  return Polynomial(std::move(f), std::move(v));
}

Polynomial Polynomial::x_pow_minus_one(FieldPtr f, std::size_t n) {
  std::vector<Elem> v(n + 1, 0);
  v[n] = 1;
  v[0] = f->neg(1);
  if (n == 0) v[0] = 0;
  return Polynomial(std::move(f), std::move(v));
}

Elem Polynomial::eval(Elem x) const {
  Elem r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
  return r;
}

Elem Polynomial::eval_in(const Field& E, Elem x) const {
  if (!E.has_subfield(*f_)) throw Error(ErrorKind::NotSubfield, "evaluation field does not contain coefficients");
  Elem r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = E.add(E.mul(r, x), c_[i]);
  return r;
}

Polynomial Polynomial::scaled(Elem s) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = f_->mul(c_[i], s);
  return Polynomial(f_, std::move(v));
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) throw Error(ErrorKind::EmptyCode, "zero polynomial has no monic form");
  return scaled(f_->inv(c_.back()));
}

Polynomial Polynomial::reciprocal_monic() const {
  std::vector<Elem> v(c_.rbegin(), c_.rend());
  return Polynomial(f_, std::move(v)).monic();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.f_, b.f_, "polynomial add");
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.f_->add(a.coeff(i), b.coeff(i));
  return Polynomial(a.f_, std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.f_, b.f_, "polynomial sub");
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.f_->sub(a.coeff(i), b.coeff(i));
  return Polynomial(a.f_, std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.f_, b.f_, "polynomial mul");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.f_);
  const Field& F = *a.f_;
  std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = F.add(v[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  return Polynomial(a.f_, std::move(v));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field(), b.field(), "polynomial divmod");
  if (b.is_zero()) throw Error(ErrorKind::NotDivisor, "division by zero polynomial");
  const Field& F = *a.field();
  std::vector<Elem> r = a.coeffs();
  const auto& d = b.coeffs();
  if (r.size() < d.size()) return {Polynomial(a.field()), a};
  std::vector<Elem> q(r.size() - d.size() + 1, 0);
  Elem li = F.inv(d.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    Elem c = F.mul(r[k + d.size() - 1], li);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] = F.sub(r[k + j], F.mul(c, d[j]));
  }
  return {Polynomial(a.field(), std::move(q)), Polynomial(a.field(), std::move(r))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }
Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  return ((a * b) / gcd(a, b)).monic();
}

Polynomial mul_mod(const Polynomial& a, const Polynomial& b, const Polynomial& m) { return (a * b) % m; }

Polynomial pow_mod(const Polynomial& a, std::uint64_t e, const Polynomial& m) {
  Polynomial result = Polynomial(a.field(), {1}) % m;
  Polynomial base = a % m;
  while (e) {
    if (e & 1) result = mul_mod(result, base, m);
    e >>= 1;
    if (e) base = mul_mod(base, base, m);
  }
  return result;
}

bool divides(const Polynomial& d, const Polynomial& a) { return (a % d).is_zero(); }

bool is_irreducible(const Polynomial& f) {
  int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const FieldPtr& F = f.field();
  std::uint64_t q = F->order();
  Polynomial x = Polynomial::monomial(F, 1);
  Polynomial xp = x;
  for (int i = 1; i <= n / 2; ++i) {
    xp = pow_mod(xp, q, f);
    Polynomial g = gcd(xp - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

}  // namespace srlab
