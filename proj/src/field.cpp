#include "srlab/field.hpp"

#include <algorithm>
#include <sstream>

#include "srlab/error.hpp"
#include "srlab/polynomial.hpp"

namespace srlab {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotSubfield: return "NotSubfield";
    case ErrorKind::InvalidBasis: return "InvalidBasis";
    case ErrorKind::NoSelfDualBasis: return "NoSelfDualBasis";
    case ErrorKind::SearchExceeded: return "SearchExceeded";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyCode: return "EmptyCode";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::BadDelta: return "BadDelta";
    case ErrorKind::NoNontrivialCoset: return "NoNontrivialCoset";
    case ErrorKind::NotDivisor: return "NotDivisor";
    case ErrorKind::ProfileInvalid: return "ProfileInvalid";
    case ErrorKind::ProfileMismatch: return "ProfileMismatch";
    case ErrorKind::NonUniformProfile: return "NonUniformProfile";
    case ErrorKind::DistanceExceedsLength: return "DistanceExceedsLength";
    case ErrorKind::NotSelfDual: return "NotSelfDual";
    case ErrorKind::NotF4: return "NotF4";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownTable: return "UnknownTable";
    case ErrorKind::MethodUnavailable: return "MethodUnavailable";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "Error";
}

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

constexpr std::uint64_t kTableLimit = 1u << 16;
constexpr std::uint64_t kMaxOrder = 1ull << 32;

Elem find_primitive(const Field& F) {
  std::uint64_t n = F.order() - 1;
  auto ps = prime_factors(n);
  for (std::uint64_t a = 1; a < F.order(); ++a) {
    bool ok = true;
    for (auto r : ps)
      if (F.pow(static_cast<Elem>(a), n / r) == 1) {
        ok = false;
        break;
      }
    if (ok) return static_cast<Elem>(a);
  }
  throw Error(ErrorKind::Reducible, "no primitive element found");
}

}  // namespace

FieldPtr Field::prime(std::uint32_t p) {
  if (!is_prime_number(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->order_ = p;
  f->modulus_ = {0, 1};
  f->finish();
  return f;
}

FieldPtr Field::extension(FieldPtr base, unsigned degree) {
  if (degree == 0) throw Error(ErrorKind::Reducible, "extension degree must be positive");
  std::uint64_t Q = base->order();
  long double total = 1;
  for (unsigned i = 0; i < degree; ++i) total *= static_cast<long double>(Q);
  if (total > static_cast<long double>(kMaxOrder)) throw Error(ErrorKind::Unsupported, "field order above 2^32");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= Q;
  std::vector<Elem> c(degree + 1, 0);
  c[degree] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (unsigned i = 0; i < degree; ++i) {
      c[i] = static_cast<Elem>(v % Q);
      v /= Q;
    }
    if (degree > 1 && c[0] == 0) continue;
    if (is_irreducible(Polynomial(base, c))) return extension(base, c);
  }
  throw Error(ErrorKind::Reducible, "no irreducible polynomial found");
}

FieldPtr Field::extension(FieldPtr base, std::vector<Elem> modulus) {
  if (modulus.size() < 2 || modulus.back() != 1)
    throw Error(ErrorKind::DegreeMismatch, "modulus must be monic of positive degree");
  Polynomial mp(base, modulus);
  if (!is_irreducible(mp)) throw Error(ErrorKind::Reducible, "modulus is reducible");
  unsigned degree = static_cast<unsigned>(modulus.size() - 1);
  long double total = 1;
  for (unsigned i = 0; i < degree; ++i) total *= static_cast<long double>(base->order());
  if (total > static_cast<long double>(kMaxOrder)) throw Error(ErrorKind::Unsupported, "field order above 2^32");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = base->p_;
  f->order_ = 1;
  for (unsigned i = 0; i < degree; ++i) f->order_ *= base->order_;
  f->degree_ = degree;
  f->absdeg_ = base->absdeg_ * degree;
  f->base_ = base;
  f->modulus_ = std::move(modulus);
  f->finish();
  return f;
}

FieldPtr Field::tower(std::uint32_t p, const std::vector<unsigned>& degrees) {
  FieldPtr f = prime(p);
  for (unsigned d : degrees) f = extension(f, d);
  return f;
}

FieldPtr Field::gf(std::uint64_t q) {
  auto ps = prime_factors(q);
  if (ps.size() != 1) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  std::uint64_t p = ps[0];
  unsigned e = 0;
  for (std::uint64_t v = q; v > 1; v /= p) ++e;
  FieldPtr f = prime(static_cast<std::uint32_t>(p));
  return e == 1 ? f : extension(f, e);
}

void Field::finish() {
  prim_ = find_primitive(*this);
  if (order_ <= kTableLimit && order_ > 2) {
    std::uint64_t n = order_ - 1;
    std::vector<Elem> e(2 * n);
    std::vector<std::uint32_t> l(order_, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      e[i] = x;
      l[x] = static_cast<std::uint32_t>(i);
      x = mul(x, prim_);
    }
    for (std::uint64_t i = 0; i < n; ++i) e[n + i] = e[i];
    exp_ = std::move(e);
    log_ = std::move(l);
  }
}

Elem Field::add_digits(Elem a, Elem b, bool subtract) const {
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < absdeg_; ++i) {
    Elem x = a % p_, y = b % p_;
    a /= p_;
    b /= p_;
    Elem s = subtract ? (x + p_ - y) % p_ : (x + y) % p_;
    r += s * scale;
    scale *= p_;
  }
  return r;
}

Elem Field::mul_poly(Elem a, Elem b) const {
  const Field& B = *base_;
  auto ca = coords(a), cb = coords(b);
  std::vector<Elem> prod(2 * degree_ - 1, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < degree_; ++j) prod[i + j] = B.add(prod[i + j], B.mul(ca[i], cb[j]));
  }
  for (unsigned k = 2 * degree_ - 1; k-- > degree_;) {
    Elem c = prod[k];
    if (c == 0) continue;
    for (unsigned j = 0; j < degree_; ++j) prod[k - degree_ + j] = B.sub(prod[k - degree_ + j], B.mul(c, modulus_[j]));
    prod[k] = 0;
  }
  prod.resize(degree_);
  return from_coords(prod);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::FieldMismatch, "inverse of zero");
  if (!exp_.empty()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
  return pow(a, order_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) return exp_[(std::uint64_t(log_[a]) * (e % (order_ - 1))) % (order_ - 1)];
  Elem r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

std::vector<Elem> Field::coords(Elem a) const {
  std::vector<Elem> c(degree_);
  if (base_ == nullptr) {
    c[0] = a;
    return c;
  }
  std::uint64_t Q = base_->order_;
  for (unsigned i = 0; i < degree_; ++i) {
    c[i] = static_cast<Elem>(a % Q);
    a = static_cast<Elem>(a / Q);
  }
  return c;
}

Elem Field::from_coords(const std::vector<Elem>& c) const {
  if (base_ == nullptr) return c.empty() ? 0 : c[0];
  std::uint64_t Q = base_->order_, v = 0, s = 1;
  for (unsigned i = 0; i < degree_ && i < c.size(); ++i) {
    v += c[i] * s;
    s *= Q;
  }
  return static_cast<Elem>(v);
}

bool Field::same_as(const Field& o) const {
  if (this == &o) return true;
  if (p_ != o.p_ || order_ != o.order_ || degree_ != o.degree_ || modulus_ != o.modulus_) return false;
  if (base_ == nullptr || o.base_ == nullptr) return base_ == nullptr && o.base_ == nullptr;
  return base_->same_as(*o.base_);
}

bool Field::has_subfield(const Field& sub) const {
  for (const Field* f = this; f != nullptr; f = f->base_.get())
    if (f->same_as(sub)) return true;
  return false;
}

Elem Field::trace_to(Elem a, const Field& sub) const {
  if (!has_subfield(sub)) throw Error(ErrorKind::NotSubfield, sub.describe() + " is not in the tower of " + describe());
  unsigned r = 1;
  for (const Field* f = this; !f->same_as(sub); f = f->base_.get()) r *= f->degree_;
  Elem s = 0, x = a;
  for (unsigned i = 0; i < r; ++i) {
    s = add(s, x);
    x = pow(x, sub.order());
  }
  return s;
}

Elem Field::trace(Elem a) const {
  if (base_ == nullptr) return a;
  return trace_to(a, *base_);
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << order_ << ")";
  if (base_ != nullptr) os << " over GF(" << base_->order_ << ")";
  return os.str();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where) {
  if (!same_field(a, b)) throw Error(ErrorKind::FieldMismatch, where);
}

/* Small dense solves over the base field for basis handling. */
namespace {

// Inverts an m x m row-major matrix over F; returns empty on singular input.
std::vector<Elem> invert(const Field& F, std::vector<Elem> a, std::size_t m) {
  std::vector<Elem> inv(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) inv[i * m + i] = 1;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (piv < m && a[piv * m + c] == 0) ++piv;
    if (piv == m) return {};
    if (piv != c)
      for (std::size_t j = 0; j < m; ++j) {
        std::swap(a[piv * m + j], a[c * m + j]);
        std::swap(inv[piv * m + j], inv[c * m + j]);
      }
    Elem s = F.inv(a[c * m + c]);
    for (std::size_t j = 0; j < m; ++j) {
      a[c * m + j] = F.mul(a[c * m + j], s);
      inv[c * m + j] = F.mul(inv[c * m + j], s);
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a[r * m + c] == 0) continue;
      Elem f = a[r * m + c];
      for (std::size_t j = 0; j < m; ++j) {
        a[r * m + j] = F.sub(a[r * m + j], F.mul(f, a[c * m + j]));
        inv[r * m + j] = F.sub(inv[r * m + j], F.mul(f, inv[c * m + j]));
      }
    }
  }
  return inv;
}

}  // namespace

Basis::Basis(FieldPtr ext, std::vector<Elem> elems) : ext_(std::move(ext)), elems_(std::move(elems)) {
  if (ext_->is_prime()) {
    if (elems_.size() != 1 || elems_[0] == 0 || elems_[0] >= ext_->order())
      throw Error(ErrorKind::InvalidBasis, "prime field basis must be one nonzero element");
    inv_ = {ext_->inv(elems_[0])};
    return;
  }
  std::size_t m = ext_->degree();
  if (elems_.size() != m) throw Error(ErrorKind::InvalidBasis, "basis size differs from extension degree");
  // column j holds the power coordinates of elems_[j]
  std::vector<Elem> a(m * m);
  for (std::size_t j = 0; j < m; ++j) {
    if (elems_[j] >= ext_->order()) throw Error(ErrorKind::InvalidBasis, "element outside field");
    auto c = ext_->coords(elems_[j]);
    for (std::size_t i = 0; i < m; ++i) a[i * m + j] = c[i];
  }
  inv_ = invert(*ext_->base(), a, m);
  if (inv_.empty()) throw Error(ErrorKind::InvalidBasis, "elements are linearly dependent");
}

Basis Basis::polynomial(FieldPtr ext) {
  if (ext->is_prime()) return Basis(ext, {1});
  std::vector<Elem> e(ext->degree());
  std::uint64_t s = 1;
  for (auto& x : e) {
    x = static_cast<Elem>(s);
    s *= ext->base()->order();
  }
  return Basis(ext, std::move(e));
}

std::vector<Elem> Basis::expand(Elem x) const {
  if (ext_->is_prime()) return {ext_->mul(x, inv_[0])};
  const Field& F = *ext_->base();
  std::size_t m = elems_.size();
  auto c = ext_->coords(x);
  std::vector<Elem> out(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out[i] = F.add(out[i], F.mul(inv_[i * m + j], c[j]));
  return out;
}

Elem Basis::combine(const std::vector<Elem>& c) const {
  if (c.size() != elems_.size()) throw Error(ErrorKind::LengthMismatch, "coordinate length differs from basis size");
  Elem s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s = ext_->add(s, ext_->mul(c[i], elems_[i]));
  return s;
}

Basis dual_basis(const Basis& b) {
  const FieldPtr& E = b.field();
  if (E->is_prime()) return Basis(E, {E->inv(b[0])});
  const Field& F = *E->base();
  std::size_t m = b.size();
  std::vector<Elem> g(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g[i * m + j] = E->trace(E->mul(b[i], b[j]));
  auto gi = invert(F, g, m);
  if (gi.empty()) throw Error(ErrorKind::InvalidBasis, "trace form is degenerate on this basis");
  std::vector<Elem> d(m, 0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) d[j] = E->add(d[j], E->mul(gi[k * m + j], b[k]));
  return Basis(E, std::move(d));
}

bool self_dual_basis_exists(std::uint64_t q, unsigned m) { return q % 2 == 0 || (q % 2 == 1 && m % 2 == 1); }

bool is_self_dual_basis(const Basis& b) {
  const FieldPtr& E = b.field();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      Elem t = E->is_prime() ? E->mul(b[i], b[j]) : E->trace(E->mul(b[i], b[j]));
      if (t != (i == j ? 1u : 0u)) return false;
    }
  return true;
}

Basis self_dual_basis(const FieldPtr& E, std::uint64_t budget) {
  if (E->is_prime()) return Basis(E, {1});
  const Field& F = *E->base();
  unsigned m = E->degree();
  if (!self_dual_basis_exists(F.order(), m))
    throw Error(ErrorKind::NoSelfDualBasis, "no self-dual basis of " + E->describe());
  // Tr(x * y) is F-linear in y: precompute Tr of each power-basis element times x.
  std::vector<Elem> power(m);
  {
    std::uint64_t s = 1;
    for (auto& x : power) {
      x = static_cast<Elem>(s);
      s *= F.order();
    }
  }
  auto functional = [&](Elem x) {
    std::vector<Elem> f(m);
    for (unsigned k = 0; k < m; ++k) f[k] = E->trace(E->mul(x, power[k]));
    return f;
  };
  auto apply = [&](const std::vector<Elem>& f, Elem y) {
    auto c = E->coords(y);
    Elem s = 0;
    for (unsigned k = 0; k < m; ++k) s = F.add(s, F.mul(f[k], c[k]));
    return s;
  };
  auto trace_fn = functional(1);
  std::vector<Elem> chosen;
  std::vector<std::vector<Elem>> fs;
  std::vector<std::uint64_t> next(m, 1);
  std::uint64_t visited = 0;
  std::size_t level = 0;
  while (true) {
    if (level == m) return Basis(E, chosen);
    bool found = false;
    for (std::uint64_t x = next[level]; x < E->order(); ++x) {
      if (++visited > budget) throw Error(ErrorKind::SearchExceeded, "self-dual basis search budget exhausted");
      Elem e = static_cast<Elem>(x);
      bool ok = true;
      for (auto& f : fs)
        if (apply(f, e) != 0) {
          ok = false;
          break;
        }
      if (!ok || apply(trace_fn, E->mul(e, e)) != 1) continue;
      next[level] = x + 1;
      chosen.push_back(e);
      fs.push_back(functional(e));
      ++level;
      if (level < m) next[level] = 1;
      found = true;
      break;
    }
    if (found) continue;
    if (level == 0) throw Error(ErrorKind::NoSelfDualBasis, "search found no self-dual basis");
    --level;
    chosen.pop_back();
    fs.pop_back();
  }
}

}  // namespace srlab
