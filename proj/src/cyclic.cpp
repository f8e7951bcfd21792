#include "srlab/cyclic.hpp"

#include <algorithm>
#include <numeric>

#include "srlab/error.hpp"

namespace srlab {

namespace {

void require_coprime(std::uint64_t q, std::uint64_t n) {
  if (n == 0 || std::gcd(q, n) != 1)
    throw Error(ErrorKind::NotCoprime, "q = " + std::to_string(q) + " and n = " + std::to_string(n) + " are not coprime");
}

}  // namespace

CosetTable cyclotomic_cosets(std::uint64_t q, std::uint64_t n) {
  require_coprime(q, n);
  CosetTable t;
  t.q = q;
  t.n = n;
  t.index.assign(n, SIZE_MAX);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (t.index[i] != SIZE_MAX) continue;
    std::vector<std::uint64_t> c;
    std::uint64_t x = i;
    do {
      c.push_back(x);
      t.index[x] = t.cosets.size();
      x = static_cast<std::uint64_t>((unsigned __int128)x * q % n);
    } while (x != i);
    std::sort(c.begin(), c.end());
    t.cosets.push_back(std::move(c));
  }
  return t;
}

unsigned mu(std::uint64_t q, std::uint64_t n) {
  require_coprime(q, n);
  if (n < 2) throw Error(ErrorKind::NoNontrivialCoset, "n = 1 has only the trivial coset");
  auto t = cyclotomic_cosets(q, n);
  std::size_t best = SIZE_MAX;
  for (std::size_t i = 1; i < t.cosets.size(); ++i) best = std::min(best, t.cosets[i].size());
  return static_cast<unsigned>(best);
}

unsigned multiplicative_order(std::uint64_t q, std::uint64_t n) {
  require_coprime(q, n);
  if (n == 1) return 1;
  std::uint64_t x = q % n;
  unsigned m = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>((unsigned __int128)x * q % n);
    ++m;
  }
  return m;
}

std::size_t bch_dimension(std::uint64_t q, std::uint64_t n, unsigned delta, std::uint64_t b) {
  if (delta < 2) throw Error(ErrorKind::BadDelta, "designed distance must be at least 2");
  auto t = cyclotomic_cosets(q, n);
  std::vector<bool> used(t.cosets.size(), false);
  std::size_t deg = 0;
  for (unsigned j = 0; j + 1 < delta; ++j) {
    std::size_t c = t.index[(b + j) % n];
    if (!used[c]) {
      used[c] = true;
      deg += t.cosets[c].size();
    }
  }
  return n - deg;
}

RootContext::RootContext(FieldPtr fq, std::uint64_t n) : fq_(std::move(fq)), n_(n) {
  cosets_ = cyclotomic_cosets(fq_->order(), n);
  unsigned m = multiplicative_order(fq_->order(), n);
  ext_ = Field::extension(fq_, m);
  beta_ = ext_->pow(ext_->primitive(), (ext_->order() - 1) / n);
}

Polynomial RootContext::minimal_poly(std::uint64_t i) const {
  std::size_t ci = cosets_.index[i % n_];
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(ci);
    if (it != cache_.end()) return it->second;
  }
  const Field& E = *ext_;
  std::vector<Elem> prod{1};
  for (std::uint64_t j : cosets_.cosets[ci]) {
    Elem r = E.neg(root(j));
    std::vector<Elem> next(prod.size() + 1, 0);
    for (std::size_t k = 0; k < prod.size(); ++k) {
      next[k + 1] = E.add(next[k + 1], prod[k]);
      next[k] = E.add(next[k], E.mul(prod[k], r));
    }
    prod = std::move(next);
  }
  for (Elem c : prod)
    if (c >= fq_->order()) throw Error(ErrorKind::NotSubfield, "minimal polynomial coefficient outside the base field");
  Polynomial p(fq_, std::move(prod));
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(ci, p);
  return p;
}

Polynomial RootContext::bch_generator(unsigned delta, std::uint64_t b) const {
  if (delta < 2) throw Error(ErrorKind::BadDelta, "designed distance must be at least 2");
  Polynomial g(fq_, {1});
  for (unsigned j = 0; j + 1 < delta; ++j) g = lcm(g, minimal_poly((b + j) % n_));
  return g;
}

bool RootContext::has_consecutive_roots(const Polynomial& g, unsigned delta, std::uint64_t b) const {
  for (unsigned j = 0; j + 1 < delta; ++j)
    if (g.eval_in(*ext_, root(b + j)) != 0) return false;
  return true;
}

Polynomial minimal_poly(const FieldPtr& fq, std::uint64_t n, std::uint64_t i) { return RootContext(fq, n).minimal_poly(i); }

Polynomial bch_generator(const FieldPtr& fq, std::uint64_t n, unsigned delta, std::uint64_t b) {
  if (delta < 2) throw Error(ErrorKind::BadDelta, "designed distance must be at least 2");
  return RootContext(fq, n).bch_generator(delta, b);
}

LinearCode cyclic_code(const Polynomial& g, std::size_t n) {
  const FieldPtr& F = g.field();
  if (g.is_zero() || !divides(g, Polynomial::x_pow_minus_one(F, n)))
    throw Error(ErrorKind::NotDivisor, "generator does not divide x^n - 1");
  std::size_t deg = static_cast<std::size_t>(g.degree());
  Matrix m(F, n - deg, n);
  for (std::size_t i = 0; i + deg < n; ++i)
    for (std::size_t j = 0; j <= deg; ++j) m.set(i, i + j, g.coeff(j));
  return LinearCode::from_generator(m);
}

Polynomial cyclic_dual_generator(const Polynomial& g, std::size_t n) {
  auto [h, r] = divmod(Polynomial::x_pow_minus_one(g.field(), n), g);
  if (!r.is_zero()) throw Error(ErrorKind::NotDivisor, "generator does not divide x^n - 1");
  return h.reciprocal_monic();
}

std::vector<Elem> cyclic_shift(std::span<const Elem> c) {
  std::vector<Elem> out(c.size());
  if (c.empty()) return out;
  out[0] = c.back();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) out[i + 1] = c[i];
  return out;
}

bool is_cyclic(const LinearCode& c) {
  for (std::size_t r = 0; r < c.k(); ++r)
    if (!c.contains(cyclic_shift(c.generator().row(r)))) return false;
  return true;
}

}  // namespace srlab
