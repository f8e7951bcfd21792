#include "srlab/random.hpp"

#include "srlab/error.hpp"

namespace srlab {

Elem random_element(const Field& F, Rng& rng) {
  return static_cast<Elem>(std::uniform_int_distribution<std::uint64_t>(0, F.order() - 1)(rng));
}

Elem random_nonzero(const Field& F, Rng& rng) {
  return static_cast<Elem>(std::uniform_int_distribution<std::uint64_t>(1, F.order() - 1)(rng));
}

namespace {

std::vector<Elem> random_combination(const Matrix& basis, Rng& rng) {
  const Field& F = *basis.field();
  std::vector<Elem> v(basis.cols(), 0);
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    Elem a = random_element(F, rng);
    if (!a) continue;
    for (std::size_t c = 0; c < basis.cols(); ++c) v[c] = F.add(v[c], F.mul(a, basis.at(r, c)));
  }
  return v;
}

}  // namespace

LinearCode random_code(const FieldPtr& f, std::size_t n, std::size_t k, Rng& rng) {
  if (k > n) throw Error(ErrorKind::DimensionMismatch, "dimension exceeds length");
  for (;;) {
    std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(n));
    for (auto& r : rows)
      for (auto& x : r) x = random_element(*f, rng);
    auto c = LinearCode::from_rows(f, n, rows);
    if (c.k() == k) return c;
  }
}

LinearCode random_self_dual_code(const FieldPtr& f, std::size_t n, Rng& rng) {
  if (f->characteristic() != 2) throw Error(ErrorKind::Unsupported, "random self-dual codes need characteristic 2");
  if (n % 2) throw Error(ErrorKind::LengthMismatch, "self-dual codes need even length");
  std::vector<std::vector<Elem>> rows;
  LinearCode c(f, n);
  while (2 * c.k() < n) {
    auto ext = rows;
    ext.push_back(std::vector<Elem>(n, 1));
    // over characteristic 2, v.v = (sum v)^2, so this is the isotropic part of C^perp
    LinearCode room = dual(LinearCode::from_rows(f, n, ext));
    std::vector<Elem> v;
    do v = random_combination(room.generator(), rng);
    while (c.contains(v));
    rows.push_back(v);
    c = LinearCode::from_rows(f, n, rows);
  }
  return c;
}

LinearCode random_lcd_code(const FieldPtr& f, std::size_t n, std::size_t k, Rng& rng) {
  for (;;) {
    auto c = random_code(f, n, k, rng);
    if (is_lcd(c)) return c;
  }
}

Basis random_basis(const FieldPtr& ext, Rng& rng) {
  const std::size_t m = ext->degree();
  for (;;) {
    std::vector<Elem> b(m);
    for (auto& x : b) x = random_nonzero(*ext, rng);
    try {
      return Basis(ext, b);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvalidBasis) throw;
    }
  }
}

AmbientProfile random_profile(const FieldPtr& base, unsigned m, std::size_t N, Rng& rng) {
  if (N < m) throw Error(ErrorKind::ProfileInvalid, "length shorter than one block");
  BlockShapes blocks;
  std::size_t left = N;
  while (left >= 2 * m) {
    std::size_t take = std::uniform_int_distribution<std::size_t>(m, left - m)(rng);
    if (std::uniform_int_distribution<int>(0, 1)(rng)) take = m;
    blocks.push_back({m, static_cast<unsigned>(take)});
    left -= take;
  }
  blocks.push_back({m, static_cast<unsigned>(left)});
  return AmbientProfile(base, blocks);
}

}  // namespace srlab
