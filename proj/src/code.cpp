#include "srlab/code.hpp"

#include "srlab/error.hpp"

namespace srlab {

LinearCode::LinearCode(FieldPtr f, std::size_t n) : gen_(std::move(f), 0, n) {}

LinearCode LinearCode::from_generator(const Matrix& g) {
  auto res = rref_full(g);
  Matrix out(g.field(), res.pivots.size(), g.cols());
  for (std::size_t r = 0; r < res.pivots.size(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) out.set(r, c, res.m.at(r, c));
  return LinearCode(std::move(out), std::move(res.pivots));
}

LinearCode LinearCode::from_rows(FieldPtr f, std::size_t n, const std::vector<std::vector<Elem>>& rows) {
  return from_generator(Matrix::from_rows(std::move(f), rows, n));
}

LinearCode dual(const LinearCode& c) {
  if (c.k() == 0) return LinearCode::from_generator(Matrix::identity(c.field(), c.n()));
  return LinearCode::from_generator(kernel_basis(c.generator()));
}

Matrix gram(const LinearCode& c) { return mat_mul(c.generator(), transpose(c.generator())); }

std::size_t hull_dimension(const LinearCode& c) { return c.k() - rank(gram(c)); }

bool is_self_orthogonal(const LinearCode& c) { return gram(c).is_zero(); }

bool is_self_dual(const LinearCode& c) { return 2 * c.k() == c.n() && is_self_orthogonal(c); }

bool is_lcd(const LinearCode& c) { return c.k() == 0 || hull_dimension(c) == 0; }

std::size_t intersection_dimension(const LinearCode& a, const LinearCode& b) {
  require_same_field(a.field(), b.field(), "intersection_dimension");
  if (a.n() != b.n()) throw Error(ErrorKind::DimensionMismatch, "codes of different length");
  return a.k() + b.k() - rank(vstack(a.generator(), b.generator()));
}

DistanceResult min_hamming_distance(const LinearCode& c, const SearchOptions& opt) {
  if (c.k() == 0) throw Error(ErrorKind::EmptyCode, "minimum distance of the zero code is undefined");
  unsigned __int128 t = 1;
  for (std::size_t i = 0; i < c.k() && t <= opt.budget * static_cast<unsigned __int128>(c.field()->order()); ++i)
    t *= c.field()->order();
  if ((t - 1) / (c.field()->order() - 1) <= opt.budget) return search_min_weight(c.generator(), {}, opt);
  return hamming_by_information_sets(c.generator(), opt);
}

DistanceResult periodic_subcode_search(const LinearCode& c, const SearchOptions& opt) {
  std::size_t n = c.n();
  DistanceResult best;
  best.method = "periodic subcodes";
  if (c.k() == 0 || c.k() == n) return best;
  Matrix Ht = transpose(dual(c).generator());
  SearchOptions sub{std::max<std::uint64_t>(1, opt.budget / 4), opt.jobs};
  for (std::size_t s = 1; s < n; ++s) {
    if (n % s) continue;
    Matrix P(c.field(), s, n);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t x = i; x < n; x += s) P.set(i, x, 1);
    Matrix coef = kernel_basis(transpose(mat_mul(P, Ht)));
    if (coef.rows() == 0) continue;
    LinearCode S = LinearCode::from_generator(mat_mul(coef, P));
    DistanceResult r = min_hamming_distance(S, sub);
    best.evaluated += r.evaluated;
    if (best.distance == 0 || r.distance < best.distance) {
      best.distance = r.distance;
      best.witness = r.witness;
    }
  }
  return best;
}

unsigned selfdual_f4_distance_upper(std::size_t n) { return static_cast<unsigned>(4 * (n / 12) + 4); }

bool check_selfdual_f4_bound(const LinearCode& c, unsigned d) {
  if (c.field()->order() != 4) throw Error(ErrorKind::NotF4, "bound applies to codes over GF(4)");
  if (!is_self_dual(c)) throw Error(ErrorKind::NotSelfDual, "code is not self-dual");
  return d <= selfdual_f4_distance_upper(c.n());
}

}  // namespace srlab
