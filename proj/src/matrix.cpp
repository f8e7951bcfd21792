#include "srlab/matrix.hpp"

#include "srlab/error.hpp"

namespace srlab {

Matrix Matrix::identity(FieldPtr f, std::size_t n) {
  Matrix m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(FieldPtr f, const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::LengthMismatch, "row length differs");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] >= f->order()) throw Error(ErrorKind::FieldMismatch, "entry outside field");
      m.set(r, c, rows[r][c]);
    }
  }
  return m;
}

std::vector<std::vector<Elem>> Matrix::to_rows() const {
  std::vector<std::vector<Elem>> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

void Matrix::append_row(std::span<const Elem> v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw Error(ErrorKind::LengthMismatch, "row length differs");
  a_.insert(a_.end(), v.begin(), v.end());
  ++rows_;
}

bool Matrix::is_zero() const {
  for (Elem x : a_)
    if (x) return false;
  return true;
}

RrefResult rref_full(const Matrix& in) {
  Matrix m = in;
  const Field& F = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      auto a = m.row(p), b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto pr = m.row(r);
    Elem s = F.inv(pr[c]);
    if (s != 1)
      for (std::size_t j = c; j < m.cols(); ++j) pr[j] = F.mul(pr[j], s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      auto ri = m.row(i);
      Elem f = ri[c];
      if (f == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j)
        if (pr[j]) ri[j] = F.sub(ri[j], F.mul(f, pr[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

Matrix rref(const Matrix& m) { return rref_full(m).m; }

Matrix row_basis(const Matrix& m) {
  auto res = rref_full(m);
  Matrix out(m.field(), res.pivots.size(), m.cols());
  for (std::size_t r = 0; r < res.pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, res.m.at(r, c));
  return out;
}

std::size_t rank(const Matrix& m) { return rref_full(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  auto res = rref_full(m);
  const Field& F = *m.field();
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : res.pivots) is_pivot[p] = true;
  Matrix out(m.field(), n - res.pivots.size(), n);
  std::size_t k = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    out.set(k, f, 1);
    for (std::size_t r = 0; r < res.pivots.size(); ++r) out.set(k, res.pivots[r], F.neg(res.m.at(r, f)));
    ++k;
  }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "mat_mul");
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "mat_mul shapes");
  const Field& F = *a.field();
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto orow = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Elem x = a.at(i, k);
      if (x == 0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (brow[j]) orow[j] = F.add(orow[j], F.mul(x, brow[j]));
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t.set(c, r, m.at(r, c));
  return t;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "vstack");
  if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "vstack widths");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(a.rows() + r, c, b.at(r, c));
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m.at(r, c));
    aug.set(r, n + r, 1);
  }
  auto res = rref_full(aug);
  if (res.pivots.size() < n || res.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, res.m.at(r, n + c));
  return out;
}

bool in_row_space(const Matrix& basis, const std::vector<std::size_t>& pivots, std::span<const Elem> v) {
  const Field& F = *basis.field();
  std::vector<Elem> w(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Elem f = w[pivots[r]];
    if (f == 0) continue;
    auto br = basis.row(r);
    for (std::size_t j = 0; j < w.size(); ++j)
      if (br[j]) w[j] = F.sub(w[j], F.mul(f, br[j]));
  }
  for (Elem x : w)
    if (x) return false;
  return true;
}

Elem dot(const Field& F, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot lengths");
  Elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) s = F.add(s, F.mul(a[i], b[i]));
  return s;
}

}  // namespace srlab
