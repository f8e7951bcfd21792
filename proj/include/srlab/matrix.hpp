#pragma once

#include <optional>
#include <span>
#include <vector>

#include "srlab/field.hpp"

namespace srlab {

// Dense row-major matrix over a field.
class Matrix {
 public:
  explicit Matrix(FieldPtr f, std::size_t rows = 0, std::size_t cols = 0)
      : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static Matrix identity(FieldPtr f, std::size_t n);
  static Matrix from_rows(FieldPtr f, const std::vector<std::vector<Elem>>& rows, std::size_t cols);

  const FieldPtr& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v) { a_[r * cols_ + c] = v; }
  std::span<const Elem> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::vector<Elem> row_vector(std::size_t r) const { return {a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_}; }
  std::vector<std::vector<Elem>> to_rows() const;
  void append_row(std::span<const Elem> v);
  bool is_zero() const;

  bool operator==(const Matrix& o) const {
    return same_field(f_, o.f_) && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  FieldPtr f_;
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

struct RrefResult {
  Matrix m;                          // same shape, zero rows last
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RrefResult rref_full(const Matrix& m);
Matrix rref(const Matrix& m);
// rref with zero rows removed.
Matrix row_basis(const Matrix& m);
std::size_t rank(const Matrix& m);
// Rows span {x : m x^T = 0}.
Matrix kernel_basis(const Matrix& m);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix vstack(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
// Reduces v against an rref basis; true if v lies in its row space.
bool in_row_space(const Matrix& basis, const std::vector<std::size_t>& pivots, std::span<const Elem> v);
Elem dot(const Field& F, std::span<const Elem> a, std::span<const Elem> b);

}  // namespace srlab
