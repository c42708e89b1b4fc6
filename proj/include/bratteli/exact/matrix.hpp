#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "bratteli/error.hpp"
#include "bratteli/exact/rational.hpp"

namespace bratteli::exact {

/// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& one = T(1), const T& zero = T(0)) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) fail(ErrorKind::Precondition, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_like());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix s(rows.size(), cols.size(), zero_like());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::Precondition, "matrix shape mismatch");
    Matrix c(a.rows_, b.cols_, a.zero_like());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) fail(ErrorKind::Precondition, "matrix-vector shape mismatch");
    std::vector<T> out(a.rows_, a.zero_like());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (a(i, j) == 0) continue;
        out[i] += a(i, j) * v[j];
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  T zero_like() const { return data_.empty() ? T(0) : data_.front() - data_.front(); }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
IntMatrix matrix_power(const IntMatrix& m, unsigned exponent);

/// Column Hermite normal form of an integer matrix whose columns span a
/// full-rank lattice of dimension rows(): returns lower-triangular H with
/// positive diagonal and 0 <= H(i, j) < H(i, i) for j < i, together with a
/// unimodular U such that A * U = [H | 0].
struct HermiteForm {
  IntMatrix basis;      // rows x rows
  IntMatrix transform;  // cols x cols, unimodular
};
/// Returns std::nullopt when the columns do not span a full-rank lattice.
std::optional<HermiteForm> column_hermite_form(const IntMatrix& a);

/// Solves L x = b for lower-triangular invertible L.
std::vector<Rational> solve_lower_triangular(const IntMatrix& lower, const std::vector<Rational>& b);

/// Exact inverse over Q; std::nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);
Rational determinant(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Characteristic polynomial coefficients det(tI - M), lowest degree first
/// (Berkowitz division-free algorithm over Z).
std::vector<Integer> characteristic_polynomial(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

}  // namespace bratteli::exact
