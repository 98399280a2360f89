#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "abelmod/core/numeric.hpp"

namespace abelmod {

using IntVector = std::vector<int64_t>;

/// Dense row-major integer matrix. Sizes in this library are tiny (rank <= 8
/// lattices, stacked pairs up to 16 rows), so everything is by value.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<int64_t>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw InvalidInput("ragged matrix rows");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVector>& cols) {
    return from_rows(cols).transpose();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const int64_t> data() const { return data_; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  IntVector column(std::size_t j) const {
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Rows [r0, r1) and columns [c0, c1).
  IntMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    IntMatrix b(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j) b(i - r0, j - c0) = (*this)(i, j);
    return b;
  }

  /// Stack `other` below this matrix.
  IntMatrix vstack(const IntMatrix& other) const {
    if (other.cols_ != cols_) throw InvalidInput("vstack: column mismatch");
    IntMatrix out(rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(),
              out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](int64_t v) { return v == 0; });
  }
  bool is_identity() const { return is_square() && *this == identity(rows_); }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product: dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        int64_t aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
      }
    return c;
  }

  friend IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols_ != v.size()) throw InvalidInput("matrix-vector product: dimension mismatch");
    IntVector out(a.rows_, 0);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] = checked_add(out[i], checked_mul(a(i, k), v[k]));
    return out;
  }

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = checked_add(a.data_[i], b.data_[i]);
    return a;
  }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend IntMatrix operator-(IntMatrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

  std::vector<std::vector<int64_t>> to_rows() const {
    std::vector<std::vector<int64_t>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<int64_t> data_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept {
    std::size_t h = m.rows() * 31 + m.cols();
    for (int64_t v : m.data()) h = h * 1000003u ^ std::hash<int64_t>{}(v);
    return h;
  }
};

/// Determinant by fraction-free elimination (exact for the small sizes used).
inline BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidInput("determinant of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Coefficients e_0..e_n of det(I + t*M) = sum_k e_k t^k, where e_k is the sum
/// of principal k-minors. Computed via Faddeev-LeVerrier on the characteristic
/// polynomial, with exact integer division.
inline IntVector det_one_plus_t(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidInput("det(I+tM) of non-square matrix");
  const std::size_t n = m.rows();
  // char poly det(lambda I - M) = sum_k c_k lambda^{n-k}, c_0 = 1.
  IntVector c(n + 1, 0);
  c[0] = 1;
  IntMatrix mk = IntMatrix::identity(n);  // M_k in the recursion
  IntMatrix am(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    am = m * mk;
    int64_t tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr = checked_add(tr, am(i, i));
    if (tr % static_cast<int64_t>(k) != 0) throw InternalError("Faddeev-LeVerrier: inexact division");
    c[k] = -tr / static_cast<int64_t>(k);
    mk = am;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) = checked_add(mk(i, i), c[k]);
  }
  // det(I + tM) = (-t)^n det(-1/t I - M) => e_k = (-1)^k c_k.
  IntVector e(n + 1);
  for (std::size_t k = 0; k <= n; ++k) e[k] = (k % 2 == 0) ? c[k] : -c[k];
  return e;
}

}  // namespace abelmod
