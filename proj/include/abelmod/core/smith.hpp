#pragma once

#include <cstdlib>
#include <utility>
#include <vector>

#include "abelmod/core/int_matrix.hpp"

namespace abelmod {

/// U * A * V = D with U, V unimodular and D diagonal, d_0 | d_1 | ... | d_{rank-1}.
/// The inverses of U and V are tracked alongside so callers never invert.
struct SmithForm {
  IntMatrix U, U_inv, D, V, V_inv;
  std::size_t rank = 0;

  /// Nonzero diagonal entries of D (all positive).
  IntVector invariant_factors() const {
    IntVector out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
  }

  /// Invariant factors > 1: the torsion of coker(A) is the sum of Z/d over these.
  IntVector torsion_factors() const {
    IntVector out;
    for (std::size_t i = 0; i < rank; ++i)
      if (D(i, i) > 1) out.push_back(D(i, i));
    return out;
  }

  /// Order of the torsion subgroup of coker(A).
  int64_t torsion_order() const {
    int64_t t = 1;
    for (std::size_t i = 0; i < rank; ++i) t = checked_mul(t, D(i, i));
    return t;
  }

  /// Columns of V spanning ker(A); this basis is saturated in Z^cols.
  IntMatrix kernel_basis() const { return V.block(0, V.rows(), rank, V.cols()); }
};

namespace detail {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& a)
      : m_(a.rows()), n_(a.cols()), s_{IntMatrix::identity(m_), IntMatrix::identity(m_), a,
                                        IntMatrix::identity(n_), IntMatrix::identity(n_)} {}

  SmithForm run() {
    auto& d = s_.D;
    std::size_t t = 0;
    for (; t < std::min(m_, n_); ++t) {
      if (!move_smallest_to(t)) break;
      for (;;) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < m_; ++i) {
          if (d(i, t) == 0) continue;
          row_add(i, t, -(d(i, t) / d(t, t)));
          if (d(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (d(t, j) == 0) continue;
          col_add(j, t, -(d(t, j) / d(t, t)));
          if (d(t, j) != 0) dirty = true;
        }
        if (dirty) {
          move_smallest_in_cross(t);
          continue;
        }
        // Row/column cleared; enforce divisibility of the remaining block.
        bool divisible = true;
        for (std::size_t i = t + 1; i < m_ && divisible; ++i)
          for (std::size_t j = t + 1; j < n_; ++j)
            if (d(i, j) % d(t, t) != 0) {
              row_add(t, i, 1);
              divisible = false;
              break;
            }
        if (divisible) break;
      }
      if (d(t, t) < 0) row_negate(t);
    }
    s_.rank = t;
    return std::move(s_);
  }

 private:
  // Moves the nonzero entry of least absolute value in the block [t.., t..]
  // to (t, t); returns false if the block is zero.
  bool move_smallest_to(std::size_t t) {
    auto& d = s_.D;
    std::size_t bi = m_, bj = n_;
    for (std::size_t i = t; i < m_; ++i)
      for (std::size_t j = t; j < n_; ++j)
        if (d(i, j) != 0 && (bi == m_ || std::llabs(d(i, j)) < std::llabs(d(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == m_) return false;
    if (bi != t) row_swap(bi, t);
    if (bj != t) col_swap(bj, t);
    return true;
  }

  void move_smallest_in_cross(std::size_t t) {
    auto& d = s_.D;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < m_; ++i)
      if (d(i, t) != 0 && std::llabs(d(i, t)) < std::llabs(d(bi, bj))) {
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < n_; ++j)
      if (d(t, j) != 0 && std::llabs(d(t, j)) < std::llabs(d(bi, bj))) {
        bi = t;
        bj = j;
      }
    if (bi != t) row_swap(bi, t);
    if (bj != t) col_swap(bj, t);
  }

  // Row operations act on D and U from the left; U_inv is updated on the right.
  void row_swap(std::size_t i, std::size_t j) {
    for (auto* mat : {&s_.D, &s_.U})
      for (std::size_t c = 0; c < mat->cols(); ++c) std::swap((*mat)(i, c), (*mat)(j, c));
    for (std::size_t r = 0; r < m_; ++r) std::swap(s_.U_inv(r, i), s_.U_inv(r, j));
  }
  void row_add(std::size_t target, std::size_t source, int64_t k) {  // row_target += k * row_source
    if (k == 0) return;
    for (auto* mat : {&s_.D, &s_.U})
      for (std::size_t c = 0; c < mat->cols(); ++c)
        (*mat)(target, c) = checked_add((*mat)(target, c), checked_mul(k, (*mat)(source, c)));
    for (std::size_t r = 0; r < m_; ++r)
      s_.U_inv(r, source) = checked_add(s_.U_inv(r, source), checked_mul(-k, s_.U_inv(r, target)));
  }
  void row_negate(std::size_t i) {
    for (auto* mat : {&s_.D, &s_.U})
      for (std::size_t c = 0; c < mat->cols(); ++c) (*mat)(i, c) = -(*mat)(i, c);
    for (std::size_t r = 0; r < m_; ++r) s_.U_inv(r, i) = -s_.U_inv(r, i);
  }
  // Column operations act on D and V from the right; V_inv is updated on the left.
  void col_swap(std::size_t i, std::size_t j) {
    for (auto* mat : {&s_.D, &s_.V})
      for (std::size_t r = 0; r < mat->rows(); ++r) std::swap((*mat)(r, i), (*mat)(r, j));
    for (std::size_t c = 0; c < n_; ++c) std::swap(s_.V_inv(i, c), s_.V_inv(j, c));
  }
  void col_add(std::size_t target, std::size_t source, int64_t k) {  // col_target += k * col_source
    if (k == 0) return;
    for (auto* mat : {&s_.D, &s_.V})
      for (std::size_t r = 0; r < mat->rows(); ++r)
        (*mat)(r, target) = checked_add((*mat)(r, target), checked_mul(k, (*mat)(r, source)));
    for (std::size_t c = 0; c < n_; ++c)
      s_.V_inv(source, c) = checked_add(s_.V_inv(source, c), checked_mul(-k, s_.V_inv(target, c)));
  }

  std::size_t m_, n_;
  SmithForm s_;
};

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& a) { return detail::SmithReducer(a).run(); }

inline std::size_t integer_rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

/// True when the cokernel of `a` (as a map Z^cols -> Z^rows) is torsion-free.
inline bool has_torsion_free_cokernel(const IntMatrix& a) {
  return smith_normal_form(a).torsion_factors().empty();
}

}  // namespace abelmod
