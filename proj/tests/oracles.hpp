#pragma once

// Independent reference computations used by the unit and acceptance suites.
// None of these share code paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "abelmod/abelmod.hpp"

namespace oracle {

using abelmod::BigInt;
using abelmod::IntMatrix;
using abelmod::Rational;
using abelmod::RationalMatrix;

/// Coefficients of q^0..q^n_max in prod_{m >= 1} (1 - q^m)^{-e}, by repeated
/// multiplication with the geometric-type series of each factor.
inline std::vector<BigInt> euler_product_series(int64_t e, int n_max) {
  std::vector<BigInt> series(static_cast<std::size_t>(n_max) + 1, 0);
  series[0] = 1;
  for (int m = 1; m <= n_max; ++m) {
    // (1 - q^m)^{-e} = sum_k C(e + k - 1, k) q^{mk}; for negative e the
    // generalized binomial still applies
    std::vector<BigInt> next(series.size(), 0);
    for (int i = 0; i <= n_max; ++i) {
      if (series[i] == 0) continue;
      BigInt c = 1;  // C(e + k - 1, k) built incrementally
      for (int k = 0; i + m * k <= n_max; ++k) {
        if (k > 0) c = c * (e + k - 1) / k;
        next[i + m * k] += series[i] * c;
      }
    }
    series = std::move(next);
  }
  return series;
}

/// Graded basis element of a cohomology ring: bidegree (p, q).
using Bidegree = std::pair<int, int>;

/// dim of each bidegree of Sym^l of a graded space given by an explicit
/// basis, counting multisets in which odd-degree basis vectors appear at most
/// once (they anticommute).
inline std::map<Bidegree, BigInt> graded_sym_by_enumeration(const std::vector<Bidegree>& basis, int l) {
  std::map<Bidegree, BigInt> out;
  std::vector<int> choice;
  auto rec = [&](auto&& self, std::size_t start, int left, int p, int q) -> void {
    if (left == 0) {
      out[{p, q}] += 1;
      return;
    }
    for (std::size_t i = start; i < basis.size(); ++i) {
      const bool odd = (basis[i].first + basis[i].second) % 2 != 0;
      // even vectors may repeat: recurse from i; odd vectors: from i + 1
      self(self, odd ? i + 1 : i, left - 1, p + basis[i].first, q + basis[i].second);
    }
  };
  rec(rec, 0, l, 0, 0);
  return out;
}

/// Explicit basis of H^*(A) for an abelian surface: exterior algebra on
/// dz1, dz2 of type (1,0) and their conjugates of type (0,1).
inline std::vector<Bidegree> abelian_surface_basis() {
  std::vector<Bidegree> basis;
  for (int mask = 0; mask < 16; ++mask) {
    int p = ((mask >> 0) & 1) + ((mask >> 1) & 1);
    int q = ((mask >> 2) & 1) + ((mask >> 3) & 1);
    basis.emplace_back(p, q);
  }
  return basis;
}

/// gcd of the maximal minors of a tall integer matrix, via integer row
/// echelon form (left unimodular operations preserve that gcd). Zero when
/// the columns are dependent.
inline BigInt maximal_minor_gcd(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  BigInt product = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols(); ++col) {
    // Euclid down the column until one nonzero entry is left at `row`
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = row; i < a.size(); ++i)
        if (a[i][col] != 0 && (best == a.size() || abs(a[i][col]) < abs(a[best][col]))) best = i;
      if (best == a.size()) return 0;
      std::swap(a[row], a[best]);
      bool done = true;
      for (std::size_t i = row + 1; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        BigInt q = a[i][col] / a[row][col];
        for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= q * a[row][j];
        if (a[i][col] != 0) done = false;
      }
      if (done) break;
    }
    product *= abs(a[row][col]);
    ++row;
  }
  return product;
}

/// Euler number of the fixed locus of <g, h> on A (x) Lambda, A a complex
/// 2-torus: the fixed set of the real r-torus is finite with N points iff
/// [g-1; h-1] has full column rank, N = gcd of maximal minors, and A
/// contributes four real directions, so the answer is N^4 (else 0).
inline BigInt fixed_locus_euler(const IntMatrix& g, const IntMatrix& h) {
  const std::size_t r = g.rows();
  const IntMatrix stacked = (g - IntMatrix::identity(r)).vstack(h - IntMatrix::identity(r));
  BigInt n = maximal_minor_gcd(stacked);
  return n * n * n * n;
}

/// Stringy Euler number as the orbifold sum over commuting pairs,
/// (1/|G|) sum_{gh = hg} e(X^<g,h>), grouped by conjugacy class of g.
inline BigInt stringy_euler_by_commuting_pairs(const abelmod::MatrixGroup& grp) {
  const auto elements = grp.elements();
  Rational total = 0;
  for (const auto& cls : grp.conjugacy_classes()) {
    const IntMatrix& g = elements[cls.representative];
    BigInt sum = 0;
    std::size_t centralizer = 0;
    for (const auto& h : elements)
      if (g * h == h * g) {
        ++centralizer;
        sum += fixed_locus_euler(g, h);
      }
    total += Rational(sum) / Rational(BigInt(centralizer));
  }
  if (boost::multiprecision::denominator(total) != 1) return -1;
  return boost::multiprecision::numerator(total);
}

/// S_n acting on the sum-zero lattice of Z^n in the basis b_i = e_i - e_{i+1}.
inline std::vector<IntMatrix> sum_zero_permutation_matrices(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<IntMatrix> out;
  do {
    IntMatrix m(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::vector<int64_t> v(n, 0);
      v[perm[i]] += 1;
      v[perm[i + 1]] -= 1;
      int64_t partial = 0;  // coordinate of b_k is the k-th partial sum
      for (std::size_t k = 0; k + 1 < n; ++k) {
        partial += v[k];
        m(k, i) = partial;
      }
    }
    out.push_back(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Coefficients of prod_{m>=1} (1 - q^m)^(-e) up to q^n, by expanding the
/// finite product of (1 - q^m)^e and inverting the power series.
inline std::vector<BigInt> inverse_eta_power(int e, int n) {
  const auto len = static_cast<std::size_t>(n) + 1;
  std::vector<BigInt> p(len, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 0; k < e; ++k)
      for (std::size_t i = len; i-- > static_cast<std::size_t>(m);) p[i] -= p[i - static_cast<std::size_t>(m)];
  std::vector<BigInt> inv(len, 0);
  inv[0] = 1;
  for (std::size_t i = 1; i < len; ++i) {
    BigInt s = 0;
    for (std::size_t j = 1; j <= i; ++j) s += p[j] * inv[i - j];
    inv[i] = -s;
  }
  return inv;
}

/// Rational determinant by plain Gaussian elimination.
inline Rational elimination_determinant(RationalMatrix a) {
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

/// det(sum t_i B_i) is a form of degree m in k variables; it vanishes
/// identically iff it vanishes on the grid {0..m}^k.
inline bool generic_determinant_vanishes(const std::vector<RationalMatrix>& basis) {
  if (basis.empty()) return true;
  const std::size_t m = basis.front().rows(), k = basis.size();
  std::vector<std::size_t> t(k, 0);
  while (true) {
    RationalMatrix sum(m, m);
    for (std::size_t i = 0; i < k; ++i) sum = sum + Rational(static_cast<int64_t>(t[i])) * basis[i];
    if (elimination_determinant(sum) != 0) return false;
    std::size_t i = 0;
    while (i < k && ++t[i] > m) t[i++] = 0;
    if (i == k) return true;
  }
}

/// Dimension of {Phi skew : Phi M + M^T Phi = 0 for M in ms}, by counting
/// pivots of the linear system in the upper-triangular unknowns.
inline std::size_t skew_solution_dimension(const std::vector<RationalMatrix>& ms) {
  const std::size_t m = ms.front().rows();
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) unknowns.emplace_back(i, j);
  std::vector<std::vector<Rational>> rows;
  for (const auto& mat : ms)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        std::vector<Rational> row(unknowns.size(), 0);
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
          RationalMatrix phi(m, m);
          phi(unknowns[u].first, unknowns[u].second) = 1;
          phi(unknowns[u].second, unknowns[u].first) = -1;
          row[u] = (phi * mat + mat.transpose() * phi)(r, c);
        }
        rows.push_back(row);
      }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns.size() && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && rows[i][col] != 0) {
        Rational f = rows[i][col] / rows[rank][col];
        for (std::size_t j = col; j < unknowns.size(); ++j) rows[i][j] -= f * rows[rank][j];
      }
    ++rank;
  }
  return unknowns.size() - rank;
}

/// Rank of a list of rational vectors.
inline std::size_t span_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        Rational f = rows[i][col] / rows[rank][col];
        for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
      }
    ++rank;
  }
  return rank;
}

inline std::vector<Rational> apply(const RationalMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

/// A {-1,0,1} vector whose images under all words in mx, my span the space.
inline bool has_spanning_vector(const RationalMatrix& mx, const RationalMatrix& my) {
  const std::size_t m = mx.rows();
  std::vector<int> digits(m, -1);
  while (true) {
    std::vector<Rational> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = digits[i];
    std::vector<std::vector<Rational>> orbit{v}, frontier{v};
    for (std::size_t depth = 0; depth < m; ++depth) {
      std::vector<std::vector<Rational>> next;
      for (const auto& w : frontier) {
        next.push_back(apply(mx, w));
        next.push_back(apply(my, w));
      }
      orbit.insert(orbit.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    if (span_rank(orbit) == m) return true;
    std::size_t i = 0;
    while (i < m && ++digits[i] > 1) digits[i++] = -1;
    if (i == m) return false;
  }
}

/// Every submodule generated by one vector v is spanned by v and the images
/// of mx, my, so 1 + rank [mx | my] < m rules out a spanning vector.
inline bool spanning_impossible(const RationalMatrix& mx, const RationalMatrix& my) {
  std::vector<std::vector<Rational>> cols;
  for (const auto* mat : {&mx, &my})
    for (std::size_t j = 0; j < mat->cols(); ++j) {
      std::vector<Rational> c(mat->rows());
      for (std::size_t i = 0; i < mat->rows(); ++i) c[i] = (*mat)(i, j);
      cols.push_back(c);
    }
  return 1 + span_rank(cols) < mx.rows();
}

/// Number of group elements fixing the torsion point.
inline std::size_t stabilizer_order(const std::vector<IntMatrix>& elements, const abelmod::TorsionPoint& p) {
  return static_cast<std::size_t>(
      std::count_if(elements.begin(), elements.end(), [&](const IntMatrix& w) { return p.transformed(w) == p; }));
}

/// Coefficient of e_i e_j (i < j) in sum over unordered pairs a, b of a.b,
/// i.e. a_i b_j + a_j b_i mod 2.
inline bool second_class_vanishes(const std::vector<abelmod::F2Class>& cs) {
  const std::size_t n = cs.front().size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int c = 0;
      for (std::size_t a = 0; a < cs.size(); ++a)
        for (std::size_t b = a + 1; b < cs.size(); ++b)
          c ^= (cs[a].bit(i) & cs[b].bit(j)) ^ (cs[a].bit(j) & cs[b].bit(i));
      if (c) return false;
    }
  return true;
}

/// b_1(T^n) times the number of pairs of equal classes.
inline std::size_t deformation_dimension(const std::vector<abelmod::F2Class>& cs) {
  std::size_t equal_pairs = 0;
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = a + 1; b < cs.size(); ++b) equal_pairs += cs[a] == cs[b];
  return equal_pairs * cs.front().size();
}

}  // namespace oracle
