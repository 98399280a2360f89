#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "abelmod/core/rational_matrix.hpp"

namespace abelmod {

// ---------------------------------------------------------------------------
// Polynomials in x, y

/// Exponent pair (a, b) for x^a y^b.
using Monomial2 = std::pair<int, int>;

/// Polynomial in x, y with rational coefficients; zero terms are pruned.
class Poly2 {
 public:
  Poly2() = default;
  Poly2(Rational c) { add_term({0, 0}, std::move(c)); }

  static Poly2 monomial(int a, int b, Rational c = 1) {
    Poly2 p;
    p.add_term({a, b}, std::move(c));
    return p;
  }

  void add_term(Monomial2 m, const Rational& c) {
    if (m.first < 0 || m.second < 0) throw InvalidInput("negative exponent");
    auto& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
  }

  const std::map<Monomial2, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
    return d;
  }

  friend Poly2 operator+(Poly2 a, const Poly2& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
  }
  friend Poly2 operator-(Poly2 a, const Poly2& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
    return a;
  }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
    return out;
  }
  friend bool operator==(const Poly2&, const Poly2&) = default;

 private:
  std::map<Monomial2, Rational> terms_;
};

inline std::string monomial_to_string(Monomial2 m) {
  if (m.first == 0 && m.second == 0) return "1";
  std::string s;
  auto var = [&](char v, int e) {
    if (e == 0) return;
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  var('x', m.first);
  var('y', m.second);
  return s;
}

inline std::string to_string(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // descending degree, x-heavy first
  std::vector<std::pair<Monomial2, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& u, const auto& v) {
    int du = u.first.first + u.first.second, dv = v.first.first + v.first.second;
    return du != dv ? du > dv : u.first.first > v.first.first;
  });
  for (const auto& [m, c] : terms) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool unit = m.first == 0 && m.second == 0;
    if (a != 1 || unit) out += abelmod::to_string(a);
    if (!unit) out += monomial_to_string(m);
  }
  return out;
}

/// Parses sums of terms such as "y^2 - x*y", "2x^2y", "1/2 xy + 3".
inline Poly2 parse_poly2(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&](const std::string& why) -> Poly2 {
    throw InvalidInput("malformed polynomial '" + text + "': " + why);
  };
  if (s.empty()) return fail("empty");
  std::size_t i = 0;
  auto read_int = [&]() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };
  Poly2 out;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      return fail("expected '+' or '-' at position " + std::to_string(i));
    }
    first = false;
    Rational coef = 1;
    bool have_coef = false, have_var = false;
    std::string digits = read_int();
    if (!digits.empty()) {
      have_coef = true;
      coef = Rational(BigInt(digits));
      if (i < s.size() && s[i] == '/') {
        ++i;
        std::string den = read_int();
        if (den.empty() || BigInt(den) == 0) return fail("bad denominator");
        coef /= Rational(BigInt(den));
      }
    }
    Monomial2 m{0, 0};
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (s[i] == '*') {
        ++i;
        continue;
      }
      char v = s[i];
      if (v != 'x' && v != 'y') return fail(std::string("unexpected character '") + v + "'");
      ++i;
      int e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string ed = read_int();
        if (ed.empty()) return fail("missing exponent");
        e = std::stoi(ed);
      }
      (v == 'x' ? m.first : m.second) += e;
      have_var = true;
    }
    if (!have_coef && !have_var) return fail("empty term");
    out.add_term(m, sign * coef);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commuting pairs

inline RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

inline bool is_nilpotent(const RationalMatrix& m) {
  RationalMatrix p = m;
  for (std::size_t k = 1; k < m.rows() && !p.is_zero(); ++k) p = p * m;
  return p.is_zero();
}

/// Actions of x and y on an m-dimensional module, column-vector convention:
/// column j of mx is x applied to the j-th basis vector. Always [mx, my] = 0.
class MatrixPair {
 public:
  MatrixPair(RationalMatrix mx, RationalMatrix my) : mx_(std::move(mx)), my_(std::move(my)) {
    if (!mx_.is_square() || !my_.is_square() || mx_.rows() != my_.rows())
      throw InvalidInput("matrix pair: both matrices must be square of the same size");
    if (mx_.rows() == 0) throw InvalidInput("matrix pair: dimension must be positive");
    if (!commutator(mx_, my_).is_zero()) throw InvalidInput("matrix pair: matrices do not commute");
  }

  std::size_t dim() const { return mx_.rows(); }
  const RationalMatrix& mx() const { return mx_; }
  const RationalMatrix& my() const { return my_; }
  const RationalMatrix& operator[](int which) const { return which == 0 ? mx_ : my_; }

  bool is_nilpotent() const { return abelmod::is_nilpotent(mx_) && abelmod::is_nilpotent(my_); }

  /// (P^-1 mx P, P^-1 my P).
  MatrixPair conjugated(const RationalMatrix& p) const {
    auto inv = inverse(p);
    if (!inv) throw InvalidInput("conjugation by a singular matrix");
    return MatrixPair(*inv * mx_ * p, *inv * my_ * p);
  }

  friend bool operator==(const MatrixPair&, const MatrixPair&) = default;

 private:
  RationalMatrix mx_, my_;
};

inline MatrixPair dual(const MatrixPair& p) { return MatrixPair(p.mx().transpose(), p.my().transpose()); }
inline MatrixPair negate(const MatrixPair& p) { return MatrixPair(-p.mx(), -p.my()); }

/// Quotient C[[x,y]]/I with its monomial basis and the pair of
/// multiplication operators.
struct IdealQuotient {
  std::vector<Monomial2> basis;
  MatrixPair pair;
};

/// Multiplication by x and y on C[[x,y]]/I, computed in the truncation
/// C[x,y]/(x,y)^(N+1). Requires (x,y)^N inside I near the origin, checked as
/// (x,y)^N inside I + (x,y)^(N+1), which is equivalent by Nakayama.
/// Basis: the monomials that are not leading terms of the echelonized ideal,
/// ordered by degree, then x before y.
inline IdealQuotient quotient_by_ideal(const std::vector<Poly2>& generators, int truncation_degree) {
  const int n = truncation_degree;
  if (n < 1) throw InvalidInput("truncation degree must be at least 1");
  if (n > 40) throw CapExceeded("truncation degree " + std::to_string(n) + " exceeds 40");

  // monomials of degree <= n in basis order
  std::vector<Monomial2> monos;
  for (int d = 0; d <= n; ++d)
    for (int a = d; a >= 0; --a) monos.push_back({a, d - a});
  const std::size_t nm = monos.size();
  auto index = [&](Monomial2 m) -> std::ptrdiff_t {
    int d = m.first + m.second;
    if (d > n) return -1;
    return static_cast<std::ptrdiff_t>(d * (d + 1) / 2 + (d - m.first));
  };
  // elimination columns run in reverse basis order so pivots are leading terms
  auto column = [&](std::size_t mono_idx) { return nm - 1 - mono_idx; };

  std::vector<std::vector<Rational>> rows;
  for (const auto& g : generators)
    for (const auto& m : monos) {
      std::vector<Rational> row(nm);
      bool nonzero = false;
      for (const auto& [t, c] : g.terms()) {
        auto idx = index({t.first + m.first, t.second + m.second});
        if (idx < 0) continue;
        row[column(static_cast<std::size_t>(idx))] += c;
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  RationalMatrix ech(std::max<std::size_t>(rows.size(), 1), nm);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < nm; ++j) ech(i, j) = rows[i][j];
  auto pivots = rref_in_place(ech);

  std::vector<std::ptrdiff_t> pivot_row(nm, -1);  // by monomial index
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[nm - 1 - pivots[r]] = static_cast<std::ptrdiff_t>(r);

  std::vector<std::string> missing;
  for (std::size_t k = 0; k < nm; ++k)
    if (monos[k].first + monos[k].second == n && pivot_row[k] < 0) missing.push_back(monomial_to_string(monos[k]));
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw InvalidInput("colength not stabilized at truncation degree " + std::to_string(n) + ": " + list +
                       " not in the ideal modulo higher order terms; increase the truncation degree");
  }

  std::vector<Monomial2> basis;
  std::vector<std::ptrdiff_t> basis_pos(nm, -1);
  for (std::size_t k = 0; k < nm; ++k)
    if (pivot_row[k] < 0) {
      basis_pos[k] = static_cast<std::ptrdiff_t>(basis.size());
      basis.push_back(monos[k]);
    }
  const std::size_t dim = basis.size();
  if (dim == 0) throw InvalidInput("the ideal is the unit ideal near the origin; the quotient is zero");

  auto normal_form = [&](Monomial2 m) {
    RationalVector v(dim);
    auto idx = index(m);
    if (idx < 0) return v;
    auto k = static_cast<std::size_t>(idx);
    if (basis_pos[k] >= 0) {
      v[static_cast<std::size_t>(basis_pos[k])] = 1;
      return v;
    }
    auto r = static_cast<std::size_t>(pivot_row[k]);
    for (std::size_t j = 0; j < nm; ++j) {
      std::size_t mk = nm - 1 - j;
      if (basis_pos[mk] >= 0 && ech(r, j) != 0) v[static_cast<std::size_t>(basis_pos[mk])] = -ech(r, j);
    }
    return v;
  };

  RationalMatrix mx(dim, dim), my(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    auto vx = normal_form({basis[j].first + 1, basis[j].second});
    auto vy = normal_form({basis[j].first, basis[j].second + 1});
    for (std::size_t i = 0; i < dim; ++i) {
      mx(i, j) = vx[i];
      my(i, j) = vy[i];
    }
  }
  return IdealQuotient{std::move(basis), MatrixPair(std::move(mx), std::move(my))};
}

inline MatrixPair pair_from_ideal(const std::vector<Poly2>& generators, int truncation_degree) {
  return quotient_by_ideal(generators, truncation_degree).pair;
}

inline MatrixPair pair_from_ideal(const std::vector<std::string>& generators, int truncation_degree) {
  std::vector<Poly2> polys;
  for (const auto& g : generators) polys.push_back(parse_poly2(g));
  return pair_from_ideal(polys, truncation_degree);
}

/// Whether some v has {mx^i my^j v} spanning the space. For nilpotent
/// commuting pairs this holds iff im mx + im my has codimension one.
inline bool is_cyclic(const MatrixPair& p) {
  if (!p.is_nilpotent()) throw InvalidInput("cyclicity criterion requires a nilpotent pair");
  const std::size_t m = p.dim();
  RationalMatrix both(m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      both(i, j) = p.mx()(i, j);
      both(i, m + j) = p.my()(i, j);
    }
  return rank(both) + 1 == m;
}

// ---------------------------------------------------------------------------
// Invertible elements of a linear space of matrices

/// Polynomial in k variables with rational coefficients, keyed by exponent
/// vectors in lexicographic order.
class MultiPoly {
 public:
  using Exponent = std::vector<uint8_t>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_[Exponent(nvars, 0)] = c;
    return p;
  }
  static MultiPoly variable(std::size_t nvars, std::size_t i, const Rational& c = 1) {
    MultiPoly p(nvars);
    Exponent e(nvars, 0);
    e[i] = 1;
    if (c != 0) p.terms_[e] = c;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational evaluate(const std::vector<Rational>& point) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= point[i];
      total += t;
    }
    return total;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add(e, c);
    return a;
  }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add(e, -c);
    return a;
  }
  friend MultiPoly operator-(MultiPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = static_cast<uint8_t>(ea[i] + eb[i]);
        out.add(e, ca * cb);
      }
    return out;
  }

  /// Quotient of an exact division; throws InternalError on a remainder.
  MultiPoly divided_exactly(const MultiPoly& d) const {
    if (d.is_zero()) throw InternalError("division by the zero polynomial");
    MultiPoly q(nvars_), rem = *this;
    const auto& [lead_e, lead_c] = *d.terms_.rbegin();
    while (!rem.is_zero()) {
      const auto& [re, rc] = *rem.terms_.rbegin();
      Exponent e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (re[i] < lead_e[i]) throw InternalError("inexact polynomial division");
        e[i] = static_cast<uint8_t>(re[i] - lead_e[i]);
      }
      MultiPoly t(nvars_);
      t.terms_[e] = rc / lead_c;
      q = q + t;
      rem = rem - t * d;
    }
    return q;
  }

 private:
  void add(const Exponent& e, const Rational& c) {
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }

  std::size_t nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

/// Determinant of a square matrix of polynomials by fraction-free (Bareiss)
/// elimination.
inline MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> a, std::size_t nvars) {
  const std::size_t n = a.size();
  if (n == 0) return MultiPoly::constant(nvars, 1);
  MultiPoly prev = MultiPoly::constant(nvars, 1);
  bool negate_result = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) return MultiPoly(nvars);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      negate_result = !negate_result;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divided_exactly(prev);
    prev = a[k][k];
  }
  return negate_result ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

inline constexpr std::size_t kSymbolicDimCap = 8;
inline constexpr std::size_t kSymbolicBasisCap = 10;

/// How an invertibility decision was reached.
enum class InvertibilityMethod { empty_space, odd_dimension, random_combination, symbolic_determinant };

inline std::string to_string(InvertibilityMethod m) {
  switch (m) {
    case InvertibilityMethod::empty_space: return "empty solution space";
    case InvertibilityMethod::odd_dimension: return "odd dimension";
    case InvertibilityMethod::random_combination: return "random combination";
    case InvertibilityMethod::symbolic_determinant: return "symbolic determinant";
  }
  return "?";
}

struct InvertibilityDecision {
  bool contains_invertible = false;
  std::optional<RationalMatrix> witness;
  std::optional<std::vector<Rational>> witness_coefficients;
  InvertibilityMethod method = InvertibilityMethod::empty_space;
  // when decided symbolically: term count of det(sum t_i B_i); 0 is the certificate of absence
  std::size_t determinant_terms = 0;
};

inline RationalMatrix linear_combination(const std::vector<RationalMatrix>& basis, const std::vector<Rational>& t) {
  RationalMatrix out(basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (t[i] != 0) out = out + t[i] * basis[i];
  return out;
}

/// Decides whether span(basis) contains an invertible matrix. Seeded random
/// combinations are tried first; otherwise the determinant of the generic
/// element is expanded exactly, which vanishes identically iff no invertible
/// element exists.
inline InvertibilityDecision contains_invertible(const std::vector<RationalMatrix>& basis, uint64_t seed = 1,
                                                 int random_trials = 12) {
  InvertibilityDecision out;
  if (basis.empty()) return out;
  const std::size_t k = basis.size(), m = basis.front().rows();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  auto try_point = [&](const std::vector<Rational>& t) {
    auto cand = linear_combination(basis, t);
    if (determinant(cand) == 0) return false;
    out.contains_invertible = true;
    out.witness = std::move(cand);
    out.witness_coefficients = t;
    return true;
  };
  out.method = InvertibilityMethod::random_combination;
  for (int trial = 0; trial < random_trials; ++trial) {
    std::vector<Rational> t(k);
    for (auto& v : t) v = coef(rng);
    if (try_point(t)) return out;
  }

  if (m > kSymbolicDimCap || k > kSymbolicBasisCap)
    throw CapExceeded("symbolic determinant: dimension " + std::to_string(m) + " with " + std::to_string(k) +
                      " parameters exceeds the caps (" + std::to_string(kSymbolicDimCap) + ", " +
                      std::to_string(kSymbolicBasisCap) + ")");
  out.method = InvertibilityMethod::symbolic_determinant;
  std::vector<std::vector<MultiPoly>> generic(m, std::vector<MultiPoly>(m, MultiPoly(k)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t v = 0; v < k; ++v)
        if (basis[v](i, j) != 0) generic[i][j] = generic[i][j] + MultiPoly::variable(k, v, basis[v](i, j));
  auto det = bareiss_determinant(generic, k);
  out.determinant_terms = det.term_count();
  if (det.is_zero()) return out;
  // a nonzero polynomial of degree m is nonzero somewhere on a grid of side m+1
  std::uniform_int_distribution<int> wide(-1000, 1000);
  for (;;) {
    std::vector<Rational> t(k);
    for (auto& v : t) v = wide(rng);
    if (det.evaluate(t) != 0 && try_point(t)) return out;
  }
}

// ---------------------------------------------------------------------------
// Intertwiners and symplectic forms

/// Basis of the solutions X of a linear matrix equation L(X) = 0, where X
/// ranges over span(unknowns).
inline std::vector<RationalMatrix> solve_linear_matrix_system(
    const std::vector<RationalMatrix>& unknowns,
    const std::function<std::vector<RationalMatrix>(const RationalMatrix&)>& equations) {
  if (unknowns.empty()) return {};
  std::vector<std::vector<RationalMatrix>> images;
  for (const auto& u : unknowns) images.push_back(equations(u));
  std::size_t eq_count = 0;
  for (const auto& e : images.front()) eq_count += e.rows() * e.cols();
  RationalMatrix system(std::max<std::size_t>(eq_count, 1), unknowns.size());
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    std::size_t r = 0;
    for (const auto& e : images[c])
      for (std::size_t i = 0; i < e.rows(); ++i)
        for (std::size_t j = 0; j < e.cols(); ++j) system(r++, c) = e(i, j);
  }
  std::vector<RationalMatrix> out;
  for (const auto& v : nullspace(system)) out.push_back(linear_combination(unknowns, v));
  return out;
}

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<RationalMatrix> witness;  // P with P a_x = b_x P and P a_y = b_y P
  std::size_t intertwiner_dim = 0;
  InvertibilityMethod method = InvertibilityMethod::empty_space;
};

/// Whether a and b are isomorphic C[x,y]-modules, i.e. simultaneously
/// conjugate.
inline IsomorphismResult module_isomorphic(const MatrixPair& a, const MatrixPair& b, uint64_t seed = 1) {
  if (a.dim() != b.dim()) throw InvalidInput("module_isomorphic: dimensions differ");
  const std::size_t m = a.dim();
  std::vector<RationalMatrix> unknowns;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      RationalMatrix e(m, m);
      e(i, j) = 1;
      unknowns.push_back(std::move(e));
    }
  auto space = solve_linear_matrix_system(unknowns, [&](const RationalMatrix& p) {
    return std::vector<RationalMatrix>{p * a.mx() - b.mx() * p, p * a.my() - b.my() * p};
  });
  IsomorphismResult out;
  out.intertwiner_dim = space.size();
  auto dec = contains_invertible(space, seed);
  out.isomorphic = dec.contains_invertible;
  out.witness = dec.witness;
  out.method = dec.method;
  return out;
}

/// J = [[0, I], [-I, 0]] of size 2n.
inline RationalMatrix standard_symplectic(std::size_t n) {
  RationalMatrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return j;
}

/// For an invertible skew form phi, a P with P^t phi P = J.
inline RationalMatrix darboux_basis(const RationalMatrix& phi) {
  const std::size_t m = phi.rows();
  if (m % 2 != 0) throw InvalidInput("odd-dimensional skew form is degenerate");
  auto omega = [&](const RationalVector& u, const RationalVector& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) s += u[i] * phi(i, j) * v[j];
    }
    return s;
  };
  std::vector<RationalVector> pool;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector e(m);
    e[i] = 1;
    pool.push_back(std::move(e));
  }
  std::vector<RationalVector> es, fs;
  while (!pool.empty()) {
    RationalVector u = pool.front();
    pool.erase(pool.begin());
    auto it = std::find_if(pool.begin(), pool.end(), [&](const RationalVector& v) { return omega(u, v) != 0; });
    if (it == pool.end()) throw InvalidInput("skew form is degenerate");
    RationalVector v = *it;
    pool.erase(it);
    Rational s = omega(u, v);
    for (auto& c : v) c /= s;
    // the rest is projected onto the omega-complement of span(u, v)
    for (auto& w : pool) {
      Rational wu = omega(w, u), wv = omega(w, v);
      for (std::size_t i = 0; i < m; ++i) w[i] += wu * v[i] - wv * u[i];
    }
    es.push_back(std::move(u));
    fs.push_back(std::move(v));
  }
  RationalMatrix p(m, m);
  const std::size_t n = m / 2;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < m; ++i) {
      p(i, c) = es[c][i];
      p(i, n + c) = fs[c][i];
    }
  return p;
}

/// Skew forms phi with phi M + M^t phi = 0 for M in {mx, my}.
struct SkewSolutionSpace {
  std::vector<RationalMatrix> basis;
  bool contains_invertible = false;
  std::optional<RationalMatrix> witness;
  // P with P^t witness P = J; then P^-1 M P lies in sp for both matrices
  std::optional<RationalMatrix> darboux;
  InvertibilityMethod method = InvertibilityMethod::empty_space;
  std::size_t determinant_terms = 0;
};

inline bool is_skew(const RationalMatrix& phi) { return (phi + phi.transpose()).is_zero(); }

inline bool is_compatible_form(const RationalMatrix& phi, const MatrixPair& p) {
  for (int w = 0; w < 2; ++w)
    if (!(phi * p[w] + p[w].transpose() * phi).is_zero()) return false;
  return true;
}

inline SkewSolutionSpace symplectic_exists(const MatrixPair& p, uint64_t seed = 1, bool reduce_to_standard = true) {
  const std::size_t m = p.dim();
  std::vector<RationalMatrix> unknowns;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      RationalMatrix e(m, m);
      e(i, j) = 1;
      e(j, i) = -1;
      unknowns.push_back(std::move(e));
    }
  SkewSolutionSpace out;
  out.basis = solve_linear_matrix_system(unknowns, [&](const RationalMatrix& phi) {
    return std::vector<RationalMatrix>{phi * p.mx() + p.mx().transpose() * phi,
                                       phi * p.my() + p.my().transpose() * phi};
  });
  if (m % 2 != 0) {
    // skew forms in odd dimension are singular
    out.method = InvertibilityMethod::odd_dimension;
    return out;
  }
  auto dec = contains_invertible(out.basis, seed);
  out.contains_invertible = dec.contains_invertible;
  out.witness = dec.witness;
  out.method = dec.method;
  out.determinant_terms = dec.determinant_terms;
  if (out.witness && reduce_to_standard) out.darboux = darboux_basis(*out.witness);
  return out;
}

}  // namespace abelmod
