#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "abelmod/core/error.hpp"
#include "abelmod/core/numeric.hpp"

namespace abelmod {

/// Integer polynomial in x, y. Keys are Hodge bidegrees (p, q); zero
/// coefficients are never stored, so structural equality is polynomial
/// equality.
class BigradedPoly {
 public:
  using Key = std::pair<int, int>;

  BigradedPoly() = default;
  BigradedPoly(int64_t c) { add_term(0, 0, c); }  // NOLINT: constants convert implicitly
  BigradedPoly(const BigInt& c) { add_term(0, 0, c); }  // NOLINT

  static BigradedPoly monomial(int p, int q, const BigInt& c = 1) {
    BigradedPoly out;
    out.add_term(p, q, c);
    return out;
  }
  static BigradedPoly xy_power(int k) { return monomial(k, k); }

  void add_term(int p, int q, const BigInt& c) {
    if (p < 0 || q < 0) throw InvalidInput("negative bidegree");
    if (c == 0) return;
    auto [it, fresh] = coeffs_.try_emplace({p, q}, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  BigInt coefficient(int p, int q) const {
    auto it = coeffs_.find({p, q});
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  const std::map<Key, BigInt>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Largest p and largest q appearing; (-1, -1) for the zero polynomial.
  Key max_degrees() const {
    Key d{-1, -1};
    for (const auto& [k, c] : coeffs_) d = {std::max(d.first, k.first), std::max(d.second, k.second)};
    return d;
  }

  bool has_nonnegative_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
  }

  /// h^{p,q} = h^{q,p}
  bool is_hodge_symmetric() const {
    for (const auto& [k, c] : coeffs_)
      if (coefficient(k.second, k.first) != c) return false;
    return true;
  }

  /// h^{p,q} = h^{2n-p, 2n-q}
  bool is_centrally_symmetric(int n) const {
    for (const auto& [k, c] : coeffs_) {
      if (k.first > 2 * n || k.second > 2 * n) return false;
      if (coefficient(2 * n - k.first, 2 * n - k.second) != c) return false;
    }
    return true;
  }

  BigInt evaluate(const BigInt& x0, const BigInt& y0) const {
    BigInt total = 0;
    for (const auto& [k, c] : coeffs_) total += c * boost::multiprecision::pow(x0, k.first) * boost::multiprecision::pow(y0, k.second);
    return total;
  }

  friend bool operator==(const BigradedPoly&, const BigradedPoly&) = default;

  BigradedPoly& operator+=(const BigradedPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, c);
    return *this;
  }
  BigradedPoly& operator-=(const BigradedPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, -c);
    return *this;
  }
  friend BigradedPoly operator+(BigradedPoly a, const BigradedPoly& b) { return a += b; }
  friend BigradedPoly operator-(BigradedPoly a, const BigradedPoly& b) { return a -= b; }
  friend BigradedPoly operator-(const BigradedPoly& a) { return BigradedPoly() - a; }

  friend BigradedPoly operator*(const BigradedPoly& a, const BigradedPoly& b) {
    BigradedPoly out;
    for (const auto& [ka, ca] : a.coeffs_)
      for (const auto& [kb, cb] : b.coeffs_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
  }
  BigradedPoly& operator*=(const BigradedPoly& o) { return *this = *this * o; }

  /// Exact division by an integer; throws InternalError if any coefficient
  /// is not divisible.
  BigradedPoly divided_exactly(const BigInt& d) const {
    if (d == 0) throw InvalidInput("division by zero");
    BigradedPoly out;
    for (const auto& [k, c] : coeffs_) {
      if (c % d != 0) throw InternalError("non-integral coefficient after division by " + d.str());
      out.add_term(k.first, k.second, c / d);
    }
    return out;
  }

  /// Terms by total degree, then by decreasing p: "1 + x^2 + 20xy + y^2 + x^2y^2".
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::vector<std::pair<Key, BigInt>> order(coeffs_.begin(), coeffs_.end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
      if (da != db) return da < db;
      return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : order) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      const bool constant = k.first == 0 && k.second == 0;
      if (mag != 1 || constant) os << mag;
      auto var = [&](char v, int e) {
        if (e == 0) return;
        os << v;
        if (e > 1) os << '^' << e;
      };
      var('x', k.first);
      var('y', k.second);
    }
    return os.str();
  }

 private:
  std::map<Key, BigInt> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const BigradedPoly& h) { return os << h.to_string(); }

inline BigradedPoly pow(const BigradedPoly& base, int k) {
  BigradedPoly out = 1;
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

// ---------------------------------------------------------------------------
// Partitions

/// Partition of n by multiplicities: mult[i-1] = number of parts equal to i.
struct Partition {
  std::vector<int> mult;

  int n() const {
    int s = 0;
    for (std::size_t i = 0; i < mult.size(); ++i) s += static_cast<int>(i + 1) * mult[i];
    return s;
  }
  /// number of parts |alpha|
  int length() const {
    int s = 0;
    for (int m : mult) s += m;
    return s;
  }
};

inline std::vector<Partition> partitions(int n) {
  if (n < 0) throw InvalidInput("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> mult(static_cast<std::size_t>(n), 0);
  // choose multiplicities from the largest part down
  auto rec = [&](auto&& self, int part, int remaining) -> void {
    if (part == 0) {
      if (remaining == 0) out.push_back({mult});
      return;
    }
    for (int m = remaining / part; m >= 0; --m) {
      mult[static_cast<std::size_t>(part - 1)] = m;
      self(self, part - 1, remaining - m * part);
    }
    mult[static_cast<std::size_t>(part - 1)] = 0;
  };
  if (n == 0)
    out.push_back({});
  else
    rec(rec, n, n);
  return out;
}

// ---------------------------------------------------------------------------
// Graded symmetric powers

/// Sym^0(h), ..., Sym^l(h) in the super convention: odd classes anticommute.
/// This is the t-expansion of prod_{p+q even} (1 - x^p y^q t)^{-h^{p,q}} *
/// prod_{p+q odd} (1 + x^p y^q t)^{h^{p,q}}.
inline std::vector<BigradedPoly> sym_powers(const BigradedPoly& h, int l) {
  if (l < 0) throw InvalidInput("negative symmetric power");
  if (!h.has_nonnegative_coefficients()) throw InvalidInput("symmetric power of a polynomial with negative coefficients");
  std::vector<BigradedPoly> series(static_cast<std::size_t>(l) + 1);
  series[0] = 1;
  for (const auto& [k, c] : h.terms()) {
    const bool odd = (k.first + k.second) % 2 != 0;
    // factor sum_j a_j m^j t^j
    std::vector<BigradedPoly> factor(static_cast<std::size_t>(l) + 1);
    for (int j = 0; j <= l; ++j) {
      BigInt a = odd ? binomial(c, j) : binomial(c + j - 1, j);
      if (a != 0) factor[static_cast<std::size_t>(j)] = BigradedPoly::monomial(j * k.first, j * k.second, a);
    }
    std::vector<BigradedPoly> next(static_cast<std::size_t>(l) + 1);
    for (int i = 0; i <= l; ++i) {
      if (series[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; i + j <= l; ++j)
        if (!factor[static_cast<std::size_t>(j)].is_zero())
          next[static_cast<std::size_t>(i + j)] += series[static_cast<std::size_t>(i)] * factor[static_cast<std::size_t>(j)];
    }
    series = std::move(next);
  }
  return series;
}

inline BigradedPoly sym_power(const BigradedPoly& h, int l) { return sym_powers(h, l).back(); }

/// Hodge polynomial of the Hilbert scheme of n points on a surface with
/// Hodge polynomial h: sum over partitions alpha of n of
/// (xy)^{n - |alpha|} prod_i Sym^{alpha_i}(h).
inline BigradedPoly goettsche(const BigradedPoly& h, int n) {
  if (n < 0) throw InvalidInput("goettsche: n must be nonnegative");
  const auto sym = sym_powers(h, n);
  BigradedPoly total;
  for (const auto& alpha : partitions(n)) {
    BigradedPoly term = BigradedPoly::xy_power(n - alpha.length());
    for (int m : alpha.mult)
      if (m > 0) term *= sym[static_cast<std::size_t>(m)];
    total += term;
  }
  return total;
}

inline BigInt specialize(const BigradedPoly& h, int64_t x0, int64_t y0) { return h.evaluate(x0, y0); }
inline BigInt euler_number(const BigradedPoly& h) { return h.evaluate(-1, -1); }
inline BigInt signature(const BigradedPoly& h) { return h.evaluate(-1, 1); }

enum class SeriesSpecialization { none, euler, signature };

/// goettsche(h, n) for n = 0..n_max, each optionally specialized to a
/// constant polynomial.
inline std::vector<BigradedPoly> generating_series(const BigradedPoly& h, int n_max,
                                                   SeriesSpecialization spec = SeriesSpecialization::none) {
  if (n_max < 0) throw InvalidInput("generating_series: n_max must be nonnegative");
  std::vector<BigradedPoly> out;
  for (int n = 0; n <= n_max; ++n) {
    auto g = goettsche(h, n);
    switch (spec) {
      case SeriesSpecialization::none: out.push_back(std::move(g)); break;
      case SeriesSpecialization::euler: out.emplace_back(euler_number(g)); break;
      case SeriesSpecialization::signature: out.emplace_back(signature(g)); break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Standard surfaces

enum class SurfaceTag { abelian, kummer_singular, two_torsion, kummer_k3 };

struct StandardSurface {
  SurfaceTag tag;
  std::string name;
  BigradedPoly hodge;
};

inline BigradedPoly hodge_abelian_surface() {
  BigradedPoly c = BigradedPoly(1) + BigradedPoly::monomial(1, 0);
  BigradedPoly d = BigradedPoly(1) + BigradedPoly::monomial(0, 1);
  return pow(c * d, 2);
}

/// K = A/{+-1}: the even cohomology of A.
inline BigradedPoly hodge_singular_kummer() {
  return BigradedPoly(1) + BigradedPoly::monomial(2, 0) + BigradedPoly::monomial(1, 1, 4) + BigradedPoly::monomial(0, 2) +
         BigradedPoly::monomial(2, 2);
}

/// the sixteen 2-torsion points of A
inline BigradedPoly hodge_two_torsion() { return BigradedPoly(16); }

/// Kummer K3: K with the sixteen exceptional curves.
inline BigradedPoly hodge_kummer_k3() { return hodge_singular_kummer() + hodge_two_torsion() * BigradedPoly::xy_power(1); }

inline StandardSurface standard_surface(SurfaceTag tag) {
  switch (tag) {
    case SurfaceTag::abelian: return {tag, "abelian surface A", hodge_abelian_surface()};
    case SurfaceTag::kummer_singular: return {tag, "singular Kummer surface K = A/+-1", hodge_singular_kummer()};
    case SurfaceTag::two_torsion: return {tag, "2-torsion points A_2", hodge_two_torsion()};
    case SurfaceTag::kummer_k3: return {tag, "Kummer K3 surface X", hodge_kummer_k3()};
  }
  throw InvalidInput("unknown surface tag");
}

/// Hodge diamond as centred text, h^{0,0} on top; row k lists h^{k,0} .. h^{0,k}.
inline std::string diamond_text(const BigradedPoly& h) {
  if (h.is_zero()) return "0\n";
  auto [pm, qm] = h.max_degrees();
  const int d = std::max(pm, qm);
  std::size_t width = 1;
  for (const auto& [k, c] : h.terms()) width = std::max(width, c.str().size());
  // entries right-aligned to a common width and separated by that width, so
  // consecutive rows interleave
  std::vector<std::string> lines;
  std::size_t longest = 0;
  for (int k = 0; k <= 2 * d; ++k) {
    std::string line;
    for (int p = std::min(k, d); p >= std::max(0, k - d); --p) {
      std::string v = h.coefficient(p, k - p).str();
      if (!line.empty()) line += std::string(width, ' ');
      line += std::string(width - v.size(), ' ') + v;
    }
    longest = std::max(longest, line.size());
    lines.push_back(std::move(line));
  }
  std::string out;
  for (const auto& line : lines) out += std::string((longest - line.size()) / 2, ' ') + line + "\n";
  return out;
}

}  // namespace abelmod
