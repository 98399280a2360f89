#pragma once

// Coroot lattices and Weyl groups of the simple types, all in the basis of
// simple coroots. Nodes follow the Bourbaki numbering.

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "abelmod/core/int_matrix.hpp"
#include "abelmod/core/numeric.hpp"
#include "abelmod/core/smith.hpp"

namespace abelmod {

enum class DynkinFamily : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinType {
  DynkinFamily family = DynkinFamily::A;
  int rank = 1;

  std::string label() const { return std::string(1, static_cast<char>(family)) + "_" + std::to_string(rank); }
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

inline void validate(const DynkinType& t) {
  bool ok = false;
  switch (t.family) {
    case DynkinFamily::A: ok = t.rank >= 1; break;
    case DynkinFamily::B: ok = t.rank >= 2; break;
    case DynkinFamily::C: ok = t.rank >= 2; break;
    case DynkinFamily::D: ok = t.rank >= 4; break;
    case DynkinFamily::E: ok = t.rank >= 6 && t.rank <= 8; break;
    case DynkinFamily::F: ok = t.rank == 4; break;
    case DynkinFamily::G: ok = t.rank == 2; break;
  }
  if (!ok) throw InvalidInput("invalid Dynkin type/rank: " + t.label());
}

/// Accepts "A3", "A_3", "a_3", or a bare family letter combined with `rank`.
inline DynkinType parse_dynkin_type(std::string text, int rank = 0) {
  text.erase(std::remove(text.begin(), text.end(), '_'), text.end());
  if (text.empty()) throw InvalidInput("empty Dynkin type");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (std::string("ABCDEFG").find(letter) == std::string::npos)
    throw InvalidInput("unknown Dynkin family '" + std::string(1, text[0]) + "'");
  int parsed_rank = rank;
  if (text.size() > 1) {
    try {
      std::size_t used = 0;
      parsed_rank = std::stoi(text.substr(1), &used);
      if (used != text.size() - 1) throw InvalidInput("bad rank");
    } catch (const std::exception&) {
      throw InvalidInput("malformed Dynkin label '" + text + "'");
    }
    if (rank != 0 && rank != parsed_rank) throw InvalidInput("rank given twice with different values");
  }
  DynkinType t{static_cast<DynkinFamily>(letter), parsed_rank};
  validate(t);
  return t;
}

/// Order of the Weyl group by the product formula.
inline BigInt weyl_group_order(const DynkinType& t) {
  switch (t.family) {
    case DynkinFamily::A: return factorial(t.rank + 1);
    case DynkinFamily::B:
    case DynkinFamily::C: return (BigInt(1) << t.rank) * factorial(t.rank);
    case DynkinFamily::D: return (BigInt(1) << (t.rank - 1)) * factorial(t.rank);
    case DynkinFamily::E:
      return t.rank == 6 ? BigInt(51840) : t.rank == 7 ? BigInt(2903040) : BigInt(696729600);
    case DynkinFamily::F: return 1152;
    case DynkinFamily::G: return 12;
  }
  return 0;
}

/// Cartan matrix with entries <alpha_i^vee, alpha_j>.
inline IntMatrix cartan_matrix(const DynkinType& t) {
  validate(t);
  const auto n = static_cast<std::size_t>(t.rank);
  IntMatrix c = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) { c(i, j) = c(j, i) = -1; };
  switch (t.family) {
    case DynkinFamily::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case DynkinFamily::B:  // alpha_n short
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 1, n - 2) = -2;
      break;
    case DynkinFamily::C:  // alpha_n long
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 2, n - 1) = -2;
      break;
    case DynkinFamily::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case DynkinFamily::E:
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case DynkinFamily::F:  // alpha_1, alpha_2 long
      link(0, 1);
      link(2, 3);
      c(1, 2) = -1;
      c(2, 1) = -2;
      break;
    case DynkinFamily::G:  // alpha_1 short
      c(0, 1) = -3;
      c(1, 0) = -1;
      break;
  }
  return c;
}

/// Simple coroots as columns of an (ambient dim) x rank integer matrix.
/// A_n: sum-zero vectors in Z^{n+1}; B_n, D_n: Z^n with even coordinate sum;
/// C_n: all of Z^n; G_2: sum-zero plane in Z^3; F_4: the index-2 lattice in Z^4;
/// E_n: the standard basis (no smaller ambient realization is used).
inline IntMatrix simple_coroot_realization(const DynkinType& t) {
  validate(t);
  const auto n = static_cast<std::size_t>(t.rank);
  auto e = [](std::size_t dim, std::size_t i) {
    IntVector v(dim, 0);
    v[i] = 1;
    return v;
  };
  auto sub = [](IntVector a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };
  std::vector<IntVector> cols;
  switch (t.family) {
    case DynkinFamily::A:
      for (std::size_t i = 0; i < n; ++i) cols.push_back(sub(e(n + 1, i), e(n + 1, i + 1)));
      break;
    case DynkinFamily::B:
    case DynkinFamily::C:
    case DynkinFamily::D:
      for (std::size_t i = 0; i + 1 < n; ++i) cols.push_back(sub(e(n, i), e(n, i + 1)));
      if (t.family == DynkinFamily::B) {
        IntVector last(n, 0);
        last[n - 1] = 2;
        cols.push_back(last);
      } else if (t.family == DynkinFamily::C) {
        cols.push_back(e(n, n - 1));
      } else {
        IntVector last = e(n, n - 2);
        last[n - 1] = 1;
        cols.push_back(last);
      }
      break;
    case DynkinFamily::G:
      cols = {{-1, 2, -1}, {1, -1, 0}};
      break;
    case DynkinFamily::F:
      cols = {{0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      break;
    case DynkinFamily::E:
      for (std::size_t i = 0; i < n; ++i) cols.push_back(e(n, i));
      break;
  }
  return IntMatrix::from_columns(cols);
}

/// Simple reflections acting on the simple-coroot basis:
/// s_i(alpha_j^vee) = alpha_j^vee - <alpha_j^vee, alpha_i> alpha_i^vee.
inline std::vector<IntMatrix> weyl_generators_from_cartan(const IntMatrix& cartan) {
  const std::size_t n = cartan.rows();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix s = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= cartan(j, i);
    gens.push_back(std::move(s));
  }
  return gens;
}

namespace detail {

// Squared root lengths d_i (rational, d_0 = 1 per component) with
// cartan(i,j) * d_i = cartan(j,i) * d_j.
inline std::vector<Rational> root_length_squares(const IntMatrix& cartan) {
  const std::size_t n = cartan.rows();
  std::vector<Rational> d(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || cartan(i, j) == 0 || d[j] != 0) continue;
        d[j] = d[i] * cartan(i, j) / cartan(j, i);
        stack.push_back(j);
      }
    }
  }
  return d;
}

}  // namespace detail

/// W-invariant symmetric form on the coroot lattice in the simple-coroot
/// basis, scaled to a primitive positive-definite integer matrix.
inline IntMatrix coroot_gram_matrix(const IntMatrix& cartan) {
  const std::size_t n = cartan.rows();
  auto d = detail::root_length_squares(cartan);
  // (alpha_i^vee, alpha_j^vee) = 2 cartan(j, i) / d_i
  std::vector<Rational> g(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i * n + j] = Rational(2 * cartan(j, i)) / d[i];
  BigInt den_lcm = 1;
  for (const auto& v : g) den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(v));
  BigInt num_gcd = 0;
  for (const auto& v : g) num_gcd = boost::multiprecision::gcd(num_gcd, BigInt(boost::multiprecision::numerator(Rational(v * den_lcm))));
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = static_cast<int64_t>(BigInt(boost::multiprecision::numerator(Rational(g[i * n + j] * den_lcm))) / num_gcd);
  return out;
}

/// Positive roots in the simple-root basis, by closure under simple reflections.
inline std::vector<IntVector> positive_roots(const IntMatrix& cartan) {
  const std::size_t n = cartan.rows();
  std::set<IntVector> seen;
  std::vector<IntVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector v(n, 0);
    v[i] = 1;
    seen.insert(v);
    queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVector beta = queue[head];
      int64_t pairing = 0;  // <alpha_i^vee, beta>
      for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan(i, j);
      beta[i] -= pairing;
      if (std::any_of(beta.begin(), beta.end(), [](int64_t c) { return c < 0; })) continue;
      if (seen.insert(beta).second) queue.push_back(beta);
    }
  }
  return std::vector<IntVector>(seen.begin(), seen.end());
}

struct RootDatum {
  DynkinType type;
  IntMatrix cartan;
  IntMatrix simple_coroots;  // ambient coordinates, one column per simple coroot
  std::vector<IntMatrix> weyl_generators;
  IntMatrix gram;  // invariant form in the simple-coroot basis

  std::size_t rank() const { return static_cast<std::size_t>(type.rank); }
  std::string label() const { return type.label(); }
  BigInt weyl_order() const { return weyl_group_order(type); }
};

inline RootDatum build_root_datum(const DynkinType& type) {
  validate(type);
  RootDatum rd;
  rd.type = type;
  rd.cartan = cartan_matrix(type);
  rd.simple_coroots = simple_coroot_realization(type);
  rd.weyl_generators = weyl_generators_from_cartan(rd.cartan);
  rd.gram = coroot_gram_matrix(rd.cartan);
  return rd;
}

inline RootDatum build_root_datum(const std::string& label, int rank = 0) {
  return build_root_datum(parse_dynkin_type(label, rank));
}

/// Coefficients of the coroot of the highest root in the simple-coroot basis,
/// in Bourbaki node order.
inline IntVector highest_coroot_bourbaki(const RootDatum& rd) {
  auto roots = positive_roots(rd.cartan);
  auto height = [](const IntVector& v) { return std::accumulate(v.begin(), v.end(), int64_t{0}); };
  const IntVector theta = *std::max_element(roots.begin(), roots.end(),
                                            [&](const auto& a, const auto& b) { return height(a) < height(b); });
  auto d = detail::root_length_squares(rd.cartan);
  const std::size_t n = rd.rank();
  Rational theta_sq = 0;  // (alpha_i, alpha_j) = cartan(i,j) d_i / 2
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) theta_sq += Rational(theta[i] * theta[j] * rd.cartan(i, j)) * d[i] / 2;
  IntVector g(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational gi = Rational(theta[i]) * d[i] / theta_sq;
    if (boost::multiprecision::denominator(gi) != 1) throw InternalError("non-integral highest coroot coefficient");
    g[i] = static_cast<int64_t>(boost::multiprecision::numerator(gi));
  }
  return g;
}

/// Highest-coroot coefficients sorted ascending, the weights g_i of the
/// weighted projective space P(1, g_1, ..., g_r).
inline IntVector highest_coroot_coefficients(const RootDatum& rd) {
  auto g = highest_coroot_bourbaki(rd);
  std::sort(g.begin(), g.end());
  return g;
}

enum class CrepantVerdict { admits, does_not_admit };

/// (A (x) Lambda)/W admits a crepant resolution exactly for SU(n) and Sp(n).
inline CrepantVerdict crepant_classification(const DynkinType& t) {
  validate(t);
  return (t.family == DynkinFamily::A || t.family == DynkinFamily::C) ? CrepantVerdict::admits
                                                                     : CrepantVerdict::does_not_admit;
}

inline std::string to_string(CrepantVerdict v) { return v == CrepantVerdict::admits ? "admits" : "does_not_admit"; }

/// Compact group name for a simple type, e.g. Spin(7) for B_3.
inline std::string group_name(const DynkinType& t) {
  switch (t.family) {
    case DynkinFamily::A: return "SU(" + std::to_string(t.rank + 1) + ")";
    case DynkinFamily::B: return "Spin(" + std::to_string(2 * t.rank + 1) + ")";
    case DynkinFamily::C: return "Sp(" + std::to_string(t.rank) + ")";
    case DynkinFamily::D: return "Spin(" + std::to_string(2 * t.rank) + ")";
    case DynkinFamily::E: return "E" + std::to_string(t.rank);
    case DynkinFamily::F: return "F4";
    case DynkinFamily::G: return "G2";
  }
  return {};
}

struct DiagramEmbedding {
  RootDatum sub;
  RootDatum ambient;
  std::vector<std::size_t> node_map;
  IntMatrix coroot_map;  // ambient rank x sub rank
};

/// Embeds the sub-diagram via `node_map` (sub node i -> ambient node
/// node_map[i]); rejects maps that do not preserve edges and arrows.
inline DiagramEmbedding embed_diagram(const RootDatum& sub, const RootDatum& ambient,
                                      const std::vector<std::size_t>& node_map) {
  const std::size_t l = sub.rank(), n = ambient.rank();
  if (node_map.size() != l) throw InvalidInput("node map has wrong length");
  std::set<std::size_t> image(node_map.begin(), node_map.end());
  if (image.size() != l) throw InvalidInput("node map is not injective");
  for (auto v : node_map)
    if (v >= n) throw InvalidInput("node map target out of range");
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      if (sub.cartan(i, j) != ambient.cartan(node_map[i], node_map[j]))
        throw InvalidInput("node map is not a diagram morphism: Cartan entry (" + std::to_string(i) + "," +
                           std::to_string(j) + ") differs");
  IntMatrix c(n, l);
  for (std::size_t i = 0; i < l; ++i) c(node_map[i], i) = 1;
  if (!has_torsion_free_cokernel(c)) throw InternalError("embedding has torsion cokernel");
  for (std::size_t i = 0; i < l; ++i)
    if (ambient.weyl_generators[node_map[i]] * c != c * sub.weyl_generators[i])
      throw InternalError("Weyl generators are not compatible with the coroot map");
  return DiagramEmbedding{sub, ambient, node_map, std::move(c)};
}

inline DiagramEmbedding embed_diagram(const std::string& sub_label, const std::string& ambient_label,
                                      const std::vector<std::size_t>& node_map) {
  return embed_diagram(build_root_datum(sub_label), build_root_datum(ambient_label), node_map);
}

}  // namespace abelmod
