#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "abelmod/core/rational_matrix.hpp"
#include "abelmod/core/smith.hpp"
#include "abelmod/group.hpp"
#include "abelmod/rootdata.hpp"

namespace abelmod {

/// A point of finite order in A (x) Lambda, written in a basis of Lambda as an
/// r-tuple of elements of (Q/Z)^4. Stored as numerators over a common
/// denominator N: row i, column c is the c-th coordinate of the i-th entry.
/// Canonical form: entries in [0, N) and N minimal.
class TorsionPoint {
 public:
  TorsionPoint() = default;
  TorsionPoint(IntMatrix numerators, int64_t denominator) : num_(std::move(numerators)), den_(denominator) {
    if (den_ <= 0) throw InvalidInput("torsion point denominator must be positive");
    if (num_.cols() != 4) throw InvalidInput("torsion point entries must be 4-vectors");
    normalize();
  }

  static TorsionPoint zero(std::size_t r) { return TorsionPoint(IntMatrix(r, 4), 1); }

  static TorsionPoint from_rationals(const std::vector<std::vector<Rational>>& rows) {
    BigInt lcm = 1;
    for (const auto& row : rows) {
      if (row.size() != 4) throw InvalidInput("torsion point entries must be 4-vectors");
      for (const auto& v : row) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(v));
    }
    if (lcm > BigInt(std::numeric_limits<int32_t>::max())) throw InvalidInput("torsion point denominator too large");
    const auto n = static_cast<int64_t>(lcm);
    IntMatrix num(rows.size(), 4);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t c = 0; c < 4; ++c) {
        Rational scaled = rows[i][c] * n;
        num(i, c) = mod_floor(static_cast<int64_t>(boost::multiprecision::numerator(scaled) % n), n);
      }
    return TorsionPoint(num, n);
  }

  static TorsionPoint parse(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Rational>> vals;
    for (const auto& row : rows) {
      std::vector<Rational> r;
      for (const auto& s : row) r.push_back(parse_rational(s));
      vals.push_back(std::move(r));
    }
    return from_rationals(vals);
  }

  std::size_t rank() const { return num_.rows(); }
  int64_t denominator() const { return den_; }
  const IntMatrix& numerators() const { return num_; }
  Rational entry(std::size_t i, std::size_t c) const { return Rational(num_(i, c), den_); }
  bool is_zero() const { return den_ == 1; }

  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i < rank(); ++i) {
      std::vector<std::string> row;
      for (std::size_t c = 0; c < 4; ++c) row.push_back(to_string(entry(i, c)));
      out.push_back(std::move(row));
    }
    return out;
  }

  /// w . p for an r x r matrix w acting on the Lambda factor.
  TorsionPoint transformed(const IntMatrix& w) const { return TorsionPoint(w * num_, den_); }

  TorsionPoint operator+(const TorsionPoint& o) const {
    if (o.rank() != rank()) throw InvalidInput("torsion point rank mismatch");
    const int64_t l = std::lcm(den_, o.den_);
    IntMatrix a(rank(), 4);
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t c = 0; c < 4; ++c) a(i, c) = num_(i, c) * (l / den_) + o.num_(i, c) * (l / o.den_);
    return TorsionPoint(a, l);
  }
  TorsionPoint scaled(int64_t k) const {
    IntMatrix a = num_;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t c = 0; c < 4; ++c) a(i, c) = checked_mul(a(i, c), k);
    return TorsionPoint(a, den_);
  }

  friend bool operator==(const TorsionPoint&, const TorsionPoint&) = default;

  struct Hash {
    std::size_t operator()(const TorsionPoint& p) const noexcept { return IntMatrixHash{}(p.num_) ^ std::size_t(p.den_); }
  };

 private:
  void normalize() {
    int64_t g = den_;
    for (std::size_t i = 0; i < num_.rows(); ++i)
      for (std::size_t c = 0; c < 4; ++c) {
        num_(i, c) = mod_floor(num_(i, c), den_);
        g = std::gcd(g, num_(i, c));
      }
    if (g > 1) {
      den_ /= g;
      for (std::size_t i = 0; i < num_.rows(); ++i)
        for (std::size_t c = 0; c < 4; ++c) num_(i, c) /= g;
    }
  }

  IntMatrix num_;
  int64_t den_ = 1;
};

// ---------------------------------------------------------------------------
// Basis changes from ambient descriptions

/// Intrinsic coordinates of a point given in the ambient lattice Z^m that
/// contains the coroot lattice as a saturated sublattice (e.g. G_2 inside the
/// sum-zero plane of Z^3). `ambient` is m rows of 4-vectors; it must lie in
/// A (x) Lambda.
inline TorsionPoint point_from_ambient(const RootDatum& rd, const std::vector<std::vector<Rational>>& ambient) {
  const IntMatrix& c = rd.simple_coroots;
  if (ambient.size() != c.rows()) throw InvalidInput("ambient point has wrong length");
  if (!has_torsion_free_cokernel(c))
    throw InvalidInput("coroot lattice is not saturated in its ambient lattice; use point_from_lattice_combination");
  // U C V = [I; 0] gives the integral left inverse L = V [I 0] U
  auto snf = smith_normal_form(c);
  const std::size_t r = c.cols(), m = c.rows();
  IntMatrix proj(r, m);
  for (std::size_t i = 0; i < r; ++i) proj(i, i) = 1;
  IntMatrix left = snf.V * proj * snf.U;
  auto pt = TorsionPoint::from_rationals(ambient);
  // membership: the ambient vector must equal C L x modulo Z
  auto back = TorsionPoint((c * left) * pt.numerators(), pt.denominator());
  if (!(back == pt)) throw InvalidInput("ambient point does not lie in A (x) Lambda");
  return TorsionPoint(left * pt.numerators(), pt.denominator());
}

/// Intrinsic coordinates of sum_i v_i (x) a_i where the v_i are lattice
/// vectors given in ambient coordinates and a_i in (Q/Z)^4. This is the
/// presentation of A (x) Lambda as A^k modulo a finite translation subgroup,
/// e.g. v_i = 2 e_i for the B_n and D_n coroot lattices.
inline TorsionPoint point_from_lattice_combination(const RootDatum& rd, const std::vector<IntVector>& vectors,
                                                   const std::vector<std::vector<Rational>>& coefficients) {
  if (vectors.size() != coefficients.size()) throw InvalidInput("one coefficient per lattice vector is required");
  const IntMatrix& c = rd.simple_coroots;
  const std::size_t r = c.cols();
  RationalMatrix cq(c);
  std::vector<std::vector<Rational>> rows(r, std::vector<Rational>(4, 0));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != c.rows()) throw InvalidInput("lattice vector has wrong length");
    // solve C x = v exactly
    RationalMatrix aug(c.rows(), r + 1);
    for (std::size_t i = 0; i < c.rows(); ++i) {
      for (std::size_t j = 0; j < r; ++j) aug(i, j) = cq(i, j);
      aug(i, r) = vectors[k][i];
    }
    auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == r) throw InvalidInput("vector is not in the span of the coroots");
    IntVector x(r, 0);
    for (std::size_t t = 0; t < pivots.size(); ++t) {
      const Rational& v = aug(t, r);
      if (boost::multiprecision::denominator(v) != 1) throw InvalidInput("vector is not in the coroot lattice");
      x[pivots[t]] = static_cast<int64_t>(boost::multiprecision::numerator(v));
    }
    if (coefficients[k].size() != 4) throw InvalidInput("coefficients must be 4-vectors");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t col = 0; col < 4; ++col) rows[i][col] += Rational(x[i]) * coefficients[k][col];
  }
  return TorsionPoint::from_rationals(rows);
}

/// The 2-torsion points (1/2,0,0,0), (0,1/2,0,0), (1/2,1/2,0,0) of A: three
/// distinct nonzero points summing to zero.
inline std::vector<std::vector<Rational>> standard_two_torsion_triple() {
  const Rational h(1, 2);
  return {{h, 0, 0, 0}, {0, h, 0, 0}, {h, h, 0, 0}};
}

/// Square roots tau_i / 2 of the standard triple.
inline std::vector<std::vector<Rational>> standard_square_roots() {
  const Rational q(1, 4);
  return {{q, 0, 0, 0}, {0, q, 0, 0}, {q, q, 0, 0}};
}

/// A point with stabilizer {+-1}: for G_2 the 2-torsion triple in the
/// sum-zero plane, for B_3 the square roots (tau_1/2, tau_2/2, tau_3/2) over
/// the vectors 2e_i, for D_4 (0, tau_1/2, tau_2/2, tau_3/2) over 2e_i.
/// Empty for other types.
inline std::optional<TorsionPoint> basic_example_point(const RootDatum& rd) {
  auto doubled = [](std::size_t n) {
    std::vector<IntVector> v;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n, 0);
      e[i] = 2;
      v.push_back(e);
    }
    return v;
  };
  const auto& t = rd.type;
  if (t.family == DynkinFamily::G) return point_from_ambient(rd, standard_two_torsion_triple());
  if (t.family == DynkinFamily::B && t.rank == 3)
    return point_from_lattice_combination(rd, doubled(3), standard_square_roots());
  if (t.family == DynkinFamily::D && t.rank == 4) {
    auto roots = standard_square_roots();
    return point_from_lattice_combination(rd, doubled(4), {{0, 0, 0, 0}, roots[0], roots[1], roots[2]});
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Stabilizers

enum class PointClass { trivial, minus_one_local_model, other };

inline std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::trivial: return "trivial";
    case PointClass::minus_one_local_model: return "minus_one_local_model";
    case PointClass::other: return "other";
  }
  return {};
}

struct StabilizerReport {
  std::vector<IntMatrix> generators;  // Schreier generators, identity removed
  BigInt order = 1;
  std::size_t orbit_size = 0;
  bool full_group = false;  // the point is W-fixed
  PointClass classification = PointClass::other;
  std::string local_model_label;
  std::string crepant_label;
};

inline constexpr std::size_t kDefaultOrbitCap = 5'000'000;

namespace detail {

inline std::string local_model(std::size_t r, PointClass cls, const BigInt& order, bool full, const std::string& group) {
  const std::string c = "C^" + std::to_string(2 * r);
  switch (cls) {
    case PointClass::trivial: return c;
    case PointClass::minus_one_local_model: return c + "/+-1";
    case PointClass::other: break;
  }
  if (full) return c + "/" + group;
  return c + "/G, |G| = " + order.str();
}

inline std::string crepant_label(std::size_t r, PointClass cls) {
  switch (cls) {
    case PointClass::trivial: return "smooth";
    case PointClass::minus_one_local_model:
      return r >= 2 ? "no crepant resolution" : "crepant resolution exists (A_1 surface singularity)";
    case PointClass::other: break;
  }
  return "not classified";
}

}  // namespace detail

/// Stabilizer of `point` in the group generated by `gens`, whose order is
/// `group_order`. Orbit enumeration with a transversal; Schreier generators
/// u_y^{-1} s u_x generate the stabilizer, and |stab| = |W| / |orbit|.
inline StabilizerReport stabilizer(const std::vector<IntMatrix>& gens, const BigInt& group_order,
                                   const TorsionPoint& point, const std::string& group_label = "W",
                                   std::size_t orbit_cap = kDefaultOrbitCap) {
  if (gens.empty()) throw InvalidInput("stabilizer: no generators");
  const std::size_t r = point.rank();
  if (gens.front().rows() != r) throw InvalidInput("stabilizer: rank mismatch between group and point");
  std::vector<IntMatrix> gens_inv;
  for (const auto& g : gens) gens_inv.push_back(unimodular_inverse(g));

  std::unordered_map<TorsionPoint, std::size_t, TorsionPoint::Hash> index;
  std::vector<TorsionPoint> orbit{point};
  std::vector<IntMatrix> u{IntMatrix::identity(r)}, u_inv{IntMatrix::identity(r)};
  index.emplace(point, 0);
  std::unordered_set<IntMatrix, IntMatrixHash> schreier;
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      TorsionPoint y = orbit[head].transformed(gens[k]);
      auto it = index.find(y);
      if (it == index.end()) {
        if (orbit.size() >= orbit_cap)
          throw CapExceeded("orbit exceeds the cap of " + std::to_string(orbit_cap) + " points");
        index.emplace(y, orbit.size());
        orbit.push_back(y);
        u.push_back(gens[k] * u[head]);
        u_inv.push_back(u_inv[head] * gens_inv[k]);
      } else {
        IntMatrix s = u_inv[it->second] * gens[k] * u[head];
        if (!s.is_identity()) schreier.insert(std::move(s));
      }
    }

  StabilizerReport rep;
  rep.generators.assign(schreier.begin(), schreier.end());
  std::sort(rep.generators.begin(), rep.generators.end(),
            [](const IntMatrix& a, const IntMatrix& b) { return std::lexicographical_compare(a.data().begin(), a.data().end(), b.data().begin(), b.data().end()); });
  rep.orbit_size = orbit.size();
  if (group_order % orbit.size() != 0) throw InternalError("orbit size does not divide the group order");
  rep.order = group_order / orbit.size();
  rep.full_group = orbit.size() == 1;
  if (rep.order == 1) {
    rep.classification = PointClass::trivial;
  } else if (rep.order == 2) {
    IntMatrix minus = IntMatrix(r, r) - IntMatrix::identity(r);
    bool is_minus = std::any_of(rep.generators.begin(), rep.generators.end(), [&](const IntMatrix& g) { return g == minus; });
    rep.classification = is_minus ? PointClass::minus_one_local_model : PointClass::other;
  }
  rep.local_model_label = detail::local_model(r, rep.classification, rep.order, rep.full_group, group_label);
  rep.crepant_label = detail::crepant_label(r, rep.classification);
  return rep;
}

inline StabilizerReport stabilizer(const RootDatum& rd, const TorsionPoint& point,
                                   std::size_t orbit_cap = kDefaultOrbitCap) {
  return stabilizer(rd.weyl_generators, rd.weyl_order(), point, "W(" + rd.label() + ")", orbit_cap);
}

/// Whether -1 lies in W: fails exactly for A_n (n >= 2), D_n (n odd) and E_6.
inline bool weyl_group_contains_minus_one(const DynkinType& t) {
  switch (t.family) {
    case DynkinFamily::A: return t.rank == 1;
    case DynkinFamily::D: return t.rank % 2 == 0;
    case DynkinFamily::E: return t.rank != 6;
    default: return true;
  }
}

// ---------------------------------------------------------------------------
// Scan for points with stabilizer exactly {+-1}

struct MinusOneScan {
  std::vector<TorsionPoint> representatives;  // one per W-orbit
  std::vector<std::size_t> orbit_sizes;
  std::size_t points_scanned = 0;
  bool partial = false;
  std::string local_model_label;
  std::string crepant_label;
};

inline constexpr std::size_t kDefaultScanCap = std::size_t{1} << 24;

/// W-orbit representatives of torsion points (denominator <= bound) whose
/// stabilizer is exactly {+-1}. Such a point satisfies p = -p, so it is
/// 2-torsion; the scan therefore runs over the 2^{4r} points of
/// Lambda (x) (1/2 Z/Z)^4 and keeps the orbits of size |W|/2.
inline MinusOneScan find_minus_one_points(const RootDatum& rd, int64_t denominator_bound,
                                          std::size_t scan_cap = kDefaultScanCap) {
  if (denominator_bound < 1) throw InvalidInput("denominator bound must be positive");
  const std::size_t r = rd.rank();
  MinusOneScan out;
  out.local_model_label = "C^" + std::to_string(2 * r) + "/+-1";
  out.crepant_label = detail::crepant_label(r, PointClass::minus_one_local_model);
  if (denominator_bound < 2 || !weyl_group_contains_minus_one(rd.type)) return out;

  const std::size_t bits = 4 * r;
  if (bits >= 63 || (std::size_t{1} << bits) > scan_cap) {
    out.partial = true;
    return out;
  }
  const std::size_t total = std::size_t{1} << bits;
  const BigInt target = rd.weyl_order() / 2;

  // bit (4 i + c) is the numerator of coordinate c of entry i
  std::vector<std::vector<uint64_t>> row_masks;  // generator k, row i -> mask over j
  for (const auto& g : rd.weyl_generators) {
    std::vector<uint64_t> masks(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (mod_floor(g(i, j), 2)) masks[i] |= uint64_t{1} << j;
    row_masks.push_back(std::move(masks));
  }
  auto apply = [&](const std::vector<uint64_t>& masks, uint64_t code) {
    uint64_t out_code = 0;
    for (std::size_t c = 0; c < 4; ++c) {
      uint64_t column = 0;
      for (std::size_t j = 0; j < r; ++j) column |= ((code >> (4 * j + c)) & 1) << j;
      for (std::size_t i = 0; i < r; ++i)
        out_code |= uint64_t(__builtin_popcountll(masks[i] & column) & 1) << (4 * i + c);
    }
    return out_code;
  };

  std::vector<char> seen(total, 0);
  std::vector<uint64_t> queue;
  for (uint64_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto& masks : row_masks) {
        uint64_t y = apply(masks, queue[head]);
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    if (BigInt(queue.size()) != target) continue;
    IntMatrix num(r, 4);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = 0; c < 4; ++c) num(i, c) = static_cast<int64_t>((start >> (4 * i + c)) & 1);
    out.representatives.emplace_back(num, 2);
    out.orbit_sizes.push_back(queue.size());
  }
  out.points_scanned = total;
  return out;
}

// ---------------------------------------------------------------------------
// Propagation along diagram embeddings

struct PropagationResult {
  TorsionPoint point;        // p' in the ambient lattice
  TorsionPoint translation;  // q, in the orthogonal complement
  StabilizerReport sub_stabilizer;
  StabilizerReport stabilizer;
  bool restriction_matches = false;
  int attempts = 0;
  uint64_t seed = 0;
  std::string local_model_label;  // (C^{2l}/W_p) x C^{2k}
  bool success() const { return restriction_matches && stabilizer.order == sub_stabilizer.order; }
};

/// Saturated basis (columns) of the orthogonal complement of the image of the
/// sub coroot lattice, for the ambient invariant form.
inline IntMatrix orthogonal_complement(const DiagramEmbedding& e) {
  return smith_normal_form(e.coroot_map.transpose() * e.ambient.gram).kernel_basis();
}

namespace detail {

/// Checks that every element of the ambient stabilizer preserves the image of
/// the sub lattice and restricts to an element of W fixing p, and that
/// restriction is a bijection onto stab_W(p).
inline bool restriction_is_isomorphism(const DiagramEmbedding& e, const StabilizerReport& amb,
                                       const StabilizerReport& sub, const TorsionPoint& p) {
  if (amb.order != sub.order) return false;
  if (amb.order > BigInt(kDefaultEnumerationCap)) return false;
  if (amb.generators.empty()) return sub.order == 1;
  const std::size_t cap = static_cast<std::size_t>(amb.order);
  auto group = MatrixGroup::generate(amb.generators, cap);
  const auto sub_weyl = enumerate_group(e.sub);
  std::unordered_set<IntMatrix, IntMatrixHash> restricted;
  const std::size_t l = e.sub.rank();
  for (const auto& w : group.elements()) {
    IntMatrix wc = w * e.coroot_map;
    IntMatrix res(l, l);
    std::vector<bool> is_image(e.ambient.rank(), false);
    for (std::size_t i = 0; i < l; ++i) is_image[e.node_map[i]] = true;
    for (std::size_t a = 0; a < e.ambient.rank(); ++a)
      for (std::size_t j = 0; j < l; ++j)
        if (!is_image[a] && wc(a, j) != 0) return false;
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) res(i, j) = wc(e.node_map[i], j);
    if (!sub_weyl.contains(res) || !(p.transformed(res) == p)) return false;
    restricted.insert(res);
  }
  return BigInt(restricted.size()) == sub.order;
}

}  // namespace detail

/// p' = C p + q with q a pseudo-random point of fine order in the orthogonal
/// complement N; retried until stab_{W'}(p') is isomorphic to stab_W(p) by
/// restriction, or `max_attempts` is reached.
inline PropagationResult propagate(const DiagramEmbedding& e, const TorsionPoint& p, int64_t fine_denominator = 5,
                                   uint64_t seed = 1, int max_attempts = 20,
                                   std::size_t orbit_cap = kDefaultOrbitCap) {
  if (p.rank() != e.sub.rank()) throw InvalidInput("point rank does not match the sub datum");
  if (fine_denominator < 2) throw InvalidInput("fine denominator must be at least 2");
  const IntMatrix n_basis = orthogonal_complement(e);
  const std::size_t k = n_basis.cols();
  const std::size_t l = e.sub.rank();

  PropagationResult res;
  res.seed = seed;
  res.sub_stabilizer = stabilizer(e.sub, p, orbit_cap);
  const TorsionPoint image(e.coroot_map * p.numerators(), p.denominator());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> digit(0, fine_denominator - 1);
  const std::string sub_model = res.sub_stabilizer.order == 1 ? "C^" + std::to_string(2 * l)
                                : res.sub_stabilizer.classification == PointClass::minus_one_local_model
                                    ? "C^" + std::to_string(2 * l) + "/+-1"
                                    : "C^" + std::to_string(2 * l) + "/W_p";
  res.local_model_label = "(" + sub_model + ") x C^" + std::to_string(2 * k);

  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    IntMatrix b(k, 4);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = 0; c < 4; ++c) b(j, c) = digit(rng);
    TorsionPoint q(n_basis * b, fine_denominator);
    TorsionPoint candidate = image + q;
    auto stab = stabilizer(e.ambient, candidate, orbit_cap);
    res.attempts = attempt;
    res.point = candidate;
    res.translation = q;
    res.stabilizer = stab;
    res.restriction_matches = detail::restriction_is_isomorphism(e, stab, res.sub_stabilizer, p);
    if (res.success()) break;
  }
  return res;
}

}  // namespace abelmod
