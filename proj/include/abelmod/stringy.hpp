#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "abelmod/core/smith.hpp"
#include "abelmod/group.hpp"
#include "abelmod/hodge_poly.hpp"
#include "abelmod/rootdata.hpp"

namespace abelmod {

inline constexpr std::size_t kDefaultStringyCap = 100'000;

/// A finite group of unimodular r x r matrices acting on the lattice Z^r,
/// and hence on X = A (x) Z^r for an abelian surface A.
struct LatticeAction {
  std::string label;
  MatrixGroup group;

  std::size_t rank() const { return group.rank(); }

  static LatticeAction from_generators(std::string label, const std::vector<IntMatrix>& gens,
                                       std::size_t cap = kDefaultEnumerationCap) {
    return {std::move(label), MatrixGroup::generate(gens, cap)};
  }
  static LatticeAction from_elements(std::string label, const std::vector<IntMatrix>& elements) {
    return {std::move(label), MatrixGroup::from_elements(elements)};
  }
};

/// W acting on the coroot lattice.
inline LatticeAction weyl_action(const RootDatum& rd, std::size_t cap = kDefaultEnumerationCap) {
  return {"W(" + rd.label() + ")", enumerate_group(rd, cap)};
}

inline LatticeAction trivial_action(std::size_t r) {
  return LatticeAction::from_generators("trivial on Z^" + std::to_string(r), {IntMatrix::identity(r)});
}

/// S_n permuting the coordinates of Z^n.
inline LatticeAction symmetric_action(std::size_t n) {
  if (n == 0) throw InvalidInput("symmetric_action: n must be positive");
  std::vector<IntMatrix> gens{IntMatrix::identity(n)};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntMatrix s = IntMatrix::identity(n);
    s(i, i) = s(i + 1, i + 1) = 0;
    s(i, i + 1) = s(i + 1, i) = 1;
    gens.push_back(s);
  }
  return LatticeAction::from_generators("S_" + std::to_string(n) + " on Z^" + std::to_string(n), gens);
}

/// Signed permutations of Z^n: the wreath product S_n x| {+-1}^n.
inline LatticeAction hyperoctahedral_action(std::size_t n) {
  auto sym = symmetric_action(n).group.generators();
  IntMatrix flip = IntMatrix::identity(n);
  flip(0, 0) = -1;
  sym.push_back(flip);
  return LatticeAction::from_generators("signed permutations of Z^" + std::to_string(n), sym);
}

// ---------------------------------------------------------------------------
// Fixed loci

struct FixedLocusData {
  IntMatrix g;
  std::size_t kernel_rank = 0;
  IntMatrix kernel_basis;        // r x k, saturated
  IntVector torsion_factors;     // torsion of coker(g - 1) on the lattice
  IntVector component_group;     // the same factors, four times (Z^4 (x) T)
  BigInt component_count = 1;    // |T|^4
  std::size_t shift = 0;         // r - k
};

/// Fixed locus of g on A (x) Z^r: a disjoint union of |T|^4 translates of the
/// torus A (x) ker(g - 1), T = torsion of coker(g - 1).
inline FixedLocusData fixed_locus(const IntMatrix& g) {
  if (!g.is_square()) throw InvalidInput("fixed_locus: matrix must be square");
  const std::size_t r = g.rows();
  auto snf = smith_normal_form(g - IntMatrix::identity(r));
  FixedLocusData out;
  out.g = g;
  out.kernel_rank = r - snf.rank;
  out.kernel_basis = snf.kernel_basis();
  out.torsion_factors = snf.torsion_factors();
  for (int rep = 0; rep < 4; ++rep)
    out.component_group.insert(out.component_group.end(), out.torsion_factors.begin(), out.torsion_factors.end());
  out.component_count = boost::multiprecision::pow(BigInt(snf.torsion_order()), 4);
  out.shift = snf.rank;
  return out;
}

inline FixedLocusData fixed_locus(const LatticeAction& action, const IntMatrix& g) {
  if (!action.group.contains(g)) throw InvalidInput("fixed_locus: element is not in the group");
  return fixed_locus(g);
}

// ---------------------------------------------------------------------------
// Stringy Hodge polynomial

struct SectorContribution {
  IntMatrix representative;
  std::size_t class_size = 0;
  std::size_t centralizer_order = 0;
  std::size_t shift = 0;
  IntVector torsion_factors;
  BigradedPoly contribution;  // (xy)^shift * h(X^g / C(g))
};

struct StringyResult {
  BigradedPoly hodge;
  std::vector<SectorContribution> sectors;
};

namespace detail {

inline constexpr int64_t kTorsionEnumerationCap = 1'000'000;

/// Number of fixed points of an automorphism of T = sum_i Z/d_i given in
/// Smith coordinates by the integer matrix m (rows/cols of the torsion
/// coordinates only).
inline int64_t count_fixed_torsion(const IntMatrix& m, const IntVector& d) {
  const std::size_t s = d.size();
  int64_t total = 1;
  for (auto di : d) total = checked_mul(total, di);
  if (total > kTorsionEnumerationCap) throw CapExceeded("component group too large to enumerate");
  IntVector t(s, 0);
  int64_t fixed = 0;
  for (int64_t idx = 0; idx < total; ++idx) {
    int64_t rest = idx;
    for (std::size_t i = 0; i < s; ++i) {
      t[i] = rest % d[i];
      rest /= d[i];
    }
    bool is_fixed = true;
    for (std::size_t i = 0; i < s && is_fixed; ++i) {
      int64_t acc = 0;
      for (std::size_t j = 0; j < s; ++j) acc += m(i, j) * t[j];
      if (mod_floor(acc - t[i], d[i]) != 0) is_fixed = false;
    }
    if (is_fixed) ++fixed;
  }
  return fixed;
}

/// Q(x) Q(y) with Q = P^2, as a bigraded polynomial.
inline BigradedPoly squared_product(const IntVector& p) {
  std::vector<BigInt> q(2 * p.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) q[i + j] += BigInt(p[i]) * p[j];
  BigradedPoly out;
  for (std::size_t a = 0; a < q.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b)
      out.add_term(static_cast<int>(a), static_cast<int>(b), q[a] * q[b]);
  return out;
}

}  // namespace detail

/// Twisted sector of one conjugacy class. Components of X^g are indexed by
/// T^4; the centralizer acts on them through its action on T, and on each
/// component's cohomology through its linear part on ker(g - 1). Summing over
/// component orbits and averaging over stabilizers re-sums to
///   (xy)^s / |C(g)| * sum_{h in C(g)} |T^h|^4 det(1 + x rho(h))^2 det(1 + y rho(h))^2.
inline SectorContribution stringy_sector(const MatrixGroup& group, std::size_t class_index) {
  const auto& cls = group.conjugacy_classes().at(class_index);
  const std::size_t r = group.rank();
  const IntMatrix g = group.element(cls.representative);
  const auto snf = smith_normal_form(g - IntMatrix::identity(r));
  const std::size_t s = snf.rank;

  IntVector torsion_d;
  std::vector<std::size_t> torsion_idx;
  for (std::size_t i = 0; i < s; ++i)
    if (snf.D(i, i) > 1) {
      torsion_d.push_back(snf.D(i, i));
      torsion_idx.push_back(i);
    }

  const auto centralizer = group.centralizer(cls.representative);
  if (centralizer.size() != cls.centralizer_order) throw InternalError("centralizer order mismatch");

  // (|T^h|, det(1 + t rho(h))) -> multiplicity
  std::map<std::pair<int64_t, IntVector>, int64_t> tally;
  for (auto hi : centralizer) {
    const IntMatrix h = group.element(hi);
    const IntMatrix on_kernel = snf.V_inv * h * snf.V;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = s; j < r; ++j)
        if (on_kernel(i, j) != 0) throw InternalError("centralizer does not preserve ker(g - 1)");
    const IntVector p = det_one_plus_t(on_kernel.block(s, r, s, r));

    int64_t fixed = 1;
    if (!torsion_d.empty()) {
      const IntMatrix on_coker = snf.U * h * snf.U_inv;
      for (std::size_t i = s; i < r; ++i)
        for (auto j : torsion_idx)
          if (on_coker(i, j) != 0) throw InternalError("torsion of coker(g - 1) not preserved");
      IntMatrix m(torsion_idx.size(), torsion_idx.size());
      for (std::size_t a = 0; a < torsion_idx.size(); ++a)
        for (std::size_t b = 0; b < torsion_idx.size(); ++b) m(a, b) = on_coker(torsion_idx[a], torsion_idx[b]);
      fixed = detail::count_fixed_torsion(m, torsion_d);
    }
    ++tally[{fixed, p}];
  }

  BigradedPoly sum;
  for (const auto& [key, count] : tally) {
    BigInt weight = BigInt(count) * boost::multiprecision::pow(BigInt(key.first), 4);
    sum += BigradedPoly(weight) * detail::squared_product(key.second);
  }
  SectorContribution out;
  out.representative = g;
  out.class_size = cls.size;
  out.centralizer_order = cls.centralizer_order;
  out.shift = s;
  out.torsion_factors = snf.torsion_factors();
  out.contribution = BigradedPoly::xy_power(static_cast<int>(s)) * sum.divided_exactly(BigInt(centralizer.size()));
  return out;
}

inline StringyResult stringy_hodge_detailed(const LatticeAction& action, std::size_t cap = kDefaultStringyCap) {
  if (action.group.order() > cap)
    throw CapExceeded("stringy engine: group order " + std::to_string(action.group.order()) + " exceeds the cap " +
                      std::to_string(cap));
  StringyResult out;
  for (std::size_t c = 0; c < action.group.conjugacy_classes().size(); ++c) {
    out.sectors.push_back(stringy_sector(action.group, c));
    out.hodge += out.sectors.back().contribution;
  }
  return out;
}

inline BigradedPoly stringy_hodge(const LatticeAction& action, std::size_t cap = kDefaultStringyCap) {
  return stringy_hodge_detailed(action, cap).hodge;
}

/// Stringy Euler number as (1/|G|) sum over commuting pairs (g, h) of
/// e(X^g cap X^h). The joint fixed locus is a union of tori, so it
/// contributes only when ker(g - 1) cap ker(h - 1) = 0, and then it is a
/// finite set of |torsion coker [g - 1; h - 1]|^4 points.
inline BigInt stringy_euler_commuting_pairs(const LatticeAction& action, std::size_t cap = kDefaultStringyCap) {
  const auto& group = action.group;
  if (group.order() > cap)
    throw CapExceeded("commuting-pair sum: group order " + std::to_string(group.order()) + " exceeds the cap " +
                      std::to_string(cap));
  const std::size_t r = group.rank();
  const IntMatrix id = IntMatrix::identity(r);
  BigInt total = 0;
  for (const auto& cls : group.conjugacy_classes()) {
    const IntMatrix g_minus = group.element(cls.representative) - id;
    BigInt sector = 0;
    for (auto hi : group.centralizer(cls.representative)) {
      auto snf = smith_normal_form(g_minus.vstack(group.element(hi) - id));
      if (snf.rank < r) continue;
      sector += boost::multiprecision::pow(BigInt(snf.torsion_order()), 4);
    }
    total += sector * cls.size;
  }
  if (total % group.order() != 0) throw InternalError("commuting-pair sum is not divisible by |G|");
  return total / group.order();
}

// ---------------------------------------------------------------------------
// Closed forms and verification reports

/// Stringy Hodge polynomial of A^n / (S_n x| {+-1}^n) summed over conjugacy
/// classes indexed by pairs of partitions (alpha+, alpha-):
///   (xy)^{n - |alpha|} prod_i Sym^{alpha+_i} h(K) * Sym^{alpha-_i}(16) (xy)^{alpha-_i}.
inline BigradedPoly stringy_hodge_wreath_closed_form(int n) {
  if (n < 1) throw InvalidInput("closed form needs n >= 1");
  const auto sym_k = sym_powers(hodge_singular_kummer(), n);
  const auto sym_16 = sym_powers(hodge_two_torsion(), n);
  BigradedPoly total;
  for (int a = 0; a <= n; ++a)
    for (const auto& plus : partitions(a))
      for (const auto& minus : partitions(n - a)) {
        BigradedPoly term = BigradedPoly::xy_power(n - plus.length() - minus.length());
        for (int m : plus.mult)
          if (m > 0) term *= sym_k[static_cast<std::size_t>(m)];
        for (int m : minus.mult)
          if (m > 0) term *= sym_16[static_cast<std::size_t>(m)] * BigradedPoly::xy_power(m);
        total += term;
      }
  return total;
}

/// "h^{p,q}: a vs b" for every coefficient where the polynomials differ.
inline std::vector<std::string> coefficient_differences(const BigradedPoly& a, const BigradedPoly& b,
                                                         const std::string& name_a, const std::string& name_b) {
  std::vector<std::string> out;
  auto diff = a - b;
  for (const auto& [k, c] : diff.terms())
    out.push_back("h^{" + std::to_string(k.first) + "," + std::to_string(k.second) + "}: " + name_a + "=" +
                  a.coefficient(k.first, k.second).str() + " " + name_b + "=" + b.coefficient(k.first, k.second).str());
  return out;
}

struct SpVerification {
  int n = 0;
  std::optional<BigradedPoly> engine;             // signed permutations on Z^n
  std::optional<BigradedPoly> engine_root_datum;  // W(C_n) on its coroot lattice
  BigradedPoly closed_form;
  BigradedPoly goettsche;
  std::vector<std::string> mismatches;
  bool pass() const { return mismatches.empty(); }
};

/// Three-way check of the Sp(n) formula. The engine routes run whenever
/// |W| = 2^n n! is within `engine_cap`.
inline SpVerification verify_sp(int n, std::size_t engine_cap = kDefaultStringyCap) {
  if (n < 1) throw InvalidInput("verify_sp: n must be positive");
  SpVerification rep;
  rep.n = n;
  rep.closed_form = stringy_hodge_wreath_closed_form(n);
  rep.goettsche = goettsche(hodge_kummer_k3(), n);
  auto add = [&](const std::vector<std::string>& d) { rep.mismatches.insert(rep.mismatches.end(), d.begin(), d.end()); };
  add(coefficient_differences(rep.closed_form, rep.goettsche, "closed_form", "goettsche"));
  const BigInt order = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(n)) * factorial(n);
  if (order <= engine_cap) {
    rep.engine = stringy_hodge(hyperoctahedral_action(static_cast<std::size_t>(n)), engine_cap);
    add(coefficient_differences(*rep.engine, rep.closed_form, "engine", "closed_form"));
    if (n >= 2) {
      rep.engine_root_datum = stringy_hodge(weyl_action(build_root_datum({DynkinFamily::C, n})), engine_cap);
      add(coefficient_differences(*rep.engine_root_datum, *rep.engine, "engine_C_n", "engine"));
    }
  }
  return rep;
}

struct SuVerification {
  int n = 0;
  BigradedPoly engine;  // W(A_{n-1}) = S_n on the A_{n-1} coroot lattice
  BigInt euler_from_hodge = 0;
  BigInt euler_commuting_pairs = 0;
  std::vector<std::string> mismatches;
  bool pass() const { return mismatches.empty(); }
};

inline SuVerification verify_su(int n, std::size_t engine_cap = kDefaultStringyCap) {
  if (n < 2) throw InvalidInput("verify_su: n must be at least 2");
  SuVerification rep;
  rep.n = n;
  auto action = weyl_action(build_root_datum({DynkinFamily::A, n - 1}));
  rep.engine = stringy_hodge(action, engine_cap);
  rep.euler_from_hodge = euler_number(rep.engine);
  rep.euler_commuting_pairs = stringy_euler_commuting_pairs(action, engine_cap);
  if (rep.euler_from_hodge != rep.euler_commuting_pairs)
    rep.mismatches.push_back("euler: hodge=" + rep.euler_from_hodge.str() +
                             " commuting_pairs=" + rep.euler_commuting_pairs.str());
  if (n == 2) {
    auto d = coefficient_differences(rep.engine, hodge_kummer_k3(), "engine", "kummer_k3");
    rep.mismatches.insert(rep.mismatches.end(), d.begin(), d.end());
  }
  if (!rep.engine.is_hodge_symmetric()) rep.mismatches.push_back("engine output is not (p,q)-symmetric");
  if (!rep.engine.is_centrally_symmetric(n - 1)) rep.mismatches.push_back("engine output is not centrally symmetric");
  return rep;
}

struct UnVerification {
  int n = 0;
  BigradedPoly engine;     // S_n on Z^n
  BigradedPoly goettsche;  // Hilb^n of A
  std::vector<std::string> mismatches;
  bool pass() const { return mismatches.empty(); }
};

inline UnVerification verify_un(int n, std::size_t engine_cap = kDefaultStringyCap) {
  if (n < 1) throw InvalidInput("verify_un: n must be positive");
  UnVerification rep;
  rep.n = n;
  rep.engine = stringy_hodge(symmetric_action(static_cast<std::size_t>(n)), engine_cap);
  rep.goettsche = goettsche(hodge_abelian_surface(), n);
  rep.mismatches = coefficient_differences(rep.engine, rep.goettsche, "engine", "goettsche");
  return rep;
}

}  // namespace abelmod
