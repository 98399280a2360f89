#include <gtest/gtest.h>

#include "abelmod/stringy.hpp"
#include "oracles.hpp"
#include "stringy_oracle.hpp"

using namespace abelmod;

namespace {

BigradedPoly one_plus(int p, int q) { return BigradedPoly(1) + BigradedPoly::monomial(p, q); }

/// Signed permutation with positive cycles of the lengths in `plus` and
/// negative cycles (one sign flip each) of the lengths in `minus`.
IntMatrix signed_cycle_element(const std::vector<int>& plus, const std::vector<int>& minus) {
  int n = 0;
  for (int l : plus) n += l;
  for (int l : minus) n += l;
  IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  int start = 0;
  auto cycle = [&](int len, int sign) {
    for (int i = 0; i < len; ++i) {
      int from = start + i, to = start + (i + 1) % len;
      m(static_cast<std::size_t>(to), static_cast<std::size_t>(from)) = (i == len - 1) ? sign : 1;
    }
    start += len;
  };
  for (int l : plus) cycle(l, 1);
  for (int l : minus) cycle(l, -1);
  return m;
}

std::vector<LatticeAction> small_actions() {
  std::vector<LatticeAction> out;
  out.push_back(LatticeAction::from_elements("+-1 on Z", {IntMatrix{{1}}, IntMatrix{{-1}}}));
  out.push_back(trivial_action(2));
  out.push_back(symmetric_action(2));
  out.push_back(symmetric_action(3));
  out.push_back(hyperoctahedral_action(2));
  out.push_back(hyperoctahedral_action(3));
  for (const char* label : {"A1", "A2", "A3", "B2", "G2"}) out.push_back(weyl_action(build_root_datum(label)));
  return out;
}

}  // namespace

TEST(FixedLocus, IdentityAndMinusOne) {
  auto id = fixed_locus(IntMatrix::identity(3));
  EXPECT_EQ(id.kernel_rank, 3u);
  EXPECT_EQ(id.shift, 0u);
  EXPECT_TRUE(id.torsion_factors.empty());
  EXPECT_EQ(id.component_count, 1);

  auto minus = fixed_locus(IntMatrix{{-1}});
  EXPECT_EQ(minus.kernel_rank, 0u);
  EXPECT_EQ(minus.shift, 1u);
  EXPECT_EQ(minus.component_group, (IntVector{2, 2, 2, 2}));
  EXPECT_EQ(minus.component_count, 16);
}

TEST(FixedLocus, NegativeCyclesOfTheWreathGroup) {
  for (int i = 1; i <= 5; ++i) {
    auto f = fixed_locus(signed_cycle_element({}, {i}));
    EXPECT_EQ(f.kernel_rank, 0u);
    EXPECT_EQ(f.shift, static_cast<std::size_t>(i));
    EXPECT_EQ(f.component_group, (IntVector{2, 2, 2, 2}));
  }
  // positive i-cycle: kernel rank 1, connected
  auto pos = fixed_locus(signed_cycle_element({3}, {}));
  EXPECT_EQ(pos.kernel_rank, 1u);
  EXPECT_EQ(pos.shift, 2u);
  EXPECT_TRUE(pos.torsion_factors.empty());
}

TEST(FixedLocus, WreathShiftIsNMinusPositiveCycles) {
  const int n = 4;
  for (int a = 0; a <= n; ++a)
    for (const auto& plus : partitions(a))
      for (const auto& minus : partitions(n - a)) {
        std::vector<int> lp, lm;
        for (std::size_t i = 0; i < plus.mult.size(); ++i) lp.insert(lp.end(), plus.mult[i], int(i + 1));
        for (std::size_t i = 0; i < minus.mult.size(); ++i) lm.insert(lm.end(), minus.mult[i], int(i + 1));
        auto f = fixed_locus(signed_cycle_element(lp, lm));
        EXPECT_EQ(f.shift, static_cast<std::size_t>(n - plus.length()));
        EXPECT_EQ(f.component_count, boost::multiprecision::pow(BigInt(16), static_cast<unsigned>(minus.length())));
      }
}

TEST(FixedLocus, RejectsForeignElements) {
  auto act = symmetric_action(2);
  EXPECT_THROW(fixed_locus(act, IntMatrix{{-1, 0}, {0, 1}}), InvalidInput);
}

TEST(StringyHodge, KummerK3FromMinusOne) {
  auto pm = LatticeAction::from_elements("+-1 on Z", {IntMatrix{{1}}, IntMatrix{{-1}}});
  EXPECT_EQ(stringy_hodge(pm), hodge_kummer_k3());
  EXPECT_EQ(stringy_hodge(weyl_action(build_root_datum("A1"))), hodge_kummer_k3());
}

TEST(StringyHodge, TrivialGroupGivesTorusPolynomial) {
  for (std::size_t r = 1; r <= 3; ++r)
    EXPECT_EQ(stringy_hodge(trivial_action(r)), pow(one_plus(1, 0) * one_plus(0, 1), 2 * static_cast<int>(r)));
}

TEST(StringyHodge, AgreesWithLiteralOrbitEnumeration) {
  for (const auto& act : small_actions()) {
    auto fast = stringy_hodge(act);
    auto literal = oracle::stringy_hodge_by_orbits(act.group.elements());
    EXPECT_EQ(fast, literal) << act.label;
  }
}

TEST(StringyHodge, StructuralProperties) {
  auto actions = small_actions();
  for (const char* label : {"B3", "C3", "D4", "A4"}) actions.push_back(weyl_action(build_root_datum(label)));
  for (const auto& act : actions) {
    auto res = stringy_hodge_detailed(act);
    EXPECT_TRUE(res.hodge.is_hodge_symmetric()) << act.label;
    EXPECT_TRUE(res.hodge.is_centrally_symmetric(static_cast<int>(act.rank()))) << act.label;
    EXPECT_TRUE(res.hodge.has_nonnegative_coefficients()) << act.label;
    EXPECT_EQ(res.hodge.coefficient(0, 0), 1) << act.label;
    std::size_t total = 0;
    for (const auto& s : res.sectors) total += s.class_size;
    EXPECT_EQ(total, act.group.order());
    EXPECT_EQ(euler_number(res.hodge), stringy_euler_commuting_pairs(act)) << act.label;
  }
}

TEST(StringyHodge, RespectsCap) {
  EXPECT_THROW(stringy_hodge(hyperoctahedral_action(3), 10), CapExceeded);
  EXPECT_THROW(stringy_euler_commuting_pairs(hyperoctahedral_action(3), 10), CapExceeded);
}

TEST(StringyEuler, CommutingPairValues) {
  EXPECT_EQ(stringy_euler_commuting_pairs(trivial_action(1)), 0);
  EXPECT_EQ(stringy_euler_commuting_pairs(trivial_action(3)), 0);
  EXPECT_EQ(stringy_euler_commuting_pairs(LatticeAction::from_elements("+-1", {IntMatrix{{1}}, IntMatrix{{-1}}})), 24);
  // n^3 sigma(n) for the generalized Kummer varieties
  EXPECT_EQ(stringy_euler_commuting_pairs(weyl_action(build_root_datum("A2"))), 108);
  EXPECT_EQ(stringy_euler_commuting_pairs(weyl_action(build_root_datum("A3"))), 448);
  EXPECT_EQ(stringy_euler_commuting_pairs(weyl_action(build_root_datum("A4"))), 125 * 6);
}

TEST(WreathClosedForm, SmallN) {
  EXPECT_EQ(stringy_hodge_wreath_closed_form(1), hodge_kummer_k3());
  EXPECT_EQ(stringy_hodge_wreath_closed_form(2), goettsche(hodge_kummer_k3(), 2));
  EXPECT_EQ(stringy_hodge_wreath_closed_form(3), stringy_hodge(hyperoctahedral_action(3)));
  EXPECT_THROW(stringy_hodge_wreath_closed_form(0), InvalidInput);
}

TEST(WreathClosedForm, MatchesHilbertSchemeOfK3UpToEight) {
  auto euler = oracle::euler_product_series(24, 8);
  for (int n = 1; n <= 8; ++n) {
    auto cf = stringy_hodge_wreath_closed_form(n);
    EXPECT_EQ(cf, goettsche(hodge_kummer_k3(), n)) << n;
    EXPECT_EQ(euler_number(cf), euler[n]);
  }
}

TEST(Verification, SpThreeWay) {
  for (int n = 1; n <= 3; ++n) {
    auto rep = verify_sp(n);
    ASSERT_TRUE(rep.engine.has_value());
    EXPECT_TRUE(rep.pass()) << n << ": " << (rep.mismatches.empty() ? "" : rep.mismatches.front());
    if (n >= 2) {
      EXPECT_TRUE(rep.engine_root_datum.has_value());
    }
  }
  auto big = verify_sp(8);
  EXPECT_FALSE(big.engine.has_value());
  EXPECT_TRUE(big.pass());
}

TEST(Verification, SuCases) {
  auto two = verify_su(2);
  EXPECT_TRUE(two.pass());
  EXPECT_EQ(two.engine, hodge_kummer_k3());
  EXPECT_EQ(verify_su(3).euler_commuting_pairs, 108);
  auto four = verify_su(4);
  EXPECT_TRUE(four.pass());
  EXPECT_EQ(four.euler_from_hodge, 448);
  EXPECT_THROW(verify_su(1), InvalidInput);
}

TEST(Verification, UnMatchesHilbertSchemeOfA) {
  for (int n = 1; n <= 4; ++n) {
    auto rep = verify_un(n);
    EXPECT_TRUE(rep.pass()) << n;
  }
}

TEST(Verification, DifferencesAreReported) {
  auto d = coefficient_differences(hodge_kummer_k3(), hodge_singular_kummer(), "a", "b");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0], "h^{1,1}: a=20 b=4");
}
