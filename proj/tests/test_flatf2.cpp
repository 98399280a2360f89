#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "abelmod/flatf2.hpp"

using namespace abelmod;

namespace {

F2Class random_class(std::mt19937_64& rng, std::size_t n) {
  std::vector<uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<uint8_t>(rng() & 1);
  return F2Class(bits);
}

// Elementary symmetric e_k of the classes, expanded term by term.
ExteriorF2 elementary_symmetric(const std::vector<F2Class>& cs, std::size_t k) {
  const std::size_t n = cs.front().size();
  ExteriorF2 total(n);
  std::vector<bool> pick(cs.size(), false);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(k), pick.end(), true);
  do {
    ExteriorF2 term = ExteriorF2::one(n);
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (pick[i]) term = term * ExteriorF2::from_class(cs[i]);
    total = total + term;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return total;
}

// The subgroup generated by gens, one entry per element.
std::vector<F2Class> span(const std::vector<F2Class>& gens, std::size_t n) {
  std::set<F2Class> out{F2Class::zero(n)};
  for (const auto& g : gens) {
    std::set<F2Class> next = out;
    for (const auto& x : out) next.insert(x + g);
    out = next;
  }
  return {out.begin(), out.end()};
}

std::size_t log2_size(std::size_t s) {
  std::size_t r = 0;
  while ((std::size_t{1} << r) < s) ++r;
  return r;
}

}  // namespace

TEST(F2Class, ParseAndArithmetic) {
  auto a = F2Class::parse("101"), b = F2Class::parse("011");
  EXPECT_EQ((a + b).to_string(), "110");
  EXPECT_TRUE((a + a).is_zero());
  EXPECT_THROW(F2Class::parse("12"), InvalidInput);
  EXPECT_THROW(a + F2Class::parse("1"), InvalidInput);
  EXPECT_EQ(all_f2_classes(3).size(), 8u);
}

TEST(LineBundleCohomology, KunnethValues) {
  EXPECT_EQ(line_bundle_cohomology(3, 1, F2Class::zero(3)), 3u);
  EXPECT_EQ(line_bundle_cohomology(3, 2, F2Class::zero(3)), 3u);
  EXPECT_EQ(line_bundle_cohomology(4, 2, F2Class::zero(4)), 6u);
  for (const auto& a : all_f2_classes(3)) {
    if (a.is_zero()) continue;
    for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(line_bundle_cohomology(3, k, a), 0u);
  }
  EXPECT_THROW(line_bundle_cohomology(3, 4, F2Class::zero(3)), InvalidInput);
}

TEST(TotalClass, SmallCases) {
  auto a = F2Class::parse("110");
  EXPECT_EQ(total_sw_class({a}), ExteriorF2::one(3) + ExteriorF2::from_class(a));
  EXPECT_EQ(total_sw_class({a, a}), ExteriorF2::one(3));
  auto w = total_sw_class({F2Class::parse("100"), F2Class::parse("010")});
  EXPECT_EQ(w.to_string(), "1 + e1 + e2 + e1e2");
}

TEST(TotalClass, SpinEightTriple) {
  auto rep = spin8_triple();
  EXPECT_TRUE(rep.w1.is_zero());
  EXPECT_TRUE(rep.w2.is_zero());
  EXPECT_EQ(rep.deformation_dim, 0u);
  EXPECT_TRUE(rep.spin());
  EXPECT_TRUE(rep.rigid());
}

TEST(TotalClass, DegreePartsAreElementarySymmetric) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 4, len = 1 + trial % 6;
    std::vector<F2Class> cs;
    for (std::size_t i = 0; i < len; ++i) cs.push_back(random_class(rng, n));
    auto w = total_sw_class(cs);
    for (std::size_t k = 1; k <= std::min(len, n); ++k) EXPECT_EQ(w.degree_part(k), elementary_symmetric(cs, k));
  }
}

TEST(TotalClass, WhitneyMultiplicativity) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 5;
    std::vector<F2Class> a, b;
    for (int i = 0; i < 1 + trial % 4; ++i) a.push_back(random_class(rng, n));
    for (int i = 0; i < 1 + trial % 3; ++i) b.push_back(random_class(rng, n));
    auto ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    EXPECT_EQ(total_sw_class(ab), total_sw_class(a) * total_sw_class(b));
  }
}

TEST(TotalClass, SecondClassOfSubgroupVanishesUnlessRankTwo) {
  // exhaustive over all subgroups of (Z/2)^n, n <= 4, each listed once
  for (std::size_t n = 1; n <= 4; ++n) {
    auto classes = all_f2_classes(n);
    std::set<std::vector<F2Class>> seen;
    for (uint32_t mask = 0; mask < (1u << classes.size()); ++mask) {
      if (std::popcount(mask) > 4) continue;
      std::vector<F2Class> gens;
      for (std::size_t i = 0; i < classes.size(); ++i)
        if (mask >> i & 1) gens.push_back(classes[i]);
      auto group = span(gens, n);
      if (!seen.insert(group).second) continue;
      bool w2_zero = total_sw_class(group).degree_part(2).is_zero();
      EXPECT_EQ(w2_zero, log2_size(group.size()) != 2) << n << " " << group.size();
    }
  }
}

TEST(Deformations, PairwiseSums) {
  auto z = F2Class::zero(3), a = F2Class::parse("001");
  EXPECT_EQ(so_bundle_deformation_dim({z, z}), 3u);
  EXPECT_EQ(so_bundle_deformation_dim({z, a}), 0u);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 4;
    std::vector<F2Class> cs;
    for (int i = 0; i < 2 + trial % 5; ++i) cs.push_back(random_class(rng, n));
    std::set<F2Class> distinct(cs.begin(), cs.end());
    EXPECT_EQ(so_bundle_deformation_dim(cs) == 0, distinct.size() == cs.size());
  }
}
