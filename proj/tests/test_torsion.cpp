#include <gtest/gtest.h>

#include <random>

#include "abelmod/torsion.hpp"

using namespace abelmod;

namespace {

TorsionPoint g2_point() {
  auto t = standard_two_torsion_triple();
  return point_from_ambient(build_root_datum("G2"), t);
}

std::vector<IntVector> doubled_basis(std::size_t n) {
  std::vector<IntVector> v;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 2;
    v.push_back(e);
  }
  return v;
}

TorsionPoint spin7_point() {
  return point_from_lattice_combination(build_root_datum("B3"), doubled_basis(3), standard_square_roots());
}

TorsionPoint spin8_point() {
  auto roots = standard_square_roots();
  std::vector<std::vector<Rational>> coeffs{{0, 0, 0, 0}, roots[0], roots[1], roots[2]};
  return point_from_lattice_combination(build_root_datum("D4"), doubled_basis(4), coeffs);
}

TorsionPoint random_point(std::mt19937_64& rng, std::size_t r, int64_t den) {
  std::uniform_int_distribution<int64_t> d(0, den - 1);
  IntMatrix m(r, 4);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < 4; ++c) m(i, c) = d(rng);
  return TorsionPoint(m, den);
}

}  // namespace

TEST(TorsionPoint, CanonicalForm) {
  auto p = TorsionPoint::parse({{"3/2", "-1/4", "0", "2/4"}});
  EXPECT_EQ(p.denominator(), 4);
  EXPECT_EQ(p.to_strings()[0], (std::vector<std::string>{"1/2", "3/4", "0", "1/2"}));
  auto q = TorsionPoint::parse({{"1/2", "0", "1", "-1/2"}});
  EXPECT_EQ(q.denominator(), 2);
  EXPECT_TRUE(q.scaled(2).is_zero());
  EXPECT_EQ(p + p, p.scaled(2));
  EXPECT_THROW(TorsionPoint::parse({{"1/2", "0"}}), InvalidInput);
  EXPECT_THROW(TorsionPoint::parse({{"x", "0", "0", "0"}}), InvalidInput);
}

TEST(BasisChange, AmbientAndLatticeCombinations) {
  auto g2 = build_root_datum("G2");
  // (1/2, 0, 0) does not sum to zero in A; (1/2, 1/2, 0) does
  EXPECT_THROW(point_from_ambient(g2, {{Rational(1, 2), 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}), InvalidInput);
  EXPECT_NO_THROW(point_from_ambient(g2, {{Rational(1, 2), 0, 0, 0}, {Rational(1, 2), 0, 0, 0}, {0, 0, 0, 0}}));
  // B_3 coroots span a non-saturated sublattice of Z^3
  EXPECT_THROW(point_from_ambient(build_root_datum("B3"), standard_two_torsion_triple()), InvalidInput);
  // e_1 is not in the D_4 coroot lattice
  EXPECT_THROW(point_from_lattice_combination(build_root_datum("D4"), {{1, 0, 0, 0}}, {{Rational(1, 2), 0, 0, 0}}),
               InvalidInput);
  // the square-root points are 2-torsion intrinsically: -p = p
  EXPECT_EQ(spin7_point().denominator(), 2);
  EXPECT_EQ(spin8_point().denominator(), 2);
  EXPECT_EQ(g2_point().denominator(), 2);
}

TEST(Stabilizer, OriginIsFixedByEverything) {
  auto rd = build_root_datum("G2");
  auto rep = stabilizer(rd, TorsionPoint::zero(2));
  EXPECT_EQ(rep.order, 12);
  EXPECT_TRUE(rep.full_group);
  EXPECT_EQ(rep.orbit_size, 1u);
  EXPECT_EQ(rep.classification, PointClass::other);
  EXPECT_EQ(rep.local_model_label, "C^4/W(G_2)");

  auto a1 = stabilizer(build_root_datum("A1"), TorsionPoint::zero(1));
  EXPECT_EQ(a1.classification, PointClass::minus_one_local_model);
  EXPECT_EQ(a1.crepant_label, "crepant resolution exists (A_1 surface singularity)");
}

TEST(Stabilizer, BasicExamplesHaveMinusOneStabilizer) {
  struct Case {
    const char* label;
    TorsionPoint p;
    const char* model;
  };
  for (const auto& c : {Case{"G2", g2_point(), "C^4/+-1"}, Case{"B3", spin7_point(), "C^6/+-1"},
                        Case{"D4", spin8_point(), "C^8/+-1"}}) {
    auto rep = stabilizer(build_root_datum(c.label), c.p);
    EXPECT_EQ(rep.order, 2) << c.label;
    EXPECT_EQ(rep.classification, PointClass::minus_one_local_model) << c.label;
    EXPECT_EQ(rep.local_model_label, c.model);
    EXPECT_EQ(rep.crepant_label, "no crepant resolution");
  }
}

TEST(Stabilizer, RepeatedTorsionPointsEnlargeTheStabilizer) {
  // (tau, tau, 0): the transposition of the first two entries also fixes it
  auto h = Rational(1, 2);
  auto p = point_from_ambient(build_root_datum("G2"), {{h, 0, 0, 0}, {h, 0, 0, 0}, {0, 0, 0, 0}});
  auto rep = stabilizer(build_root_datum("G2"), p);
  EXPECT_EQ(rep.order, 4);
  EXPECT_EQ(rep.classification, PointClass::other);
}

TEST(Stabilizer, OrbitStabilizerAndConjugation) {
  std::mt19937_64 rng(99);
  for (const char* label : {"G2", "B3", "D4", "A3"}) {
    auto rd = build_root_datum(label);
    auto w = enumerate_group(rd);
    for (int trial = 0; trial < 6; ++trial) {
      auto p = random_point(rng, rd.rank(), trial % 2 ? 2 : 4);
      auto rep = stabilizer(rd, p);
      EXPECT_EQ(BigInt(rep.orbit_size) * rep.order, rd.weyl_order());
      // the Schreier generators generate exactly the stabilizer
      std::size_t direct = 0;
      for (const auto& g : w.elements()) direct += p.transformed(g) == p;
      EXPECT_EQ(BigInt(direct), rep.order) << label;
      if (!rep.generators.empty()) {
        EXPECT_EQ(BigInt(MatrixGroup::generate(rep.generators).order()), rep.order);
      }
      // stab(w p) = w stab(p) w^-1
      auto g = w.element(static_cast<std::size_t>(trial * 7) % w.order());
      auto moved = stabilizer(rd, p.transformed(g));
      EXPECT_EQ(moved.order, rep.order);
      IntMatrix g_inv = unimodular_inverse(g);
      for (const auto& s : rep.generators) EXPECT_EQ(p.transformed(g).transformed(g * s * g_inv), p.transformed(g));
    }
  }
}

TEST(MinusOneScan, NonemptyForBasicExamples) {
  for (auto [label, bound, model] : {std::tuple{"G2", 2, "C^4/+-1"}, std::tuple{"B3", 4, "C^6/+-1"},
                                     std::tuple{"D4", 4, "C^8/+-1"}}) {
    auto rd = build_root_datum(label);
    auto scan = find_minus_one_points(rd, bound);
    EXPECT_FALSE(scan.partial);
    EXPECT_FALSE(scan.representatives.empty()) << label;
    EXPECT_EQ(scan.local_model_label, model);
    for (const auto& p : scan.representatives) {
      auto rep = stabilizer(rd, p);
      EXPECT_EQ(rep.classification, PointClass::minus_one_local_model) << label;
    }
  }
}

TEST(MinusOneScan, MatchesBruteForceStabilizers) {
  // every point of denominator <= 4 in G_2: count orbits with stabilizer {+-1}
  auto rd = build_root_datum("G2");
  std::size_t points = 0;
  Rational orbit_count = 0;
  for (uint32_t code = 0; code < (1u << 16); ++code) {
    IntMatrix m(2, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t c = 0; c < 4; ++c) m(i, c) = (code >> (2 * (4 * i + c))) & 3;
    TorsionPoint p(m, 4);
    auto rep = stabilizer(rd, p);
    if (rep.classification == PointClass::minus_one_local_model) {
      ++points;
      orbit_count += Rational(1, rep.orbit_size);
      EXPECT_EQ(p.denominator(), 2);
    }
  }
  auto scan = find_minus_one_points(rd, 4);
  EXPECT_EQ(orbit_count, Rational(scan.representatives.size()));
  std::size_t scanned_points = 0;
  for (auto s : scan.orbit_sizes) scanned_points += s;
  EXPECT_EQ(points, scanned_points);
}

TEST(MinusOneScan, EdgeCases) {
  auto a1 = find_minus_one_points(build_root_datum("A1"), 2);
  EXPECT_EQ(a1.representatives.size(), 16u);
  EXPECT_EQ(a1.crepant_label, "crepant resolution exists (A_1 surface singularity)");
  EXPECT_TRUE(find_minus_one_points(build_root_datum("A2"), 4).representatives.empty());
  EXPECT_TRUE(find_minus_one_points(build_root_datum("G2"), 1).representatives.empty());
  auto big = find_minus_one_points(build_root_datum("E7"), 2);
  EXPECT_TRUE(big.partial);
  EXPECT_THROW(find_minus_one_points(build_root_datum("G2"), 0), InvalidInput);
}

TEST(Propagation, OrthogonalComplement) {
  auto e = embed_diagram("B3", "F4", {0, 1, 2});
  auto n = orthogonal_complement(e);
  EXPECT_EQ(n.cols(), 1u);
  EXPECT_TRUE((e.coroot_map.transpose() * e.ambient.gram * n).is_zero());
  EXPECT_TRUE(has_torsion_free_cokernel(n));
}

TEST(Propagation, RegressionEmbeddings) {
  struct Case {
    const char* sub;
    const char* amb;
    std::vector<std::size_t> nodes;
    TorsionPoint p;
  };
  for (const auto& c : {Case{"B3", "F4", {0, 1, 2}, spin7_point()}, Case{"D4", "D5", {1, 2, 3, 4}, spin8_point()},
                        Case{"D4", "E6", {2, 3, 4, 1}, spin8_point()}}) {
    auto e = embed_diagram(c.sub, c.amb, c.nodes);
    auto res = propagate(e, c.p, 5, 2026);
    EXPECT_TRUE(res.success()) << c.sub << " -> " << c.amb;
    EXPECT_EQ(res.stabilizer.order, 2);
    EXPECT_EQ(res.stabilizer.classification, PointClass::other);  // -1 of W' does not fix p'
    EXPECT_EQ(res.sub_stabilizer.classification, PointClass::minus_one_local_model);
    EXPECT_EQ(res.local_model_label,
              "(C^" + std::to_string(2 * e.sub.rank()) + "/+-1) x C^" +
                  std::to_string(2 * (e.ambient.rank() - e.sub.rank())));
  }
}

TEST(Propagation, RankOneSubcase) {
  auto e = embed_diagram("A1", "A2", {0});
  auto p = TorsionPoint::parse({{"1/2", "0", "0", "0"}});
  auto res = propagate(e, p, 5, 7);
  EXPECT_TRUE(res.success());
  EXPECT_EQ(res.stabilizer.order, 2);
}

TEST(Propagation, IsDeterministicForASeed) {
  auto e = embed_diagram("B3", "F4", {0, 1, 2});
  auto a = propagate(e, spin7_point(), 5, 42);
  auto b = propagate(e, spin7_point(), 5, 42);
  EXPECT_EQ(a.point, b.point);
  EXPECT_EQ(a.attempts, b.attempts);
}
