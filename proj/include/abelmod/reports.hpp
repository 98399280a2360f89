#pragma once

// Report builders behind the command-line subcommands. Each returns a Report
// holding a JSON payload, a flat table for CSV/text output, and the list of
// failed checks; a report passes iff that list is empty. Reports contain no
// timestamps, so equal inputs and seeds give byte-identical output.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "abelmod/flatf2.hpp"
#include "abelmod/hilbmatrix.hpp"
#include "abelmod/hodge_poly.hpp"
#include "abelmod/json_io.hpp"
#include "abelmod/rootdata.hpp"
#include "abelmod/stringy.hpp"
#include "abelmod/torsion.hpp"

namespace abelmod {

enum class OutputFormat { json, csv, text };

struct RunConfig {
  std::size_t group_order_cap = kDefaultEnumerationCap;
  std::size_t stringy_cap = kDefaultStringyCap;
  int64_t denominator_bound = 4;
  uint64_t seed = 1;
  OutputFormat format = OutputFormat::text;

  void validate() const {
    if (group_order_cap == 0 || stringy_cap == 0) throw InvalidInput("caps must be positive");
    if (denominator_bound < 1) throw InvalidInput("denominator bound must be positive");
  }
};

struct Report {
  std::string command;
  Json parameters = Json::object();
  Json result = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;  // free text for the text format (diamonds, matrices)
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

// ---------------------------------------------------------------------------
// Rendering

inline Json report_envelope(const Report& r, const RunConfig& cfg) {
  return Json{{"command", r.command},
              {"seed", cfg.seed},
              {"config",
               {{"group_order_cap", cfg.group_order_cap},
                {"stringy_cap", cfg.stringy_cap},
                {"denominator_bound", cfg.denominator_bound}}},
              {"parameters", r.parameters},
              {"pass", r.pass()},
              {"failures", r.failures},
              {"result", r.result}};
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string render(const Report& r, const RunConfig& cfg) {
  std::ostringstream os;
  switch (cfg.format) {
    case OutputFormat::json: os << report_envelope(r, cfg).dump(2) << "\n"; break;
    case OutputFormat::csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
        os << "\n";
      };
      line(r.columns);
      for (const auto& row : r.rows) line(row);
      break;
    }
    case OutputFormat::text: {
      os << r.command << ": " << (r.pass() ? "pass" : "FAIL") << " (seed " << cfg.seed << ")\n";
      std::vector<std::size_t> width(r.columns.size(), 0);
      for (std::size_t i = 0; i < r.columns.size(); ++i) width[i] = r.columns[i].size();
      for (const auto& row : r.rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          std::string cell = cells[i];
          if (i + 1 < cells.size()) cell.resize(width[i], ' ');
          s += (i ? "  " : "") + cell;
        }
        os << s << "\n";
      };
      if (!r.columns.empty()) {
        line(r.columns);
        for (const auto& row : r.rows) line(row);
      }
      for (const auto& n : r.notes) os << n << (n.empty() || n.back() != '\n' ? "\n" : "");
      for (const auto& f : r.failures) os << "failure: " << f << "\n";
      break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Shared helpers

inline std::string join(const IntVector& v, const std::string& sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

inline std::string tuple_text(const IntVector& v) { return "(" + join(v) + ")"; }

inline std::string point_text(const TorsionPoint& p) {
  std::string s;
  for (const auto& row : p.to_strings()) {
    s += s.empty() ? "[" : " [";
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + row[i];
    s += "]";
  }
  return s;
}

/// Coefficients of prod_{m>=1} (1 - q^m)^(-e) up to q^n_max.
inline std::vector<BigInt> euler_product_coefficients(const BigInt& e, int n_max) {
  std::vector<BigInt> series(static_cast<std::size_t>(n_max) + 1, 0);
  series[0] = 1;
  for (int m = 1; m <= n_max; ++m) {
    // (1 - x)^(-e) = sum_k binom(e + k - 1, k) x^k, x = q^m
    std::vector<BigInt> factor(series.size(), 0);
    BigInt binom = 1;
    for (int k = 0; k * m <= n_max; ++k) {
      if (k > 0) binom = binom * (e + k - 1) / k;
      factor[static_cast<std::size_t>(k * m)] = binom;
    }
    std::vector<BigInt> next(series.size(), 0);
    for (std::size_t i = 0; i < series.size(); ++i)
      if (series[i] != 0)
        for (std::size_t j = 0; i + j < series.size(); ++j) next[i + j] += series[i] * factor[j];
    series = std::move(next);
  }
  return series;
}

// ---------------------------------------------------------------------------
// table1 and classify

struct WeightRow {
  std::string group;
  DynkinType type;
  IntVector expected;
};

/// The nine rows of the highest-coroot weight table, classical rows at the
/// given n (SU(n), Sp(n), Spin(2n), Spin(2n+1)); n >= 4.
inline std::vector<WeightRow> weight_table_rows(int n) {
  if (n < 4) throw InvalidInput("table1: n must be at least 4 (Spin(2n) needs D_n, n >= 4)");
  auto pattern = [](int len, int ones) {
    IntVector v(static_cast<std::size_t>(len), 2);
    std::fill(v.begin(), v.begin() + std::min(ones, len), 1);
    return v;
  };
  const std::string ns = std::to_string(n);
  return {
      {"SU(" + ns + ")", {DynkinFamily::A, n - 1}, IntVector(static_cast<std::size_t>(n - 1), 1)},
      {"Sp(" + ns + ")", {DynkinFamily::C, n}, IntVector(static_cast<std::size_t>(n), 1)},
      {"Spin(" + std::to_string(2 * n) + ")", {DynkinFamily::D, n}, pattern(n, 3)},
      {"Spin(" + std::to_string(2 * n + 1) + ")", {DynkinFamily::B, n}, pattern(n, 2)},
      {"G2", {DynkinFamily::G, 2}, {1, 2}},
      {"F4", {DynkinFamily::F, 4}, {1, 2, 2, 3}},
      {"E6", {DynkinFamily::E, 6}, {1, 1, 2, 2, 2, 3}},
      {"E7", {DynkinFamily::E, 7}, {1, 2, 2, 2, 3, 3, 4}},
      {"E8", {DynkinFamily::E, 8}, {2, 2, 3, 3, 4, 4, 5, 6}},
  };
}

inline std::string weighted_projective_space(const IntVector& g) { return "P(1," + join(g) + ")"; }

inline Report table1_report(int n) {
  Report r;
  r.command = "table1";
  r.parameters = {{"n", n}};
  r.columns = {"group", "type", "expected", "computed", "space", "match"};
  Json rows = Json::array();
  for (const auto& row : weight_table_rows(n)) {
    auto computed = highest_coroot_coefficients(build_root_datum(row.type));
    bool match = computed == row.expected;
    r.check(match, row.group + ": expected " + tuple_text(row.expected) + " computed " + tuple_text(computed));
    rows.push_back({{"group", row.group},
                    {"type", row.type.label()},
                    {"expected", to_json(row.expected)},
                    {"computed", to_json(computed)},
                    {"weighted_projective_space", weighted_projective_space(computed)},
                    {"match", match}});
    r.rows.push_back({row.group, row.type.label(), tuple_text(row.expected), tuple_text(computed),
                      weighted_projective_space(computed), match ? "yes" : "no"});
  }
  r.result = {{"rows", rows}};
  return r;
}

inline Json to_json(const RootDatum& rd) {
  Json gens = Json::array();
  for (const auto& g : rd.weyl_generators) gens.push_back(to_json(g));
  return Json{{"type", rd.label()},
              {"rank", rd.rank()},
              {"cartan", to_json(rd.cartan)},
              {"simple_coroots", to_json(rd.simple_coroots)},
              {"weyl_generators", gens}};
}

inline Report classify_report(const DynkinType& type, const RunConfig& cfg) {
  auto rd = build_root_datum(type);
  Report r;
  r.command = "classify";
  r.parameters = {{"type", type.label()}};
  auto g = highest_coroot_coefficients(rd);
  auto verdict = crepant_classification(type);
  bool minus_one = weyl_group_contains_minus_one(type);
  r.result = {{"group", group_name(type)},
              {"root_datum", to_json(rd)},
              {"weyl_order", rd.weyl_order().str()},
              {"weyl_contains_minus_one", minus_one},
              {"highest_coroot_bourbaki", to_json(highest_coroot_bourbaki(rd))},
              {"highest_coroot_sorted", to_json(g)},
              {"moduli_on_elliptic_curve", weighted_projective_space(g)},
              {"crepant_resolution", to_string(verdict)}};
  if (rd.weyl_order() <= BigInt(cfg.stringy_cap)) {
    auto w = enumerate_group(rd, cfg.group_order_cap);
    r.result["conjugacy_classes"] = w.conjugacy_classes().size();
  }
  r.columns = {"field", "value"};
  r.rows = {{"group", group_name(type)},
            {"type", type.label()},
            {"weyl_order", rd.weyl_order().str()},
            {"weyl_contains_minus_one", minus_one ? "yes" : "no"},
            {"highest_coroot", tuple_text(g)},
            {"moduli_on_elliptic_curve", weighted_projective_space(g)},
            {"crepant_resolution", to_string(verdict)}};
  return r;
}

// ---------------------------------------------------------------------------
// Stringy Hodge polynomials

inline Json hodge_block(const BigradedPoly& h) {
  Json j = to_json(h);
  j["euler"] = euler_number(h).str();
  j["signature"] = signature(h).str();
  return j;
}

/// Engine run with structural checks: integrality is enforced by the engine,
/// (p,q)-symmetry, central symmetry about (r,r), and the Euler number against
/// the commuting-pairs count.
inline Report stringy_report(const LatticeAction& action, const RunConfig& cfg) {
  Report r;
  r.command = "stringy";
  r.parameters = {{"action", action.label}, {"rank", action.rank()}, {"group_order", action.group.order()}};
  auto res = stringy_hodge_detailed(action, cfg.stringy_cap);
  const auto& h = res.hodge;
  auto euler_pairs = stringy_euler_commuting_pairs(action, cfg.stringy_cap);
  r.check(h.is_hodge_symmetric(), "not (p,q)-symmetric");
  r.check(h.is_centrally_symmetric(static_cast<int>(action.rank())), "not centrally symmetric");
  r.check(h.has_nonnegative_coefficients(), "negative coefficient");
  r.check(euler_number(h) == euler_pairs,
          "euler " + euler_number(h).str() + " differs from commuting pairs " + euler_pairs.str());
  Json sectors = Json::array();
  r.columns = {"class", "size", "centralizer", "shift", "torsion", "contribution"};
  for (std::size_t i = 0; i < res.sectors.size(); ++i) {
    const auto& s = res.sectors[i];
    sectors.push_back({{"representative", to_json(s.representative)},
                       {"class_size", s.class_size},
                       {"centralizer_order", s.centralizer_order},
                       {"shift", s.shift},
                       {"torsion_factors", to_json(s.torsion_factors)},
                       {"contribution", to_json(s.contribution)}});
    r.rows.push_back({std::to_string(i), std::to_string(s.class_size), std::to_string(s.centralizer_order),
                      std::to_string(s.shift), tuple_text(s.torsion_factors), s.contribution.to_string()});
  }
  r.result = {{"hodge", hodge_block(h)}, {"euler_commuting_pairs", euler_pairs.str()}, {"sectors", sectors}};
  r.notes = {"h_st = " + h.to_string(), diamond_text(h),
             "euler = " + euler_number(h).str() + " (commuting pairs: " + euler_pairs.str() + ")"};
  return r;
}

inline Report verify_sp_report(int n, const RunConfig& cfg) {
  auto v = verify_sp(n, cfg.stringy_cap);
  Report r;
  r.command = "verify-sp";
  r.parameters = {{"n", n}};
  r.failures = v.mismatches;
  r.columns = {"route", "euler", "polynomial"};
  Json routes = Json::object();
  auto add = [&](const std::string& name, const std::optional<BigradedPoly>& h) {
    if (!h) {
      routes[name] = nullptr;
      r.rows.push_back({name, "-", "skipped: |W| exceeds the engine cap"});
      return;
    }
    routes[name] = hodge_block(*h);
    r.rows.push_back({name, euler_number(*h).str(), h->to_string()});
  };
  add("engine_signed_permutations", v.engine);
  if (n >= 2) add("engine_weyl_C" + std::to_string(n), v.engine_root_datum);
  add("closed_form", v.closed_form);
  add("goettsche", v.goettsche);
  r.result = {{"routes", routes}, {"equal", v.pass()}};
  r.notes = {diamond_text(v.goettsche)};
  return r;
}

inline Report verify_su_report(int n, const RunConfig& cfg) {
  auto v = verify_su(n, cfg.stringy_cap);
  Report r;
  r.command = "verify-su";
  r.parameters = {{"n", n}};
  r.failures = v.mismatches;
  r.result = {{"engine", hodge_block(v.engine)},
              {"euler_from_hodge", v.euler_from_hodge.str()},
              {"euler_commuting_pairs", v.euler_commuting_pairs.str()}};
  if (n == 2) r.result["kummer_k3"] = hodge_block(hodge_kummer_k3());
  r.columns = {"quantity", "value"};
  r.rows = {{"h_st", v.engine.to_string()},
            {"euler_from_hodge", v.euler_from_hodge.str()},
            {"euler_commuting_pairs", v.euler_commuting_pairs.str()}};
  r.notes = {diamond_text(v.engine)};
  return r;
}

// ---------------------------------------------------------------------------
// Series

inline SurfaceTag parse_surface(const std::string& s) {
  static const std::map<std::string, SurfaceTag> names{{"abelian", SurfaceTag::abelian},
                                                       {"kummer-singular", SurfaceTag::kummer_singular},
                                                       {"two-torsion", SurfaceTag::two_torsion},
                                                       {"kummer-k3", SurfaceTag::kummer_k3}};
  auto it = names.find(s);
  if (it == names.end()) throw InvalidInput("unknown surface '" + s + "' (abelian, kummer-singular, two-torsion, kummer-k3)");
  return it->second;
}

inline SeriesSpecialization parse_specialization(const std::string& s) {
  if (s == "none") return SeriesSpecialization::none;
  if (s == "euler") return SeriesSpecialization::euler;
  if (s == "signature") return SeriesSpecialization::signature;
  throw InvalidInput("unknown specialization '" + s + "' (none, euler, signature)");
}

/// Hilbert-scheme series of a surface; Euler values are checked against the
/// product prod (1 - q^m)^(-e).
inline Report series_report(SurfaceTag tag, int n_max, SeriesSpecialization spec) {
  auto surf = standard_surface(tag);
  auto series = generating_series(surf.hodge, n_max, spec);
  Report r;
  r.command = "series";
  const char* spec_name = spec == SeriesSpecialization::none ? "none"
                          : spec == SeriesSpecialization::euler ? "euler"
                                                                : "signature";
  r.parameters = {{"surface", surf.name}, {"n_max", n_max}, {"specialization", spec_name}};
  r.columns = {"n", "value"};
  Json values = Json::array();
  for (std::size_t n = 0; n < series.size(); ++n) {
    const auto& s = series[n];
    std::string text = spec == SeriesSpecialization::none ? s.to_string() : s.coefficient(0, 0).str();
    r.rows.push_back({std::to_string(n), text});
    values.push_back(spec == SeriesSpecialization::none ? to_json(s) : Json(text));
  }
  r.result = {{"coefficients", values}};
  if (spec == SeriesSpecialization::euler) {
    auto oracle = euler_product_coefficients(euler_number(surf.hodge), n_max);
    Json expect = Json::array();
    for (std::size_t n = 0; n < series.size(); ++n) {
      expect.push_back(oracle[n].str());
      r.check(series[n].coefficient(0, 0) == oracle[n],
              "q^" + std::to_string(n) + ": " + series[n].coefficient(0, 0).str() + " vs product " + oracle[n].str());
    }
    r.result["product_formula"] = expect;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Torsion points

inline TorsionPoint parse_point_text(const std::string& text) {
  // rows separated by ';' or '|', entries by ','
  std::vector<std::vector<std::string>> rows(1);
  std::string cur;
  for (char c : text + ";") {
    if (c == ' ') continue;
    const bool row_end = c == ';' || c == '|';
    if (c == ',' || row_end) {
      rows.back().push_back(cur);
      cur.clear();
      if (row_end) rows.emplace_back();
    } else {
      cur += c;
    }
  }
  rows.pop_back();
  return TorsionPoint::parse(rows);
}

inline Report stabilizer_report(const RootDatum& rd, const TorsionPoint& p, const RunConfig& cfg) {
  Report r;
  r.command = "torsion-scan";
  r.parameters = {{"type", rd.label()}, {"point", to_json(p)}};
  if (p.rank() != rd.rank()) throw InvalidInput("point has " + std::to_string(p.rank()) + " entries, rank is " +
                                                std::to_string(rd.rank()));
  auto s = stabilizer(rd, p);
  (void)cfg;
  r.result = {{"stabilizer", to_json(s)}};
  r.columns = {"point", "orbit_size", "stabilizer_order", "classification", "local_model", "crepant"};
  r.rows.push_back({point_text(p), std::to_string(s.orbit_size), s.order.str(), to_string(s.classification),
                    s.local_model_label, s.crepant_label});
  return r;
}

/// Minus-one scan; every representative's stabilizer is recomputed.
inline Report torsion_scan_report(const RootDatum& rd, const RunConfig& cfg) {
  auto scan = find_minus_one_points(rd, cfg.denominator_bound);
  Report r;
  r.command = "torsion-scan";
  r.parameters = {{"type", rd.label()}, {"denominator_bound", cfg.denominator_bound}};
  r.columns = {"index", "representative", "orbit_size", "stabilizer_order", "classification"};
  Json reps = Json::array();
  for (std::size_t i = 0; i < scan.representatives.size(); ++i) {
    const auto& p = scan.representatives[i];
    auto s = stabilizer(rd, p);
    r.check(s.classification == PointClass::minus_one_local_model, "representative " + std::to_string(i) +
                                                                       " does not have stabilizer {+-1}");
    reps.push_back({{"point", to_json(p)}, {"orbit_size", scan.orbit_sizes[i]}, {"stabilizer_order", s.order.str()}});
    r.rows.push_back({std::to_string(i), point_text(p), std::to_string(scan.orbit_sizes[i]), s.order.str(),
                      to_string(s.classification)});
  }
  r.result = {{"orbit_count", scan.representatives.size()},
              {"points_scanned", scan.points_scanned},
              {"partial", scan.partial},
              {"weyl_contains_minus_one", weyl_group_contains_minus_one(rd.type)},
              {"local_model", scan.local_model_label},
              {"crepant", scan.crepant_label},
              {"representatives", reps}};
  r.notes = {std::to_string(scan.representatives.size()) + " orbit(s) with stabilizer {+-1}" +
             (scan.local_model_label.empty() ? "" : ", local model " + scan.local_model_label + ", " + scan.crepant_label) +
             (scan.partial ? " (partial scan)" : "")};
  return r;
}

/// Node maps of the regression embeddings.
inline std::optional<std::vector<std::size_t>> default_node_map(const DynkinType& sub, const DynkinType& amb) {
  auto is = [](const DynkinType& t, DynkinFamily f, int n) { return t.family == f && t.rank == n; };
  if (is(sub, DynkinFamily::B, 3) && is(amb, DynkinFamily::F, 4)) return std::vector<std::size_t>{0, 1, 2};
  if (is(sub, DynkinFamily::D, 4) && is(amb, DynkinFamily::D, 5)) return std::vector<std::size_t>{1, 2, 3, 4};
  if (is(sub, DynkinFamily::D, 4) && is(amb, DynkinFamily::E, 6)) return std::vector<std::size_t>{2, 3, 4, 1};
  if (is(sub, DynkinFamily::A, 1) && is(amb, DynkinFamily::A, 2)) return std::vector<std::size_t>{0};
  return std::nullopt;
}

inline Report propagate_report(const DiagramEmbedding& e, const TorsionPoint& p, int64_t fine_denominator,
                               const RunConfig& cfg) {
  auto res = propagate(e, p, fine_denominator, cfg.seed);
  Report r;
  r.command = "propagate";
  Json nodes = Json::array();
  for (auto v : e.node_map) nodes.push_back(v);
  r.parameters = {{"sub", e.sub.label()},
                  {"ambient", e.ambient.label()},
                  {"node_map", nodes},
                  {"point", to_json(p)},
                  {"fine_denominator", fine_denominator}};
  r.check(res.success(), "no generic translation found in " + std::to_string(res.attempts) + " attempts");
  r.result = {{"point", to_json(res.point)},
              {"translation", to_json(res.translation)},
              {"sub_stabilizer", to_json(res.sub_stabilizer)},
              {"stabilizer", to_json(res.stabilizer)},
              {"restriction_matches", res.restriction_matches},
              {"attempts", res.attempts},
              {"local_model", res.local_model_label}};
  r.columns = {"quantity", "value"};
  r.rows = {{"point", point_text(res.point)},
            {"sub_stabilizer_order", res.sub_stabilizer.order.str()},
            {"stabilizer_order", res.stabilizer.order.str()},
            {"restriction_matches", res.restriction_matches ? "yes" : "no"},
            {"attempts", std::to_string(res.attempts)},
            {"local_model", res.local_model_label}};
  return r;
}

// ---------------------------------------------------------------------------
// Commuting matrices

inline MatrixPair nonsymplectic_example_pair() {
  RationalMatrix mx(4, 4), my(4, 4);
  mx(0, 1) = mx(1, 2) = 1;
  my(0, 1) = my(1, 2) = my(3, 2) = 1;
  return MatrixPair(mx, my);
}

/// Multiplication by x, y on C[x,y]/(x,y)^2 in the basis 1, x, y.
inline MatrixPair square_maximal_ideal_pair() {
  RationalMatrix mx(3, 3), my(3, 3);
  mx(1, 0) = 1;
  my(2, 0) = 1;
  return MatrixPair(mx, my);
}

struct MatrixInput {
  std::string source;
  MatrixPair pair;
  std::vector<Monomial2> basis;  // set when built from an ideal
  std::optional<bool> expect_cyclic, expect_dual_cyclic, expect_symplectic;
};

inline MatrixInput matrix_example(const std::string& name) {
  if (name == "nonsymplectic")
    return {"example nonsymplectic", nonsymplectic_example_pair(), {}, true, std::nullopt, false};
  if (name == "square-maximal") return {"example square-maximal", square_maximal_ideal_pair(), {}, true, false, false};
  throw InvalidInput("unknown matrix example '" + name + "' (nonsymplectic, square-maximal)");
}

inline MatrixInput matrix_from_ideal(const std::vector<std::string>& generators, int degree) {
  std::vector<Poly2> polys;
  for (const auto& g : generators) polys.push_back(parse_poly2(g));
  auto q = quotient_by_ideal(polys, degree);
  std::string src;
  for (const auto& g : polys) src += (src.empty() ? "" : ", ") + to_string(g);
  return {"ideal (" + src + ") truncated at degree " + std::to_string(degree), q.pair, q.basis, {}, {}, {}};
}

inline std::string matrix_text(const RationalMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

inline Report matrix_report(const MatrixInput& in, const RunConfig& cfg) {
  const auto& p = in.pair;
  Report r;
  r.command = "matrix";
  r.parameters = {{"source", in.source}};
  Json res = {{"pair", to_json(p)}};
  if (!in.basis.empty()) {
    Json b = Json::array();
    for (auto m : in.basis) b.push_back(monomial_to_string(m));
    res["basis"] = b;
  }
  const bool nilpotent = p.is_nilpotent();
  res["nilpotent"] = nilpotent;
  std::optional<bool> cyclic, dual_cyclic;
  if (nilpotent) {
    cyclic = is_cyclic(p);
    dual_cyclic = is_cyclic(dual(p));
    res["cyclic"] = *cyclic;
    res["dual_cyclic"] = *dual_cyclic;
  }
  auto sym = symplectic_exists(p, cfg.seed);
  Json forms = Json::array();
  for (const auto& phi : sym.basis) forms.push_back(to_json(phi));
  Json sj = {{"solution_dim", sym.basis.size()},
             {"solution_basis", forms},
             {"contains_invertible", sym.contains_invertible},
             {"method", to_string(sym.method)}};
  if (sym.method == InvertibilityMethod::symbolic_determinant) sj["determinant_terms"] = sym.determinant_terms;
  if (sym.witness) sj["witness"] = to_json(*sym.witness);
  if (sym.darboux) {
    sj["darboux_basis"] = to_json(*sym.darboux);
    auto conj = p.conjugated(*sym.darboux);
    sj["pair_in_sp"] = to_json(conj);
    r.check(is_compatible_form(standard_symplectic(p.dim() / 2), conj), "reduced pair is not in sp");
  }
  res["symplectic"] = sj;
  auto neg_dual = module_isomorphic(negate(p), dual(p), cfg.seed);
  res["negation_isomorphic_to_dual"] = neg_dual.isomorphic;
  if (sym.contains_invertible)
    r.check(neg_dual.isomorphic, "an invertible form exists but the negated pair is not isomorphic to the dual");
  if (in.expect_cyclic) r.check(cyclic == in.expect_cyclic, "cyclicity differs from the expected value");
  if (in.expect_dual_cyclic) r.check(dual_cyclic == in.expect_dual_cyclic, "dual cyclicity differs from the expected value");
  if (in.expect_symplectic)
    r.check(sym.contains_invertible == *in.expect_symplectic, "symplectic decision differs from the expected value");
  r.result = res;

  auto yn = [](std::optional<bool> b) { return b ? (*b ? "yes" : "no") : "n/a"; };
  r.columns = {"quantity", "value"};
  r.rows = {{"dim", std::to_string(p.dim())},
            {"nilpotent", nilpotent ? "yes" : "no"},
            {"cyclic", yn(cyclic)},
            {"dual_cyclic", yn(dual_cyclic)},
            {"skew_solution_dim", std::to_string(sym.basis.size())},
            {"invertible_skew_form", sym.contains_invertible ? "yes" : "no"},
            {"decided_by", to_string(sym.method)},
            {"negation_isomorphic_to_dual", neg_dual.isomorphic ? "yes" : "no"}};
  r.notes = {"mx = " + matrix_text(p.mx()), "my = " + matrix_text(p.my())};
  if (!in.basis.empty()) {
    std::string b;
    for (auto m : in.basis) b += (b.empty() ? "" : ", ") + monomial_to_string(m);
    r.notes.insert(r.notes.begin(), "basis = " + b);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Flat bundles

inline Report spin8_report(const std::vector<F2Class>& classes) {
  auto rep = analyze_flat_bundle(classes);
  Report r;
  r.command = "spin8-check";
  Json cls = Json::array();
  for (const auto& c : classes) cls.push_back(c.to_string());
  r.parameters = {{"classes", cls}};
  Json w2_terms = Json::array();
  for (const auto& m : rep.w2.monomials()) w2_terms.push_back(Json::array({m[0] + 1, m[1] + 1}));
  const bool pass = rep.spin() && rep.rigid();
  r.check(rep.w1.is_zero(), "w1 = " + rep.w1.to_string());
  r.check(rep.w2.is_zero(), "w2 = " + rep.w2.to_string());
  r.check(rep.rigid(), "deformation dimension " + std::to_string(rep.deformation_dim));
  r.result = {{"w1", rep.w1.is_zero() ? Json(0) : to_json(rep.w1)},
              {"w2", rep.w2.is_zero() ? Json(0) : to_json(rep.w2)},
              {"w2_terms", w2_terms},
              {"total_class", total_sw_class(classes).to_string()},
              {"deformation_dim", rep.deformation_dim},
              {"verdict", pass ? "pass" : "fail"}};
  r.columns = {"quantity", "value"};
  r.rows = {{"rank", std::to_string(classes.size())},
            {"w1", rep.w1.to_string()},
            {"w2", rep.w2.to_string()},
            {"deformation_dim", std::to_string(rep.deformation_dim)},
            {"verdict", pass ? "pass" : "fail"}};
  return r;
}

}  // namespace abelmod
