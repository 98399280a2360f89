// abelmod: batch front end over the library. Exit status 0 when every check
// in the report passes, 1 on a verification failure, 2 on usage errors
// (malformed flags, rejected input, exceeded caps).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "abelmod/reports.hpp"

using namespace abelmod;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "text";
  uint64_t seed = 1;
  std::string out;
  std::optional<std::size_t> cap;
  int64_t denominator_bound = 4;

  std::string type;
  int rank = 0;
  std::optional<int> n;

  std::string action = "weyl";
  std::string generators;

  std::string surface = "kummer-k3";
  std::string specialization = "euler";

  std::string ambient;
  std::string nodes;
  std::string point;
  int64_t fine_denominator = 5;

  std::vector<std::string> ideal;
  int degree = 0;
  std::string pair_file;
  std::string example;

  std::vector<std::string> classes;
};

RunConfig make_config(const Options& o) {
  RunConfig cfg;
  if (o.cap) cfg.group_order_cap = cfg.stringy_cap = *o.cap;
  cfg.denominator_bound = o.denominator_bound;
  cfg.seed = o.seed;
  cfg.format = o.format == "json" ? OutputFormat::json : o.format == "csv" ? OutputFormat::csv : OutputFormat::text;
  cfg.validate();
  return cfg;
}

DynkinType require_type(const Options& o, const std::string& flag = "--type") {
  if (o.type.empty()) throw InvalidInput(flag + " is required (e.g. G_2, B3, or D with --rank 4)");
  return parse_dynkin_type(o.type, o.rank);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<std::size_t> parse_nodes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw InvalidInput("");
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw InvalidInput("--nodes must be comma-separated nonnegative integers, got '" + text + "'");
    }
  }
  return out;
}

LatticeAction make_action(const Options& o, const RunConfig& cfg) {
  if (o.action == "weyl") return weyl_action(build_root_datum(require_type(o)), cfg.group_order_cap);
  if (o.action == "generators") {
    if (o.generators.empty()) throw InvalidInput("--action generators needs --generators FILE");
    auto j = read_json_file(o.generators);
    if (!j.is_array() || j.empty()) throw InvalidInput("generator file must hold a nonempty array of matrices");
    std::vector<IntMatrix> gens;
    for (const auto& m : j) gens.push_back(int_matrix_from_json(m));
    return LatticeAction::from_generators("generated by " + std::to_string(gens.size()) + " matrices", gens,
                                          cfg.group_order_cap);
  }
  if (!o.n || *o.n < 1) throw InvalidInput("--action " + o.action + " needs --n >= 1");
  auto n = static_cast<std::size_t>(*o.n);
  if (o.action == "symmetric") return symmetric_action(n);
  if (o.action == "hyperoctahedral") return hyperoctahedral_action(n);
  if (o.action == "trivial") return trivial_action(n);
  throw InvalidInput("unknown action '" + o.action + "' (weyl, symmetric, hyperoctahedral, trivial, generators)");
}

Report build_report(const std::string& command, const Options& o, const RunConfig& cfg) {
  if (command == "table1") return table1_report(o.n.value_or(4));
  if (command == "classify") return classify_report(require_type(o), cfg);
  if (command == "stringy") return stringy_report(make_action(o, cfg), cfg);
  if (command == "verify-sp") return verify_sp_report(o.n.value_or(2), cfg);
  if (command == "verify-su") return verify_su_report(o.n.value_or(2), cfg);
  if (command == "series")
    return series_report(parse_surface(o.surface), o.n.value_or(3), parse_specialization(o.specialization));
  if (command == "torsion-scan") {
    auto rd = build_root_datum(require_type(o));
    if (!o.point.empty()) return stabilizer_report(rd, parse_point_text(o.point), cfg);
    return torsion_scan_report(rd, cfg);
  }
  if (command == "propagate") {
    auto sub = build_root_datum(require_type(o));
    if (o.ambient.empty()) throw InvalidInput("--ambient is required");
    auto amb = build_root_datum(parse_dynkin_type(o.ambient));
    std::vector<std::size_t> nodes;
    if (!o.nodes.empty()) {
      nodes = parse_nodes(o.nodes);
    } else if (auto d = default_node_map(sub.type, amb.type)) {
      nodes = *d;
    } else {
      throw InvalidInput("no default node map for " + sub.label() + " in " + amb.label() + "; pass --nodes");
    }
    auto e = embed_diagram(sub, amb, nodes);
    std::optional<TorsionPoint> p;
    if (!o.point.empty()) p = parse_point_text(o.point);
    else p = basic_example_point(sub);
    if (!p) throw InvalidInput("no built-in point for " + sub.label() + "; pass --point");
    return propagate_report(e, *p, o.fine_denominator, cfg);
  }
  if (command == "matrix") {
    const int sources = !o.ideal.empty() + !o.pair_file.empty() + !o.example.empty();
    if (sources != 1) throw InvalidInput("matrix needs exactly one of --ideal, --pair, --example");
    if (!o.example.empty()) return matrix_report(matrix_example(o.example), cfg);
    if (!o.pair_file.empty()) {
      auto pair = matrix_pair_from_json(read_json_file(o.pair_file));
      return matrix_report(MatrixInput{"pair file " + o.pair_file, pair, {}, {}, {}, {}}, cfg);
    }
    if (o.degree < 1) throw InvalidInput("--ideal needs --degree N >= 1 with (x,y)^N inside the ideal");
    return matrix_report(matrix_from_ideal(o.ideal, o.degree), cfg);
  }
  if (command == "spin8-check") {
    std::vector<F2Class> cls;
    if (o.classes.empty()) cls = all_f2_classes(3);
    for (const auto& c : o.classes) cls.push_back(F2Class::parse(c));
    return spin8_report(cls);
  }
  throw InvalidInput("unknown subcommand '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of moduli of flat bundles on abelian surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", o.seed, "Seed for randomized steps");
  app.add_option("--out", o.out, "Write the report to FILE instead of stdout");
  app.add_option("--cap", o.cap, "Cap on group orders for enumeration and the stringy engine");
  app.add_option("--denominator-bound", o.denominator_bound, "Denominator bound for torsion scans");
  app.add_option("--type", o.type, "Dynkin type, e.g. G_2, B3, or a family letter with --rank");
  app.add_option("--rank", o.rank, "Rank when --type is a bare family letter");
  app.add_option("--n", o.n, "Size parameter (table1, verify-sp/su, series n_max, actions)");

  app.add_subcommand("table1", "Highest-coroot coefficients for the nine weight-table rows");
  app.add_subcommand("classify", "Group data, highest coroot and crepant verdict for a type");
  auto* stringy = app.add_subcommand("stringy", "Stringy Hodge polynomial of (A (x) Z^r)/G");
  stringy->add_option("--action", o.action, "weyl, symmetric, hyperoctahedral, trivial, generators");
  stringy->add_option("--generators", o.generators, "JSON file with a list of integer matrices");
  app.add_subcommand("verify-sp", "Engine, closed form and Goettsche formula for Sp(n)");
  app.add_subcommand("verify-su", "Engine and commuting-pairs Euler number for SU(n)");
  auto* series = app.add_subcommand("series", "Hilbert-scheme generating series of a surface");
  series->add_option("--surface", o.surface, "abelian, kummer-singular, two-torsion, kummer-k3");
  series->add_option("--specialization", o.specialization, "none, euler, signature");
  auto* scan = app.add_subcommand("torsion-scan", "Torsion points with stabilizer {+-1}, or one point's stabilizer");
  scan->add_option("--point", o.point, "Point rows separated by ';' or '|', entries by ',' (e.g. \"1/2,0,0,0|0,1/2,0,0\")");
  auto* prop = app.add_subcommand("propagate", "Propagate a point along a diagram embedding");
  prop->add_option("--ambient", o.ambient, "Ambient Dynkin type");
  prop->add_option("--nodes", o.nodes, "0-indexed node map, e.g. 0,1,2");
  prop->add_option("--point", o.point, "Point in the sub lattice (default: built-in example)");
  prop->add_option("--fine-denominator", o.fine_denominator, "Denominator of the generic translation");
  auto* matrix = app.add_subcommand("matrix", "Commuting-matrix model: cyclicity and symplectic forms");
  matrix->add_option("--ideal", o.ideal, "Ideal generators as polynomials in x, y");
  matrix->add_option("--degree", o.degree, "Truncation degree N with (x,y)^N inside the ideal");
  matrix->add_option("--pair", o.pair_file, "JSON file {dim, mx, my}");
  matrix->add_option("--example", o.example, "nonsymplectic or square-maximal");
  auto* spin8 = app.add_subcommand("spin8-check", "Whitney classes and rigidity of a sum of flat line bundles");
  spin8->add_option("--classes", o.classes, "Bitstrings in H^1(T^n; Z/2) (default: all eight for n = 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    auto cfg = make_config(o);
    auto report = build_report(command, o, cfg);
    const std::string text = render(report, cfg);
    if (o.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw InvalidInput("cannot write '" + o.out + "'");
      f << text;
    }
    if (!report.pass()) {
      for (const auto& f : report.failures) std::cerr << "verification failure: " << f << "\n";
      return kExitFail;
    }
    return kExitPass;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --cap to allow)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
}
