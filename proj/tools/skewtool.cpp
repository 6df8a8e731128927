// skewtool: command line front end for the skew energy library.
//
//   skewtool verify minimality --n 7 --d 4 [--json out.jsonl]
//   skewtool verify lemmas --max-n 8 [--json out.jsonl]
//   skewtool poly --input B:n=7,d=4,orient=--- --route all
//   skewtool energy --input C:n=4,orient=+ --tol 1e-8
//   skewtool enumerate --n 8 --d 4 --class-b --out census.g6 [--json shapes.jsonl]
//
// Exit status: 0 all verified, 1 counterexample (or route disagreement),
// 2 usage or input error. SKEW_THREADS sets the worker count.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skew/char_poly.hpp"
#include "skew/energy.hpp"
#include "skew/enumeration.hpp"
#include "skew/families.hpp"
#include "skew/graph_io.hpp"
#include "skew/structure.hpp"
#include "skew/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A family spec ("B:n=7,d=4,orient=---"), an arc-list file, or a graph6
// string (oriented from lower to higher label).
skew::OrientedGraph load_input(const std::string& input) {
  if (input.size() >= 2 && input[1] == ':') return skew::build(skew::parse_family_spec(input));
  if (std::filesystem::is_regular_file(input)) {
    std::ifstream in(input);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return skew::from_arc_list(buffer.str());
  }
  return skew::OrientedGraph::ascending(skew::from_graph6(input));
}

int finish_reports(const std::vector<skew::VerificationReport>& reports, const std::string& json_path) {
  bool counterexample = false;
  for (const auto& r : reports) {
    std::cout << std::left << std::setw(14) << r.claim << ' ' << std::setw(15) << skew::to_string(r.status)
              << " graphs=" << r.graphs << " classes=" << r.orientation_classes << " comparisons=" << r.comparisons
              << " violations=" << r.violations << " time=" << std::fixed << std::setprecision(3) << r.wall_seconds
              << "s\n";
    std::cout.unsetf(std::ios::floatfield);
    counterexample |= r.status == skew::Status::counterexample;
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw UsageError("cannot write " + json_path);
    for (const auto& r : reports) out << skew::to_json(r).dump() << '\n';
  }
  return counterexample ? kCounterexample : kOk;
}

int run_poly(const std::string& input, const std::string& route) {
  const skew::OrientedGraph og = load_input(input);
  if (route != "all") {
    const skew::SkewPolynomial p = skew::char_poly(og, skew::route_from_string(route));
    std::cout << p.coefficient_list() << '\n' << p.to_string() << '\n';
    return kOk;
  }
  bool agree = true;
  std::optional<skew::SkewPolynomial> first;
  for (skew::Route r : {skew::Route::expansion, skew::Route::edge, skew::Route::vertex, skew::Route::oracle}) {
    const skew::SkewPolynomial p = skew::char_poly(og, r);
    std::cout << std::left << std::setw(10) << skew::to_string(r) << ' ' << p.coefficient_list() << '\n';
    if (!first) first = p;
    agree &= p == *first;
  }
  std::cout << first->to_string() << '\n' << (agree ? "routes agree" : "ROUTES DISAGREE") << '\n';
  return agree ? kOk : kCounterexample;
}

int run_energy(const std::string& input, double tol) {
  const skew::OrientedGraph og = load_input(input);
  const double spectral = skew::skew_energy_spectral(og);
  std::cout << std::setprecision(12) << "spectral   " << spectral << '\n';
  try {
    const double integral = skew::skew_energy_integral(og, tol);
    std::cout << "integral   " << integral << '\n' << "difference " << std::abs(integral - spectral) << '\n';
  } catch (const skew::QuadratureError& e) {
    std::cout << "integral   failed: " << e.what() << '\n';
    return kCounterexample;
  }
  return kOk;
}

int run_enumerate(int n, int d, bool class_b, const std::string& out_path, const std::string& json_path) {
  std::vector<skew::Graph> graphs;
  for (const skew::Graph& g : skew::enumerate_bicyclic(n)) {
    if (d > 0 && skew::diameter(g) != d) continue;
    if (class_b && !skew::in_class_B(g)) continue;
    graphs.push_back(g);
  }
  if (out_path.empty() || out_path == "-") {
    skew::write_census(std::cout, graphs);
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    skew::write_census(out, graphs);
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw UsageError("cannot write " + json_path);
    for (const skew::Graph& g : graphs) {
      const skew::BicyclicShape s = skew::classify_bicyclic(g);
      nlohmann::json j{{"graph6", skew::to_graph6(g)}, {"diameter", skew::diameter(g)}, {"t", s.t},
                       {"a", s.a},        {"b", s.b},   {"class_B", skew::in_class_B(s)}};
      if (s.c) j["c"] = *s.c;
      if (s.l) j["l"] = *s.l;
      out << j.dump() << '\n';
    }
  }
  std::cerr << graphs.size() << " graphs\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact skew characteristic polynomials, skew energy and bicyclic minimality checks"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "exhaustive verification");
  verify->require_subcommand(1);
  int n = 0, d = 0, max_n = 8;
  std::string json_path;
  auto* minimality = verify->add_subcommand("minimality", "B^{-,-,-}_{n,d} is the unique minimum over B(n,d)");
  minimality->add_option("--n", n, "order")->required()->check(CLI::Range(6, 10));
  minimality->add_option("--d", d, "diameter")->required();
  minimality->add_option("--json", json_path, "write the report as a JSON line");
  auto* lemmas = verify->add_subcommand("lemmas", "check the supporting lemmas");
  lemmas->add_option("--max-n", max_n, "largest order")->check(CLI::Range(6, 10));
  lemmas->add_option("--json", json_path, "write one JSON line per lemma");

  std::string input, route = "expansion";
  auto* poly = app.add_subcommand("poly", "skew characteristic polynomial");
  poly->add_option("--input", input, "family spec, graph6 string or arc-list file")->required();
  poly->add_option("--route", route, "expansion|edge|vertex|oracle|all")
      ->check(CLI::IsMember({"expansion", "edge", "vertex", "oracle", "all"}));

  double tol = 1e-8;
  auto* energy = app.add_subcommand("energy", "skew energy by eigenvalues and by quadrature");
  energy->add_option("--input", input, "family spec, graph6 string or arc-list file")->required();
  energy->add_option("--tol", tol, "absolute quadrature tolerance")->check(CLI::PositiveNumber);

  bool class_b = false;
  std::string out_path;
  auto* enumerate = app.add_subcommand("enumerate", "bicyclic graphs up to isomorphism, as graph6");
  enumerate->add_option("--n", n, "order")->required()->check(CLI::Range(4, skew::kEnumerationMaxOrder));
  enumerate->add_option("--d", d, "keep only this diameter");
  enumerate->add_flag("--class-b", class_b, "keep only graphs without odd cycle pairs of lengths summing to 2 mod 4");
  enumerate->add_option("--out", out_path, "census file (default: standard output)");
  enumerate->add_option("--json", json_path, "shape metadata sidecar");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*minimality) {
      if (d < 3 || d > n - 3) throw UsageError("--d must satisfy 3 <= d <= n-3");
      return finish_reports({skew::verify_minimality(n, d)}, json_path);
    }
    if (*lemmas) return finish_reports(skew::check_lemmas(max_n), json_path);
    if (*poly) return run_poly(input, route);
    if (*energy) return run_energy(input, tol);
    if (*enumerate) return run_enumerate(n, d, class_b, out_path, json_path);
  } catch (const skew::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
