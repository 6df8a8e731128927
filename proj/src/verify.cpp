#include "skew/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "skew/canonical.hpp"
#include "skew/char_poly.hpp"
#include "skew/energy.hpp"
#include "skew/enumeration.hpp"
#include "skew/families.hpp"
#include "skew/graph_io.hpp"
#include "skew/orientations.hpp"
#include "skew/parallel.hpp"
#include "skew/structure.hpp"

namespace skew {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxWitnesses = 10;
constexpr double kEnergyMargin = 1e-9;

Witness make_witness(std::string role, const OrientedGraph& og, std::string note = {}) {
  Witness w;
  w.role = std::move(role);
  w.graph6 = to_graph6(og.base());
  w.arcs = to_arc_list(og);
  w.polynomial = char_poly_expansion(og);
  w.energy = skew_energy_spectral(og);
  w.note = std::move(note);
  return w;
}

struct Tally {
  std::uint64_t graphs = 0;
  std::uint64_t classes = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t violations = 0;
  std::vector<Witness> witnesses;

  void violation(Witness w) {
    ++violations;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
  }

  void merge(Tally&& other) {
    graphs += other.graphs;
    classes += other.classes;
    comparisons += other.comparisons;
    violations += other.violations;
    for (auto& w : other.witnesses)
      if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
  }

  // Records whether lower <= upper (or lower < upper when strict). `lower_og`
  // and `upper_og` are only materialised as witnesses on failure.
  void expect(const SkewPolynomial& lower, const SkewPolynomial& upper, bool strict,
              const std::function<OrientedGraph()>& lower_og, const std::function<OrientedGraph()>& upper_og) {
    ++comparisons;
    const QuasiOrder observed = quasi_compare(lower, upper);
    const QuasiOrder claimed = strict ? QuasiOrder::strictly_less : QuasiOrder::less_or_equivalent;
    if (satisfies(observed, claimed)) return;
    const std::string note = std::string("expected ") + to_string(claimed) + ", observed " + to_string(observed);
    ++violations;
    if (witnesses.size() + 2 <= kMaxWitnesses) {
      witnesses.push_back(make_witness("lower", lower_og(), note));
      witnesses.push_back(make_witness("upper", upper_og(), note));
    }
  }
};

// Runs per_graph on every graph concurrently and merges the tallies in input order.
Tally over_graphs(const std::vector<Graph>& graphs, const std::function<void(const Graph&, Tally&)>& per_graph) {
  std::vector<Tally> slots(graphs.size());
  parallel_for(graphs.size(), [&](std::size_t i) {
    slots[i].graphs = 1;
    per_graph(graphs[i], slots[i]);
  });
  Tally total;
  for (auto& s : slots) total.merge(std::move(s));
  return total;
}

VerificationReport finish(std::string claim, nlohmann::json parameters, Tally&& tally, Clock::time_point start,
                          nlohmann::json details = nlohmann::json::object()) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.parameters = std::move(parameters);
  r.graphs = tally.graphs;
  r.orientation_classes = tally.classes;
  r.comparisons = tally.comparisons;
  r.violations = tally.violations;
  r.witnesses = std::move(tally.witnesses);
  r.details = std::move(details);
  if (r.violations > 0) r.status = Status::counterexample;
  else if (r.comparisons == 0) r.status = Status::skipped;
  else r.status = Status::verified;
  r.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::vector<Graph> collect(int lo, int hi, const std::function<const std::vector<Graph>&(int)>& source) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n) {
    const auto& part = source(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Graph> unicyclic_upto(int max_n) { return collect(3, max_n, enumerate_unicyclic); }
std::vector<Graph> bicyclic_upto(int max_n) { return collect(4, max_n, enumerate_bicyclic); }
std::vector<Graph> trees_upto(int lo, int max_n) { return collect(lo, max_n, enumerate_trees); }

bool all_evenly(const OrientedGraph& og) {
  for (const Cycle& c : all_cycles(og.base()))
    if (cycle_parity(og, c) != CycleParity::evenly) return false;
  return true;
}

int pendant_count(const Graph& g) {
  int count = 0;
  for (Vertex v = 0; v < g.order(); ++v) count += g.degree(v) == 1;
  return count;
}

// Every orientation class of g must lie strictly above `reference`.
void expect_all_classes_above(Tally& t, const Graph& g, const SkewPolynomial& reference,
                              const OrientedGraph& reference_og) {
  for (const OrientedGraph& og : orientation_class_reps(g)) {
    ++t.classes;
    t.expect(reference, char_poly_expansion(og), true, [&] { return reference_og; }, [&] { return og; });
  }
}

OrientedGraph trivial_orientation(const Graph& g) { return OrientedGraph::ascending(g); }

// ---- individual lemmas ------------------------------------------------------

VerificationReport lemma_2_4(int max_n) {
  const auto start = Clock::now();
  std::vector<Graph> graphs = trees_upto(2, max_n);
  for (auto* part : {&unicyclic_upto, &bicyclic_upto}) {
    auto more = (*part)(max_n);
    graphs.insert(graphs.end(), more.begin(), more.end());
  }
  Tally t = over_graphs(graphs, [](const Graph& g, Tally& t) {
    const auto cuts = cut_edges(g);
    for (const OrientedGraph& og : orientation_class_reps(g)) {
      ++t.classes;
      const SkewPolynomial whole = char_poly_expansion(og);
      for (std::size_t k : cuts) {
        const OrientedGraph cut = remove_items(og, Deletion{{}, {g.edge(k)}});
        t.expect(char_poly_expansion(cut), whole, false, [&] { return cut; }, [&] { return og; });
      }
    }
  });
  return finish("lemma-2.4", {{"max_n", max_n}}, std::move(t), start,
                {{"domain", "trees, unicyclic and bicyclic graphs; every cut edge; every orientation class"}});
}

VerificationReport lemma_2_5(int max_n) {
  const auto start = Clock::now();
  std::vector<Graph> graphs = unicyclic_upto(max_n);
  auto bic = bicyclic_upto(max_n);
  graphs.insert(graphs.end(), bic.begin(), bic.end());
  Tally t = over_graphs(graphs, [](const Graph& g, Tally& t) {
    const OrientedGraph star = star_graph(g.order());
    const SkewPolynomial star_poly = char_poly_expansion(star);
    for (const OrientedGraph& og : orientation_class_reps(g)) {
      ++t.classes;
      t.expect(star_poly, char_poly_expansion(og), false, [&] { return star; }, [&] { return og; });
    }
  });
  return finish("lemma-2.5", {{"max_n", max_n}}, std::move(t), start,
                {{"domain", "unicyclic and bicyclic graphs; every orientation class"}});
}

VerificationReport lemma_2_6(int max_n) {
  const auto start = Clock::now();
  Tally t;
  for (int n = 2; n <= max_n; ++n) {
    const OrientedGraph whole = path_graph(n);
    const OrientedGraph one_off = disjoint_union(path_graph(1), path_graph(n - 1));
    const SkewPolynomial whole_poly = char_poly_expansion(whole);
    const SkewPolynomial one_off_poly = char_poly_expansion(one_off);
    for (int i = 1; i <= n - 1; ++i) {
      ++t.graphs;
      const OrientedGraph split = disjoint_union(path_graph(i), path_graph(n - i));
      const SkewPolynomial split_poly = disjoint_union(path_polynomial(i), path_polynomial(n - i));
      t.expect(split_poly, whole_poly, false, [&] { return split; }, [&] { return whole; });
      t.expect(one_off_poly, split_poly, false, [&] { return one_off; }, [&] { return split; });
    }
  }
  return finish("lemma-2.6", {{"max_n", max_n}}, std::move(t), start,
                {{"domain", "P_1 u P_{n-1} <= P_i u P_{n-i} <= P_n, 2 <= n, 1 <= i <= n-1"}});
}

VerificationReport lemma_2_7(int max_n) {
  const auto start = Clock::now();
  Tally t = over_graphs(trees_upto(5, max_n), [](const Graph& g, Tally& t) {
    const int n = g.order();
    const int d = diameter(g);
    if (d == n - 1 || d == 2) return;  // P_n and S_n themselves
    const OrientedGraph og = trivial_orientation(g);
    const OrientedGraph path = path_graph(n);
    const OrientedGraph star = star_graph(n);
    const SkewPolynomial p = char_poly_expansion(og);
    ++t.classes;
    t.expect(char_poly_expansion(star), p, false, [&] { return star; }, [&] { return og; });
    t.expect(p, char_poly_expansion(path), false, [&] { return og; }, [&] { return path; });
  });
  return finish("lemma-2.7", {{"max_n", max_n}}, std::move(t), start,
                {{"domain", "trees with 5 <= n other than P_n and S_n"}});
}

VerificationReport lemma_2_8(int max_n) {
  const auto start = Clock::now();
  Tally t = over_graphs(trees_upto(3, max_n), [](const Graph& g, Tally& t) {
    const OrientedGraph og = trivial_orientation(g);
    const OrientedGraph extremal = tree_T(g.order(), diameter(g));
    ++t.classes;
    t.expect(char_poly_expansion(extremal), char_poly_expansion(og), false, [&] { return extremal; },
             [&] { return og; });
  });
  return finish("lemma-2.8", {{"max_n", max_n}}, std::move(t), start,
                {{"domain", "every tree of order 3 <= n against T_{n,d} of the same diameter"}});
}

VerificationReport lemma_2_9(int max_n) {
  const auto start = Clock::now();
  Tally t;
  for (int n = 5; n <= max_n; ++n)
    for (int d = 4; d <= n - 1; ++d)
      for (int d0 = 3; d0 < d; ++d0) {
        ++t.graphs;
        const OrientedGraph hi = tree_T(n, d), lo = tree_T(n, d0);
        t.expect(char_poly_expansion(lo), char_poly_expansion(hi), false, [&] { return lo; }, [&] { return hi; });
      }
  return finish("lemma-2.9", {{"max_n", max_n}}, std::move(t), start,
                {{"domain", "T_{n,d0} <= T_{n,d}, 3 <= d0 < d <= n-1"}});
}

VerificationReport lemma_2_10(int max_n) {
  const auto start = Clock::now();
  Tally t;
  for (int n1 = 5; n1 <= max_n; ++n1)
    for (int d1 = 2; d1 < n1 - 2; ++d1)
      for (int n2 = 2; n1 + n2 - 1 <= max_n; ++n2) {
        std::vector<std::pair<int, OrientedGraph>> others;  // (d2, T)
        if (n2 == 2) others.emplace_back(1, path_graph(2));
        for (int d2 = 2; d2 < n2 - 1; ++d2) others.emplace_back(d2, tree_T(n2, d2));
        for (const auto& [d2, other] : others) {
          ++t.graphs;
          const OrientedGraph joined = disjoint_union(tree_T(n1, d1), other);
          const OrientedGraph merged = tree_T(n1 + n2 - 1, d1 + d2);
          // Orders differ by one; an isolated vertex leaves every a_i unchanged.
          const OrientedGraph padded = disjoint_union(merged, path_graph(1));
          t.expect(with_isolated(char_poly_expansion(merged), 1), char_poly_expansion(joined), false,
                   [&] { return padded; }, [&] { return joined; });
        }
      }
  return finish("lemma-2.10", {{"max_n", max_n}}, std::move(t), start,
                {{"domain", "T_{n1+n2-1,d1+d2} <= T_{n1,d1} u T, 2 <= d1 < n1-2, T = T_{n2,d2} (2 <= d2 < n2-1) "
                            "or P_2; compared with one isolated vertex added to the tree"}});
}

VerificationReport lemma_2_11(int max_n) {
  const auto start = Clock::now();
  Tally t = over_graphs(collect(6, max_n, enumerate_unicyclic), [](const Graph& g, Tally& t) {
    const int n = g.order();
    const int d = diameter(g);
    if (d < 3 || d > n - 2) return;
    const OrientedGraph extremal = unicyclic_U(n, d, CycleSign::minus);
    const SkewPolynomial extremal_poly = char_poly_expansion(extremal);
    for (const OrientedGraph& og : orientation_class_reps(g)) {
      ++t.classes;
      t.expect(extremal_poly, char_poly_expansion(og), false, [&] { return extremal; }, [&] { return og; });
    }
  });
  return finish("lemma-2.11", {{"max_n", max_n}}, std::move(t), start,
                {{"domain", "unicyclic graphs with 6 <= n, 3 <= d <= n-2; every orientation class"}});
}

VerificationReport lemma_2_12(int max_n) {
  const auto start = Clock::now();
  Tally t;
  for (int n = 5; n <= max_n; ++n)
    for (int d = 3; d <= n - 2; ++d) {
      ++t.graphs;
      const OrientedGraph u = unicyclic_U(n, d, CycleSign::minus), tree = tree_T(n, d);
      t.expect(char_poly_expansion(tree), char_poly_expansion(u), false, [&] { return tree; }, [&] { return u; });
    }
  VerificationReport identity = check_u_t_identity(max_n);
  t.comparisons += identity.comparisons;
  t.violations += identity.violations;
  for (auto& w : identity.witnesses)
    if (t.witnesses.size() < kMaxWitnesses) t.witnesses.push_back(std::move(w));
  return finish("lemma-2.12", {{"max_n", max_n}}, std::move(t), start,
                {{"domain", "T_{n,d} <= U^-_{n,d}, 3 <= d <= n-2, plus the exact coefficient identity"}});
}

VerificationReport lemma_2_13(int max_n) {
  const auto start = Clock::now();
  Tally t;
  for (int n = 6; n <= max_n; ++n)
    for (int d = 4; d <= n - 2; ++d)
      for (int d0 = 3; d0 < d; ++d0) {
        ++t.graphs;
        const OrientedGraph hi = unicyclic_U(n, d), lo = unicyclic_U(n, d0);
        t.expect(char_poly_expansion(lo), char_poly_expansion(hi), false, [&] { return lo; }, [&] { return hi; });
      }
  return finish("lemma-2.13", {{"max_n", max_n}}, std::move(t), start,
                {{"domain", "U^-_{n,d0} <= U^-_{n,d}, 3 <= d0 < d <= n-2"}});
}

VerificationReport lemma_2_14(int max_n) {
  const auto start = Clock::now();
  Tally t;
  for (int n = 7; n <= max_n; ++n)
    for (int d = 4; d <= n - 3; ++d)
      for (int d0 = 3; d0 < d; ++d0) {
        ++t.graphs;
        const OrientedGraph hi = bicyclic_B(n, d), lo = bicyclic_B(n, d0);
        t.expect(char_poly_expansion(lo), char_poly_expansion(hi), false, [&] { return lo; }, [&] { return hi; });
      }
  return finish("lemma-2.14", {{"max_n", max_n}}, std::move(t), start,
                {{"domain", "B^{-,-,-}_{n,d0} <= B^{-,-,-}_{n,d}, 3 <= d0 < d <= n-3 (B_{n,d} needs d <= n-3)"}});
}

// Members of B(n,d) passing `keep`, each checked strictly above B^{-,-,-}_{n,d}.
Tally above_B(int n, int d, const std::function<bool(const Graph&)>& keep) {
  const OrientedGraph reference = bicyclic_B(n, d);
  const SkewPolynomial reference_poly = char_poly_expansion(reference);
  std::vector<Graph> members;
  for (const Graph& g : enumerate_B_nd(n, d))
    if (keep(g)) members.push_back(g);
  return over_graphs(members, [&](const Graph& g, Tally& t) {
    expect_all_classes_above(t, g, reference_poly, reference);
  });
}

VerificationReport lemma_3_1(int max_n) {
  const auto start = Clock::now();
  Tally t;
  for (int n = 6; n <= max_n; ++n) {
    const CanonicalForm b_key = canonical_form(bicyclic_B(n, n - 3).base());
    t.merge(above_B(n, n - 3, [&](const Graph& g) { return canonical_form(g) != b_key; }));
  }
  return finish("lemma-3.1", {{"max_n", max_n}}, std::move(t), start,
                {{"domain", "G in B(n,n-3), G not isomorphic to B_{n,n-3}; every orientation class; strict"}});
}

VerificationReport lemma_3_2(int max_n) {
  const auto start = Clock::now();
  Tally t;
  for (int n = 7; n <= max_n; ++n)
    for (int d = 3; d <= n - 4; ++d)
      t.merge(above_B(n, d, [](const Graph& g) { return pendant_count(g) == 0; }));
  return finish("lemma-3.2", {{"max_n", max_n}}, std::move(t), start,
                {{"domain", "G in B(n,d), 3 <= d <= n-4, no pendant vertices; every orientation class; strict"}});
}

// Exactly one pendant vertex u, u ends every diametrical path, and G - u has
// no pendant vertices (u's neighbour has degree >= 3).
bool lemma_3_3_domain(const Graph& g) {
  if (pendant_count(g) != 1) return false;
  Vertex u = 0;
  while (g.degree(u) != 1) ++u;
  if (g.degree(g.neighbors(u)[0]) < 3) return false;
  const int d = diameter(g);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (x == u) continue;
    const auto dist = distances_from(g, x);
    for (Vertex y = x + 1; y < g.order(); ++y)
      if (y != u && dist[y] == d) return false;
  }
  return true;
}

VerificationReport lemma_3_3(int max_n) {
  const auto start = Clock::now();
  Tally t;
  for (int n = 7; n <= max_n; ++n)
    for (int d = 3; d <= n - 4; ++d) t.merge(above_B(n, d, lemma_3_3_domain));
  return finish("lemma-3.3", {{"max_n", max_n}}, std::move(t), start,
                {{"domain", "G in B(n,d), 3 <= d <= n-4, exactly one pendant vertex, lying on every diametrical "
                            "path, whose removal leaves no pendant vertex; every orientation class; strict"}});
}

nlohmann::json coefficient_strings(const std::vector<Integer>& coeffs) {
  nlohmann::json out = nlohmann::json::array();
  for (const Integer& c : coeffs) out.push_back(c.str());
  return out;
}

}  // namespace

const char* to_string(Status status) {
  switch (status) {
    case Status::verified: return "verified";
    case Status::counterexample: return "counterexample";
    case Status::skipped: return "skipped";
  }
  return "?";
}

nlohmann::json to_json(const Witness& w) {
  nlohmann::json j{{"role", w.role}, {"graph6", w.graph6}, {"arcs", w.arcs}};
  if (w.polynomial) j["polynomial"] = to_json(*w.polynomial);
  if (w.energy) j["energy"] = *w.energy;
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const Witness& w : r.witnesses) witnesses.push_back(to_json(w));
  return {{"claim", r.claim},
          {"parameters", r.parameters},
          {"status", to_string(r.status)},
          {"witnesses", witnesses},
          {"counts",
           {{"graphs", r.graphs},
            {"orientation_classes", r.orientation_classes},
            {"comparisons", r.comparisons},
            {"violations", r.violations}}},
          {"details", r.details},
          {"wall_seconds", r.wall_seconds}};
}

VerificationReport verify_minimality(int n, int d) {
  if (n < 6 || n > 10) throw std::invalid_argument("verify_minimality needs 6 <= n <= 10");
  if (d < 3 || d > n - 3) throw std::invalid_argument("verify_minimality needs 3 <= d <= n-3");
  const auto start = Clock::now();
  const OrientedGraph reference = bicyclic_B(n, d);
  const SkewPolynomial reference_poly = char_poly_expansion(reference);
  const double reference_energy = skew_energy_spectral(reference);
  const CanonicalForm b_key = canonical_form(reference.base());
  const std::vector<Graph>& members_ref = enumerate_B_nd(n, d);
  const std::vector<Graph> members = members_ref;

  struct Extra {
    std::uint64_t excluded = 0;
    bool is_b = false;
    std::optional<std::vector<Integer>> minima;
    std::optional<std::pair<double, OrientedGraph>> lowest;
  };
  std::vector<Extra> extras(members.size());
  std::vector<Tally> slots(members.size());
  parallel_for(members.size(), [&](std::size_t i) {
    const Graph& g = members[i];
    Tally& t = slots[i];
    Extra& x = extras[i];
    t.graphs = 1;
    x.is_b = canonical_form(g) == b_key;
    for (const OrientedGraph& og : orientation_class_reps(g)) {
      ++t.classes;
      if (x.is_b && all_evenly(og)) {
        ++x.excluded;
        continue;
      }
      const SkewPolynomial p = char_poly_expansion(og);
      const double energy = skew_energy_spectral(og);
      t.expect(reference_poly, p, true, [&] { return reference; }, [&] { return og; });
      if (!(reference_energy < energy - kEnergyMargin)) {
        ++t.violations;
        if (t.witnesses.size() < kMaxWitnesses) t.witnesses.push_back(make_witness("energy", og, "energy not above reference"));
      }
      const auto c = p.coefficients();
      if (!x.minima) x.minima.emplace(c.begin(), c.end());
      for (std::size_t k = 0; k < c.size(); ++k) (*x.minima)[k] = std::min((*x.minima)[k], c[k]);
      if (!x.lowest || energy < x.lowest->first) x.lowest.emplace(energy, og);
    }
  });

  Tally total;
  std::uint64_t excluded = 0, b_found = 0;
  std::optional<std::vector<Integer>> minima;
  std::optional<std::pair<double, OrientedGraph>> lowest;
  for (std::size_t i = 0; i < members.size(); ++i) {
    total.merge(std::move(slots[i]));
    excluded += extras[i].excluded;
    b_found += extras[i].is_b;
    if (extras[i].minima) {
      if (!minima) minima = extras[i].minima;
      for (std::size_t k = 0; k < minima->size(); ++k) (*minima)[k] = std::min((*minima)[k], (*extras[i].minima)[k]);
    }
    if (extras[i].lowest && (!lowest || extras[i].lowest->first < lowest->first)) lowest = extras[i].lowest;
  }
  if (b_found != 1) {
    ++total.violations;
    total.witnesses.push_back(make_witness("reference", reference, "B_{n,d} found " + std::to_string(b_found) +
                                                                       " times in the enumeration"));
  }

  nlohmann::json details{{"reference", to_json(reference_poly)},
                         {"reference_energy", reference_energy},
                         {"excluded_classes", excluded},
                         {"competitors", total.comparisons}};
  if (minima) details["coefficient_minima"] = coefficient_strings(*minima);
  if (lowest) {
    details["min_competitor_energy"] = lowest->first;
    total.witnesses.insert(total.witnesses.begin(), make_witness("min-energy competitor", lowest->second));
  }
  return finish("minimality", {{"n", n}, {"d", d}}, std::move(total), start, std::move(details));
}

VerificationReport check_u_t_identity(int max_n) {
  const auto start = Clock::now();
  Tally t;
  for (int n = 5; n <= max_n; ++n)
    for (int d = 3; d <= n - 2; ++d) {
      ++t.graphs;
      const SkewPolynomial u = char_poly_expansion(unicyclic_U(n, d, CycleSign::minus));
      const SkewPolynomial tree = char_poly_expansion(tree_T(n, d));
      const SkewPolynomial rest = disjoint_union(path_polynomial(d - 3), star_polynomial(n - d - 1));
      for (int i = 0; 2 * i <= n; ++i) {
        ++t.comparisons;
        if (u.a(2 * i) != tree.a(2 * i) + rest.a(2 * i - 2)) {
          ++t.violations;
          if (t.witnesses.size() < kMaxWitnesses)
            t.witnesses.push_back(make_witness("identity", unicyclic_U(n, d, CycleSign::minus),
                                               "coefficient a_" + std::to_string(2 * i) + " at d = " +
                                                   std::to_string(d) + " breaks the identity"));
        }
      }
    }
  return finish("u-t-identity", {{"max_n", max_n}}, std::move(t), start,
                {{"identity", "a_{2i}(U^-_{n,d}) = a_{2i}(T_{n,d}) + a_{2i-2}(P_{d-3} u S_{n-d-1})"}});
}

std::vector<VerificationReport> check_lemmas(int max_n) {
  if (max_n < 6 || max_n > 10) throw std::invalid_argument("check_lemmas needs 6 <= max_n <= 10");
  return {lemma_2_4(max_n),  lemma_2_5(max_n),  lemma_2_6(max_n),  lemma_2_7(max_n),  lemma_2_8(max_n),
          lemma_2_9(max_n),  lemma_2_10(max_n), lemma_2_11(max_n), lemma_2_12(max_n), lemma_2_13(max_n),
          lemma_2_14(max_n), lemma_3_1(max_n),  lemma_3_2(max_n),  lemma_3_3(max_n)};
}

}  // namespace skew
