#include <doctest.h>

#include <map>
#include <random>

#include "skew/enumeration.hpp"
#include "skew/families.hpp"
#include "skew/structure.hpp"
#include "support.hpp"

using namespace skew;

namespace {

const Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});

// Number of edge subsets in which every touched vertex has degree 2 and the
// touched part is connected, i.e. simple cycles of g.
int brute_force_cycle_count(const Graph& g) {
  int count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.size()); ++mask) {
    std::vector<int> deg(g.order(), 0);
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (mask >> k & 1) {
        ++deg[g.edge(k).u];
        ++deg[g.edge(k).v];
        edges.push_back(g.edge(k));
      }
    std::vector<int> relabel(g.order(), -1);
    int used = 0;
    bool ok = true;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (deg[v] == 0) continue;
      ok &= deg[v] == 2;
      relabel[v] = used++;
    }
    if (!ok) continue;
    for (Edge& e : edges) e = Edge::between(relabel[e.u], relabel[e.v]);
    count += testing::connected_by_union_find(used, edges);
  }
  return count;
}

// Linear subgraphs by subset scan: every touched vertex has degree 1 or 2,
// and every component with degree-2 vertices is a cycle (all degree 2).
// Returns counts per covered vertex number.
std::map<int, int> brute_force_linear(const Graph& g) {
  std::map<int, int> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
    std::vector<int> deg(g.order(), 0);
    std::vector<std::vector<Vertex>> adj(g.order());
    for (std::size_t k = 0; k < g.size(); ++k)
      if (mask >> k & 1) {
        const Edge e = g.edge(k);
        ++deg[e.u];
        ++deg[e.v];
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
      }
    bool ok = true;
    std::vector<char> seen(g.order(), 0);
    int covered = 0;
    for (Vertex v = 0; v < g.order() && ok; ++v) {
      if (deg[v] > 2) ok = false;
      if (deg[v] == 0 || seen[v]) continue;
      std::vector<Vertex> stack{v}, comp;
      seen[v] = 1;
      while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (Vertex w : adj[u])
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      covered += static_cast<int>(comp.size());
      const bool has_two = std::any_of(comp.begin(), comp.end(), [&](Vertex u) { return deg[u] == 2; });
      const bool all_two = std::all_of(comp.begin(), comp.end(), [&](Vertex u) { return deg[u] == 2; });
      if (has_two && !all_two) ok = false;
    }
    if (ok) ++out[covered];
  }
  return out;
}

}  // namespace

TEST_CASE("diameter examples and errors") {
  CHECK(diameter(path_graph(5).base()) == 4);
  CHECK(diameter(cycle_graph(4).base()) == 2);
  CHECK(diameter(bicyclic_B(7, 4).base()) == 4);
  CHECK_THROWS_WITH_AS(diameter(Graph(3, {{0, 1}})), "graph not connected", std::invalid_argument);
}

TEST_CASE("BFS distances agree with Floyd-Warshall") {
  std::mt19937 rng(3);
  int checked = 0;
  while (checked < 200) {
    const Graph g = testing::random_oriented(rng, 2 + checked % 9).base();
    if (!is_connected(g)) continue;
    ++checked;
    const auto fw = testing::floyd_warshall(g);
    int ecc_max = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto d = distances_from(g, v);
      for (Vertex w = 0; w < g.order(); ++w) {
        CHECK(d[w] == fw[v][w]);
        CHECK(fw[v][w] == fw[w][v]);
        for (Vertex x = 0; x < g.order(); ++x) CHECK(fw[v][x] <= fw[v][w] + fw[w][x]);
        ecc_max = std::max(ecc_max, d[w]);
      }
    }
    CHECK(diameter(g) == ecc_max);
  }
}

TEST_CASE("all_cycles examples") {
  CHECK(all_cycles(path_graph(6).base()).empty());
  CHECK(all_cycles(tree_T(8, 4).base()).empty());
  const auto c5 = all_cycles(cycle_graph(5).base());
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].size() == 5);
  const auto theta = all_cycles(k23);
  REQUIRE(theta.size() == 3);
  for (const Cycle& c : theta) CHECK(c.size() == 4);
}

TEST_CASE("all_cycles finds each cycle once, in order, against a subset scan") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = testing::random_oriented(rng, 3 + trial % 5).base();
    const auto cycles = all_cycles(g);
    CHECK(static_cast<int>(cycles.size()) == brute_force_cycle_count(g));
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      CHECK(is_cycle_of(g, cycles[i]));
      CHECK(cycles[i][0] == *std::min_element(cycles[i].begin(), cycles[i].end()));
      CHECK(cycles[i][1] < cycles[i].back());
      if (i > 0) {
        const bool ordered = cycles[i - 1].size() < cycles[i].size() ||
                             (cycles[i - 1].size() == cycles[i].size() && cycles[i - 1] < cycles[i]);
        CHECK(ordered);
      }
    }
  }
}

TEST_CASE("classify_bicyclic examples") {
  SUBCASE("two triangles sharing a vertex") {
    const auto s = classify_bicyclic(Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}));
    CHECK(s.t == 1);
    CHECK(s.a == 3);
    CHECK(s.b == 3);
    CHECK(s.l == 0);
    CHECK_FALSE(s.c.has_value());
  }
  SUBCASE("two triangles joined by a 2-edge path") {
    const Graph g(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
    const auto s = classify_bicyclic(g);
    CHECK(s.t == 0);
    CHECK(s.a == 3);
    CHECK(s.b == 3);
    CHECK(s.l == 2);
    CHECK_FALSE(in_class_B(g));
  }
  SUBCASE("K_{2,3}") {
    const auto s = classify_bicyclic(k23);
    CHECK(s.t == 3);
    CHECK(s.a == 4);
    CHECK(s.b == 4);
    CHECK(s.c == 4);
    CHECK_FALSE(s.l.has_value());
    CHECK(s.cycles().size() == 3);
  }
  SUBCASE("errors") {
    CHECK_THROWS_WITH_AS(classify_bicyclic(cycle_graph(5).base()), "not bicyclic", std::invalid_argument);
    CHECK_THROWS_AS(in_class_B(cycle_graph(5).base()), std::invalid_argument);
  }
}

TEST_CASE("class B membership examples") {
  // C_3 and C_5 joined by an edge: 3 + 5 = 8 = 0 mod 4.
  const Graph c3c5(8, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}});
  CHECK(in_class_B(c3c5));
  // C_3 and C_7 joined by an edge: 3 + 7 = 10 = 2 mod 4.
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  for (int i = 3; i < 9; ++i) e.push_back({i, i + 1});
  e.push_back({3, 9});
  CHECK_FALSE(in_class_B(Graph(10, e)));
  CHECK(in_class_B(k23));
}

TEST_CASE("bicyclic shape invariants over every bicyclic graph up to 10 vertices") {
  for (int n = 4; n <= 10; ++n)
    for (const Graph& g : enumerate_bicyclic(n)) {
      const auto s = classify_bicyclic(g);
      const auto cycles = all_cycles(g);
      CHECK(s.a <= s.b);
      if (s.t >= 2) {
        REQUIRE(s.c.has_value());
        CHECK(*s.c == s.a + s.b - 2 * s.t + 2);
        CHECK_FALSE(s.l.has_value());
        CHECK(cycles.size() == 3);
        CHECK(is_cycle_of(g, *s.cycle_c));
        CHECK(in_class_B(g));
      } else {
        CHECK_FALSE(s.c.has_value());
        REQUIRE(s.l.has_value());
        CHECK((s.t == 1 ? *s.l == 0 : *s.l >= 1));
        CHECK(cycles.size() == 2);
        const bool excluded = s.t == 0 && s.a % 2 == 1 && s.b % 2 == 1 && (s.a + s.b) % 4 == 2;
        CHECK(in_class_B(g) == !excluded);
      }
    }
}

TEST_CASE("evenly linear subgraph examples") {
  CHECK(evenly_linear_subgraphs(path_graph(3).base(), 2).size() == 2);
  CHECK(evenly_linear_subgraphs(cycle_graph(4).base(), 4).size() == 3);
  CHECK(evenly_linear_subgraphs(cycle_graph(3).base(), 2).size() == 3);
  CHECK(evenly_linear_subgraphs(cycle_graph(3).base(), 0).size() == 1);
  CHECK_THROWS_AS(evenly_linear_subgraphs(cycle_graph(3).base(), 1), std::invalid_argument);
  CHECK_THROWS_AS(evenly_linear_subgraphs(cycle_graph(3).base(), 4), std::invalid_argument);
}

TEST_CASE("linear subgraphs match the edge-subset oracle up to 8 vertices") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = testing::random_oriented(rng, 2 + trial % 7).base();
    if (g.size() > 16) continue;
    const auto expected = brute_force_linear(g);
    for (int i = 0; i <= g.order(); i += 2) {
      const auto found = evenly_linear_subgraphs(g, i);
      const auto it = expected.find(i);
      CHECK(found.size() == static_cast<std::size_t>(it == expected.end() ? 0 : it->second));
      for (const auto& L : found) CHECK(L.vertex_count() == i);
    }
  }
}

TEST_CASE("cut edges are exactly the edges whose removal disconnects") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_oriented(rng, 2 + trial % 8).base();
    if (!is_connected(g)) continue;
    const auto cuts = cut_edges(g);
    for (std::size_t k = 0; k < g.size(); ++k) {
      const bool bridge = !is_connected(remove_items(g, Deletion{{}, {g.edge(k)}}));
      CHECK(bridge == std::binary_search(cuts.begin(), cuts.end(), k));
    }
  }
  CHECK(cyclomatic_number(k23) == 2);
  CHECK(cyclomatic_number(Graph(4)) == 0);
}
