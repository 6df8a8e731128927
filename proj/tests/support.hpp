#pragma once

// Independent oracles and the shared test corpus.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "skew/canonical.hpp"
#include "skew/enumeration.hpp"
#include "skew/graph.hpp"
#include "skew/orientations.hpp"
#include "skew/structure.hpp"

namespace skew::testing {

inline std::vector<Edge> complete_edges(int n) {
  std::vector<Edge> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

// Union-find connectivity, independent of the BFS in the library.
inline bool connected_by_union_find(int n, const std::vector<Edge>& edges) {
  if (n == 0) return true;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = n;
  for (const Edge& e : edges) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

// Canonical forms of every connected graph on n vertices with m edges, by
// scanning all m-subsets of K_n.
inline std::set<CanonicalForm> brute_force_connected(int n, int m) {
  const auto all = complete_edges(n);
  std::set<CanonicalForm> out;
  std::vector<char> pick(all.size(), 0);
  if (m > static_cast<int>(all.size())) return out;
  std::fill(pick.end() - m, pick.end(), 1);
  do {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (pick[k]) edges.push_back(all[k]);
    if (connected_by_union_find(n, edges)) out.insert(canonical_form(Graph(n, edges)));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

// Every connected graph on n vertices (n <= 7), by adding one edge at a time
// and deduplicating isomorphs at every size.
inline std::vector<Graph> all_connected_graphs(int n) {
  std::set<CanonicalForm> level{canonical_form(Graph(n))};
  std::vector<Graph> out;
  const auto all = complete_edges(n);
  for (std::size_t m = 0; m <= all.size(); ++m) {
    std::set<CanonicalForm> next;
    for (const CanonicalForm& key : level) {
      const Graph g = to_graph(key);
      if (is_connected(g)) out.push_back(g);
      for (const Edge& e : all) {
        if (g.has_edge(e.u, e.v)) continue;
        std::vector<Edge> edges = g.edges();
        edges.push_back(e);
        next.insert(canonical_form(Graph(n, edges)));
      }
    }
    level = std::move(next);
  }
  return out;
}

inline OrientedGraph random_oriented(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> density(0.15, 0.85);
  std::bernoulli_distribution coin(0.5);
  const double p = density(rng);
  std::bernoulli_distribution keep(p);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (keep(rng)) arcs.push_back(coin(rng) ? Arc{i, j} : Arc{j, i});
  return OrientedGraph(n, arcs);
}

inline OrientedGraph random_orientation(std::mt19937& rng, const Graph& g) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::uint8_t> bits(g.size());
  for (auto& b : bits) b = coin(rng);
  return OrientedGraph(g, std::move(bits));
}

// Every orientation class of every unicyclic and bicyclic graph with n <= max_n.
inline std::vector<OrientedGraph> cyclic_corpus(int max_n) {
  std::vector<OrientedGraph> out;
  for (int n = 3; n <= max_n; ++n)
    for (const Graph& g : enumerate_unicyclic(n))
      for (auto& og : orientation_class_reps(g)) out.push_back(std::move(og));
  for (int n = 4; n <= max_n; ++n)
    for (const Graph& g : enumerate_bicyclic(n))
      for (auto& og : orientation_class_reps(g)) out.push_back(std::move(og));
  return out;
}

// The acceptance corpus: cyclic_corpus(8) plus `random_count` random oriented
// graphs on 1..8 vertices (fixed seed).
inline std::vector<OrientedGraph> full_corpus(int random_count = 500) {
  std::vector<OrientedGraph> out = cyclic_corpus(8);
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> order(1, 8);
  for (int i = 0; i < random_count; ++i) out.push_back(random_oriented(rng, order(rng)));
  return out;
}

// Edge masks of all cuts delta(W), W subset of V (n <= 20).
inline std::set<std::uint64_t> cut_space(const Graph& g) {
  std::set<std::uint64_t> cuts;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << g.order()); ++w) {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < g.size(); ++k)
      if ((w >> g.edge(k).u & 1) != (w >> g.edge(k).v & 1)) mask |= std::uint64_t{1} << k;
    cuts.insert(mask);
  }
  return cuts;
}

inline std::uint64_t orientation_mask(const OrientedGraph& og) {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < og.size(); ++k)
    if (og.forward(k)) mask |= std::uint64_t{1} << k;
  return mask;
}

// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

}  // namespace skew::testing
