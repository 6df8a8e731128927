#include "skew/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace skew {

Graph::Graph(int n) : n_(n), adjacency_(n < 0 ? 0 : n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u == raw.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(raw.u));
    const Edge e = Edge::between(raw.u, raw.v);
    if (e.u < 0 || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(raw.u) + "," +
                                  std::to_string(raw.v) + "}");
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("repeated edge");
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

namespace {

std::vector<Edge> to_edges(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (auto [a, b] : pairs) out.push_back({a, b});
  return out;
}

}  // namespace

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n, to_edges(edges)) {}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b || !has_vertex(a) || !has_vertex(b)) return std::nullopt;
  const Edge e = Edge::between(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

OrientedGraph::OrientedGraph(Graph base, std::vector<std::uint8_t> forward)
    : base_(std::move(base)), forward_(std::move(forward)) {
  if (forward_.size() != base_.size())
    throw std::invalid_argument("orientation must assign exactly one arc per edge");
  for (auto& bit : forward_) bit = bit ? 1 : 0;
}

OrientedGraph::OrientedGraph(int n, std::span<const Arc> arcs) {
  std::vector<Edge> edges;
  edges.reserve(arcs.size());
  for (const Arc& a : arcs) edges.push_back({a.tail, a.head});
  base_ = Graph(n, edges);
  forward_.assign(base_.size(), 0);
  for (const Arc& a : arcs) forward_[*base_.edge_index(a.tail, a.head)] = a.tail < a.head ? 1 : 0;
}

namespace {

std::vector<Arc> to_arcs(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Arc> out;
  out.reserve(pairs.size());
  for (auto [a, b] : pairs) out.push_back({a, b});
  return out;
}

}  // namespace

OrientedGraph::OrientedGraph(int n, std::initializer_list<std::pair<int, int>> arcs)
    : OrientedGraph(n, to_arcs(arcs)) {}

OrientedGraph OrientedGraph::ascending(Graph base) {
  std::vector<std::uint8_t> bits(base.size(), 1);
  return OrientedGraph(std::move(base), std::move(bits));
}

Arc OrientedGraph::arc(std::size_t k) const {
  const Edge& e = base_.edge(k);
  return forward_[k] ? Arc{e.u, e.v} : Arc{e.v, e.u};
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(size());
  for (std::size_t k = 0; k < size(); ++k) out.push_back(arc(k));
  return out;
}

int OrientedGraph::direction(Vertex a, Vertex b) const {
  const auto k = base_.edge_index(a, b);
  if (!k) return 0;
  return arc(*k).tail == a ? 1 : -1;
}

OrientedGraph OrientedGraph::with_reversed(std::size_t k) const {
  OrientedGraph out = *this;
  out.forward_.at(k) ^= 1;
  return out;
}

namespace {

// Maps old labels to compacted new ones (-1 for removed) and the surviving edge
// indices, validating every requested item.
struct Survivors {
  std::vector<Vertex> new_label;
  std::vector<std::size_t> kept_edges;
  int count = 0;
};

Survivors survivors(const Graph& g, const Deletion& items) {
  std::vector<char> dead_vertex(g.order(), 0);
  for (Vertex v : items.vertices) {
    if (!g.has_vertex(v)) throw std::invalid_argument("no such vertex: " + std::to_string(v));
    dead_vertex[v] = 1;
  }
  std::vector<char> dead_edge(g.size(), 0);
  for (const Edge& e : items.edges) {
    const auto k = g.edge_index(e.u, e.v);
    if (!k)
      throw std::invalid_argument("no such edge: {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "}");
    dead_edge[*k] = 1;
  }
  Survivors s;
  s.new_label.assign(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!dead_vertex[v]) s.new_label[v] = s.count++;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Edge& e = g.edge(k);
    if (!dead_edge[k] && !dead_vertex[e.u] && !dead_vertex[e.v]) s.kept_edges.push_back(k);
  }
  return s;
}

}  // namespace

Graph remove_items(const Graph& g, const Deletion& items) {
  const Survivors s = survivors(g, items);
  std::vector<Edge> edges;
  for (std::size_t k : s.kept_edges) edges.push_back({s.new_label[g.edge(k).u], s.new_label[g.edge(k).v]});
  return Graph(s.count, edges);
}

OrientedGraph remove_items(const OrientedGraph& og, const Deletion& items) {
  const Survivors s = survivors(og.base(), items);
  std::vector<Arc> arcs;
  for (std::size_t k : s.kept_edges) {
    const Arc a = og.arc(k);
    arcs.push_back({s.new_label[a.tail], s.new_label[a.head]});
  }
  return OrientedGraph(s.count, arcs);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.push_back({e.u + g.order(), e.v + g.order()});
  return Graph(g.order() + h.order(), edges);
}

OrientedGraph disjoint_union(const OrientedGraph& g, const OrientedGraph& h) {
  std::vector<Arc> arcs = g.arcs();
  for (const Arc& a : h.arcs()) arcs.push_back({a.tail + g.order(), a.head + g.order()});
  return OrientedGraph(g.order() + h.order(), arcs);
}

namespace {

void check_permutation(int n, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation has wrong length");
  std::vector<char> seen(n, 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = 1;
  }
}

}  // namespace

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  check_permutation(g.order(), perm);
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(g.order(), edges);
}

OrientedGraph relabel(const OrientedGraph& og, std::span<const Vertex> perm) {
  check_permutation(og.order(), perm);
  std::vector<Arc> arcs;
  arcs.reserve(og.size());
  for (const Arc& a : og.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
  return OrientedGraph(og.order(), arcs);
}

}  // namespace skew
