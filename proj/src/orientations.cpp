#include "skew/orientations.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace skew {

OrientedGraph switched(const OrientedGraph& og, std::span<const Vertex> w) {
  std::vector<char> inside(og.order(), 0);
  for (Vertex v : w) {
    if (!og.base().has_vertex(v)) throw std::invalid_argument("switching set contains a vertex out of range");
    inside[v] = 1;
  }
  std::vector<std::uint8_t> bits = og.forward_bits();
  for (std::size_t k = 0; k < og.size(); ++k) {
    const Edge& e = og.base().edge(k);
    if (inside[e.u] != inside[e.v]) bits[k] ^= 1;
  }
  return OrientedGraph(og.base(), std::move(bits));
}

namespace {

// BFS forest as (vertex order, parent, parent edge index).
struct Forest {
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
  std::vector<std::size_t> parent_edge;
};

Forest bfs_forest(const Graph& g) {
  Forest f{{}, std::vector<Vertex>(g.order(), -1), std::vector<std::size_t>(g.order(), 0)};
  std::vector<char> seen(g.order(), 0);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      f.order.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (seen[w]) continue;
        seen[w] = 1;
        f.parent[w] = u;
        f.parent_edge[w] = *g.edge_index(u, w);
        queue.push_back(w);
      }
    }
  }
  return f;
}

}  // namespace

std::vector<std::size_t> bfs_forest_edges(const Graph& g) {
  const Forest f = bfs_forest(g);
  std::vector<std::size_t> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (f.parent[v] >= 0) out.push_back(f.parent_edge[v]);
  std::sort(out.begin(), out.end());
  return out;
}

OrientedGraph normalize_switching(const OrientedGraph& og) {
  const Forest f = bfs_forest(og.base());
  // flip[v] = 1 puts v in the switching set.
  std::vector<char> flip(og.order(), 0);
  for (Vertex v : f.order) {
    if (f.parent[v] < 0) continue;
    const bool away_from_root = og.arc(f.parent_edge[v]).head == v;
    flip[v] = away_from_root ? flip[f.parent[v]] : static_cast<char>(!flip[f.parent[v]]);
  }
  std::vector<Vertex> w;
  for (Vertex v = 0; v < og.order(); ++v)
    if (flip[v]) w.push_back(v);
  return switched(og, w);
}

std::vector<std::uint8_t> switching_key(const OrientedGraph& og) {
  const OrientedGraph normal = normalize_switching(og);
  const auto tree = bfs_forest_edges(og.base());
  std::vector<std::uint8_t> key;
  for (std::size_t k = 0; k < og.size(); ++k)
    if (!std::binary_search(tree.begin(), tree.end(), k)) key.push_back(normal.forward_bits()[k]);
  return key;
}

bool switching_equivalent(const OrientedGraph& a, const OrientedGraph& b) {
  if (!(a.base() == b.base())) throw std::invalid_argument("orientations of different graphs");
  return switching_key(a) == switching_key(b);
}

std::vector<OrientationClass> orientation_classes(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph not connected");
  const Forest f = bfs_forest(g);
  const auto tree = bfs_forest_edges(g);
  std::vector<std::uint8_t> base_bits(g.size(), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    if (f.parent[v] >= 0) base_bits[f.parent_edge[v]] = f.parent[v] < v ? 1 : 0;
  std::vector<std::size_t> free_edges;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (!std::binary_search(tree.begin(), tree.end(), k)) free_edges.push_back(k);
  if (free_edges.size() >= 31) throw std::invalid_argument("too many orientation classes to enumerate");

  std::vector<OrientationClass> out;
  const std::size_t count = std::size_t{1} << free_edges.size();
  out.reserve(count);
  for (std::size_t pattern = 0; pattern < count; ++pattern) {
    std::vector<std::uint8_t> bits = base_bits;
    std::vector<std::uint8_t> key(free_edges.size());
    for (std::size_t j = 0; j < free_edges.size(); ++j) {
      key[j] = (pattern >> (free_edges.size() - 1 - j)) & 1;
      bits[free_edges[j]] = key[j];
    }
    out.push_back({tree, std::move(key), OrientedGraph(g, std::move(bits))});
  }
  return out;
}

std::vector<OrientedGraph> orientation_class_reps(const Graph& g) {
  std::vector<OrientedGraph> out;
  for (auto& c : orientation_classes(g)) out.push_back(std::move(c.representative));
  return out;
}

int forward_arcs(const OrientedGraph& og, const Cycle& cycle) {
  int forward = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) forward += og.direction(cycle[i], cycle[(i + 1) % cycle.size()]) > 0;
  return forward;
}

CycleParity cycle_parity(const OrientedGraph& og, const Cycle& cycle) {
  if (!is_cycle_of(og.base(), cycle)) throw std::invalid_argument("input is not a cycle of the graph");
  if (cycle.size() % 2 == 1) return CycleParity::odd_cycle;
  return forward_arcs(og, cycle) % 2 == 0 ? CycleParity::evenly : CycleParity::oddly;
}

char sign_of(CycleParity parity) {
  switch (parity) {
    case CycleParity::evenly: return '-';
    case CycleParity::oddly: return '+';
    case CycleParity::odd_cycle: return '*';
  }
  return '?';
}

}  // namespace skew
