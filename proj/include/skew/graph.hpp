#pragma once

// Simple undirected graphs and their orientations.
//
// Vertices are labelled 0..n-1. Edges are stored as ordered pairs (u < v) in
// ascending lexicographic order, so an edge has a stable index that the rest
// of the library uses for masks and orientation bits.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace skew {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Normalizes the endpoint order.
  static Edge between(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  bool touches(Vertex w) const { return u == w || v == w; }
  auto operator<=>(const Edge&) const = default;
};

/// A directed edge tail -> head.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  auto operator<=>(const Arc&) const = default;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws std::invalid_argument on self-loops, repeated edges or endpoints >= n.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t k) const { return edges_[k]; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }
  bool has_edge(Vertex a, Vertex b) const;
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// An orientation of a simple graph: one arc per base edge.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  /// forward[k] != 0 means edge k = {u, v} (u < v) is the arc u -> v.
  OrientedGraph(Graph base, std::vector<std::uint8_t> forward);
  /// Builds the base graph from the arcs; throws on loops, duplicates or antiparallel pairs.
  OrientedGraph(int n, std::span<const Arc> arcs);
  OrientedGraph(int n, std::initializer_list<std::pair<int, int>> arcs);

  /// Every edge oriented from the lower to the higher label.
  static OrientedGraph ascending(Graph base);

  const Graph& base() const { return base_; }
  int order() const { return base_.order(); }
  std::size_t size() const { return base_.size(); }

  bool forward(std::size_t k) const { return forward_[k] != 0; }
  const std::vector<std::uint8_t>& forward_bits() const { return forward_; }
  Arc arc(std::size_t k) const;
  std::vector<Arc> arcs() const;

  /// s_{ab}: +1 for the arc a -> b, -1 for b -> a, 0 when a and b are not adjacent.
  int direction(Vertex a, Vertex b) const;

  OrientedGraph with_reversed(std::size_t k) const;

  bool operator==(const OrientedGraph&) const = default;

 private:
  Graph base_;
  std::vector<std::uint8_t> forward_;
};

/// Skew-adjacency matrix S(G^sigma) with s_ij = 1 for the arc i -> j.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> skew_adjacency(const OrientedGraph& og) {
  const Eigen::Index n = og.order();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> s(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) s(i, j) = Scalar(0);
  for (std::size_t k = 0; k < og.size(); ++k) {
    const Arc a = og.arc(k);
    s(a.tail, a.head) = Scalar(1);
    s(a.head, a.tail) = Scalar(-1);
  }
  return s;
}

struct Deletion {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

/// Removes the listed edges and vertices (with incident edges). Surviving
/// vertices are relabelled 0..n'-1 in ascending original order. Throws
/// std::invalid_argument when an item does not exist.
Graph remove_items(const Graph& g, const Deletion& items);
OrientedGraph remove_items(const OrientedGraph& og, const Deletion& items);

/// Vertices of h are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
OrientedGraph disjoint_union(const OrientedGraph& g, const OrientedGraph& h);

/// Relabels vertex v to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);
OrientedGraph relabel(const OrientedGraph& og, std::span<const Vertex> perm);

}  // namespace skew
