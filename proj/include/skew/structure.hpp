#pragma once

// Structural queries on undirected graphs: distances, cycles, the bicyclic
// taxonomy and linear subgraphs.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "skew/graph.hpp"

namespace skew {

/// A simple cycle as a vertex sequence. Cycles returned by all_cycles() start
/// at their smallest vertex and run towards the smaller of its two neighbours.
using Cycle = std::vector<Vertex>;

bool is_connected(const Graph& g);

/// Breadth-first distances from source; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex source);

/// Throws std::invalid_argument("graph not connected") on disconnected input.
int diameter(const Graph& g);

/// |E| - |V| + (number of components).
int cyclomatic_number(const Graph& g);

/// Every simple cycle once, sorted by length, then lexicographically.
std::vector<Cycle> all_cycles(const Graph& g);

/// Edge indices of the cycle's edges, in traversal order.
std::vector<std::size_t> cycle_edges(const Graph& g, const Cycle& cycle);

/// True when the vertex list traces a cycle of g (length >= 3, distinct vertices).
bool is_cycle_of(const Graph& g, const Cycle& cycle);

/// Edges that lie on no cycle.
std::vector<std::size_t> cut_edges(const Graph& g);

/// The (t, a, b, c, l) shape of a connected graph with |E| = |V| + 1.
///
/// C_a and C_b are the first two cycles in all_cycles() order, so a <= b.
/// When the two share t >= 2 vertices the graph is a theta graph with a third
/// cycle C_c, c = a + b - 2t + 2. Otherwise l is the length of the shortest
/// path joining the cycles (0 when they share a vertex).
struct BicyclicShape {
  int t = 0;
  int a = 0;
  int b = 0;
  std::optional<int> c;
  std::optional<int> l;
  Cycle cycle_a;
  Cycle cycle_b;
  std::optional<Cycle> cycle_c;

  /// Cycles in (C_a, C_b[, C_c]) order.
  std::vector<Cycle> cycles() const;
};

/// Throws std::invalid_argument("not bicyclic") unless g is connected with |E| = |V| + 1.
BicyclicShape classify_bicyclic(const Graph& g);

/// No two vertex-disjoint odd cycles with lengths summing to 2 mod 4.
bool in_class_B(const Graph& g);
bool in_class_B(const BicyclicShape& shape);

/// Vertex-disjoint union of single edges and cycles.
struct LinearSubgraph {
  std::vector<Edge> edges;
  std::vector<Cycle> cycles;

  int vertex_count() const;
  bool has_odd_cycle() const;
  auto operator<=>(const LinearSubgraph&) const = default;
};

/// All linear subgraphs covering exactly i vertices (i even, 0 <= i <= n).
/// Cycles of any length are included; members with odd cycles are the ones
/// whose contribution to the skew characteristic polynomial cancels.
/// Throws std::invalid_argument for odd or out-of-range i, or n > 64.
std::vector<LinearSubgraph> evenly_linear_subgraphs(const Graph& g, int i);

/// One linear subgraph during enumeration, as indices into g.edges() and the
/// cycle list passed to for_each_linear_subgraph().
struct LinearSubgraphRef {
  int vertices = 0;
  std::span<const std::size_t> edges;
  std::span<const std::size_t> cycles;
};

/// Visits every linear subgraph (including the empty one) with at most
/// max_vertices vertices. `cycles` must be all_cycles(g). Branches on the
/// lowest undecided vertex: leave it uncovered, match it along an edge, or
/// route a cycle whose smallest vertex it is. Requires n <= 64.
void for_each_linear_subgraph(const Graph& g, std::span<const Cycle> cycles, int max_vertices,
                              const std::function<void(const LinearSubgraphRef&)>& visit);

}  // namespace skew
