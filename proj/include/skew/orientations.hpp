#pragma once

// Switching of orientations and the classes it induces.
//
// Switching with respect to W reverses every arc with exactly one endpoint in
// W. It preserves the skew spectrum, and along any cycle it reverses an even
// number of arcs, so the parity of forward arcs on a cycle is invariant.

#include <cstdint>
#include <span>
#include <vector>

#include "skew/graph.hpp"
#include "skew/structure.hpp"

namespace skew {

OrientedGraph switched(const OrientedGraph& og, std::span<const Vertex> w);

/// Switches og so that every edge of a BFS spanning forest (roots: smallest
/// vertex of each component) points away from its root. Idempotent.
OrientedGraph normalize_switching(const OrientedGraph& og);

/// Edge indices of the BFS spanning forest used by normalize_switching.
std::vector<std::size_t> bfs_forest_edges(const Graph& g);

/// Directions of the non-forest edges of the normalized orientation, in
/// ascending edge order. Equal keys <=> switching equivalent.
std::vector<std::uint8_t> switching_key(const OrientedGraph& og);

/// Throws std::invalid_argument when the base graphs differ.
bool switching_equivalent(const OrientedGraph& a, const OrientedGraph& b);

struct OrientationClass {
  std::vector<std::size_t> tree_edges;
  std::vector<std::uint8_t> key;
  OrientedGraph representative;
};

/// The 2^(|E|-n+1) switching classes of a connected graph, with forest arcs
/// pointing away from vertex 0 and non-tree edges running through every
/// direction pattern (the first non-tree edge is the most significant bit).
/// Throws std::invalid_argument("graph not connected").
std::vector<OrientationClass> orientation_classes(const Graph& g);
std::vector<OrientedGraph> orientation_class_reps(const Graph& g);

/// Evenly / oddly oriented refer to even cycles; odd cycles report odd_cycle.
enum class CycleParity { evenly, oddly, odd_cycle };

/// Number of arcs pointing along the traversal cycle[0] -> cycle[1] -> ...
int forward_arcs(const OrientedGraph& og, const Cycle& cycle);

/// Throws std::invalid_argument when `cycle` is not a cycle of og's base.
CycleParity cycle_parity(const OrientedGraph& og, const Cycle& cycle);

/// '-' for evenly, '+' for oddly oriented, '*' for odd cycles.
char sign_of(CycleParity parity);

}  // namespace skew
