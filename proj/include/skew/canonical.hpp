#pragma once

// Canonical forms of small graphs (n <= 16).
//
// Colour refinement to an equitable partition, then individualisation of each
// vertex of the first non-trivial cell, recursively. Every leaf gives a
// labelling; the key is the lexicographically smallest upper-triangle
// adjacency string among them. Twins (same neighbourhood apart from each
// other) in a cell generate the same subtree and are tried once.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "skew/graph.hpp"

namespace skew {

inline constexpr int kCanonicalMaxOrder = 16;

struct CanonicalForm {
  int n = 0;
  /// Bits of (0,1), (0,2), ..., (0,n-1), (1,2), ... packed most significant first.
  std::array<std::uint64_t, 2> bits{};

  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& c) const noexcept {
    return std::hash<std::uint64_t>{}(c.bits[0] * 0x9e3779b97f4a7c15ULL ^ c.bits[1] ^ static_cast<std::uint64_t>(c.n));
  }
};

/// Throws std::invalid_argument when n > 16.
CanonicalForm canonical_form(const Graph& g);

/// perm[v] = canonical label of v; relabel(g, perm) has key canonical_form(g).
std::vector<Vertex> canonical_labeling(const Graph& g);

/// The graph a key encodes (already canonically labelled).
Graph to_graph(const CanonicalForm& key);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace skew
