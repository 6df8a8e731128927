#pragma once

// Connected graphs of cyclomatic number 0, 1 and 2 up to isomorphism.
//
// A connected graph with cyclomatic number k either has no leaves (its own
// 2-core: a single vertex, a cycle, or a dumbbell / figure-eight / theta
// graph) or arises from one on n - 1 vertices by attaching a leaf. Each class
// is built from those two sources and deduplicated by canonical form.
// Results are cached per (n, k), sorted by canonical form, and canonically
// labelled.

#include <iosfwd>
#include <vector>

#include "skew/canonical.hpp"
#include "skew/graph.hpp"

namespace skew {

inline constexpr int kEnumerationMaxOrder = 12;

/// 1 <= n <= 12, 0 <= cyclomatic <= 2; otherwise std::invalid_argument.
const std::vector<Graph>& enumerate_connected(int n, int cyclomatic);

const std::vector<Graph>& enumerate_trees(int n);
const std::vector<Graph>& enumerate_unicyclic(int n);

/// Every connected graph with n vertices and n + 1 edges, once. 4 <= n <= 12.
const std::vector<Graph>& enumerate_bicyclic(int n);

/// Members of enumerate_bicyclic(n) in class B with diameter d. 3 <= d <= n - 3.
std::vector<Graph> enumerate_B_nd(int n, int d);

/// One graph6 line per graph.
void write_census(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace skew
