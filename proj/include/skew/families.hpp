#pragma once

// Named graph families: paths, stars, cycles, and the extremal tree T(n,d),
// unicyclic U(n,d) and bicyclic B(n,d) graphs with prescribed cycle signs.
//
// Labelling is deterministic: path spine first, then the cycle / K_{2,3}
// core, then pendant vertices. Tree arcs run from the lower to the higher
// label.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skew/graph.hpp"
#include "skew/polynomial.hpp"

namespace skew {

enum class FamilyKind { path, star, cycle, tree, unicyclic, bicyclic };

/// '-' = evenly oriented, '+' = oddly oriented (for even cycles).
enum class CycleSign { minus, plus };

struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  int n = 1;
  std::optional<int> d;
  /// One sign per cycle, in classify_bicyclic() order for B.
  std::vector<CycleSign> orientation;

  bool operator==(const FamilySpec&) const = default;
};

/// "B:n=7,d=4,orient=---", "U:n=9,d=5,orient=-", "T:n=8,d=3", "P:n=2", "S:n=5",
/// "C:n=4,orient=+". Throws ParseError with the offending position.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// Throws std::invalid_argument for out-of-range parameters, and
/// std::invalid_argument("orientation not realizable") for impossible sign
/// triples on B (the number of '+' cycles of K_{2,3} is even).
OrientedGraph build(const FamilySpec& spec);

/// Re-derives order, size, diameter, cycle structure and cycle signs from og.
bool verify_family_shape(const OrientedGraph& og, const FamilySpec& spec);

OrientedGraph path_graph(int n);
OrientedGraph star_graph(int n);
OrientedGraph cycle_graph(int n, CycleSign sign = CycleSign::minus);
OrientedGraph tree_T(int n, int d);
OrientedGraph unicyclic_U(int n, int d, CycleSign sign = CycleSign::minus);
OrientedGraph bicyclic_B(int n, int d, CycleSign a = CycleSign::minus, CycleSign b = CycleSign::minus,
                         CycleSign c = CycleSign::minus);

/// phi(P_k) for k >= 0 (P_0 is the empty graph, phi = 1) and phi(S_k) for
/// k >= 1 (S_1 is a single vertex). Used for the small degenerate terms in
/// coefficient identities.
SkewPolynomial path_polynomial(int k);
SkewPolynomial star_polynomial(int k);

}  // namespace skew
