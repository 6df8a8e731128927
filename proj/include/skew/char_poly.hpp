#pragma once

// Four independent routes to the skew characteristic polynomial
// phi(G^sigma; x) = det(xI - S(G^sigma)).

#include <string_view>

#include "skew/graph.hpp"
#include "skew/polynomial.hpp"

namespace skew {

/// Sum over linear subgraphs L covering i vertices of (-2)^{p_e(L)} 2^{p_o(L)},
/// where p_e / p_o count evenly / oddly oriented cycles of L. Subgraphs that
/// contain an odd cycle contribute nothing (the two traversals of an odd
/// cycle cancel in the determinant).
SkewPolynomial char_poly_expansion(const OrientedGraph& og);

/// Edge-deletion recurrence, split first on arc e:
///   a_i(G) = a_i(G-e) + a_{i-2}(G-u-v) + 2 sum_{e in C, C oddly} a_{i-|C|}(G-V(C))
///                                      - 2 sum_{e in C, C evenly} a_{i-|C|}(G-V(C)).
/// Subproblems split on their lowest edge and are memoised.
/// Throws std::invalid_argument when e is not an arc of og; requires n, m <= 64.
SkewPolynomial char_poly_recurrence_edge(const OrientedGraph& og, Arc e);

/// Vertex-deletion recurrence, split first on v:
///   a_i(G) = a_i(G-v) + sum_{u in N(v)} a_{i-2}(G-u-v) + 2 sum_{v in C, oddly} ... - 2 sum_{v in C, evenly} ...
/// Throws std::invalid_argument when v is out of range; requires n <= 64.
SkewPolynomial char_poly_recurrence_vertex(const OrientedGraph& og, Vertex v);

/// det(kI - S) for k = 0..n by Bareiss elimination over exact integers,
/// followed by exact interpolation. Throws std::logic_error("oracle
/// inconsistency") if an odd coefficient is nonzero or the leading one is not 1.
SkewPolynomial char_poly_oracle(const OrientedGraph& og);

enum class Route { expansion, edge, vertex, oracle };

/// Dispatch by route; the recurrences split on the first arc / vertex 0.
SkewPolynomial char_poly(const OrientedGraph& og, Route route = Route::expansion);

const char* to_string(Route route);
/// Throws std::invalid_argument for unknown names.
Route route_from_string(std::string_view name);

}  // namespace skew
