#include "skew/char_poly.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include <boost/multiprecision/eigen.hpp>

#include "skew/bareiss.hpp"
#include "skew/structure.hpp"

namespace skew {

namespace {

using Coeffs = std::vector<Integer>;

// +1 for an oddly oriented even cycle, -1 for an evenly oriented one, 0 for
// odd cycles. Parity of forward arcs is the same in both traversal
// directions when the cycle is even.
int cycle_sign(const OrientedGraph& og, const Cycle& cycle) {
  if (cycle.size() % 2 == 1) return 0;
  int forward = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) forward += og.direction(cycle[i], cycle[(i + 1) % cycle.size()]) > 0;
  return forward % 2 == 1 ? 1 : -1;
}

std::uint64_t bit(int k) { return std::uint64_t{1} << k; }

void add_shifted(Coeffs& into, const Coeffs& from, std::size_t shift, long factor) {
  for (std::size_t j = 0; j < from.size() && j + shift < into.size(); ++j) into[j + shift] += from[j] * factor;
}

struct MaskKey {
  std::uint64_t vertices;
  std::uint64_t edges;
  bool operator==(const MaskKey&) const = default;
};

struct MaskKeyHash {
  std::size_t operator()(const MaskKey& k) const {
    return std::hash<std::uint64_t>{}(k.vertices * 0x9E3779B97F4A7C15ull ^ k.edges);
  }
};

struct EvenCycle {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::size_t half_length = 0;
  long weight = 0;  // +2 oddly oriented, -2 evenly oriented
};

// Shared state of both recurrences: masks over the original labelling, so
// every subproblem is an (alive vertices, alive edges) pair.
class Recurrence {
 public:
  explicit Recurrence(const OrientedGraph& og) : og_(og), incident_(og.order(), 0) {
    if (og.order() > 64 || og.size() > 64) throw std::invalid_argument("recurrence routes support at most 64 vertices and 64 edges");
    const Graph& g = og.base();
    for (std::size_t k = 0; k < g.size(); ++k) {
      incident_[g.edge(k).u] |= bit(static_cast<int>(k));
      incident_[g.edge(k).v] |= bit(static_cast<int>(k));
    }
    for (const Cycle& c : all_cycles(g)) {
      const int sign = cycle_sign(og, c);
      if (sign == 0) continue;
      EvenCycle ec;
      for (Vertex v : c) ec.vertices |= bit(v);
      for (std::size_t k : cycle_edges(g, c)) ec.edges |= bit(static_cast<int>(k));
      ec.half_length = c.size() / 2;
      ec.weight = 2 * sign;
      cycles_.push_back(ec);
    }
  }

  std::uint64_t all_vertices() const { return og_.order() == 64 ? ~std::uint64_t{0} : bit(og_.order()) - 1; }
  std::uint64_t all_edges() const { return og_.size() == 64 ? ~std::uint64_t{0} : bit(static_cast<int>(og_.size())) - 1; }

  std::uint64_t edges_touching(std::uint64_t vertices) const {
    std::uint64_t out = 0;
    for (std::uint64_t rest = vertices; rest; rest &= rest - 1) out |= incident_[std::countr_zero(rest)];
    return out;
  }

  const Coeffs& by_edge(std::uint64_t vertices, std::uint64_t edges, int split) {
    const MaskKey key{vertices, edges};
    if (auto it = edge_memo_.find(key); it != edge_memo_.end()) return it->second;
    const int alive = std::popcount(vertices);
    Coeffs out(alive / 2 + 1, 0);
    if (edges == 0) {
      out[0] = 1;
      return edge_memo_.emplace(key, std::move(out)).first->second;
    }
    const Edge& e = og_.base().edge(split);
    const std::uint64_t rest = edges & ~bit(split);
    add_shifted(out, by_edge(vertices, rest, lowest(rest)), 0, 1);
    const std::uint64_t uv = bit(e.u) | bit(e.v);
    const std::uint64_t e_uv = edges & ~edges_touching(uv);
    add_shifted(out, by_edge(vertices & ~uv, e_uv, lowest(e_uv)), 1, 1);
    for (const EvenCycle& c : cycles_) {
      if (!(c.edges & bit(split)) || (c.edges & ~edges)) continue;
      const std::uint64_t e_c = edges & ~edges_touching(c.vertices);
      add_shifted(out, by_edge(vertices & ~c.vertices, e_c, lowest(e_c)), c.half_length, c.weight);
    }
    return edge_memo_.emplace(key, std::move(out)).first->second;
  }

  const Coeffs& by_vertex(std::uint64_t vertices, int split) {
    if (auto it = vertex_memo_.find(vertices); it != vertex_memo_.end()) return it->second;
    const int alive = std::popcount(vertices);
    Coeffs out(alive / 2 + 1, 0);
    if (vertices == 0) {
      out[0] = 1;
      return vertex_memo_.emplace(vertices, std::move(out)).first->second;
    }
    const std::uint64_t without_v = vertices & ~bit(split);
    add_shifted(out, by_vertex(without_v, lowest(without_v)), 0, 1);
    for (Vertex u : og_.base().neighbors(split)) {
      if (!(vertices & bit(u))) continue;
      const std::uint64_t rest = without_v & ~bit(u);
      add_shifted(out, by_vertex(rest, lowest(rest)), 1, 1);
    }
    for (const EvenCycle& c : cycles_) {
      if (!(c.vertices & bit(split)) || (c.vertices & ~vertices)) continue;
      const std::uint64_t rest = vertices & ~c.vertices;
      add_shifted(out, by_vertex(rest, lowest(rest)), c.half_length, c.weight);
    }
    return vertex_memo_.emplace(vertices, std::move(out)).first->second;
  }

 private:
  static int lowest(std::uint64_t mask) { return mask ? std::countr_zero(mask) : 0; }

  const OrientedGraph& og_;
  std::vector<std::uint64_t> incident_;
  std::vector<EvenCycle> cycles_;
  std::unordered_map<MaskKey, Coeffs, MaskKeyHash> edge_memo_;
  std::unordered_map<std::uint64_t, Coeffs> vertex_memo_;
};

}  // namespace

SkewPolynomial char_poly_expansion(const OrientedGraph& og) {
  const Graph& g = og.base();
  const auto cycles = all_cycles(g);
  std::vector<int> weight;
  weight.reserve(cycles.size());
  for (const Cycle& c : cycles) weight.push_back(2 * cycle_sign(og, c));

  Coeffs coeffs(g.order() / 2 + 1, 0);
  for_each_linear_subgraph(g, cycles, g.order(), [&](const LinearSubgraphRef& l) {
    if (l.vertices % 2 != 0) return;
    Integer term = 1;
    for (std::size_t k : l.cycles) {
      if (weight[k] == 0) return;
      term *= weight[k];
    }
    coeffs[l.vertices / 2] += term;
  });
  return SkewPolynomial(g.order(), std::move(coeffs));
}

SkewPolynomial char_poly_recurrence_edge(const OrientedGraph& og, Arc e) {
  const auto k = og.base().edge_index(e.tail, e.head);
  if (!k || og.arc(*k) != e) throw std::invalid_argument("arc is not in the oriented graph");
  Recurrence rec(og);
  return SkewPolynomial(og.order(), rec.by_edge(rec.all_vertices(), rec.all_edges(), static_cast<int>(*k)));
}

SkewPolynomial char_poly_recurrence_vertex(const OrientedGraph& og, Vertex v) {
  if (!og.base().has_vertex(v)) throw std::invalid_argument("vertex out of range");
  Recurrence rec(og);
  return SkewPolynomial(og.order(), rec.by_vertex(rec.all_vertices(), v));
}

SkewPolynomial char_poly_oracle(const OrientedGraph& og) {
  const int n = og.order();
  const auto s = skew_adjacency<Integer>(og);
  std::vector<Integer> values;
  values.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic> m = -s;
    for (int i = 0; i < n; ++i) m(i, i) += k;
    values.push_back(bareiss_determinant(m));
  }
  std::vector<Integer> ascending;
  try {
    ascending = interpolate_at_consecutive_integers<Integer>(values);
  } catch (const std::domain_error&) {
    throw std::logic_error("oracle inconsistency");
  }
  // phi(x) = sum_i a_i x^{n-i}, so a_i is the coefficient of x^{n-i}.
  if (ascending[n] != 1) throw std::logic_error("oracle inconsistency");
  Coeffs even;
  for (int i = 0; i <= n; ++i) {
    const Integer& a_i = ascending[n - i];
    if (i % 2 == 1) {
      if (a_i != 0) throw std::logic_error("oracle inconsistency");
    } else {
      even.push_back(a_i);
    }
  }
  return SkewPolynomial(n, std::move(even));
}

SkewPolynomial char_poly(const OrientedGraph& og, Route route) {
  switch (route) {
    case Route::expansion: return char_poly_expansion(og);
    case Route::edge:
      if (og.size() == 0) return SkewPolynomial::edgeless(og.order());
      return char_poly_recurrence_edge(og, og.arc(0));
    case Route::vertex:
      if (og.order() == 0) return SkewPolynomial::edgeless(0);
      return char_poly_recurrence_vertex(og, 0);
    case Route::oracle: return char_poly_oracle(og);
  }
  throw std::invalid_argument("unknown route");
}

const char* to_string(Route route) {
  switch (route) {
    case Route::expansion: return "expansion";
    case Route::edge: return "edge";
    case Route::vertex: return "vertex";
    case Route::oracle: return "oracle";
  }
  return "unknown";
}

Route route_from_string(std::string_view name) {
  if (name == "expansion") return Route::expansion;
  if (name == "edge") return Route::edge;
  if (name == "vertex") return Route::vertex;
  if (name == "oracle") return Route::oracle;
  throw std::invalid_argument("unknown route: " + std::string(name));
}

}  // namespace skew
