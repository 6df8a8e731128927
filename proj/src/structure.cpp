#include "skew/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>

namespace skew {

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = distances_from(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

int diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int d : distances_from(g, v)) {
      if (d < 0) throw std::invalid_argument("graph not connected");
      best = std::max(best, d);
    }
  }
  return best;
}

int cyclomatic_number(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  int components = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seen[v]) continue;
    ++components;
    std::vector<Vertex> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return static_cast<int>(g.size()) - g.order() + components;
}

namespace {

void extend_cycles(const Graph& g, Vertex start, std::vector<Vertex>& path, std::vector<char>& on_path,
                   std::vector<Cycle>& out) {
  const Vertex u = path.back();
  for (Vertex w : g.neighbors(u)) {
    if (w == start) {
      if (path.size() >= 3 && path[1] < path.back()) out.push_back(path);
    } else if (w > start && !on_path[w]) {
      on_path[w] = 1;
      path.push_back(w);
      extend_cycles(g, start, path, on_path, out);
      path.pop_back();
      on_path[w] = 0;
    }
  }
}

}  // namespace

std::vector<Cycle> all_cycles(const Graph& g) {
  std::vector<Cycle> out;
  std::vector<char> on_path(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<Vertex> path{s};
    on_path[s] = 1;
    extend_cycles(g, s, path, on_path, out);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end(), [](const Cycle& x, const Cycle& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

bool is_cycle_of(const Graph& g, const Cycle& cycle) {
  if (cycle.size() < 3) return false;
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : cycle) {
    if (!g.has_vertex(v) || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

std::vector<std::size_t> cycle_edges(const Graph& g, const Cycle& cycle) {
  if (!is_cycle_of(g, cycle)) throw std::invalid_argument("input is not a cycle of the graph");
  std::vector<std::size_t> out;
  out.reserve(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) out.push_back(*g.edge_index(cycle[i], cycle[(i + 1) % cycle.size()]));
  return out;
}

namespace {

struct BridgeSearch {
  const Graph& g;
  std::vector<int> entry;
  std::vector<int> low;
  std::vector<std::size_t> bridges;
  int clock = 0;

  void visit(Vertex u, std::optional<std::size_t> via) {
    entry[u] = low[u] = clock++;
    for (Vertex w : g.neighbors(u)) {
      const std::size_t k = *g.edge_index(u, w);
      if (via && k == *via) continue;
      if (entry[w] < 0) {
        visit(w, k);
        low[u] = std::min(low[u], low[w]);
        if (low[w] > entry[u]) bridges.push_back(k);
      } else {
        low[u] = std::min(low[u], entry[w]);
      }
    }
  }
};

}  // namespace

std::vector<std::size_t> cut_edges(const Graph& g) {
  BridgeSearch search{g, std::vector<int>(g.order(), -1), std::vector<int>(g.order(), 0), {}};
  for (Vertex v = 0; v < g.order(); ++v)
    if (search.entry[v] < 0) search.visit(v, std::nullopt);
  std::sort(search.bridges.begin(), search.bridges.end());
  return search.bridges;
}

std::vector<Cycle> BicyclicShape::cycles() const {
  std::vector<Cycle> out{cycle_a, cycle_b};
  if (cycle_c) out.push_back(*cycle_c);
  return out;
}

BicyclicShape classify_bicyclic(const Graph& g) {
  if (g.order() == 0 || static_cast<int>(g.size()) != g.order() + 1 || !is_connected(g))
    throw std::invalid_argument("not bicyclic");
  const auto cycles = all_cycles(g);
  BicyclicShape shape;
  shape.cycle_a = cycles.at(0);
  shape.cycle_b = cycles.at(1);
  shape.a = static_cast<int>(shape.cycle_a.size());
  shape.b = static_cast<int>(shape.cycle_b.size());
  std::vector<char> in_a(g.order(), 0);
  for (Vertex v : shape.cycle_a) in_a[v] = 1;
  for (Vertex v : shape.cycle_b) shape.t += in_a[v];

  if (shape.t >= 2) {
    if (cycles.size() != 3) throw std::logic_error("theta graph must have exactly three cycles");
    shape.cycle_c = cycles[2];
    shape.c = static_cast<int>(cycles[2].size());
    if (*shape.c != shape.a + shape.b - 2 * shape.t + 2)
      throw std::logic_error("third cycle length disagrees with c = a + b - 2t + 2");
    return shape;
  }
  if (cycles.size() != 2) throw std::logic_error("graph with edge-disjoint cycles must have exactly two cycles");
  if (shape.t == 1) {
    shape.l = 0;
    return shape;
  }
  // Multi-source BFS from C_a; the first C_b vertex reached gives l.
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue;
  for (Vertex v : shape.cycle_a) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  int l = g.order();
  for (Vertex v : shape.cycle_b) l = std::min(l, dist[v]);
  shape.l = l;
  return shape;
}

bool in_class_B(const BicyclicShape& shape) {
  const bool disjoint_odd_pair = shape.t == 0 && shape.a % 2 == 1 && shape.b % 2 == 1;
  return !(disjoint_odd_pair && (shape.a + shape.b) % 4 == 2);
}

bool in_class_B(const Graph& g) { return in_class_B(classify_bicyclic(g)); }

int LinearSubgraph::vertex_count() const {
  int count = 2 * static_cast<int>(edges.size());
  for (const Cycle& c : cycles) count += static_cast<int>(c.size());
  return count;
}

bool LinearSubgraph::has_odd_cycle() const {
  return std::any_of(cycles.begin(), cycles.end(), [](const Cycle& c) { return c.size() % 2 == 1; });
}

namespace {

class LinearSubgraphWalker {
 public:
  LinearSubgraphWalker(const Graph& g, std::span<const Cycle> cycles, int max_vertices,
                       const std::function<void(const LinearSubgraphRef&)>& visit)
      : g_(g), cycles_(cycles), max_vertices_(max_vertices), visit_(visit), by_start_(g.order()) {
    cycle_masks_.reserve(cycles.size());
    for (std::size_t k = 0; k < cycles.size(); ++k) {
      std::uint64_t mask = 0;
      for (Vertex v : cycles[k]) mask |= std::uint64_t{1} << v;
      cycle_masks_.push_back(mask);
      by_start_[cycles[k].front()].push_back(k);
    }
  }

  void run() { step(0, 0, 0); }

 private:
  void emit(int covered) { visit_(LinearSubgraphRef{covered, edge_stack_, cycle_stack_}); }

  void step(Vertex v, std::uint64_t used, int covered) {
    while (v < g_.order() && ((used >> v) & 1)) ++v;
    if (v >= g_.order() || covered + 2 > max_vertices_) {
      emit(covered);
      return;
    }
    step(v + 1, used, covered);
    const std::uint64_t with_v = used | (std::uint64_t{1} << v);
    for (Vertex w : g_.neighbors(v)) {
      if (w < v || ((used >> w) & 1)) continue;
      edge_stack_.push_back(*g_.edge_index(v, w));
      step(v + 1, with_v | (std::uint64_t{1} << w), covered + 2);
      edge_stack_.pop_back();
    }
    for (std::size_t k : by_start_[v]) {
      const int len = static_cast<int>(cycles_[k].size());
      if ((cycle_masks_[k] & used) != 0 || covered + len > max_vertices_) continue;
      cycle_stack_.push_back(k);
      step(v + 1, used | cycle_masks_[k], covered + len);
      cycle_stack_.pop_back();
    }
  }

  const Graph& g_;
  std::span<const Cycle> cycles_;
  int max_vertices_;
  const std::function<void(const LinearSubgraphRef&)>& visit_;
  std::vector<std::vector<std::size_t>> by_start_;
  std::vector<std::uint64_t> cycle_masks_;
  std::vector<std::size_t> edge_stack_;
  std::vector<std::size_t> cycle_stack_;
};

}  // namespace

void for_each_linear_subgraph(const Graph& g, std::span<const Cycle> cycles, int max_vertices,
                              const std::function<void(const LinearSubgraphRef&)>& visit) {
  if (g.order() > 64) throw std::invalid_argument("linear subgraph enumeration supports at most 64 vertices");
  LinearSubgraphWalker(g, cycles, max_vertices, visit).run();
}

std::vector<LinearSubgraph> evenly_linear_subgraphs(const Graph& g, int i) {
  if (i % 2 != 0) throw std::invalid_argument("vertex count of an evenly linear subgraph must be even");
  if (i < 0 || i > g.order()) throw std::invalid_argument("vertex count out of range");
  const auto cycles = all_cycles(g);
  std::vector<LinearSubgraph> out;
  for_each_linear_subgraph(g, cycles, i, [&](const LinearSubgraphRef& ref) {
    if (ref.vertices != i) return;
    LinearSubgraph l;
    for (std::size_t k : ref.edges) l.edges.push_back(g.edge(k));
    for (std::size_t k : ref.cycles) l.cycles.push_back(cycles[k]);
    std::sort(l.edges.begin(), l.edges.end());
    out.push_back(std::move(l));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace skew
