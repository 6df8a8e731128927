#include "skew/enumeration.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>

#include "skew/graph_io.hpp"
#include "skew/parallel.hpp"
#include "skew/structure.hpp"

namespace skew {

namespace {

// Path 0 - 1 - ... - len as edges starting from `from`, using fresh vertices
// for the interior and ending at `to`.
void add_path(std::vector<Edge>& edges, int& next, Vertex from, Vertex to, int len) {
  Vertex prev = from;
  for (int i = 1; i < len; ++i) {
    edges.push_back(Edge::between(prev, next));
    prev = next++;
  }
  edges.push_back(Edge::between(prev, to));
}

void add_cycle(std::vector<Edge>& edges, int& next, Vertex at, int len) {
  Vertex prev = at;
  for (int i = 1; i < len; ++i) {
    edges.push_back(Edge::between(prev, next));
    prev = next++;
  }
  edges.push_back(Edge::between(prev, at));
}

// Leafless connected graphs on exactly n vertices with the given cyclomatic number.
std::vector<Graph> cores(int n, int cyclomatic) {
  std::vector<Graph> out;
  if (cyclomatic == 0) {
    if (n == 1) out.emplace_back(1);
    return out;
  }
  if (cyclomatic == 1) {
    if (n >= 3) {
      std::vector<Edge> edges;
      int next = 1;
      add_cycle(edges, next, 0, n);
      out.emplace_back(n, edges);
    }
    return out;
  }
  // Dumbbells: cycles C_a, C_b joined by a path of length l >= 1.
  for (int a = 3; a <= n; ++a)
    for (int b = a; a + b <= n; ++b) {
      const int l = n - a - b + 1;
      if (l < 1) continue;
      std::vector<Edge> edges;
      int next = 2;
      add_cycle(edges, next, 0, a);
      add_path(edges, next, 0, 1, l);
      add_cycle(edges, next, 1, b);
      out.emplace_back(n, edges);
    }
  // Figure eights: C_a and C_b sharing one vertex.
  for (int a = 3; a <= n; ++a) {
    const int b = n + 1 - a;
    if (b < a) break;
    std::vector<Edge> edges;
    int next = 1;
    add_cycle(edges, next, 0, a);
    add_cycle(edges, next, 0, b);
    out.emplace_back(n, edges);
  }
  // Thetas: three internally disjoint paths of lengths p <= q <= r between 0 and 1.
  for (int p = 1; p <= n; ++p)
    for (int q = std::max(p, 2); p + q <= n; ++q) {
      const int r = n + 1 - p - q;
      if (r < q) continue;
      std::vector<Edge> edges;
      int next = 2;
      add_path(edges, next, 0, 1, p);
      add_path(edges, next, 0, 1, q);
      add_path(edges, next, 0, 1, r);
      out.emplace_back(n, edges);
    }
  return out;
}

std::vector<Graph> generate(int n, int cyclomatic);

std::mutex cache_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const std::vector<Graph>>> cache;

const std::vector<Graph>& cached(int n, int cyclomatic) {
  const std::pair<int, int> key{n, cyclomatic};
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto computed = std::make_shared<const std::vector<Graph>>(generate(n, cyclomatic));
  std::lock_guard lock(cache_mutex);
  // Another thread may have won the race; either copy is identical.
  return *cache.emplace(key, std::move(computed)).first->second;
}

std::vector<Graph> generate(int n, int cyclomatic) {
  std::vector<CanonicalForm> keys;
  for (const Graph& core : cores(n, cyclomatic)) keys.push_back(canonical_form(core));
  if (n >= 2) {
    const std::vector<Graph>& smaller = cached(n - 1, cyclomatic);
    std::vector<std::vector<CanonicalForm>> found(smaller.size());
    parallel_for(smaller.size(), [&](std::size_t i) {
      const Graph& h = smaller[i];
      std::vector<CanonicalForm> local;
      for (Vertex v = 0; v < h.order(); ++v) {
        std::vector<Edge> edges = h.edges();
        edges.push_back({v, n - 1});
        local.push_back(canonical_form(Graph(n, edges)));
      }
      std::sort(local.begin(), local.end());
      local.erase(std::unique(local.begin(), local.end()), local.end());
      found[i] = std::move(local);
    });
    for (auto& part : found) keys.insert(keys.end(), part.begin(), part.end());
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<Graph> out;
  out.reserve(keys.size());
  for (const CanonicalForm& k : keys) out.push_back(to_graph(k));
  return out;
}

}  // namespace

const std::vector<Graph>& enumerate_connected(int n, int cyclomatic) {
  if (n < 1 || n > kEnumerationMaxOrder)
    throw std::invalid_argument("enumeration supports 1 <= n <= " + std::to_string(kEnumerationMaxOrder));
  if (cyclomatic < 0 || cyclomatic > 2) throw std::invalid_argument("cyclomatic number must be 0, 1 or 2");
  return cached(n, cyclomatic);
}

const std::vector<Graph>& enumerate_trees(int n) { return enumerate_connected(n, 0); }

const std::vector<Graph>& enumerate_unicyclic(int n) { return enumerate_connected(n, 1); }

const std::vector<Graph>& enumerate_bicyclic(int n) {
  if (n < 4 || n > kEnumerationMaxOrder) throw std::invalid_argument("enumerate_bicyclic needs 4 <= n <= 12");
  return enumerate_connected(n, 2);
}

std::vector<Graph> enumerate_B_nd(int n, int d) {
  if (d < 3 || d > n - 3) throw std::invalid_argument("enumerate_B_nd needs 3 <= d <= n - 3");
  std::vector<Graph> out;
  for (const Graph& g : enumerate_bicyclic(n))
    if (diameter(g) == d && in_class_B(g)) out.push_back(g);
  return out;
}

void write_census(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace skew
