#include "skew/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace skew {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {
    if (n_ > kCanonicalMaxOrder) throw std::invalid_argument("canonical_form supports at most 16 vertices");
    adj_.assign(n_, 0);
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= 1u << e.v;
      adj_[e.v] |= 1u << e.u;
    }
  }

  void run() {
    Cells all(1);
    for (Vertex v = 0; v < n_; ++v) all[0].push_back(v);
    if (n_ == 0) all.clear();
    search(refine(std::move(all)));
  }

  const CanonicalForm& best() const { return best_; }
  const std::vector<Vertex>& best_labeling() const { return best_perm_; }

 private:
  // Splits cells by the number of neighbours in every cell until stable.
  // Sub-cells keep the order of their signatures, so the result depends only
  // on the partition's structure, never on vertex names.
  Cells refine(Cells cells) const {
    std::vector<int> cell_of(n_);
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (Vertex v : cells[c]) cell_of[v] = static_cast<int>(c);
      Cells next;
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, Vertex>> sig;
        for (Vertex v : cell) {
          std::vector<int> counts(cells.size(), 0);
          for (Vertex w : g_.neighbors(v)) ++counts[cell_of[w]];
          sig.emplace_back(std::move(counts), v);
        }
        std::sort(sig.begin(), sig.end());
        next.push_back({sig[0].second});
        for (std::size_t i = 1; i < sig.size(); ++i) {
          if (sig[i].first != sig[i - 1].first) next.emplace_back();
          next.back().push_back(sig[i].second);
        }
      }
      if (next.size() == cells.size()) return next;
      cells = std::move(next);
    }
  }

  bool twins(Vertex a, Vertex b) const {
    const std::uint32_t mask = ~((1u << a) | (1u << b));
    return (adj_[a] & mask) == (adj_[b] & mask);
  }

  void search(const Cells& cells) {
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t index = static_cast<std::size_t>(target - cells.begin());
    std::vector<Vertex> tried;
    for (Vertex v : *target) {
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Cells split;
      split.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != index) {
          split.push_back(cells[c]);
          continue;
        }
        split.push_back({v});
        split.emplace_back();
        for (Vertex w : cells[c])
          if (w != v) split.back().push_back(w);
      }
      search(refine(std::move(split)));
    }
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> at(n_);
    for (std::size_t p = 0; p < cells.size(); ++p) at[p] = cells[p][0];
    CanonicalForm key{n_, {}};
    int bit = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j, ++bit)
        if (adj_[at[i]] >> at[j] & 1u) key.bits[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
    if (!have_best_ || key < best_) {
      have_best_ = true;
      best_ = key;
      best_perm_.assign(n_, 0);
      for (int p = 0; p < n_; ++p) best_perm_[at[p]] = p;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint32_t> adj_;
  bool have_best_ = false;
  CanonicalForm best_;
  std::vector<Vertex> best_perm_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  Canonizer c(g);
  c.run();
  return c.best();
}

std::vector<Vertex> canonical_labeling(const Graph& g) {
  Canonizer c(g);
  c.run();
  return c.best_labeling();
}

Graph to_graph(const CanonicalForm& key) {
  if (key.n < 0 || key.n > kCanonicalMaxOrder) throw std::invalid_argument("bad canonical form order");
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < key.n; ++i)
    for (int j = i + 1; j < key.n; ++j, ++bit)
      if (key.bits[bit / 64] >> (63 - bit % 64) & 1u) edges.push_back({i, j});
  return Graph(key.n, edges);
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace skew
