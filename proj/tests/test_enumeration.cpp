#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "skew/canonical.hpp"
#include "skew/enumeration.hpp"
#include "skew/families.hpp"
#include "skew/graph_io.hpp"
#include "support.hpp"

using namespace skew;

namespace {

// Largest upper-triangle adjacency string over all n! labellings (any fixed
// extremum is an isomorphism invariant).
std::vector<char> brute_force_key(const Graph& g) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> best;
  do {
    // perm[p] = vertex placed at position p
    std::vector<char> bits;
    for (int i = 0; i < g.order(); ++i)
      for (int j = i + 1; j < g.order(); ++j) bits.push_back(g.has_edge(perm[i], perm[j]) ? 1 : 0);
    if (best.empty() || bits > best) best = bits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph shuffled(const Graph& g, std::mt19937& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937 rng(67);
  const Graph c5 = cycle_graph(5).base();
  std::vector<Vertex> perm{0, 1, 2, 3, 4};
  do {
    CHECK(canonical_form(relabel(c5, perm)) == canonical_form(c5));
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_oriented(rng, 1 + trial % 16).base();
    const CanonicalForm key = canonical_form(g);
    CHECK(canonical_form(shuffled(g, rng)) == key);
    CHECK(canonical_form(to_graph(key)) == key);
    CHECK(relabel(g, canonical_labeling(g)) == to_graph(key));
  }
  CHECK_THROWS_AS(canonical_form(path_graph(17).base()), std::invalid_argument);
}

TEST_CASE("canonical forms separate exactly the isomorphism classes up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    // Every graph on n vertices, not only connected ones.
    const auto all = testing::complete_edges(n);
    std::map<std::vector<char>, CanonicalForm> by_brute;
    std::map<CanonicalForm, std::vector<char>> by_key;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < all.size(); ++k)
        if (mask >> k & 1) edges.push_back(all[k]);
      const Graph g(n, edges);
      const auto brute = brute_force_key(g);
      const CanonicalForm key = canonical_form(g);
      auto [it, fresh] = by_brute.emplace(brute, key);
      CHECK(it->second == key);
      auto [jt, fresh2] = by_key.emplace(key, brute);
      CHECK(jt->second == brute);
      if (n == 6 && mask > 2000) break;  // n = 6 has 2^15 graphs; a prefix is enough here
    }
  }
}

TEST_CASE("class sizes match the known counts") {
  const std::vector<std::size_t> trees{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  const std::vector<std::size_t> unicyclic{0, 0, 1, 2, 5, 13, 33, 89, 240, 657, 1806, 5026};
  const std::vector<std::size_t> bicyclic{0, 0, 0, 1, 5, 19, 67, 236, 797, 2678, 8833, 28908};
  for (int n = 1; n <= 12; ++n) {
    CHECK(enumerate_trees(n).size() == trees[n - 1]);
    CHECK(enumerate_unicyclic(n).size() == unicyclic[n - 1]);
    if (n >= 4) CHECK(enumerate_bicyclic(n).size() == bicyclic[n - 1]);
  }
}

TEST_CASE("bicyclic enumeration equals the edge-subset oracle up to 6 vertices") {
  for (int n = 4; n <= 6; ++n) {
    std::set<CanonicalForm> found;
    for (const Graph& g : enumerate_bicyclic(n)) found.insert(canonical_form(g));
    CHECK(found == testing::brute_force_connected(n, n + 1));
  }
  CHECK(testing::brute_force_connected(4, 5).size() == 1);
}

TEST_CASE("enumerations are sorted, duplicate free and canonically labelled") {
  for (int n = 4; n <= 10; ++n) {
    const auto& graphs = enumerate_bicyclic(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const CanonicalForm key = canonical_form(graphs[i]);
      CHECK(to_graph(key) == graphs[i]);
      if (i > 0) CHECK(canonical_form(graphs[i - 1]) < key);
      CHECK(graphs[i].size() == static_cast<std::size_t>(n + 1));
      CHECK(is_connected(graphs[i]));
    }
  }
}

TEST_CASE("enumeration rejects out-of-range orders") {
  CHECK_THROWS_AS(enumerate_bicyclic(3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_bicyclic(13), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_connected(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_B_nd(8, 2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_B_nd(8, 6), std::invalid_argument);
}

TEST_CASE("B(n,d) contains B_{n,d} exactly once and only class-B members of diameter d") {
  for (int n = 6; n <= 11; ++n)
    for (int d = 3; d <= n - 3; ++d) {
      const auto members = enumerate_B_nd(n, d);
      REQUIRE_FALSE(members.empty());
      const CanonicalForm b = canonical_form(bicyclic_B(n, d).base());
      int hits = 0;
      for (const Graph& g : members) {
        hits += canonical_form(g) == b;
        CHECK(g.size() == static_cast<std::size_t>(n + 1));
        CHECK(in_class_B(g));
        CHECK(diameter(g) == d);
      }
      CHECK(hits == 1);
    }
  // Regression values for the two base cases (13 = 12 others plus B_{6,3}).
  CHECK(enumerate_B_nd(6, 3).size() == 13);
  CHECK(enumerate_B_nd(7, 4).size() == 26);
}

TEST_CASE("census output is one graph6 line per graph") {
  const auto graphs = enumerate_B_nd(7, 4);
  std::ostringstream out;
  write_census(out, graphs);
  std::istringstream in(out.str());
  const auto back = read_graph6_lines(in);
  CHECK(back == graphs);
}
