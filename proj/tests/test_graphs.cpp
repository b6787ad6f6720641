#include <algorithm>
#include <numeric>
#include <random>

#include "combinorm/errors.hpp"
#include "combinorm/graph.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace combinorm;
using testing_support::all_subsets;
using testing_support::random_graph;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> es;
  for (auto [a, b] : g.edges()) es.emplace_back(perm[a - 1], perm[b - 1]);
  return Graph(g.vertices(), es);
}

Poset random_poset(std::mt19937_64& rng, int n) {
  // Random DAG on 1..n (edges i→j only for i<j) closed transitively.
  std::bernoulli_distribution coin(0.35);
  std::vector<std::vector<bool>> r(n + 1, std::vector<bool>(n + 1, false));
  for (int i = 1; i <= n; ++i) {
    r[i][i] = true;
    for (int j = i + 1; j <= n; ++j) r[i][j] = coin(rng);
  }
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) r[i][j] = r[i][j] || (r[i][k] && r[k][j]);
    }
  }
  IdSet el;
  std::set<std::pair<int, int>> rel;
  for (int i = 1; i <= n; ++i) {
    el.push_back(i);
    for (int j = 1; j <= n; ++j) {
      if (r[i][j]) rel.insert({i, j});
    }
  }
  return Poset(el, rel);
}

}  // namespace

TEST_CASE("graph construction") {
  CHECK_THROWS_AS(Graph({1, 2}, {{1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Graph({1, 2}, {{1, 3}}), InvalidArgument);
  Graph c5 = Graph::cycle(5);
  CHECK(c5.edge_count() == 5);
  CHECK(c5.complement().edge_count() == 5);
  CHECK(c5.induced({1, 2, 3}).edge_count() == 2);
}

TEST_CASE("cliques and anticliques") {
  Graph k3 = Graph::complete(3);
  CHECK(cliques(k3).contains({1, 2, 3}));
  CHECK_FALSE(anticliques(k3).contains({1, 2}));
  CHECK(maximal_cliques(Graph::cycle(5)) == std::vector<IdSet>{{1, 2}, {2, 3}, {3, 4}, {1, 5}, {4, 5}});
  for (const auto& s : all_subsets({1, 2, 3, 4})) CHECK(anticliques(Graph::edgeless(4)).contains(s));

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, 1 + trial % 8);
    Family a = anticliques(g);
    Family cc = cliques(g.complement());
    for (const auto& s : all_subsets(g.vertices())) CHECK(a.contains(s) == cc.contains(s));
    // Maximal cliques from Bron–Kerbosch match subset enumeration.
    std::vector<IdSet> expected;
    auto subs = all_subsets(g.vertices());
    for (const auto& s : subs) {
      if (!is_clique(g, s)) continue;
      bool maximal = std::none_of(g.vertices().begin(), g.vertices().end(), [&](int v) {
        return !std::binary_search(s.begin(), s.end(), v) && is_clique(g, set_union(s, {v}));
      });
      if (maximal) expected.push_back(s);
    }
    sort_colex(expected);
    CHECK(maximal_cliques(g) == expected);
  }
}

TEST_CASE("comparability graphs") {
  Poset total({1, 2, 3}, {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 3}, {1, 3}});
  CHECK(comparability(total) == Graph::complete(3));
  Poset trivial({1, 2, 3}, {{1, 1}, {2, 2}, {3, 3}});
  CHECK(comparability(trivial).edge_count() == 0);
  Graph p2 = comparability(product_order(2));
  // ids: (1,1)=1 (1,2)=2 (2,1)=3 (2,2)=4
  CHECK_FALSE(p2.adjacent(2, 3));
  CHECK(p2.adjacent(1, 4));
  CHECK(p2.edge_count() == 5);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = comparability(random_poset(rng, 1 + trial % 8));
    CHECK(is_perfect(g, PerfectMethod::spgt));
    CHECK(is_perfect(g, PerfectMethod::chi_omega));
  }
}

TEST_CASE("odd holes and antiholes") {
  auto hole = find_odd_hole(Graph::cycle(5));
  REQUIRE(hole);
  CHECK(*hole == std::vector<int>{1, 2, 3, 4, 5});
  Graph c7bar = Graph::cycle(7).complement();
  CHECK_FALSE(find_odd_hole(c7bar));
  auto anti = find_odd_antihole(c7bar);
  REQUIRE(anti);
  CHECK(*anti == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  // Bipartite: the 3-cube.
  Graph cube({0, 1, 2, 3, 4, 5, 6, 7}, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}});
  CHECK_FALSE(find_odd_hole(cube));
  CHECK_THROWS_AS(find_odd_hole(Graph::edgeless(13)), SizeLimitExceeded);
  // Cycle order goes towards the smaller neighbour.
  Graph c({1, 2, 3, 4, 5}, {{1, 3}, {3, 5}, {5, 2}, {2, 4}, {4, 1}});
  CHECK(*find_odd_hole(c) == std::vector<int>{1, 3, 5, 2, 4});
}

TEST_CASE("perfection") {
  CHECK_FALSE(is_perfect(Graph::cycle(5), PerfectMethod::spgt));
  CHECK_FALSE(is_perfect(Graph::cycle(5), PerfectMethod::chi_omega));
  CHECK(is_perfect(Graph::cycle(6), PerfectMethod::chi_omega));
  CHECK(chromatic_number(Graph::cycle(7)) == 3);
  CHECK(clique_number(Graph::cycle(7).complement()) == 3);
  CHECK(chromatic_number(Graph::cycle(7).complement()) == 4);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, 3 + trial % 7);
    bool a = is_perfect(g, PerfectMethod::spgt);
    CHECK(a == is_perfect(g, PerfectMethod::chi_omega));
    CHECK(a == is_perfect(g.complement(), PerfectMethod::spgt));
  }
}

TEST_CASE("maximum weight clique against brute force") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(rng, 1 + trial % 10, 0.6);
    std::map<int, Rat> w;
    for (int v : g.vertices()) w[v] = testing_support::random_rat(rng, 20, 7).abs();
    Rat best;
    for (const auto& s : all_subsets(g.vertices())) {
      if (!is_clique(g, s)) continue;
      Rat t;
      for (int v : s) t += w[v];
      best = std::max(best, t);
    }
    auto r = max_weight_clique(g, w);
    CHECK(r.weight == best);
    CHECK(is_clique(g, r.clique));
    Rat t;
    for (int v : r.clique) t += w[v];
    CHECK(t == best);
  }
}

TEST_CASE("canonical codes are relabelling invariant") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 8;
    Graph g = random_graph(rng, n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_code(g) == canonical_code(relabel(g, perm)));
    CHECK(graph_from_code(n, graph_code(g)) == g);
  }
  CHECK(canonical_code(Graph::path(4)) != canonical_code(Graph::complete(4)));
  // P4 and K1,3 have the same edge count but differ.
  Graph star({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(canonical_code(star) != canonical_code(Graph::path(4)));
}

TEST_CASE("DIMACS round trip") {
  Graph g = parse_dimacs("c five cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  CHECK(g == Graph::cycle(5));
  CHECK(parse_dimacs(to_dimacs(g)) == g);
  CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), InvalidArgument);
}
