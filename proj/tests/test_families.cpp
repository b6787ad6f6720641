#include <functional>
#include <random>

#include "combinorm/errors.hpp"
#include "combinorm/family.hpp"
#include "combinorm/graph.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace combinorm;
using testing_support::all_subsets;

namespace {

// Independent Schreier oracle over ω·a+b with the ladder (ω·a+ω)_k = ω·a+k+shift.
// Every composition of E into consecutive pieces is tried.
struct Ord {
  int a = 0;
  int b = 0;
};

bool oracle(Ord alpha, bool star, int shift, const IdSet& e);

// All compositions of e into exactly m non-empty consecutive pieces.
void compositions(const IdSet& e, std::size_t m, std::size_t from, std::vector<IdSet>& cur,
                  const std::function<bool(const std::vector<IdSet>&)>& visit, bool& found) {
  if (found) return;
  if (cur.size() + 1 == m) {
    if (from < e.size()) {
      cur.emplace_back(e.begin() + static_cast<std::ptrdiff_t>(from), e.end());
      if (visit(cur)) found = true;
      cur.pop_back();
    }
    return;
  }
  for (std::size_t end = from + 1; end < e.size(); ++end) {
    cur.emplace_back(e.begin() + static_cast<std::ptrdiff_t>(from), e.begin() + static_cast<std::ptrdiff_t>(end));
    compositions(e, m, end, cur, visit, found);
    cur.pop_back();
    if (found) return;
  }
}

bool oracle(Ord alpha, bool star, int shift, const IdSet& e) {
  if (e.size() <= 1) return true;
  if (alpha.a == 0 && alpha.b == 0) return false;
  const std::size_t min_e = static_cast<std::size_t>(e.front());
  if (alpha.b > 0) {
    Ord pred{alpha.a, alpha.b - 1};
    for (std::size_t m = 1; m <= std::min(min_e, e.size()); ++m) {
      bool found = false;
      std::vector<IdSet> cur;
      compositions(e, m, 0, cur, [&](const std::vector<IdSet>& pieces) {
        for (const auto& p : pieces) {
          if (!oracle(pred, star, shift, p)) return false;
        }
        return true;
      }, found);
      if (found) return true;
    }
    return false;
  }
  auto ladder = [&](int k) { return Ord{alpha.a - 1, k + shift}; };
  if (!star) {
    for (int k = 1; k <= e.front(); ++k) {
      if (oracle(ladder(k), star, shift, e)) return true;
    }
    return false;
  }
  for (std::size_t m = 1; m <= std::min(min_e, e.size()); ++m) {
    bool found = false;
    std::vector<IdSet> cur;
    compositions(e, m, 0, cur, [&](const std::vector<IdSet>& pieces) {
      // The leftmost piece is F_m, the rightmost F_1.
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (!oracle(ladder(static_cast<int>(m - i)), star, shift, pieces[i])) return false;
      }
      return true;
    }, found);
    if (found) return true;
  }
  return false;
}

IdSet range(int lo, int hi) {
  IdSet s;
  for (int i = lo; i <= hi; ++i) s.push_back(i);
  return s;
}

void check_hereditary(const Family& f, const IdSet& ground) {
  for (const auto& m : members_within(f, ground)) {
    for (const auto& sub : all_subsets(m)) CHECK(f.contains(sub));
  }
}

bool same_on(const Family& a, const Family& b, const IdSet& ground) {
  for (const auto& s : all_subsets(ground)) {
    if (a.contains(s) != b.contains(s)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("universes and explicit families") {
  Family f = explicit_family({1, 2, 3, 4}, {{1, 2, 3}});
  CHECK(f.contains({}));
  CHECK(f.contains({4}));
  CHECK(f.contains({1, 3}));
  CHECK_FALSE(f.contains({3, 4}));
  CHECK_FALSE(f.contains({9}));
  CHECK_THROWS_AS(explicit_family({1, 2}, {{1, 5}}), InvalidArgument);
  Family s = schreier(Ordinal::finite(1), SchreierVariant::standard, 6);
  CHECK_THROWS_AS(s.contains({7}), InvalidArgument);
  check_hereditary(f, {1, 2, 3, 4});
}

TEST_CASE("perp of the Schreier family") {
  Family s = schreier(Ordinal::finite(1), SchreierVariant::standard, 10);
  Family sp = perp(s, 10);
  CHECK_FALSE(sp.contains({2, 3}));
  CHECK(sp.contains({1, 7}));
  // S^⊥ = [N]^{≤1} ∪ {{1,n}}.
  for (const auto& e : all_subsets(range(1, 10))) {
    bool expected = e.size() <= 1 || (e.size() == 2 && e.front() == 1);
    CHECK(sp.contains(e) == expected);
  }
  CHECK_THROWS_AS(sp.contains({11}), InvalidArgument);
  CHECK_THROWS_AS(perp(s, 11), InvalidArgument);
}

TEST_CASE("perp of singletons is everything, perp of cliques is anticliques") {
  Family one = singletons_family(Universe::bounded(6));
  Family p = perp(one, 6);
  for (const auto& e : all_subsets(range(1, 6))) CHECK(p.contains(e));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = testing_support::random_graph(rng, 6);
    CHECK(same_on(perp(cliques(g), 6), anticliques(g), range(1, 6)));
  }
}

TEST_CASE("perp is an involution after one application") {
  std::mt19937_64 rng(8);
  std::vector<Family> fams{schreier(Ordinal::finite(1), SchreierVariant::standard, 7),
                           schreier(Ordinal::finite(2), SchreierVariant::standard, 7),
                           explicit_family(range(1, 7), {{1, 2, 3}, {3, 4, 5, 6}, {2, 7}})};
  for (int trial = 0; trial < 4; ++trial) fams.push_back(cliques(testing_support::random_graph(rng, 7)));
  for (const auto& f : fams) {
    Family p1 = perp(f, 7);
    Family p3 = perp(perp(p1, 7), 7);
    CHECK(same_on(p1, p3, range(1, 7)));
  }
}

TEST_CASE("graph generated recognition") {
  Family s = schreier(Ordinal::finite(1), SchreierVariant::standard, 6);
  auto r = is_graph_generated(s, 6);
  CHECK_FALSE(r.generated);
  REQUIRE(r.witness);
  CHECK(*r.witness == IdSet{2, 3, 4});

  // Brute force: the witness is the colex-first pair-graph clique outside S.
  std::vector<IdSet> bad;
  for (const auto& e : all_subsets(range(1, 6))) {
    bool pair_clique = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) pair_clique = pair_clique && s.contains({e[i], e[j]});
    }
    if (pair_clique && !s.contains(e)) bad.push_back(e);
  }
  sort_colex(bad);
  CHECK(bad.front() == *r.witness);

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    CHECK(is_graph_generated(cliques(testing_support::random_graph(rng, 7)), 7).generated);
  }
  CHECK(is_graph_generated(full_family(Universe::bounded(6)), 6).generated);
  CHECK_FALSE(is_graph_generated(explicit_family(range(1, 3), {{1, 2}, {2, 3}, {1, 3}}), 3).generated);
}

TEST_CASE("maximal elements") {
  auto one = max_elements(singletons_family(Universe::bounded(3)), range(1, 3));
  CHECK(one == std::vector<IdSet>{{1}, {2}, {3}});
  auto path = max_elements(cliques(Graph::path(3)), range(1, 3));
  CHECK(path == std::vector<IdSet>{{1, 2}, {2, 3}});
  auto s = max_elements(schreier(Ordinal::finite(1), SchreierVariant::standard, 4), range(1, 4));
  CHECK(s == std::vector<IdSet>{{1}, {2, 3}, {2, 4}, {3, 4}});

  // Oracle: subsets with no member strict superset.
  Family f = schreier(Ordinal::finite(2), SchreierVariant::standard, 7);
  std::vector<IdSet> expected;
  auto subs = all_subsets(range(1, 7));
  for (const auto& a : subs) {
    if (!f.contains(a)) continue;
    bool maximal = true;
    for (const auto& b : subs) {
      if (b.size() > a.size() && is_subset(a, b) && f.contains(b)) maximal = false;
    }
    if (maximal) expected.push_back(a);
  }
  sort_colex(expected);
  CHECK(max_elements(f, range(1, 7)) == expected);
}

TEST_CASE("sign vectors") {
  CHECK(sign_vectors({{1}}).size() == 2);
  CHECK(sign_vectors({{1, 2}}).size() == 4);
  CHECK(sign_vectors({{1, 2}, {1}}).size() == 6);
  auto w = sign_vectors(maximal_anticliques(Graph::cycle(5)));
  CHECK(w.size() == 20);
  for (const auto& s : w) CHECK(s.support().size() == 2);
  CHECK_THROWS_AS(SignVector(std::map<int, int>{{1, 0}}), InvalidArgument);
}

TEST_CASE("Schreier membership examples") {
  auto s1 = Ordinal::finite(1);
  CHECK(schreier_contains(s1, SchreierVariant::standard, {3, 4, 5}));
  CHECK_FALSE(schreier_contains(s1, SchreierVariant::standard, {2, 3, 4}));
  CHECK(schreier_contains(Ordinal::finite(2), SchreierVariant::standard, range(2, 7)));
  for (auto alpha : {Ordinal::finite(0), Ordinal::finite(3), Ordinal::omega(), Ordinal::omega_times(2, 1)}) {
    CHECK(schreier_contains(alpha, SchreierVariant::standard, {}));
    CHECK(schreier_contains(alpha, SchreierVariant::star, {}));
  }
  auto broken = Ordinal::limit(nullptr, "gamma");
  CHECK_THROWS_AS(schreier_contains(broken, SchreierVariant::standard, {2, 3}), LadderMissing);
  auto f = schreier(Ordinal::omega(), SchreierVariant::standard, 8);
  CHECK(f.metadata().at("ladder").find("canonical") != std::string::npos);
}

TEST_CASE("Schreier membership matches the split oracle") {
  const std::vector<std::pair<Ordinal, Ord>> cases{
      {Ordinal::finite(1), {0, 1}},     {Ordinal::finite(2), {0, 2}},     {Ordinal::finite(3), {0, 3}},
      {Ordinal::omega(), {1, 0}},       {Ordinal::omega_times(1, 1), {1, 1}}, {Ordinal::omega_times(2, 0), {2, 0}}};
  for (const auto& [alpha, ord] : cases) {
    for (bool star : {false, true}) {
      auto variant = star ? SchreierVariant::star : SchreierVariant::standard;
      for (const auto& e : all_subsets(range(1, 9))) {
        CHECK_MESSAGE(schreier_contains(alpha, variant, e) == oracle(ord, star, 0, e), alpha.str() << " " << to_string(e));
      }
    }
  }
}

TEST_CASE("Schreier families are hereditary and increasing in finite rank") {
  for (int n = 0; n <= 4; ++n) {
    Family a = schreier(Ordinal::finite(n), SchreierVariant::standard, 12);
    Family b = schreier(Ordinal::finite(n + 1), SchreierVariant::standard, 12);
    check_hereditary(a, range(1, 10));
    for (const auto& m : members_within(a, range(1, 12))) CHECK(b.contains(m));
  }
}

TEST_CASE("star sandwich between the ladder and its successor ladder") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 0}, {1, 1}}) {
    Family s = schreier(Ordinal::omega_times(a, b), SchreierVariant::standard, 10);
    Family star = schreier(Ordinal::omega_times(a, b), SchreierVariant::star, 10);
    Family plus = schreier(Ordinal::omega_times(a, b, 1), SchreierVariant::standard, 10);
    for (const auto& e : all_subsets(range(1, 10))) {
      if (s.contains(e)) CHECK(star.contains(e));
      if (star.contains(e)) CHECK(plus.contains(e));
    }
  }
}

TEST_CASE("Farah and union families") {
  Universe p1 = Universe::explicit_ids({1, 2});
  Universe p2 = Universe::explicit_ids({3, 4});
  std::vector<FamilyPart> parts{{{1, 2}, singletons_family(p1)}, {{3, 4}, singletons_family(p2)}};
  Family fh = farah(parts);
  Family un = union_family(parts);
  CHECK(fh.contains({1, 3}));
  CHECK_FALSE(fh.contains({1, 2}));
  CHECK_FALSE(un.contains({1, 3}));
  CHECK(un.contains({4}));
  CHECK_THROWS_AS(farah({{{1, 2}, singletons_family(p1)}, {{2, 3}, singletons_family(p2)}}), InvalidArgument);
  CHECK_THROWS_AS(union_family({{{1, 2}, singletons_family(p1)}, {{2, 3}, singletons_family(p2)}}), InvalidArgument);

  // Fh(Q)^⊥ = ⋃(Q^⊥) on {1..6}.
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g1 = testing_support::random_graph(rng, 3);
    Graph g2 = testing_support::random_graph(rng, 3);
    std::vector<std::pair<int, int>> shifted;
    for (auto [a, b] : g2.edges()) shifted.emplace_back(a + 3, b + 3);
    Graph h2({4, 5, 6}, shifted);
    std::vector<FamilyPart> q{{{1, 2, 3}, cliques(g1)}, {{4, 5, 6}, cliques(h2)}};
    std::vector<FamilyPart> qp{{{1, 2, 3}, perp(cliques(g1), 3)}, {{4, 5, 6}, perp(cliques(h2), 3)}};
    CHECK(same_on(perp(farah(q), 6), union_family(qp), range(1, 6)));
  }
}

TEST_CASE("posets, chains and antichains") {
  Poset total({1, 2, 3}, {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 3}, {1, 3}});
  CHECK(poset_chains(total).contains({1, 2, 3}));
  Poset p3 = product_order(3);
  // (1,3),(2,2),(3,1) → ids 3, 5, 7.
  CHECK(poset_antichains(p3).contains({3, 5, 7}));
  CHECK_FALSE(poset_chains(p3).contains({3, 5}));
  CHECK(poset_chains(p3).contains({1, 5, 9}));
  Family ch = poset_chains(p3);
  Family an = poset_antichains(p3);
  for (const auto& e : all_subsets(p3.elements())) {
    if (ch.contains(e) && an.contains(e)) CHECK(e.size() <= 1);
  }
  CHECK_THROWS_WITH_AS(Poset({1, 2}, {{1, 1}}), doctest::Contains("reflexive"), InvalidArgument);
  CHECK_THROWS_WITH_AS(Poset({1, 2}, {{1, 1}, {2, 2}, {1, 2}, {2, 1}}), doctest::Contains("antisymmetric"),
                       InvalidArgument);
  CHECK_THROWS_WITH_AS(Poset({1, 2, 3}, {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 3}}), doctest::Contains("transitive"),
                       InvalidArgument);
}

TEST_CASE("bounded chain search") {
  Family s = schreier(Ordinal::finite(1), SchreierVariant::standard, 10);
  auto c = find_chain(s, 4, 10);
  REQUIRE(c);
  CHECK(c->size() == 4);
  CHECK(s.contains(c->back()));
  CHECK_FALSE(find_chain(s, 6, 10));
  CHECK_FALSE(find_chain(singletons_family(Universe::bounded(5)), 2, 5));
}
