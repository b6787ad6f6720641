#include <doctest.h>

#include <random>

#include "combinorm/errors.hpp"
#include "combinorm/io.hpp"
#include "support.hpp"

using namespace combinorm;
using namespace combinorm::io;
using namespace testing_support;

TEST_CASE("rationals and vectors") {
  CHECK(to_json(Rat(3, 4)) == json("3/4"));
  CHECK(to_json(Rat(-2)) == json("-2"));
  CHECK(rat_from_json(json(5)) == Rat(5));
  CHECK(rat_from_json(json("-6/8")) == Rat(-3, 4));
  CHECK_THROWS_AS(rat_from_json(json(0.5)), InvalidArgument);

  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    RatVector x;
    for (int v = 1; v <= 6; ++v) {
      if (rng() % 3) x.set(v, random_rat(rng, 20, 9));
    }
    CHECK(vector_from_json(json::parse(to_json(x).dump())) == x);
  }
  CHECK_THROWS_AS(vector_from_json(json::parse(R"({"a": "1"})")), InvalidArgument);
  CHECK(set_from_json(json::parse("[3, 1, 2, 1]")) == IdSet{1, 2, 3});
}

TEST_CASE("graphs") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 7));
    CHECK(graph_from_json(json::parse(to_json(g).dump())) == g);
    CHECK(graph_from_text(to_json(g).dump()) == g);
    CHECK(graph_from_text(to_dimacs(g)) == g);
  }
  const Graph adj = graph_from_json(json::parse(R"({"adjacency": {"1": [2], "2": [1, 3], "4": []}})"));
  CHECK(adj.vertices() == IdSet{1, 2, 3, 4});
  CHECK(adj.edge_count() == 2);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": [1], "edges": [[1, 2]]})")), InvalidArgument);
  CHECK_THROWS_AS(graph_from_text("{ not json"), InvalidArgument);
}

TEST_CASE("families") {
  const json c5 = to_json(Graph::cycle(5));
  const Family f = family_from_json(json{{"kind", "cliques"}, {"graph", c5}});
  const json out = family_to_json(f);
  const Family g = family_from_json(out);
  for (const auto& s : all_subsets(IdSet{1, 2, 3, 4, 5})) CHECK(f.contains(s) == g.contains(s));
  CHECK(family_to_json(g)["sets"] == out["sets"]);

  const Family s1 = family_from_json(json::parse(R"({"kind": "schreier", "alpha": 1, "universe": {"bound": 6}})"));
  CHECK(s1.contains(IdSet{3, 4, 5}));
  CHECK(!s1.contains(IdSet{2, 3, 4}));
  const Family star = family_from_json(json::parse(R"({"kind": "schreier", "alpha": "omega", "variant": "star", "universe": {"bound": 6}})"));
  const Family star_copy = family_from_json(family_to_json(star));
  for (const auto& s : all_subsets(IdSet{1, 2, 3, 4, 5, 6})) CHECK(star.contains(s) == star_copy.contains(s));

  const Family p = family_from_json(json{{"kind", "perp"}, {"of", {{"kind", "cliques"}, {"graph", c5}}}});
  CHECK(p.contains(IdSet{1, 3}));
  CHECK(!p.contains(IdSet{1, 2}));

  const Family fh = family_from_json(json::parse(R"({"kind": "farah", "parts": [
      {"ids": [1, 2], "family": {"kind": "full", "universe": [1, 2]}},
      {"ids": [3, 4], "family": {"kind": "singletons", "universe": [3, 4]}}]})"));
  CHECK(fh.contains(IdSet{1, 2, 3}));
  CHECK(!fh.contains(IdSet{3, 4}));

  const Family ex = family_from_json(json::parse(R"({"kind": "explicit", "universe": [1, 2, 3], "sets": [[1, 2]]})"));
  CHECK(ex.contains(IdSet{1}));
  CHECK(ex.contains(IdSet{3}));
  CHECK(!ex.contains(IdSet{2, 3}));

  CHECK(family_from_json(json::parse(R"({"kind": "chains", "n": 2})")).contains(IdSet{1, 2, 4}));
  CHECK_THROWS_AS(family_from_json(json::parse(R"({"kind": "nonsense"})")), InvalidArgument);
  CHECK_THROWS_AS(family_from_json(json::parse(R"({"kind": "explicit"})")), InvalidArgument);
}

TEST_CASE("injections") {
  const auto f = injection_from_json(json::parse(R"({"values": ["0", "-1", 1]})"));
  CHECK(f.value(2) == Rat(-1));
  CHECK(to_json(f) == json::parse(R"({"values": ["0", "-1", "1"]})"));
  const auto sb = injection_from_json(json::parse(R"({"generator": "stern-brocot"})"));
  CHECK(to_json(sb, 3)["prefix"] == json::parse(R"(["0", "1", "-1"])"));
  CHECK(injection_from_json(to_json(sb)).value(10) == sb.value(10));
  CHECK_THROWS_AS(injection_from_json(json::parse(R"({"values": ["1", "1"]})")), InvalidArgument);
  CHECK_THROWS_AS(injection_from_json(json::parse(R"({"generator": "other"})")), InvalidArgument);
}

TEST_CASE("emulations") {
  const Emulation s1 = schreier_transform(unit_emulation(IdSet{1, 2, 3, 4}, false));
  const json j = to_json(s1);
  const Emulation back = emulation_from_json(json::parse(j.dump()));
  CHECK(back == s1);
  CHECK(back.metadata() == s1.metadata());
  CHECK_THROWS_AS(emulation_from_json(json::parse(R"({"blocks": [{"label": 1, "size": 2}], "theta": ["1"]})")),
                  InvalidArgument);
}

TEST_CASE("orlicz sequences") {
  const OrliczSeq l2 = orlicz_from_json(json::parse(R"([{"p": "2", "c": "1"}])"));
  CHECK(!l2.length());
  CHECK(l2.at(7) == OrliczFunction::power(Rat(2)));
  CHECK(to_json(l2) == json::parse(R"([{"p": "2", "c": "1"}])"));
  const OrliczSeq mixed = orlicz_from_json(json::parse(R"({"functions": [
      [{"p": "1", "c": "1"}], [{"p": "2", "c": "1/2"}, {"p": "3", "c": "1/2"}]], "repeat": false})"));
  CHECK(mixed.length() == std::optional<std::size_t>(2));
  CHECK(orlicz_from_json(to_json(mixed)).functions() == mixed.functions());
  CHECK_THROWS_AS(orlicz_from_json(json::parse(R"([{"p": "2", "c": "1/2"}])")), InvalidArgument);
}

TEST_CASE("reports") {
  DualityRecord r;
  r.perfect_spgt = r.perfect_chi_omega = true;
  r.subsets_checked = 7;
  const json j = to_json(r);
  CHECK(j["perfect_spgt"] == true);
  CHECK(j["c0v_all"] == false);
  CHECK(j["subsets_checked"] == 7);
  SweepSummary s;
  s.graphs = 3;
  s.by_size[2] = {2, 0};
  CHECK(to_json(s)["by_size"][0]["n"] == 2);
  CHECK(to_json(s)["first_disagreement"].is_null());
}
