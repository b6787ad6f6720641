#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combinorm/family.hpp"
#include "combinorm/graph.hpp"
#include "combinorm/norms.hpp"

namespace combinorm {

/// B(X_{F↾V}) equals the polar of B(X_{F^⊥↾V}); tested by mutual vertex
/// containment.
bool check_0V(const Family& f, const IdSet& v, const VertexConfig& config = {});

struct Check2V {
  bool holds_on_v = false;       // hull test in both directions
  bool graph_generated = false;  // f = f^{⊥⊥} on its truncated universe
  bool value() const { return holds_on_v && graph_generated; }
};

/// Every vertex of B(X_{F↾V}) lies in conv(W(F^⊥↾V)) and every such sign
/// vector lies in the ball. The family is also tested for being graph
/// generated, since the condition characterises duality only for those.
Check2V check_2V(const Family& f, const IdSet& v, const VertexConfig& config = {});

struct ChvatalResult {
  bool integral = false;
  std::optional<DensePoint> fractional_vertex;  // first non-integral vertex, ground order
};

/// Vertices of {x ∈ [0,1]^V : x(C) ≤ 1 for every clique C} against the
/// anticlique indicators.
ChvatalResult check_chvatal(const Graph& g, const VertexConfig& config = {});

struct DualityRecord {
  bool perfect_spgt = false;
  bool perfect_chi_omega = false;
  bool chvatal = false;
  bool c0v_all = false;
  bool c2v_all = false;
  std::size_t subsets_checked = 0;
  bool sampled = false;
};

/// Memo of per-subgraph check results keyed by isomorphism class. Checks are
/// invariant under relabelling, so the answer on g↾V is the answer on any
/// graph isomorphic to it. Thread safe.
class DualityCache {
 public:
  std::optional<std::pair<bool, bool>> find(std::size_t n, std::uint64_t canonical) const;
  void store(std::size_t n, std::uint64_t canonical, std::pair<bool, bool> c0_c2);
  std::uint64_t canonical(const Graph& g);
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::map<std::pair<std::size_t, std::uint64_t>, std::pair<bool, bool>> results_;
  std::map<std::pair<std::size_t, std::uint64_t>, std::uint64_t> canon_;
};

struct DualityOptions {
  VertexConfig vertex_config;
  std::size_t exhaustive_limit = 7;  // all non-empty V up to this many vertices
  std::size_t random_subsets = 64;   // extra sampled V above the limit
  std::uint64_t seed = 1;
  HoleConfig hole_config;
};

/// Runs the five checks; throws EquivalenceViolation when they disagree.
DualityRecord duality_report(const Graph& g, const DualityOptions& options = {}, DualityCache* cache = nullptr);

/// Same record without a cache, every subset recomputed. Reference for tests.
DualityRecord duality_report_serial(const Graph& g, const DualityOptions& options = {});

struct SweepSummary {
  std::size_t graphs = 0;
  std::size_t perfect = 0;
  std::size_t imperfect = 0;
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> by_size;  // n → (perfect, imperfect)
  std::optional<std::string> first_disagreement;
};

/// duality_report over every graph, smallest first so that proper induced
/// subgraphs are already cached; graphs of equal size run in parallel.
SweepSummary corpus_sweep(const std::vector<Graph>& graphs, const DualityOptions& options = {}, int threads = 0);

}  // namespace combinorm
