#include "combinorm/duality.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <omp.h>

#include "combinorm/errors.hpp"
#include "combinorm/lp.hpp"

namespace combinorm {

namespace {

// Bound of F on the ids it covers, so perp sees the whole universe.
int universe_extent(const Family& f) { return f.universe().bound(); }

std::vector<DensePoint> unique_sorted(std::vector<DensePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

bool check_0V(const Family& f, const IdSet& v, const VertexConfig& config) {
  NormContext ball_ctx(f, v, config);
  NormContext perp_ctx(perp(f, universe_extent(f)), v, config);
  Polytope p = unit_ball(ball_ctx);
  Polytope q = polar_of_points(v.size(), vertices(unit_ball(perp_ctx), config));
  for (const auto& x : vertices(p, config)) {
    if (!q.contains(x)) return false;
  }
  for (const auto& y : vertices(q, config)) {
    if (!p.contains(y)) return false;
  }
  return true;
}

Check2V check_2V(const Family& f, const IdSet& v, const VertexConfig& config) {
  Check2V out;
  out.graph_generated = is_graph_generated(f, universe_extent(f)).generated;
  IdSet ground = make_set(v);
  NormContext ball_ctx(f, ground, config);
  Family fp = perp(f, universe_extent(f));
  Polytope p = unit_ball(ball_ctx);
  std::vector<DensePoint> gens;
  // conv W(F^⊥↾V) is spanned by the sign vectors on maximal members.
  for (const auto& sv : sign_vectors(max_elements(fp, ground))) gens.push_back(sv.to_dense(ground));
  gens = unique_sorted(std::move(gens));
  bool gens_inside = true;
  for (const auto& s : gens) {
    if (!p.contains(s)) gens_inside = false;
  }
  out.holds_on_v = gens_inside;
  if (!gens_inside) return out;
  // With every generator inside the ball, a vertex of the ball is a convex
  // combination of generators only when it is one of them.
  for (const auto& x : vertices(p, config)) {
    if (!std::binary_search(gens.begin(), gens.end(), x)) {
      out.holds_on_v = false;
      break;
    }
  }
  return out;
}

ChvatalResult check_chvatal(const Graph& g, const VertexConfig& config) {
  const IdSet& vs = g.vertices();
  const std::size_t n = vs.size();
  if (n == 0) return {true, std::nullopt};
  std::vector<Inequality> ineqs;
  for (std::size_t i = 0; i < n; ++i) {
    DensePoint lo(n);
    lo[i] = -1;
    ineqs.push_back({lo, 0});
    DensePoint hi(n);
    hi[i] = 1;
    ineqs.push_back({hi, 1});
  }
  for (const auto& c : maximal_cliques(g)) {
    DensePoint row(n);
    for (int v : c) row[g.index_of(v)] = 1;
    ineqs.push_back({row, 1});
  }
  ChvatalResult out;
  out.integral = true;
  for (const auto& x : vertices(Polytope(n, ineqs), config)) {
    IdSet support;
    bool integral = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i].is_integer()) integral = false;
      if (!x[i].is_zero()) support.push_back(vs[i]);
    }
    if (!integral || !is_anticlique(g, support)) {
      out.integral = false;
      if (!out.fractional_vertex) out.fractional_vertex = x;
    }
  }
  return out;
}

std::optional<std::pair<bool, bool>> DualityCache::find(std::size_t n, std::uint64_t canonical) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = results_.find({n, canonical});
  if (it == results_.end()) return std::nullopt;
  return it->second;
}

void DualityCache::store(std::size_t n, std::uint64_t canonical, std::pair<bool, bool> c0_c2) {
  std::lock_guard<std::mutex> lock(mu_);
  results_[{n, canonical}] = c0_c2;
}

std::uint64_t DualityCache::canonical(const Graph& g) {
  const auto key = std::pair{g.size(), graph_code(g)};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = canon_.find(key);
    if (it != canon_.end()) return it->second;
  }
  std::uint64_t c = canonical_code(g);
  std::lock_guard<std::mutex> lock(mu_);
  canon_[key] = c;
  return c;
}

std::size_t DualityCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return results_.size();
}

namespace {

std::vector<IdSet> subsets_to_check(const Graph& g, const DualityOptions& options, bool& sampled) {
  const IdSet& vs = g.vertices();
  std::set<IdSet, bool (*)(const IdSet&, const IdSet&)> chosen(colex_less);
  if (vs.size() <= options.exhaustive_limit) {
    sampled = false;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << vs.size()); ++m) chosen.insert(subset_from_mask(vs, m));
    return {chosen.begin(), chosen.end()};
  }
  sampled = true;
  chosen.insert(vs);
  for (int v : vs) chosen.insert({v});
  if (auto h = find_odd_hole(g, options.hole_config)) chosen.insert(make_set(*h));
  if (auto h = find_odd_antihole(g, options.hole_config)) chosen.insert(make_set(*h));
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << vs.size()) - 1);
  for (std::size_t i = 0; i < options.random_subsets; ++i) chosen.insert(subset_from_mask(vs, pick(rng)));
  return {chosen.begin(), chosen.end()};
}

std::pair<bool, bool> subset_checks(const Graph& g, const IdSet& v, const DualityOptions& options, DualityCache* cache) {
  Graph sub = g.induced(v);
  std::uint64_t canon = 0;
  if (cache) {
    canon = cache->canonical(sub);
    if (auto hit = cache->find(sub.size(), canon)) return *hit;
  }
  Family f = cliques(sub);
  std::pair<bool, bool> r{check_0V(f, sub.vertices(), options.vertex_config),
                          check_2V(f, sub.vertices(), options.vertex_config).value()};
  if (cache) cache->store(sub.size(), canon, r);
  return r;
}

DualityRecord report(const Graph& g, const DualityOptions& options, DualityCache* cache) {
  if (g.size() > options.hole_config.size_limit) {
    throw SizeLimitExceeded("duality report limited to " + std::to_string(options.hole_config.size_limit) + " vertices");
  }
  DualityRecord rec;
  rec.perfect_spgt = is_perfect(g, PerfectMethod::spgt, options.hole_config);
  rec.perfect_chi_omega = is_perfect(g, PerfectMethod::chi_omega, options.hole_config);
  rec.chvatal = check_chvatal(g, options.vertex_config).integral;
  rec.c0v_all = true;
  rec.c2v_all = true;
  for (const auto& v : subsets_to_check(g, options, rec.sampled)) {
    auto [c0, c2] = subset_checks(g, v, options, cache);
    rec.c0v_all = rec.c0v_all && c0;
    rec.c2v_all = rec.c2v_all && c2;
    ++rec.subsets_checked;
  }
  const std::pair<const char*, bool> named[] = {{"perfect_spgt", rec.perfect_spgt},
                                                {"perfect_chi_omega", rec.perfect_chi_omega},
                                                {"chvatal", rec.chvatal},
                                                {"c0V_all", rec.c0v_all},
                                                {"c2V_all", rec.c2v_all}};
  for (const auto& [name, value] : named) {
    if (value != named[0].second) {
      throw EquivalenceViolation(std::string("perfect_spgt=") + (named[0].second ? "true" : "false") + " but " + name +
                                 "=" + (value ? "true" : "false") + " on a graph with " + std::to_string(g.size()) +
                                 " vertices (code " + std::to_string(g.size() <= 11 ? graph_code(g) : 0) + ")");
    }
  }
  return rec;
}

}  // namespace

DualityRecord duality_report(const Graph& g, const DualityOptions& options, DualityCache* cache) {
  DualityCache local;
  return report(g, options, cache ? cache : &local);
}

DualityRecord duality_report_serial(const Graph& g, const DualityOptions& options) {
  return report(g, options, nullptr);
}

SweepSummary corpus_sweep(const std::vector<Graph>& graphs, const DualityOptions& options, int threads) {
  std::vector<std::size_t> order(graphs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return graphs[a].size() < graphs[b].size(); });

  DualityCache cache;
  std::vector<DualityRecord> records(graphs.size());
  std::vector<std::string> errors(graphs.size());
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  for (std::size_t lo = 0; lo < order.size();) {
    std::size_t hi = lo;
    while (hi < order.size() && graphs[order[hi]].size() == graphs[order[lo]].size()) ++hi;
    const auto count = static_cast<std::ptrdiff_t>(hi - lo);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      const std::size_t idx = order[lo + static_cast<std::size_t>(k)];
      try {
        records[idx] = duality_report(graphs[idx], options, &cache);
      } catch (const EquivalenceViolation& e) {
        errors[idx] = e.what();
      }
    }
    lo = hi;
  }

  SweepSummary s;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    ++s.graphs;
    if (!errors[i].empty()) {
      if (!s.first_disagreement) s.first_disagreement = "graph #" + std::to_string(i + 1) + ": " + errors[i];
      continue;
    }
    auto& slot = s.by_size[graphs[i].size()];
    if (records[i].perfect_spgt) {
      ++s.perfect;
      ++slot.first;
    } else {
      ++s.imperfect;
      ++slot.second;
    }
  }
  return s;
}

}  // namespace combinorm
