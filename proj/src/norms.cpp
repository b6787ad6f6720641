#include "combinorm/norms.hpp"

#include <algorithm>
#include <functional>

#include "combinorm/errors.hpp"
#include "combinorm/graph.hpp"
#include "combinorm/lp.hpp"

namespace combinorm {

NormContext::NormContext(Family family, IdSet ground, VertexConfig config)
    : family_(std::move(family)), ground_(make_set(std::move(ground))), config_(config) {
  if (!family_.universe().contains(ground_)) {
    throw InvalidArgument("ground " + to_string(ground_) + " is not inside the family's universe");
  }
}

namespace {

void check_support(const NormContext& ctx, const RatVector& x) {
  for (const auto& [id, v] : x) {
    if (!std::binary_search(ctx.ground().begin(), ctx.ground().end(), id)) {
      throw InvalidArgument("vector support leaves the ground set at id " + std::to_string(id));
    }
  }
}

void check_dimension(const NormContext& ctx) {
  if (ctx.ground().empty()) throw InvalidArgument("unit ball of an empty ground set");
  if (ctx.ground().size() > ctx.config().dimension_limit) {
    throw DimensionLimitExceeded("ground of size " + std::to_string(ctx.ground().size()) + " exceeds limit " +
                                 std::to_string(ctx.config().dimension_limit));
  }
}

}  // namespace

// Members are grown in order of decreasing weight; the remaining weight is an
// upper bound because every extension adds a subset of it.
Rat norm(const NormContext& ctx, const RatVector& x) {
  check_support(ctx, x);
  if (const Graph* g = ctx.family().clique_graph()) {
    std::map<int, Rat> w;
    for (const auto& [id, v] : x) w[id] = v.abs();
    return max_weight_clique(g->induced(x.support()), w).weight;
  }
  std::vector<std::pair<int, mpq_class>> items;
  for (const auto& [id, v] : x) items.emplace_back(id, abs(v.raw()));
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<mpq_class> suffix(items.size() + 1);
  for (std::size_t i = items.size(); i-- > 0;) suffix[i] = suffix[i + 1] + items[i].second;
  mpq_class best = 0;
  IdSet cur;
  std::function<void(std::size_t, const mpq_class&)> grow = [&](std::size_t from, const mpq_class& value) {
    if (value > best) best = value;
    for (std::size_t i = from; i < items.size(); ++i) {
      if (value + suffix[i] <= best) return;
      IdSet next = set_union(cur, IdSet{items[i].first});
      if (!ctx.family().contains(next)) continue;
      IdSet saved = cur;
      cur = std::move(next);
      grow(i + 1, value + items[i].second);
      cur = std::move(saved);
    }
  };
  grow(0, 0);
  return Rat(best);
}

Rat norm_bruteforce(const NormContext& ctx, const RatVector& x) {
  check_support(ctx, x);
  IdSet supp = x.support();
  if (supp.size() > 24) throw SizeLimitExceeded("brute-force norm limited to 24 support points");
  Rat best;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << supp.size()); ++m) {
    IdSet s = subset_from_mask(supp, m);
    if (!ctx.family().contains(s)) continue;
    Rat t;
    for (int v : s) t += x.get(v).abs();
    best = std::max(best, t);
  }
  return best;
}

Polytope unit_ball(const NormContext& ctx) {
  check_dimension(ctx);
  const IdSet& ground = ctx.ground();
  std::vector<Inequality> ineqs;
  for (const auto& sv : sign_vectors(max_elements(ctx.family(), ground))) {
    if (sv.values().empty()) continue;
    ineqs.push_back({sv.to_dense(ground), Rat(1)});
  }
  return Polytope(ground.size(), std::move(ineqs));
}

Rat dual_norm(const NormContext& ctx, const RatVector& alpha) {
  check_support(ctx, alpha);
  return lp_maximize(to_dense(ctx.ground(), alpha), unit_ball(ctx)).value;
}

std::vector<RatVector> ball_extreme_points(const NormContext& ctx) {
  std::vector<RatVector> out;
  for (const auto& v : vertices(unit_ball(ctx), ctx.config())) out.push_back(to_sparse(ctx.ground(), v));
  return out;
}

bool dual_extreme_check(const NormContext& ctx) {
  const IdSet& ground = ctx.ground();
  Polytope ball = unit_ball(ctx);
  Polytope dual = polar_of_points(ground.size(), vertices(ball, ctx.config()));
  std::vector<DensePoint> got = vertices(dual, ctx.config());
  std::vector<DensePoint> expected;
  for (const auto& sv : sign_vectors(max_elements(ctx.family(), ground))) expected.push_back(sv.to_dense(ground));
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  return got == expected;
}

RatVector to_sparse(const IdSet& ground, const DensePoint& p) {
  if (ground.size() != p.size()) throw InvalidArgument("point dimension does not match the ground set");
  return RatVector::from_dense(ground, p);
}

DensePoint to_dense(const IdSet& ground, const RatVector& x) { return x.to_dense(ground); }

}  // namespace combinorm
