#include "combinorm/family.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "combinorm/errors.hpp"

namespace combinorm {

Universe Universe::explicit_ids(IdSet ids) {
  Universe u;
  u.explicit_ = true;
  u.ids_ = make_set(std::move(ids));
  for (int v : u.ids_) {
    if (v < 0) throw InvalidArgument("vertex ids are non-negative");
  }
  return u;
}

Universe Universe::truncation_of(IdSet ids) {
  Universe u = explicit_ids(std::move(ids));
  u.explicit_ = false;
  return u;
}

Universe Universe::bounded(int bound) {
  if (bound < 0) throw InvalidArgument("universe bound must be non-negative");
  Universe u;
  u.ids_.resize(static_cast<std::size_t>(bound));
  std::iota(u.ids_.begin(), u.ids_.end(), 1);
  return u;
}

bool Universe::contains(int id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

bool Universe::contains(const IdSet& s) const { return is_subset(s, ids_); }

Universe Universe::truncated(int k) const {
  if (k < 0) throw InvalidArgument("truncation must be non-negative");
  Universe u = *this;
  if (static_cast<std::size_t>(k) < u.ids_.size()) u.ids_.resize(static_cast<std::size_t>(k));
  return u;
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::explicit_sets: return "explicit";
    case FamilyKind::graph_cliques: return "graph-cliques";
    case FamilyKind::schreier: return "schreier";
    case FamilyKind::farah: return "farah";
    case FamilyKind::union_of: return "union";
    case FamilyKind::perp: return "perp";
    case FamilyKind::product_order: return "product-order";
    case FamilyKind::custom: return "custom";
  }
  return "custom";
}

Family::Family(Universe universe, Predicate contains, FamilyKind kind, std::string label)
    : universe_(std::move(universe)),
      contains_(std::make_shared<const Predicate>(std::move(contains))),
      kind_(kind),
      label_(std::move(label)) {}

// Explicit universes answer "not a member" for foreign ids. A bounded universe
// is a truncation of something larger, so a query past it has no answer.
bool Family::contains(const IdSet& s) const {
  if (!universe_.contains(s)) {
    if (universe_.is_explicit()) return false;
    throw InvalidArgument("set " + to_string(s) + " exceeds the truncation " + std::to_string(universe_.bound()));
  }
  if (s.size() <= 1) return true;
  return (*contains_)(s);
}

Family Family::with_clique_graph(std::shared_ptr<const Graph> g) const {
  Family f = *this;
  f.graph_ = std::move(g);
  return f;
}

Family Family::with_metadata(const std::string& key, const std::string& value) const {
  Family f = *this;
  f.metadata_[key] = value;
  return f;
}

Family explicit_family(const IdSet& universe, const std::vector<IdSet>& sets) {
  IdSet u = make_set(universe);
  std::vector<IdSet> gens;
  for (const auto& s : sets) {
    IdSet t = make_set(s);
    if (!is_subset(t, u)) throw InvalidArgument("explicit set " + to_string(t) + " outside its universe");
    gens.push_back(std::move(t));
  }
  auto pred = [gens = std::move(gens)](const IdSet& s) {
    return std::any_of(gens.begin(), gens.end(), [&](const IdSet& g) { return is_subset(s, g); });
  };
  return Family(Universe::explicit_ids(std::move(u)), pred, FamilyKind::explicit_sets, "explicit");
}

Family singletons_family(const Universe& universe) {
  return Family(universe, [](const IdSet& s) { return s.size() <= 1; }, FamilyKind::custom, "singletons");
}

Family full_family(const Universe& universe) {
  return Family(universe, [](const IdSet&) { return true; }, FamilyKind::custom, "full");
}

Family perp(const Family& f, int truncation) {
  if (!f.universe().is_explicit() && truncation > f.universe().bound()) {
    throw InvalidArgument("perp truncation exceeds the family's universe bound");
  }
  // The result is a truncation even over an explicit universe: ids past it
  // are rejected rather than answered.
  Universe u = Universe::truncation_of(f.universe().truncated(truncation).ids());
  auto pred = [f](const IdSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (f.contains(IdSet{s[i], s[j]})) return false;
      }
    }
    return true;
  };
  Family out(u, pred, FamilyKind::perp, f.label().empty() ? "perp" : f.label() + "^perp");
  return out;
}

namespace {

// Depth-first enumeration of the members inside `ground`, extending only by
// larger elements. Hereditarity makes pruning at non-members exact.
void collect_members(const Family& f, const IdSet& ground, std::size_t from, IdSet& cur, std::vector<IdSet>& out) {
  out.push_back(cur);
  for (std::size_t i = from; i < ground.size(); ++i) {
    cur.push_back(ground[i]);
    if (f.contains(cur)) collect_members(f, ground, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<IdSet> members_within(const Family& f, const IdSet& ground) {
  IdSet g = make_set(ground);
  std::vector<IdSet> out;
  IdSet cur;
  collect_members(f, g, 0, cur, out);
  sort_colex(out);
  return out;
}

std::vector<IdSet> max_elements(const Family& f, const IdSet& ground) {
  IdSet g = make_set(ground);
  std::vector<IdSet> out;
  for (auto& m : members_within(f, g)) {
    bool maximal = true;
    for (int v : g) {
      if (std::binary_search(m.begin(), m.end(), v)) continue;
      if (f.contains(set_union(m, IdSet{v}))) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(std::move(m));
  }
  return out;
}

namespace {

// Cliques of the pair graph {a,b} ∈ f, in DFS order.
void pair_cliques(const std::vector<std::vector<bool>>& adj, const IdSet& ids, std::size_t from, std::vector<std::size_t>& cur,
                  const Family& f, std::vector<IdSet>& failures) {
  if (cur.size() >= 3) {
    IdSet s;
    for (auto i : cur) s.push_back(ids[i]);
    if (!f.contains(s)) failures.push_back(std::move(s));
  }
  for (std::size_t i = from; i < ids.size(); ++i) {
    bool ok = std::all_of(cur.begin(), cur.end(), [&](std::size_t j) { return adj[i][j]; });
    if (!ok) continue;
    cur.push_back(i);
    pair_cliques(adj, ids, i + 1, cur, f, failures);
    cur.pop_back();
  }
}

}  // namespace

GraphGenerated is_graph_generated(const Family& f, int truncation) {
  const IdSet ids = f.universe().truncated(truncation).ids();
  const std::size_t n = ids.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      adj[i][j] = adj[j][i] = f.contains(IdSet{ids[i], ids[j]});
    }
  }
  std::vector<IdSet> failures;
  std::vector<std::size_t> cur;
  pair_cliques(adj, ids, 0, cur, f, failures);
  if (failures.empty()) return {true, std::nullopt};
  return {false, *std::min_element(failures.begin(), failures.end(), colex_less)};
}

namespace {

bool find_member_of_size(const Family& f, const IdSet& ground, std::size_t from, std::size_t size, IdSet& cur) {
  if (cur.size() == size) return true;
  for (std::size_t i = from; i + (size - cur.size()) <= ground.size(); ++i) {
    cur.push_back(ground[i]);
    if (f.contains(cur) && find_member_of_size(f, ground, i + 1, size, cur)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<IdSet>> find_chain(const Family& f, int depth, int truncation) {
  if (depth < 0) throw InvalidArgument("chain depth must be non-negative");
  const IdSet ground = f.universe().truncated(truncation).ids();
  IdSet top;
  if (!find_member_of_size(f, ground, 0, static_cast<std::size_t>(depth), top)) return std::nullopt;
  std::vector<IdSet> chain;
  for (std::size_t k = 1; k <= top.size(); ++k) chain.emplace_back(top.begin(), top.begin() + static_cast<std::ptrdiff_t>(k));
  return chain;
}

SignVector::SignVector(std::map<int, int> values) : values_(std::move(values)) {
  for (const auto& [id, s] : values_) {
    if (s != 1 && s != -1) throw InvalidArgument("sign vector entries must be ±1");
  }
}

IdSet SignVector::support() const {
  IdSet s;
  for (const auto& [id, v] : values_) s.push_back(id);
  return s;
}

RatVector SignVector::to_vector() const {
  RatVector v;
  for (const auto& [id, s] : values_) v.set(id, Rat(s));
  return v;
}

DensePoint SignVector::to_dense(const IdSet& ground) const {
  DensePoint p(ground.size());
  for (std::size_t i = 0; i < ground.size(); ++i) {
    auto it = values_.find(ground[i]);
    if (it != values_.end()) p[i] = Rat(it->second);
  }
  return p;
}

std::vector<SignVector> sign_vectors(const std::vector<IdSet>& sets) {
  std::set<SignVector> out;
  for (const auto& raw : sets) {
    IdSet s = make_set(raw);
    if (s.size() >= 63) throw SizeLimitExceeded("sign vectors of a set with 63 or more elements");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.size()); ++mask) {
      std::map<int, int> vals;
      for (std::size_t i = 0; i < s.size(); ++i) vals[s[i]] = (mask >> i & 1U) ? -1 : 1;
      out.insert(SignVector(std::move(vals)));
    }
  }
  return {out.begin(), out.end()};
}

namespace {

using Member = std::function<bool(const IdSet&)>;

IdSet slice(const IdSet& s, std::size_t lo, std::size_t hi) {
  return IdSet(s.begin() + static_cast<std::ptrdiff_t>(lo), s.begin() + static_cast<std::ptrdiff_t>(hi));
}

// S(F): greedy cover by longest consecutive members. For a hereditary F the
// greedy piece count is the minimum over all interval splits.
bool schreier_op(const IdSet& s, const Member& inner) {
  if (s.empty()) return true;
  std::size_t pieces = 0;
  std::size_t lo = 0;
  while (lo < s.size()) {
    std::size_t hi = lo + 1;
    while (hi < s.size() && inner(slice(s, lo, hi + 1))) ++hi;
    ++pieces;
    lo = hi;
  }
  return pieces <= static_cast<std::size_t>(s.front());
}

bool member(const Ordinal& alpha, SchreierVariant variant, const IdSet& s);

// D*: E = F_m ∪ … ∪ F_1 with {m} ≤ F_m < … < F_1 and F_k ∈ S*_{ξ_k}.
bool dstar_op(const Ordinal& gamma, const IdSet& s) {
  const std::size_t len = s.size();
  const std::size_t max_m = std::min<std::size_t>(len, static_cast<std::size_t>(s.front()));
  for (std::size_t m = 1; m <= max_m; ++m) {
    // reach[j]: the prefix of length j splits into the pieces F_m … F_{m-t+1}.
    std::vector<std::vector<bool>> reach(m + 1, std::vector<bool>(len + 1, false));
    reach[0][0] = true;
    for (std::size_t t = 1; t <= m; ++t) {
      const Ordinal level = gamma.ladder(static_cast<int>(m - t + 1));
      for (std::size_t j = 0; j < len; ++j) {
        if (!reach[t - 1][j]) continue;
        for (std::size_t e = j + 1; e <= len; ++e) {
          if (reach[t][e]) continue;
          if (!member(level, SchreierVariant::star, slice(s, j, e))) break;
          reach[t][e] = true;
        }
      }
    }
    if (reach[m][len]) return true;
  }
  return false;
}

bool member(const Ordinal& alpha, SchreierVariant variant, const IdSet& s) {
  if (s.size() <= 1) return true;
  switch (alpha.kind()) {
    case Ordinal::Kind::zero:
      return false;
    case Ordinal::Kind::successor: {
      const Ordinal& pred = alpha.predecessor();
      return schreier_op(s, [&](const IdSet& t) { return member(pred, variant, t); });
    }
    case Ordinal::Kind::limit:
      if (variant == SchreierVariant::star) return dstar_op(alpha, s);
      for (int k = 1; k <= s.front(); ++k) {
        if (member(alpha.ladder(k), variant, s)) return true;
      }
      return false;
  }
  return false;
}

}  // namespace

bool schreier_contains(const Ordinal& alpha, SchreierVariant variant, const IdSet& s) {
  if (!s.empty() && s.front() < 1) throw InvalidArgument("Schreier families live on ids ≥ 1");
  return member(alpha, variant, s);
}

Family schreier_operation(const Family& f) {
  if (!f.universe().ids().empty() && f.universe().ids().front() < 1) {
    throw InvalidArgument("the Schreier operation needs ids >= 1");
  }
  return Family(
      f.universe(), [f](const IdSet& s) { return schreier_op(s, [&](const IdSet& t) { return f.contains(t); }); },
      FamilyKind::schreier, "S(" + f.label() + ")");
}

Family schreier(const Ordinal& alpha, SchreierVariant variant, int truncation) {
  std::string label = std::string(variant == SchreierVariant::star ? "S*_" : "S_") + alpha.str();
  Family f(Universe::bounded(truncation), [alpha, variant](const IdSet& s) { return member(alpha, variant, s); },
           FamilyKind::schreier, label);
  std::string ladder = "user";
  if (alpha.canonical_form()) {
    ladder = alpha.ladder_shift() == 0 ? "canonical (omega*a+omega)_k = omega*a+k"
                                       : "canonical shifted by " + std::to_string(alpha.ladder_shift());
  }
  return f.with_metadata("ladder", ladder).with_metadata("variant", variant == SchreierVariant::star ? "star" : "standard");
}

namespace {

IdSet check_parts(const std::vector<FamilyPart>& parts) {
  IdSet all;
  for (const auto& [ground, fam] : parts) {
    IdSet g = make_set(ground);
    if (!set_intersection(all, g).empty()) throw InvalidArgument("family parts must have pairwise disjoint ground sets");
    all = set_union(all, g);
  }
  return all;
}

}  // namespace

Family farah(const std::vector<FamilyPart>& parts) {
  IdSet all = check_parts(parts);
  auto pred = [parts](const IdSet& s) {
    return std::all_of(parts.begin(), parts.end(), [&](const FamilyPart& p) {
      return p.second.contains(set_intersection(s, make_set(p.first)));
    });
  };
  return Family(Universe::explicit_ids(all), pred, FamilyKind::farah, "farah");
}

Family union_family(const std::vector<FamilyPart>& parts) {
  IdSet all = check_parts(parts);
  auto pred = [parts](const IdSet& s) {
    return std::any_of(parts.begin(), parts.end(), [&](const FamilyPart& p) {
      return is_subset(s, make_set(p.first)) && p.second.contains(s);
    });
  };
  return Family(Universe::explicit_ids(all), pred, FamilyKind::union_of, "union");
}

Poset::Poset(IdSet elements, std::set<std::pair<int, int>> leq) : elements_(make_set(std::move(elements))), leq_(std::move(leq)) {
  auto in = [&](int v) { return std::binary_search(elements_.begin(), elements_.end(), v); };
  for (const auto& [a, b] : leq_) {
    if (!in(a) || !in(b)) throw InvalidArgument("relation mentions an element outside the poset");
  }
  for (int v : elements_) {
    if (!leq_.count({v, v})) throw InvalidArgument("relation is not reflexive at " + std::to_string(v));
  }
  for (const auto& [a, b] : leq_) {
    if (a != b && leq_.count({b, a})) {
      throw InvalidArgument("relation is not antisymmetric: " + std::to_string(a) + " and " + std::to_string(b));
    }
  }
  for (const auto& [a, b] : leq_) {
    for (auto it = leq_.lower_bound({b, std::numeric_limits<int>::min()}); it != leq_.end() && it->first == b; ++it) {
      if (!leq_.count({a, it->second})) {
        throw InvalidArgument("relation is not transitive: " + std::to_string(a) + " ≤ " + std::to_string(b) + " ≤ " +
                              std::to_string(it->second));
      }
    }
  }
}

Family poset_chains(const Poset& p) {
  auto pred = [p](const IdSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (!p.comparable(s[i], s[j])) return false;
      }
    }
    return true;
  };
  return Family(Universe::explicit_ids(p.elements()), pred, FamilyKind::custom, "chains");
}

Family poset_antichains(const Poset& p) {
  auto pred = [p](const IdSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (p.comparable(s[i], s[j])) return false;
      }
    }
    return true;
  };
  return Family(Universe::explicit_ids(p.elements()), pred, FamilyKind::custom, "antichains");
}

Poset product_order(int n) {
  if (n < 1) throw InvalidArgument("product order needs n ≥ 1");
  IdSet elems;
  std::set<std::pair<int, int>> leq;
  auto id = [n](int i, int j) { return (i - 1) * n + j; };
  for (int i0 = 1; i0 <= n; ++i0) {
    for (int j0 = 1; j0 <= n; ++j0) {
      elems.push_back(id(i0, j0));
      for (int i1 = i0; i1 <= n; ++i1) {
        for (int j1 = j0; j1 <= n; ++j1) leq.insert({id(i0, j0), id(i1, j1)});
      }
    }
  }
  return Poset(std::move(elems), std::move(leq));
}

}  // namespace combinorm
