#include "combinorm/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <memory>
#include <numeric>
#include <sstream>

#include "combinorm/errors.hpp"

namespace combinorm {

namespace {

using Mask = std::uint64_t;

const IdSet kEmpty;

Mask bit(std::size_t i) { return Mask{1} << i; }

int lowest(Mask m) { return std::countr_zero(m); }

}  // namespace

Graph::Graph(IdSet vertices, const std::vector<std::pair<int, int>>& edges) : vertices_(make_set(std::move(vertices))) {
  for (int v : vertices_) {
    if (v < 0) throw InvalidArgument("vertex ids are non-negative");
    adj_[v];
  }
  for (auto [a, b] : edges) {
    if (a == b) throw InvalidArgument("loop at vertex " + std::to_string(a));
    if (!has_vertex(a) || !has_vertex(b)) {
      throw InvalidArgument("edge {" + std::to_string(a) + "," + std::to_string(b) + "} leaves the vertex set");
    }
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& [v, nb] : adj_) nb = make_set(std::move(nb));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  IdSet vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), 1);
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n; ++i) es.emplace_back(i, i % n + 1);
  return Graph(vs, es);
}

Graph Graph::complete(int n) {
  IdSet vs(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(vs.begin(), vs.end(), 1);
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) es.emplace_back(i, j);
  }
  return Graph(vs, es);
}

Graph Graph::path(int n) {
  IdSet vs(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(vs.begin(), vs.end(), 1);
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
  return Graph(vs, es);
}

Graph Graph::edgeless(int n) {
  IdSet vs(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(vs.begin(), vs.end(), 1);
  return Graph(vs, {});
}

bool Graph::has_vertex(int v) const { return adj_.count(v) > 0; }

bool Graph::adjacent(int a, int b) const {
  auto it = adj_.find(a);
  return it != adj_.end() && std::binary_search(it->second.begin(), it->second.end(), b);
}

const IdSet& Graph::neighbours(int v) const {
  auto it = adj_.find(v);
  return it == adj_.end() ? kEmpty : it->second;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [v, nb] : adj_) {
    for (int u : nb) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t d = 0;
  for (const auto& [v, nb] : adj_) d += nb.size();
  return d / 2;
}

Graph Graph::complement() const {
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      if (!adjacent(vertices_[i], vertices_[j])) es.emplace_back(vertices_[i], vertices_[j]);
    }
  }
  return Graph(vertices_, es);
}

Graph Graph::induced(const IdSet& subset) const {
  IdSet s = make_set(subset);
  for (int v : s) {
    if (!has_vertex(v)) throw InvalidArgument("vertex " + std::to_string(v) + " not in graph");
  }
  std::vector<std::pair<int, int>> es;
  for (auto [a, b] : edges()) {
    if (std::binary_search(s.begin(), s.end(), a) && std::binary_search(s.begin(), s.end(), b)) es.emplace_back(a, b);
  }
  return Graph(s, es);
}

std::size_t Graph::index_of(int v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw InvalidArgument("vertex " + std::to_string(v) + " not in graph");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (size() > 64) throw SizeLimitExceeded("bit-mask kernels handle at most 64 vertices");
  std::vector<Mask> m(size(), 0);
  for (std::size_t i = 0; i < size(); ++i) {
    for (int u : neighbours(vertices_[i])) m[i] |= bit(index_of(u));
  }
  return m;
}

bool is_clique(const Graph& g, const IdSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!g.has_vertex(s[i])) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_anticlique(const Graph& g, const IdSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!g.has_vertex(s[i])) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

Family cliques(const Graph& g) {
  auto gp = std::make_shared<const Graph>(g);
  Family f(Universe::explicit_ids(g.vertices()), [gp](const IdSet& s) { return is_clique(*gp, s); },
           FamilyKind::graph_cliques, "cliques");
  return f.with_clique_graph(gp);
}

Family anticliques(const Graph& g) {
  auto gc = std::make_shared<const Graph>(g.complement());
  Family f(Universe::explicit_ids(g.vertices()), [gc](const IdSet& s) { return is_clique(*gc, s); },
           FamilyKind::graph_cliques, "anticliques");
  return f.with_clique_graph(gc);
}

namespace {

// Bron–Kerbosch with Tomita pivoting over bit masks.
void bron_kerbosch(const std::vector<Mask>& adj, Mask r, Mask p, Mask x, std::vector<Mask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  Mask px = p | x;
  int pivot = lowest(px);
  std::size_t best = 0;
  for (Mask m = px; m; m &= m - 1) {
    int u = lowest(m);
    auto c = static_cast<std::size_t>(std::popcount(p & adj[u]));
    if (c >= best) {
      best = c;
      pivot = u;
    }
  }
  for (Mask m = p & ~adj[pivot]; m; m &= m - 1) {
    int v = lowest(m);
    bron_kerbosch(adj, r | bit(v), p & adj[v], x & adj[v], out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

std::vector<Mask> maximal_clique_masks(const std::vector<Mask>& adj, Mask within) {
  std::vector<Mask> out;
  if (within == 0) return {0};
  bron_kerbosch(adj, 0, within, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

int clique_number_mask(const std::vector<Mask>& adj, Mask within) {
  int best = 0;
  std::function<void(Mask, int)> grow = [&](Mask p, int size) {
    if (p == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + std::popcount(p) <= best) return;
    while (p) {
      if (size + std::popcount(p) <= best) return;
      int v = lowest(p);
      p &= ~bit(static_cast<std::size_t>(v));
      grow(p & adj[v], size + 1);
    }
    best = std::max(best, size);
  };
  grow(within, 0);
  return best;
}

// Exact chromatic number by DSATUR branch and bound, seeded with the clique
// number as lower bound.
int chromatic_number_mask(const std::vector<Mask>& adj, Mask within) {
  const int n = static_cast<int>(adj.size());
  const int vcount = std::popcount(within);
  if (vcount == 0) return 0;
  const int lower = clique_number_mask(adj, within);
  int best = vcount;
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::function<void(int, int)> search = [&](int coloured, int used) {
    if (used >= best) return;
    if (coloured == vcount) {
      best = used;
      return;
    }
    // Most saturated uncoloured vertex, ties by degree then id.
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    Mask pick_forbidden = 0;
    for (Mask m = within; m; m &= m - 1) {
      int v = lowest(m);
      if (colour[static_cast<std::size_t>(v)] >= 0) continue;
      Mask forbidden = 0;
      for (Mask nb = adj[v] & within; nb; nb &= nb - 1) {
        int c = colour[static_cast<std::size_t>(lowest(nb))];
        if (c >= 0) forbidden |= bit(static_cast<std::size_t>(c));
      }
      int sat = std::popcount(forbidden);
      int deg = std::popcount(adj[v] & within);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
        pick_forbidden = forbidden;
      }
    }
    for (int c = 0; c < used; ++c) {
      if (pick_forbidden & bit(static_cast<std::size_t>(c))) continue;
      colour[static_cast<std::size_t>(pick)] = c;
      search(coloured + 1, used);
      colour[static_cast<std::size_t>(pick)] = -1;
      if (best == lower) return;
    }
    if (used + 1 < best) {
      colour[static_cast<std::size_t>(pick)] = used;
      search(coloured + 1, used + 1);
      colour[static_cast<std::size_t>(pick)] = -1;
    }
  };
  search(0, 0);
  return best;
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

std::vector<IdSet> masks_to_sets(const Graph& g, const std::vector<Mask>& masks) {
  std::vector<IdSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(subset_from_mask(g.vertices(), m));
  return out;
}

}  // namespace

// Numeric order of masks over sorted vertices is colex order of the sets.
std::vector<IdSet> maximal_cliques(const Graph& g) {
  auto adj = g.adjacency_masks();
  return masks_to_sets(g, maximal_clique_masks(adj, full_mask(g.size())));
}

std::vector<IdSet> maximal_anticliques(const Graph& g) { return maximal_cliques(g.complement()); }

int clique_number(const Graph& g) { return clique_number_mask(g.adjacency_masks(), full_mask(g.size())); }

int chromatic_number(const Graph& g) { return chromatic_number_mask(g.adjacency_masks(), full_mask(g.size())); }

WeightedClique max_weight_clique(const Graph& g, const std::map<int, Rat>& weights) {
  auto adj = g.adjacency_masks();
  const std::size_t n = g.size();
  std::vector<mpq_class> w(n);
  Mask active = 0;
  for (const auto& [v, x] : weights) {
    if (x.sign() < 0) throw InvalidArgument("clique weights must be non-negative");
    if (x.is_zero()) continue;
    std::size_t i = g.index_of(v);
    w[i] = x.raw();
    active |= bit(i);
  }
  mpq_class best = 0;
  Mask best_set = 0;
  // Colour-class bound: a clique takes at most one vertex per class.
  auto bound = [&](Mask p) {
    mpq_class total = 0;
    while (p) {
      Mask cls = 0;
      mpq_class top = 0;
      for (Mask rest = p; rest; rest &= rest - 1) {
        int v = lowest(rest);
        if (adj[static_cast<std::size_t>(v)] & cls) continue;
        cls |= bit(static_cast<std::size_t>(v));
        if (w[static_cast<std::size_t>(v)] > top) top = w[static_cast<std::size_t>(v)];
      }
      total += top;
      p &= ~cls;
    }
    return total;
  };
  std::function<void(Mask, Mask, const mpq_class&)> grow = [&](Mask r, Mask p, const mpq_class& value) {
    if (value > best) {
      best = value;
      best_set = r;
    }
    if (p == 0 || value + bound(p) <= best) return;
    while (p) {
      if (value + bound(p) <= best) return;
      int v = lowest(p);
      p &= ~bit(static_cast<std::size_t>(v));
      grow(r | bit(static_cast<std::size_t>(v)), p & adj[static_cast<std::size_t>(v)], value + w[static_cast<std::size_t>(v)]);
    }
  };
  grow(0, active, 0);
  return {Rat(best), subset_from_mask(g.vertices(), best_set)};
}

Graph comparability(const Poset& p) {
  std::vector<std::pair<int, int>> es;
  const auto& el = p.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (p.comparable(el[i], el[j])) es.emplace_back(el[i], el[j]);
    }
  }
  return Graph(el, es);
}

namespace {

// Subsets of a fixed size in increasing numeric (= colex) order.
Mask next_combination(Mask x) {
  Mask c = x & (~x + 1);
  Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

std::vector<int> cycle_order(const Graph& g, const std::vector<Mask>& adj, Mask s) {
  std::vector<int> order;
  int start = lowest(s);
  Mask nb = adj[static_cast<std::size_t>(start)] & s;
  int prev = start;
  int cur = lowest(nb);
  order.push_back(g.vertices()[static_cast<std::size_t>(start)]);
  while (cur != start) {
    order.push_back(g.vertices()[static_cast<std::size_t>(cur)]);
    Mask next = adj[static_cast<std::size_t>(cur)] & s & ~bit(static_cast<std::size_t>(prev));
    prev = cur;
    cur = lowest(next);
  }
  return order;
}

bool is_chordless_cycle(const std::vector<Mask>& adj, Mask s) {
  for (Mask m = s; m; m &= m - 1) {
    if (std::popcount(adj[static_cast<std::size_t>(lowest(m))] & s) != 2) return false;
  }
  // All degrees are two, so s is a disjoint union of cycles; require one.
  Mask seen = bit(static_cast<std::size_t>(lowest(s)));
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask m = frontier; m; m &= m - 1) next |= adj[static_cast<std::size_t>(lowest(m))] & s;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == s;
}

std::optional<std::vector<int>> smallest_odd_hole(const Graph& g, const HoleConfig& config) {
  if (g.size() > config.size_limit) {
    throw SizeLimitExceeded("hole search limited to " + std::to_string(config.size_limit) + " vertices");
  }
  const auto adj = g.adjacency_masks();
  const std::size_t n = g.size();
  for (std::size_t k = 5; k <= n; k += 2) {
    const Mask limit = bit(n);
    for (Mask s = bit(k) - 1; s < limit; s = next_combination(s)) {
      if (is_chordless_cycle(adj, s)) return cycle_order(g, adj, s);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> find_odd_hole(const Graph& g, const HoleConfig& config) {
  return smallest_odd_hole(g, config);
}

std::optional<std::vector<int>> find_odd_antihole(const Graph& g, const HoleConfig& config) {
  if (g.size() > config.size_limit) {
    throw SizeLimitExceeded("antihole search limited to " + std::to_string(config.size_limit) + " vertices");
  }
  return smallest_odd_hole(g.complement(), config);
}

bool is_perfect(const Graph& g, PerfectMethod method, const HoleConfig& config) {
  if (g.size() > config.size_limit) {
    throw SizeLimitExceeded("perfection test limited to " + std::to_string(config.size_limit) + " vertices");
  }
  if (method == PerfectMethod::spgt) return !find_odd_hole(g, config) && !find_odd_antihole(g, config);
  const auto adj = g.adjacency_masks();
  const Mask all = full_mask(g.size());
  for (Mask s = 1; s != 0 && s <= all; ++s) {
    if (chromatic_number_mask(adj, s) != clique_number_mask(adj, s)) return false;
  }
  return true;
}

namespace {

std::uint64_t code_under(const std::vector<Mask>& adj, const std::vector<int>& label_of_pos) {
  // label_of_pos[new label] = old position
  const std::size_t n = label_of_pos.size();
  std::uint64_t code = 0;
  std::size_t b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++b) {
      if (adj[static_cast<std::size_t>(label_of_pos[i])] & bit(static_cast<std::size_t>(label_of_pos[j]))) code |= bit(b);
    }
  }
  return code;
}

}  // namespace

std::uint64_t graph_code(const Graph& g) {
  if (g.size() > 11) throw SizeLimitExceeded("graph codes support at most 11 vertices");
  auto adj = g.adjacency_masks();
  std::vector<int> id(g.size());
  std::iota(id.begin(), id.end(), 0);
  return code_under(adj, id);
}

// Minimum code over relabellings that list vertices by non-decreasing degree.
// The degree partition is an isomorphism invariant, so the minimum is too.
std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.size();
  if (n > 10) throw SizeLimitExceeded("canonical codes support at most 10 vertices");
  auto adj = g.adjacency_masks();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(adj[static_cast<std::size_t>(a)]) < std::popcount(adj[static_cast<std::size_t>(b)]);
  });
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && std::popcount(adj[static_cast<std::size_t>(order[j])]) == std::popcount(adj[static_cast<std::size_t>(order[i])])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> permute = [&](std::size_t c) {
    if (c == classes.size()) {
      best = std::min(best, code_under(adj, order));
      return;
    }
    auto [lo, hi] = classes[c];
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      permute(c + 1);
    } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  permute(0);
  return n < 2 ? 0 : best;
}

Graph graph_from_code(int n, std::uint64_t code) {
  if (n < 0 || n > 11) throw InvalidArgument("graph codes support 0..11 vertices");
  IdSet vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), 1);
  std::vector<std::pair<int, int>> es;
  std::size_t b = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++b) {
      if (code & bit(b)) es.emplace_back(i + 1, j + 1);
    }
  }
  if (b < 64 && (code >> b) != 0) throw InvalidArgument("graph code has bits beyond its vertex count");
  return Graph(vs, es);
}

Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> es;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string fmt;
      long m = 0;
      if (!(ls >> fmt >> n >> m) || n < 0) throw InvalidArgument("DIMACS line " + std::to_string(lineno) + ": bad problem line");
    } else if (tag == "e") {
      int a = 0;
      int b = 0;
      if (n < 0) throw InvalidArgument("DIMACS line " + std::to_string(lineno) + ": edge before problem line");
      if (!(ls >> a >> b) || a < 1 || b < 1 || a > n || b > n) {
        throw InvalidArgument("DIMACS line " + std::to_string(lineno) + ": bad edge");
      }
      if (a != b) es.emplace_back(std::min(a, b), std::max(a, b));
    } else {
      throw InvalidArgument("DIMACS line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
    }
  }
  if (n < 0) throw InvalidArgument("DIMACS input has no problem line");
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  IdSet vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), 1);
  return Graph(vs, es);
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream os;
  auto es = g.edges();
  os << "p edge " << g.size() << ' ' << es.size() << '\n';
  for (auto [a, b] : es) os << "e " << g.index_of(a) + 1 << ' ' << g.index_of(b) + 1 << '\n';
  return os.str();
}

}  // namespace combinorm
