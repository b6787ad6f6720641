#include "combinorm/extremals.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "combinorm/errors.hpp"
#include "combinorm/family.hpp"
#include "combinorm/linalg.hpp"

namespace combinorm {

std::vector<RatVector> terminal_points(const Graph& g) {
  std::vector<RatVector> out;
  for (const SignVector& s : sign_vectors(maximal_anticliques(g))) out.push_back(s.to_vector());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Rat clique_norm(const Graph& g, const RatVector& x) {
  std::map<int, Rat> w;
  for (const auto& [v, value] : x) w[v] = value.abs();
  return max_weight_clique(g, w).weight;
}

}  // namespace

ExtremeCheck is_extreme(const Graph& g, const RatVector& x) {
  for (const auto& [v, value] : x) {
    if (!g.has_vertex(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is not in the graph");
  }
  const Rat n = clique_norm(g, x);
  if (n != Rat(1)) throw NotOnSphere("the clique norm of x is " + n.str() + ", not 1");
  ExtremeCheck out;
  std::set<RatVector> normals;
  for (const IdSet& c : maximal_cliques(g)) {
    Rat sum;
    for (int v : c) sum += x.get(v).abs();
    if (sum != Rat(1)) continue;
    out.tight_cliques.push_back(c);
    RatVector sigma;
    for (int v : c) {
      const int s = x.get(v).sign();
      sigma.set(v, Rat(s < 0 ? -1 : 1));
      if (s == 0) normals.insert(RatVector{{v, Rat(1)}});
    }
    normals.insert(sigma);
  }
  out.normals.assign(normals.begin(), normals.end());
  const IdSet& vs = g.vertices();
  RatMatrix m(out.normals.size(), vs.size());
  for (std::size_t r = 0; r < out.normals.size(); ++r) {
    for (std::size_t c = 0; c < vs.size(); ++c) m.at(r, c) = out.normals[r].get(vs[c]);
  }
  out.rank = out.normals.empty() ? 0 : rank(m);
  out.extreme = out.rank == vs.size();
  return out;
}

namespace {

std::vector<IdSet> components(const Graph& g) {
  std::vector<IdSet> out;
  std::set<int> seen;
  for (int start : g.vertices()) {
    if (seen.count(start)) continue;
    IdSet comp;
    std::vector<int> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.neighbours(v)) {
        if (seen.insert(u).second) stack.push_back(u);
      }
    }
    out.push_back(make_set(comp));
  }
  return out;
}

void require_odd_hole(const Graph& g, const std::vector<int>& hole) {
  const std::size_t len = hole.size();
  if (len < 5 || len % 2 == 0) throw NotAnOddHole("a hole needs odd length at least 5");
  const IdSet vs = make_set(hole);
  if (vs.size() != len) throw NotAnOddHole("hole vertices repeat");
  for (int v : hole) {
    if (!g.has_vertex(v)) throw NotAnOddHole("vertex " + std::to_string(v) + " is not in the graph");
  }
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(hole[i], hole[j]) != consecutive) {
        throw NotAnOddHole(consecutive ? "hole is not a cycle" : "hole has a chord");
      }
    }
  }
}

}  // namespace

RatVector extend_half(const Graph& g, const std::vector<int>& hole) {
  require_odd_hole(g, hole);
  const Rat half(1, 2);
  std::map<int, Rat> x;
  for (int v : hole) x[v] = half;
  // Candidates: vertices outside D adjacent to D, smallest first.
  std::set<int> frontier;
  auto grow = [&](int v) {
    for (int u : g.neighbours(v)) {
      if (!x.count(u)) frontier.insert(u);
    }
  };
  for (int v : hole) grow(v);
  while (!frontier.empty()) {
    const int k = *frontier.begin();
    frontier.erase(frontier.begin());
    std::vector<int> placed;
    for (int u : g.neighbours(k)) {
      if (x.count(u)) placed.push_back(u);
    }
    Rat value = half;
    bool has_one = false;
    bool half_triangle = false;
    bool all_zero = true;
    for (std::size_t i = 0; i < placed.size(); ++i) {
      const Rat& xi = x.at(placed[i]);
      if (xi == Rat(1)) has_one = true;
      if (xi != Rat()) all_zero = false;
      if (xi != half) continue;
      for (std::size_t j = i + 1; j < placed.size(); ++j) {
        if (x.at(placed[j]) == half && g.adjacent(placed[i], placed[j])) half_triangle = true;
      }
    }
    if (has_one || half_triangle) {
      value = Rat();
    } else if (all_zero) {
      value = Rat(1);
    }
    x[k] = value;
    grow(k);
  }
  RatVector out;
  for (const auto& [v, value] : x) out.set(v, value);
  for (const IdSet& comp : components(g)) {
    if (x.count(comp.front())) continue;
    const auto anti = maximal_anticliques(g.induced(comp));
    for (int v : anti.front()) out.set(v, Rat(1));
  }
  return out;
}

namespace {

Graph antihole(int n) { return Graph::cycle(2 * n + 1).complement(); }

}  // namespace

AntiholePoint antihole_point(int n, const std::optional<std::vector<int>>& signs) {
  if (n < 2) throw InvalidArgument("antihole points need n >= 2");
  const int size = 2 * n + 1;
  if (signs) {
    if (signs->size() != static_cast<std::size_t>(size)) {
      throw InvalidArgument("expected " + std::to_string(size) + " signs");
    }
    for (int s : *signs) {
      if (s != 1 && s != -1) throw InvalidArgument("signs must be +1 or -1");
    }
  }
  AntiholePoint out;
  out.graph = antihole(n);
  for (int v = 1; v <= size; ++v) {
    const long s = signs ? (*signs)[static_cast<std::size_t>(v - 1)] : 1;
    out.x.set(v, Rat(s, n));
  }
  std::vector<Rat> first(static_cast<std::size_t>(size), Rat());
  for (int j = 0; j < n; ++j) first[static_cast<std::size_t>(2 * j)] = Rat(1);
  out.clique_matrix = RatMatrix::circulant(first);
  out.determinant = determinant(out.clique_matrix);
  out.extreme = out.determinant != Rat();
  return out;
}

RationalGadget rational_gadget(const Rat& q) {
  if (q.abs() > Rat(1)) throw InvalidArgument("q must lie in [-1, 1], got " + q.str());
  RationalGadget out;
  const int sign = q.sign() < 0 ? -1 : 1;
  if (q.abs() == Rat(1)) {
    out.graph = Graph::complete(1);
    out.w = 1;
    out.x.set(1, q);
  } else if (q == Rat()) {
    out.graph = Graph::complete(2);
    out.w = 2;
    out.x.set(1, Rat(1));
  } else {
    const Rat a = q.abs();
    if (!a.den().fits_slong_p() || a.den() > 1000) throw InvalidArgument("denominator of q is too large");
    const int n = static_cast<int>(a.den().get_si());
    const int i = static_cast<int>(a.num().get_si());
    const Graph d = antihole(n);
    // Lexicographically first clique of size n − i: greedy from the smallest id.
    IdSet c;
    for (int v : d.vertices()) {
      if (static_cast<int>(c.size()) == n - i) break;
      if (std::all_of(c.begin(), c.end(), [&](int u) { return d.adjacent(u, v); })) c.push_back(v);
    }
    if (static_cast<int>(c.size()) != n - i) throw EquivalenceViolation("antihole clique construction failed");
    out.w = 2 * n + 2;
    IdSet vs = d.vertices();
    vs.push_back(out.w);
    auto edges = d.edges();
    for (int v : c) edges.emplace_back(v, out.w);
    out.graph = Graph(vs, edges);
    for (int v : d.vertices()) out.x.set(v, Rat(1, n));
    out.x.set(out.w, Rat(sign * i, n));
    const AntiholePoint base = antihole_point(n);
    const std::size_t m = static_cast<std::size_t>(2 * n + 1);
    RatMatrix b(m + 1, m + 1);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t k = 0; k < m; ++k) b.at(r, k) = base.clique_matrix.at(r, k);
    }
    for (int v : c) b.at(m, static_cast<std::size_t>(v - 1)) = Rat(1);
    b.at(m, m) = Rat(1);
    out.determinant = determinant(b);
  }
  out.extreme = is_extreme(out.graph, out.x).extreme;
  return out;
}

}  // namespace combinorm
