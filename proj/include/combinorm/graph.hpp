#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combinorm/family.hpp"
#include "combinorm/rat.hpp"
#include "combinorm/sets.hpp"

namespace combinorm {

/// Finite simple graph on integer ids.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidArgument on loops or endpoints outside `vertices`.
  Graph(IdSet vertices, const std::vector<std::pair<int, int>>& edges);

  static Graph cycle(int n);     // 1-2-…-n-1
  static Graph complete(int n);  // on 1..n
  static Graph path(int n);
  static Graph edgeless(int n);

  const IdSet& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool has_vertex(int v) const;
  bool adjacent(int a, int b) const;
  const IdSet& neighbours(int v) const;
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;

  Graph complement() const;
  Graph induced(const IdSet& subset) const;

  /// Position of `v` in vertices().
  std::size_t index_of(int v) const;
  /// Adjacency rows as bit masks over vertex positions; requires size() ≤ 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  IdSet vertices_;
  std::map<int, IdSet> adj_;
};

bool is_clique(const Graph& g, const IdSet& s);
bool is_anticlique(const Graph& g, const IdSet& s);

/// C(G) and A(G) as families over the vertex set.
Family cliques(const Graph& g);
Family anticliques(const Graph& g);

/// Maximal cliques in colex order.
std::vector<IdSet> maximal_cliques(const Graph& g);
std::vector<IdSet> maximal_anticliques(const Graph& g);

int clique_number(const Graph& g);
int chromatic_number(const Graph& g);

struct WeightedClique {
  Rat weight;
  IdSet clique;
};

/// Maximum of Σ w(v) over cliques, w ≥ 0; branch and bound with a colouring
/// bound. The returned clique attains the maximum.
WeightedClique max_weight_clique(const Graph& g, const std::map<int, Rat>& weights);

Graph comparability(const Poset& p);

struct HoleConfig {
  std::size_t size_limit = 12;
};

/// Smallest odd hole (then colex-first vertex set), as a cycle starting at its
/// minimum vertex and continuing towards the smaller of its two neighbours.
std::optional<std::vector<int>> find_odd_hole(const Graph& g, const HoleConfig& config = {});
/// Same search in the complement.
std::optional<std::vector<int>> find_odd_antihole(const Graph& g, const HoleConfig& config = {});

enum class PerfectMethod { spgt, chi_omega };

bool is_perfect(const Graph& g, PerfectMethod method, const HoleConfig& config = {});

/// Canonical upper-triangle adjacency code over all relabellings to 0..n−1
/// (n ≤ 10). Two graphs are isomorphic iff their sizes and codes agree.
std::uint64_t canonical_code(const Graph& g);
/// Graph on 1..n from an upper-triangle code (bit order (0,1),(0,2),…,(1,2),…).
Graph graph_from_code(int n, std::uint64_t code);
std::uint64_t graph_code(const Graph& g);

/// DIMACS edge format: "p edge n m" then "e u v" lines; 'c' lines ignored.
Graph parse_dimacs(const std::string& text);
std::string to_dimacs(const Graph& g);

}  // namespace combinorm
