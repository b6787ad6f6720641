#pragma once

#include <optional>
#include <vector>

#include "combinorm/graph.hpp"
#include "combinorm/rat.hpp"
#include "combinorm/sets.hpp"

namespace combinorm {

/// ±1 vectors supported on maximal anticliques, sorted.
std::vector<RatVector> terminal_points(const Graph& g);

struct ExtremeCheck {
  bool extreme = false;
  std::size_t rank = 0;
  /// Maximal cliques C with Σ_{v∈C} |x(v)| = 1.
  std::vector<IdSet> tight_cliques;
  /// Spanning set of the active normals: per tight clique the sign pattern of
  /// x (zeros read as +1), then e_v for each zero coordinate it contains.
  std::vector<RatVector> normals;
};

/// Vertex test for x in the unit ball of the clique norm of g. Throws
/// InvalidArgument when supp(x) leaves V and NotOnSphere when ‖x‖ ≠ 1.
ExtremeCheck is_extreme(const Graph& g, const RatVector& x);

/// Extreme point with value 1/2 on the odd hole `hole` (given in cycle order)
/// and values in {0, 1/2, 1} on its component; every other component gets
/// the all-ones vector on its colex-first maximal anticlique. Throws
/// NotAnOddHole unless `hole` is an induced odd cycle of length ≥ 5.
RatVector extend_half(const Graph& g, const std::vector<int>& hole);

struct AntiholePoint {
  Graph graph;
  RatVector x;
  /// Rows are the indicators of C_i = {i, i+2, …, i+2n−2} (mod 2n+1).
  RatMatrix clique_matrix;
  Rat determinant;
  bool extreme = false;  // determinant ≠ 0
};

/// The (2n+1)-antihole on 1..2n+1 (complement of the cycle) with
/// x(v) = signs[v]/n. Requires n ≥ 2 and signs of length 2n+1 in {−1, 1}.
AntiholePoint antihole_point(int n, const std::optional<std::vector<int>>& signs = std::nullopt);

struct RationalGadget {
  Graph graph;
  RatVector x;
  int w = 0;
  /// Determinant of the bordered clique matrix, when the antihole is used.
  std::optional<Rat> determinant;
  bool extreme = false;
};

/// Graph and extreme point x with x(w) = q, for q ∈ [−1, 1]. For q = ±i/n in
/// lowest terms with 0 < i < n, w = 2n+2 is joined to the lexicographically
/// first clique of size n−i of the (2n+1)-antihole. q = ±1 uses K₁ and q = 0
/// uses K₂ with x = (1, 0).
RationalGadget rational_gadget(const Rat& q);

}  // namespace combinorm
