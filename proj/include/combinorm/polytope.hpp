#pragma once

#include <cstddef>
#include <vector>

#include "combinorm/rat.hpp"

namespace combinorm {

struct Inequality {
  DensePoint normal;
  Rat bound;
};

/// H-representation {x : normal·x ≤ bound for every inequality}.
class Polytope {
 public:
  Polytope(std::size_t dimension, std::vector<Inequality> inequalities);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Inequality>& inequalities() const { return inequalities_; }

  bool contains(const DensePoint& x) const;

 private:
  std::size_t dimension_;
  std::vector<Inequality> inequalities_;
};

struct VertexConfig {
  std::size_t dimension_limit = 10;
};

/// Exact vertex set of a bounded polytope, sorted lexicographically and
/// without duplicates. Uses the double description method on the homogenised
/// cone. Throws DimensionLimitExceeded above the configured dimension and
/// Unbounded when the polytope has a recession direction.
std::vector<DensePoint> vertices(const Polytope& p, const VertexConfig& config = {});

/// Reference enumeration: every dimension-sized subset of inequalities is
/// solved and feasible solutions are kept. Exponential; intended for tests
/// and benchmarks on small inputs.
std::vector<DensePoint> vertices_bruteforce(const Polytope& p, const VertexConfig& config = {});

/// Same as vertices_bruteforce with the subset loop split across OpenMP
/// threads. Output is identical.
std::vector<DensePoint> vertices_bruteforce_parallel(const Polytope& p, const VertexConfig& config = {});

/// Polar of a polytope given by its vertex set: {y : v·y ≤ 1 for every v}.
Polytope polar_of_points(std::size_t dimension, const std::vector<DensePoint>& points);

}  // namespace combinorm
