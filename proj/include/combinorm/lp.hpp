#pragma once

#include <vector>

#include "combinorm/polytope.hpp"
#include "combinorm/rat.hpp"

namespace combinorm {

struct LpSolution {
  Rat value;
  DensePoint witness;
};

/// Maximises objective·x over p with an exact two-phase simplex using Bland's
/// rule. Throws Unbounded or Infeasible.
LpSolution lp_maximize(const DensePoint& objective, const Polytope& p);

/// True iff point is a convex combination of generators (exact LP
/// feasibility). An empty generator set contains nothing.
bool in_hull(const DensePoint& point, const std::vector<DensePoint>& generators);

namespace lp_detail {

enum class Status { optimal, unbounded, infeasible };

struct StandardResult {
  Status status = Status::infeasible;
  Rat value;
  std::vector<Rat> y;
};

/// maximise c·y subject to A·y = b, y ≥ 0.
StandardResult solve_standard(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                              const std::vector<Rat>& c);

}  // namespace lp_detail

}  // namespace combinorm
