#pragma once

#include <vector>

#include "combinorm/family.hpp"
#include "combinorm/polytope.hpp"
#include "combinorm/rat.hpp"

namespace combinorm {

/// A family together with the finite set V it is restricted to.
class NormContext {
 public:
  /// Throws InvalidArgument when `ground` leaves the family's universe.
  NormContext(Family family, IdSet ground, VertexConfig config = {});

  const Family& family() const { return family_; }
  const IdSet& ground() const { return ground_; }
  const VertexConfig& config() const { return config_; }

 private:
  Family family_;
  IdSet ground_;
  VertexConfig config_;
};

/// ‖x‖_F = max over members F ⊆ supp(x) of Σ_{i∈F} |x(i)|.
Rat norm(const NormContext& ctx, const RatVector& x);

/// Reference evaluation over every subset of supp(x).
Rat norm_bruteforce(const NormContext& ctx, const RatVector& x);

/// {x : σ·x ≤ 1 for every sign pattern σ on every maximal member}, with
/// coordinates in ascending ground order.
Polytope unit_ball(const NormContext& ctx);

/// max α·x over the unit ball.
Rat dual_norm(const NormContext& ctx, const RatVector& alpha);

std::vector<RatVector> ball_extreme_points(const NormContext& ctx);

/// Vertices of the polar of the unit ball compared with W(max(F↾V)).
bool dual_extreme_check(const NormContext& ctx);

/// Sparse vector from a point in ground coordinates.
RatVector to_sparse(const IdSet& ground, const DensePoint& p);
DensePoint to_dense(const IdSet& ground, const RatVector& x);

}  // namespace combinorm
