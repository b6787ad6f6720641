#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "combinorm/graph.hpp"
#include "combinorm/rat.hpp"

namespace combinorm {

/// Injective map n ↦ f(n) from 1..N (or all of N) into Q.
class RationalInjection {
 public:
  enum class Source { explicit_values, stern_brocot, cantor };

  /// Throws InvalidArgument when the values repeat.
  static RationalInjection from_values(std::vector<Rat> values);
  /// 0, then q₁, −q₁, q₂, −q₂, … with q the breadth-first order of the
  /// Stern–Brocot tree (1, 1/2, 2, 1/3, 2/3, 3/2, 3, …).
  static RationalInjection stern_brocot();
  /// 0, then p/q, −p/q over the diagonals p+q = 2, 3, … in lowest terms.
  static RationalInjection cantor();

  Source source() const;
  /// Number of defined values for explicit injections.
  std::optional<std::size_t> limit() const;
  /// f(n) for n ≥ 1; generators extend on demand. Throws InvalidArgument past
  /// the end of an explicit list.
  Rat value(std::size_t n) const;
  /// f(1), …, f(n).
  std::vector<Rat> prefix(std::size_t n) const;

 private:
  struct State;
  explicit RationalInjection(std::shared_ptr<State> s) : state_(std::move(s)) {}
  std::shared_ptr<State> state_;
};

/// The order n ≤_f k ⟺ n ≤ k and f(n) ≤ f(k), read off the injection.
class SierpinskiContext {
 public:
  explicit SierpinskiContext(RationalInjection f) : f_(std::move(f)) {}
  const RationalInjection& injection() const { return f_; }
  bool leq(std::size_t n, std::size_t k) const { return n <= k && f_.value(n) <= f_.value(k); }

 private:
  RationalInjection f_;
};

/// Graph on 1..n with {i,j} (i<j) an edge iff f(i) < f(j).
Graph sierpinski_graph(const SierpinskiContext& ctx, std::size_t n);

/// max Σ|x(i)| over chains i₁<…<i_k with f increasing; weighted longest
/// increasing subsequence over f-ranks with a Fenwick tree of prefix maxima.
Rat chain_norm(const SierpinskiContext& ctx, const RatVector& x);

/// Quadratic dynamic programme for the same value.
Rat chain_norm_quadratic(const SierpinskiContext& ctx, const RatVector& x);

struct EmbedConfig {
  std::size_t search_limit = 10'000'000;  // host indices inspected per step
};

/// Increasing map i ↦ n_i (i = 1..n) with f(n_i) < f(n_j) ⟺ h(i) < h(j).
/// Step k+1 takes the least host index after n_k whose value lies strictly
/// between the f-values of the already placed points that must sit below and
/// above it. Throws HostExhausted when no such index exists.
std::vector<std::size_t> embed(const SierpinskiContext& host, const SierpinskiContext& guest, std::size_t n,
                               const EmbedConfig& config = {});

struct BanachPartition {
  IdSet a1, a2, b1, b2;
  IdSet undetermined_a, undetermined_b;
};

struct BanachOptions {
  /// When true every preimage is assumed to lie in the window, so a chain
  /// that stops there has truly stopped. When false only cycles are decided.
  bool preimages_in_window = true;
};

/// Orbit classification for injections φ: A → B and ψ: B → A restricted to
/// the window 1..n (entries leaving the window are ignored). Backward chains
/// that stop in A put their elements in A₁/B₁, chains that stop in B in
/// A₂/B₂, cycles go to A₁/B₁. Then φ[A₁] = B₁ and ψ[B₂] = A₂ on the window.
BanachPartition banach_partition(const std::map<int, int>& phi, const std::map<int, int>& psi, int n,
                                 const BanachOptions& options = {});

}  // namespace combinorm
