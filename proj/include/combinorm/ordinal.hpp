#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>

namespace combinorm {

/// Countable ordinal below ω^ω given as Zero, a successor, or a limit with a
/// fundamental sequence k ↦ ξ_k (k ≥ 1). The canonical constructors cover
/// ω·a + b with the ladder ξ^{ω·a}_k = ω·(a−1) + k + shift.
class Ordinal {
 public:
  enum class Kind { zero, successor, limit };
  using Sequence = std::function<Ordinal(int)>;

  static Ordinal zero();
  static Ordinal finite(int n);
  static Ordinal omega();
  /// ω·a + b. A non-zero `ladder_shift` selects the shifted ladder
  /// ξ_k + shift at every limit below and at this ordinal.
  static Ordinal omega_times(int a, int b, int ladder_shift = 0);
  static Ordinal successor(const Ordinal& of);
  /// Limit with a user supplied fundamental sequence. A null sequence is
  /// accepted here and reported as LadderMissing when used.
  static Ordinal limit(Sequence seq, std::string label);

  /// Parses "3", "omega", "w", "omega*2", "omega*2+1".
  static Ordinal parse(const std::string& text);

  Kind kind() const;
  const Ordinal& predecessor() const;
  Ordinal ladder(int k) const;

  /// (a, b) for ordinals built by the canonical constructors.
  std::optional<std::pair<int, int>> canonical_form() const;
  int ladder_shift() const;

  std::string str() const;

 private:
  struct Node;
  explicit Ordinal(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace combinorm
