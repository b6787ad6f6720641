#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combinorm/rat.hpp"

namespace combinorm {

/// c · t^p with c > 0 and p ≥ 1.
struct PowerTerm {
  Rat c;
  Rat p;

  friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

/// φ(t) = Σ c_j t^{p_j}: convex, φ(0) = 0, and φ(1) = 1 (Σ c_j = 1).
class OrliczFunction {
 public:
  /// Throws InvalidArgument unless every c > 0, p ≥ 1 and Σ c = 1.
  explicit OrliczFunction(std::vector<PowerTerm> terms);
  static OrliczFunction power(const Rat& p);

  const std::vector<PowerTerm>& terms() const { return terms_; }
  bool integer_exponents() const;

  friend bool operator==(const OrliczFunction&, const OrliczFunction&) = default;

 private:
  std::vector<PowerTerm> terms_;
};

/// φ(2t) ≤ K φ(t) + h_i, recorded rather than verified.
struct Delta2 {
  Rat k;
  std::vector<Rat> h;
};

/// (φ_i)_{i≥1}: listed functions, optionally repeating the last one forever.
class OrliczSeq {
 public:
  OrliczSeq(std::vector<OrliczFunction> functions, bool repeat_last);
  /// ℓ_p: φ_i(t) = t^p for every i, with Δ₂ constant 2^p for integer p.
  static OrliczSeq lp(const Rat& p);

  const std::vector<OrliczFunction>& functions() const { return functions_; }
  bool repeats() const { return repeat_; }
  /// Number of indices covered; nullopt when the tail repeats.
  std::optional<std::size_t> length() const;
  /// φ_i, i ≥ 1. Throws InvalidArgument past the end.
  const OrliczFunction& at(int i) const;
  bool integer_exponents() const;

  const std::optional<Delta2>& delta2() const { return delta2_; }
  OrliczSeq with_delta2(Delta2 d) const;

 private:
  std::vector<OrliczFunction> functions_;
  bool repeat_ = false;
  std::optional<Delta2> delta2_;
};

/// Certified enclosure lo ≤ value ≤ hi; exact when lo == hi.
struct Enclosure {
  Rat lo;
  Rat hi;
  bool exact() const { return lo == hi; }
};

struct PrecisionConfig {
  unsigned start_bits = 64;
  unsigned max_bits = 4096;
};

/// I_Φ(x) = Σ φ_i(|x_i|) exactly; throws InvalidArgument if a non-integer
/// exponent is involved.
Rat modular_exact(const OrliczSeq& phi, const RatVector& x);

/// Enclosure of I_Φ(x) at the given working precision. Exact for integer
/// exponents; outward-rounded MPFR arithmetic otherwise.
Enclosure modular(const OrliczSeq& phi, const RatVector& x, unsigned bits = 64);

enum class Comparison { less, equal, greater };

/// Compares I_Φ(x) with I_Φ(y), escalating precision. Identical vectors and
/// exact evaluations compare directly. Throws PrecisionExhausted when the
/// enclosures still overlap at the maximum precision.
Comparison compare_modular(const OrliczSeq& phi, const RatVector& x, const RatVector& y,
                           const PrecisionConfig& config = {});
/// Compares I_Φ(x) with a rational threshold.
Comparison compare_modular(const OrliczSeq& phi, const RatVector& x, const Rat& threshold,
                           const PrecisionConfig& config = {});

/// ‖x‖ ≤ 1, decided through I_Φ(x) ≤ 1.
bool in_ball(const OrliczSeq& phi, const RatVector& x, const PrecisionConfig& config = {});

struct LuxNorm {
  Rat lo;
  Rat hi;
  bool exact() const { return lo == hi; }
};

/// ‖x‖_Φ = inf{ρ > 0 : I_Φ(x/ρ) ≤ 1}, bisected to width ≤ tolerance. With
/// integer exponents the simplest rational of the final bracket is tested
/// exactly and returned as an exact value when it solves I_Φ(x/ρ) = 1.
LuxNorm lux_norm(const OrliczSeq& phi, const RatVector& x, const Rat& tolerance = Rat(1, 1L << 20),
                 const PrecisionConfig& config = {});

/// Simplest rational (least denominator, then least numerator) in [lo, hi].
Rat simplest_rational(const Rat& lo, const Rat& hi);

/// x ≤̇ y through I(x) ≤ I(y). Throws InvalidArgument unless both lie in the
/// unit ball.
bool dot_order(const OrliczSeq& phi, const RatVector& x, const RatVector& y, const PrecisionConfig& config = {});

enum class RawOrder { refuted, not_refuted };

struct RawGrid {
  int denominator = 8;  // z values k/denominator, 0 ≤ k ≤ denominator
  int span = 2;         // z supported on the next `span` indices
};

/// Direct test of x ≤̇ y: searches z supported after both supports with
/// y + z ∈ B and x + z ∉ B. A finite grid can refute but never confirm.
RawOrder raw_dot_order(const OrliczSeq& phi, const RatVector& x, const RatVector& y, const RawGrid& grid = {},
                       const PrecisionConfig& config = {});

struct BetaReport {
  bool holds = true;
  std::size_t samples = 0;   // hypotheses met and conclusion checked
  std::size_t attempts = 0;  // random draws including rejected ones
  std::optional<std::string> counterexample;
};

/// Samples x, y, n, a, b meeting the hypotheses of property (β) and checks
/// the conclusion and each step of the modular chain
/// I(x+(a+b)e_n) = I(x) + I_n(a+b) ≥ I(x) + I_n(a) + I_n(b) = I(x+ae_n) + I_n(b)
/// ≥ I(y) + I_n(b) = I(y+be_n).
BetaReport check_beta(const OrliczSeq& phi, std::size_t samples, std::uint64_t seed = 1,
                      const PrecisionConfig& config = {});

}  // namespace combinorm
