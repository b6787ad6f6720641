#include "combinorm/orlicz.hpp"

#include <mpfr.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "combinorm/errors.hpp"

namespace combinorm {

OrliczFunction::OrliczFunction(std::vector<PowerTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw InvalidArgument("an Orlicz function needs at least one term");
  Rat total;
  for (const auto& t : terms_) {
    if (t.c.sign() <= 0) throw InvalidArgument("coefficients must be positive, got " + t.c.str());
    if (t.p < Rat(1)) throw InvalidArgument("exponents must be at least 1, got " + t.p.str());
    if (!t.p.num().fits_ulong_p() || !t.p.den().fits_ulong_p() || t.p > Rat(10000)) {
      throw InvalidArgument("exponent " + t.p.str() + " is too large");
    }
    total += t.c;
  }
  if (total != Rat(1)) throw InvalidArgument("coefficients must sum to 1 so that phi(1) = 1, got " + total.str());
}

OrliczFunction OrliczFunction::power(const Rat& p) { return OrliczFunction({{Rat(1), p}}); }

bool OrliczFunction::integer_exponents() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const PowerTerm& t) { return t.p.den() == 1; });
}

OrliczSeq::OrliczSeq(std::vector<OrliczFunction> functions, bool repeat_last)
    : functions_(std::move(functions)), repeat_(repeat_last) {
  if (functions_.empty()) throw InvalidArgument("an Orlicz sequence needs at least one function");
}

OrliczSeq OrliczSeq::lp(const Rat& p) {
  OrliczSeq out({OrliczFunction::power(p)}, true);
  if (p.den() == 1) out.delta2_ = Delta2{pow(Rat(2), static_cast<unsigned>(p.num().get_ui())), {}};
  return out;
}

std::optional<std::size_t> OrliczSeq::length() const {
  if (repeat_) return std::nullopt;
  return functions_.size();
}

const OrliczFunction& OrliczSeq::at(int i) const {
  if (i < 1) throw InvalidArgument("Orlicz indices start at 1");
  const auto idx = static_cast<std::size_t>(i - 1);
  if (idx < functions_.size()) return functions_[idx];
  if (repeat_) return functions_.back();
  throw InvalidArgument("index " + std::to_string(i) + " is beyond the " + std::to_string(functions_.size()) +
                        " given functions");
}

bool OrliczSeq::integer_exponents() const {
  return std::all_of(functions_.begin(), functions_.end(), [](const OrliczFunction& f) { return f.integer_exponents(); });
}

OrliczSeq OrliczSeq::with_delta2(Delta2 d) const {
  OrliczSeq out = *this;
  out.delta2_ = std::move(d);
  return out;
}

namespace {

// RAII wrapper for a single MPFR value.
class Mpfr {
 public:
  explicit Mpfr(unsigned bits) { mpfr_init2(v_, static_cast<mpfr_prec_t>(bits)); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

Rat rounded_root_term(const Rat& base_pow, unsigned long root, const Rat& c, unsigned bits, mpfr_rnd_t mode) {
  Mpfr r(bits);
  mpfr_set_q(r.get(), base_pow.raw().get_mpq_t(), mode);
  mpfr_rootn_ui(r.get(), r.get(), root, mode);
  mpfr_mul_q(r.get(), r.get(), c.raw().get_mpq_t(), mode);
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), r.get());
  return Rat(q);
}

Enclosure term_value(const PowerTerm& term, const Rat& t, unsigned bits) {
  if (t == Rat()) return {Rat(), Rat()};
  if (t == Rat(1)) return {term.c, term.c};
  const Rat base_pow = pow(t, static_cast<unsigned>(term.p.num().get_ui()));
  if (term.p.den() == 1) {
    const Rat v = term.c * base_pow;
    return {v, v};
  }
  const unsigned long root = term.p.den().get_ui();
  return {rounded_root_term(base_pow, root, term.c, bits, MPFR_RNDD),
          rounded_root_term(base_pow, root, term.c, bits, MPFR_RNDU)};
}

}  // namespace

Enclosure modular(const OrliczSeq& phi, const RatVector& x, unsigned bits) {
  Enclosure out;
  for (const auto& [i, value] : x) {
    const Rat t = value.abs();
    for (const PowerTerm& term : phi.at(i).terms()) {
      const Enclosure e = term_value(term, t, bits);
      out.lo += e.lo;
      out.hi += e.hi;
    }
  }
  return out;
}

Rat modular_exact(const OrliczSeq& phi, const RatVector& x) {
  for (const auto& [i, value] : x) {
    if (!phi.at(i).integer_exponents()) {
      throw InvalidArgument("index " + std::to_string(i) + " has a non-integer exponent");
    }
  }
  return modular(phi, x).lo;
}

namespace {

template <class Eval>
Comparison escalate(Eval eval, const PrecisionConfig& config) {
  for (unsigned bits = config.start_bits; bits <= config.max_bits; bits *= 2) {
    const auto [a, b] = eval(bits);
    if (a.hi < b.lo) return Comparison::less;
    if (a.lo > b.hi) return Comparison::greater;
    if (a.exact() && b.exact()) return Comparison::equal;
  }
  throw PrecisionExhausted("modular comparison undecided at " + std::to_string(config.max_bits) + " bits");
}

}  // namespace

Comparison compare_modular(const OrliczSeq& phi, const RatVector& x, const RatVector& y,
                           const PrecisionConfig& config) {
  if (x == y) {
    modular(phi, x);  // index validation
    return Comparison::equal;
  }
  return escalate([&](unsigned bits) { return std::pair{modular(phi, x, bits), modular(phi, y, bits)}; }, config);
}

Comparison compare_modular(const OrliczSeq& phi, const RatVector& x, const Rat& threshold,
                           const PrecisionConfig& config) {
  return escalate([&](unsigned bits) { return std::pair{modular(phi, x, bits), Enclosure{threshold, threshold}}; },
                  config);
}

bool in_ball(const OrliczSeq& phi, const RatVector& x, const PrecisionConfig& config) {
  return compare_modular(phi, x, Rat(1), config) != Comparison::greater;
}

Rat simplest_rational(const Rat& lo, const Rat& hi) {
  if (hi < lo) throw InvalidArgument("empty interval");
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rat();
  if (hi.sign() < 0) return -simplest_rational(-hi, -lo);
  mpz_class ceil_lo;
  mpz_cdiv_q(ceil_lo.get_mpz_t(), lo.num().get_mpz_t(), lo.den().get_mpz_t());
  if (Rat(ceil_lo) <= hi) return Rat(ceil_lo);
  const Rat n(mpz_class(ceil_lo - 1));
  return n + Rat(1) / simplest_rational(Rat(1) / (hi - n), Rat(1) / (lo - n));
}

namespace {

RatVector scaled(const RatVector& x, const Rat& factor) {
  RatVector out;
  for (const auto& [i, v] : x) out.set(i, v * factor);
  return out;
}

}  // namespace

LuxNorm lux_norm(const OrliczSeq& phi, const RatVector& x, const Rat& tolerance, const PrecisionConfig& config) {
  if (tolerance.sign() <= 0) throw InvalidArgument("tolerance must be positive");
  if (x.empty()) return {Rat(), Rat()};
  Rat lo;
  Rat hi;
  for (const auto& [i, v] : x) {
    phi.at(i);
    lo = std::max(lo, v.abs());
    hi += v.abs();
  }
  // I(x/ρ) is strictly decreasing in ρ, ≥ 1 at ρ = max|x_i| and ≤ 1 at Σ|x_i|.
  auto side = [&](const Rat& rho) { return compare_modular(phi, scaled(x, Rat(1) / rho), Rat(1), config); };
  if (side(lo) == Comparison::equal) return {lo, lo};
  if (side(hi) == Comparison::equal) return {hi, hi};
  while (hi - lo > tolerance) {
    Rat mid = (lo + hi) / Rat(2);
    Comparison c;
    try {
      c = side(mid);
    } catch (const PrecisionExhausted&) {
      mid = (lo * Rat(2) + hi) / Rat(3);
      c = side(mid);
    }
    if (c == Comparison::equal) return {mid, mid};
    if (c == Comparison::less) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  bool exact_terms = true;
  for (const auto& [i, v] : x) exact_terms = exact_terms && phi.at(i).integer_exponents();
  if (exact_terms) {
    const Rat r = simplest_rational(lo, hi);
    if (modular_exact(phi, scaled(x, Rat(1) / r)) == Rat(1)) return {r, r};
  }
  return {lo, hi};
}

bool dot_order(const OrliczSeq& phi, const RatVector& x, const RatVector& y, const PrecisionConfig& config) {
  if (!in_ball(phi, x, config)) throw InvalidArgument("x lies outside the unit ball");
  if (!in_ball(phi, y, config)) throw InvalidArgument("y lies outside the unit ball");
  return compare_modular(phi, x, y, config) != Comparison::greater;
}

namespace {

int max_index(const RatVector& x) { return x.empty() ? 0 : x.support().back(); }

RatVector plus(RatVector x, const RatVector& z) {
  for (const auto& [i, v] : z) x.set(i, x.get(i) + v);
  return x;
}

}  // namespace

RawOrder raw_dot_order(const OrliczSeq& phi, const RatVector& x, const RatVector& y, const RawGrid& grid,
                       const PrecisionConfig& config) {
  if (grid.denominator < 1 || grid.span < 1) throw InvalidArgument("grid needs a positive denominator and span");
  const int first = std::max(max_index(x), max_index(y)) + 1;
  int span = grid.span;
  if (auto len = phi.length()) span = std::min(span, static_cast<int>(*len) - first + 1);
  if (span <= 0) return RawOrder::not_refuted;
  std::vector<int> k(static_cast<std::size_t>(span), 0);
  while (true) {
    RatVector z;
    for (int j = 0; j < span; ++j) z.set(first + j, Rat(k[static_cast<std::size_t>(j)], grid.denominator));
    try {
      if (in_ball(phi, plus(y, z), config) && !in_ball(phi, plus(x, z), config)) return RawOrder::refuted;
    } catch (const PrecisionExhausted&) {
      // Undecided grid point: it can neither refute nor confirm.
    }
    std::size_t j = 0;
    while (j < k.size() && k[j] == grid.denominator) k[j++] = 0;
    if (j == k.size()) break;
    ++k[j];
  }
  return RawOrder::not_refuted;
}

namespace {

std::string describe(const RatVector& v) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [i, value] : v) {
    os << (first ? "" : ", ") << i << ": " << value.str();
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

BetaReport check_beta(const OrliczSeq& phi, std::size_t samples, std::uint64_t seed, const PrecisionConfig& config) {
  BetaReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> eighths(0, 8);
  std::uniform_int_distribution<int> signed_eighths(-8, 8);
  const bool exact = phi.integer_exponents();
  const std::size_t max_attempts = samples * 50 + 100;
  auto fail = [&](const std::string& what, const RatVector& x, const RatVector& y, int n, const Rat& a, const Rat& b) {
    report.holds = false;
    report.counterexample = what + ": x=" + describe(x) + " y=" + describe(y) + " n=" + std::to_string(n) +
                            " a=" + a.str() + " b=" + b.str();
  };
  while (report.samples < samples && report.attempts < max_attempts && report.holds) {
    ++report.attempts;
    int n = 2 + static_cast<int>(rng() % 3);
    if (auto len = phi.length()) n = std::min(n, static_cast<int>(*len));
    if (n < 2) throw InvalidArgument("property (beta) needs at least two indices");
    const Rat a(eighths(rng), 8);
    const Rat b(eighths(rng), 8);
    RatVector x;
    RatVector y;
    for (int i = 1; i < n; ++i) {
      x.set(i, Rat(signed_eighths(rng), 8));
      y.set(i, Rat(signed_eighths(rng), 8));
    }
    RatVector en_a;
    en_a.set(n, a);
    RatVector en_b;
    en_b.set(n, b);
    RatVector en_ab;
    en_ab.set(n, a + b);
    int tries = 0;
    while (!in_ball(phi, plus(x, en_ab), config) && tries++ < 4) x = scaled(x, Rat(1, 2));
    if (!in_ball(phi, plus(x, en_ab), config)) continue;
    const RatVector xa = plus(x, en_a);
    const RatVector xab = plus(x, en_ab);
    tries = 0;
    while (compare_modular(phi, y, xa, config) == Comparison::greater && tries++ < 6) y = scaled(y, Rat(1, 2));
    if (compare_modular(phi, y, xa, config) == Comparison::greater) continue;
    ++report.samples;
    const RatVector yb = plus(y, en_b);
    if (!in_ball(phi, yb, config)) {
      fail("y + b e_n leaves the ball", x, y, n, a, b);
      break;
    }
    if (!dot_order(phi, yb, xab, config)) {
      fail("y + b e_n is not below x + (a+b) e_n", x, y, n, a, b);
      break;
    }
    if (exact) {
      const Rat ix = modular_exact(phi, x);
      const Rat iy = modular_exact(phi, y);
      const Rat ia = modular_exact(phi, en_a);
      const Rat ib = modular_exact(phi, en_b);
      const Rat iab = modular_exact(phi, en_ab);
      if (modular_exact(phi, xab) != ix + iab) fail("additivity on x + (a+b) e_n", x, y, n, a, b);
      if (iab < ia + ib) fail("superadditivity of I_n", x, y, n, a, b);
      if (modular_exact(phi, xa) != ix + ia) fail("additivity on x + a e_n", x, y, n, a, b);
      if (modular_exact(phi, xa) < iy) fail("hypothesis I(y) <= I(x + a e_n)", x, y, n, a, b);
      if (modular_exact(phi, yb) != iy + ib) fail("additivity on y + b e_n", x, y, n, a, b);
    }
  }
  return report;
}

}  // namespace combinorm
