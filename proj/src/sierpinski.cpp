#include "combinorm/sierpinski.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>

#include "combinorm/errors.hpp"

namespace combinorm {

struct RationalInjection::State {
  Source source = Source::explicit_values;
  std::mutex mu;
  std::vector<Rat> values;
  // Stern–Brocot frontier: intervals (a/b, c/d) whose mediants come next.
  std::deque<std::array<long, 4>> frontier;
  bool negative_pending = false;
  long diagonal = 2;
  long numerator = 0;

  void extend_to(std::size_t n) {
    while (values.size() < n) {
      if (values.empty()) {
        values.emplace_back(0);
        continue;
      }
      if (negative_pending) {
        values.push_back(-values.back());
        negative_pending = false;
        continue;
      }
      values.push_back(next_positive());
      negative_pending = true;
    }
  }

  Rat next_positive() {
    if (source == Source::stern_brocot) {
      if (frontier.empty()) frontier.push_back({0, 1, 1, 0});
      auto [a, b, c, d] = frontier.front();
      frontier.pop_front();
      frontier.push_back({a, b, a + c, b + d});
      frontier.push_back({a + c, b + d, c, d});
      return Rat(a + c, b + d);
    }
    for (;;) {
      ++numerator;
      if (numerator >= diagonal) {
        ++diagonal;
        numerator = 1;
      }
      long q = diagonal - numerator;
      if (std::gcd(numerator, q) == 1) return Rat(numerator, q);
    }
  }
};

RationalInjection RationalInjection::from_values(std::vector<Rat> values) {
  std::vector<Rat> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("injection values must be pairwise distinct");
  }
  auto s = std::make_shared<State>();
  s->source = Source::explicit_values;
  s->values = std::move(values);
  return RationalInjection(s);
}

RationalInjection RationalInjection::stern_brocot() {
  auto s = std::make_shared<State>();
  s->source = Source::stern_brocot;
  return RationalInjection(s);
}

RationalInjection RationalInjection::cantor() {
  auto s = std::make_shared<State>();
  s->source = Source::cantor;
  return RationalInjection(s);
}

RationalInjection::Source RationalInjection::source() const { return state_->source; }

std::optional<std::size_t> RationalInjection::limit() const {
  if (state_->source == Source::explicit_values) return state_->values.size();
  return std::nullopt;
}

Rat RationalInjection::value(std::size_t n) const {
  if (n == 0) throw InvalidArgument("injections are indexed from 1");
  std::lock_guard<std::mutex> lock(state_->mu);
  if (state_->source == Source::explicit_values) {
    if (n > state_->values.size()) {
      throw InvalidArgument("index " + std::to_string(n) + " exceeds the injection's truncation " +
                            std::to_string(state_->values.size()));
    }
  } else {
    state_->extend_to(n);
  }
  return state_->values[n - 1];
}

std::vector<Rat> RationalInjection::prefix(std::size_t n) const {
  if (n == 0) return {};
  value(n);
  std::lock_guard<std::mutex> lock(state_->mu);
  return {state_->values.begin(), state_->values.begin() + static_cast<std::ptrdiff_t>(n)};
}

Graph sierpinski_graph(const SierpinskiContext& ctx, std::size_t n) {
  auto f = ctx.injection().prefix(n);
  IdSet vs(n);
  std::iota(vs.begin(), vs.end(), 1);
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (f[i] < f[j]) es.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
    }
  }
  return Graph(vs, es);
}

namespace {

struct Weighted {
  std::vector<Rat> f;       // f-value per support point, ascending id
  std::vector<mpz_class> w;  // |x| scaled by the common denominator
  mpz_class scale;
};

Weighted prepare(const SierpinskiContext& ctx, const RatVector& x) {
  Weighted out;
  out.scale = 1;
  for (const auto& [id, v] : x) {
    if (id < 1) throw InvalidArgument("Sierpiński vectors are indexed from 1");
    out.f.push_back(ctx.injection().value(static_cast<std::size_t>(id)));
    mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), v.raw().get_den_mpz_t());
  }
  for (const auto& [id, v] : x) {
    mpz_class num = abs(v.raw().get_num());
    out.w.push_back(num * (out.scale / v.raw().get_den()));
  }
  return out;
}

}  // namespace

Rat chain_norm(const SierpinskiContext& ctx, const RatVector& x) {
  Weighted p = prepare(ctx, x);
  const std::size_t m = p.f.size();
  if (m == 0) return Rat();
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return p.f[a] < p.f[b]; });
  std::vector<std::size_t> rank(m);
  for (std::size_t r = 0; r < m; ++r) rank[idx[r]] = r + 1;
  std::vector<mpz_class> tree(m + 1);
  mpz_class best = 0;
  for (std::size_t i = 0; i < m; ++i) {
    mpz_class below = 0;
    for (std::size_t r = rank[i] - 1; r > 0; r -= r & (~r + 1)) {
      if (tree[r] > below) below = tree[r];
    }
    mpz_class here = below + p.w[i];
    if (here > best) best = here;
    for (std::size_t r = rank[i]; r <= m; r += r & (~r + 1)) {
      if (tree[r] < here) tree[r] = here;
    }
  }
  return Rat(best, p.scale);
}

Rat chain_norm_quadratic(const SierpinskiContext& ctx, const RatVector& x) {
  Weighted p = prepare(ctx, x);
  std::vector<mpz_class> end(p.f.size());
  mpz_class best = 0;
  for (std::size_t i = 0; i < p.f.size(); ++i) {
    end[i] = p.w[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (p.f[j] < p.f[i] && end[j] + p.w[i] > end[i]) end[i] = end[j] + p.w[i];
    }
    if (end[i] > best) best = end[i];
  }
  return Rat(best, p.scale);
}

std::vector<std::size_t> embed(const SierpinskiContext& host, const SierpinskiContext& guest, std::size_t n,
                               const EmbedConfig& config) {
  auto h = guest.injection().prefix(n);
  const auto host_limit = host.injection().limit();
  std::vector<std::size_t> image;
  std::vector<Rat> image_values;
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<Rat> lower;
    std::optional<Rat> upper;
    for (std::size_t i = 0; i < k; ++i) {
      if (h[i] < h[k]) {
        if (!lower || image_values[i] > *lower) lower = image_values[i];
      } else if (!upper || image_values[i] < *upper) {
        upper = image_values[i];
      }
    }
    std::size_t m = k == 0 ? 1 : image.back() + 1;
    const std::size_t stop = m + config.search_limit;
    for (;; ++m) {
      if ((host_limit && m > *host_limit) || m >= stop) {
        throw HostExhausted("no host point for guest index " + std::to_string(k + 1) + " after host index " +
                            std::to_string(image.empty() ? 0 : image.back()));
      }
      Rat q = host.injection().value(m);
      if ((!lower || *lower < q) && (!upper || q < *upper)) break;
    }
    image.push_back(m);
    image_values.push_back(host.injection().value(m));
  }
  return image;
}

namespace {

void check_injective(const std::map<int, int>& m, const char* name) {
  std::set<int> seen;
  for (const auto& [k, v] : m) {
    if (!seen.insert(v).second) throw InvalidArgument(std::string(name) + " is not injective at value " + std::to_string(v));
  }
}

}  // namespace

BanachPartition banach_partition(const std::map<int, int>& phi, const std::map<int, int>& psi, int n,
                                 const BanachOptions& options) {
  check_injective(phi, "phi");
  check_injective(psi, "psi");
  auto in_window = [n](int v) { return v >= 1 && v <= n; };
  // Inverse maps restricted to the window.
  std::map<int, int> phi_inv;
  std::map<int, int> psi_inv;
  for (const auto& [k, v] : phi) {
    if (in_window(k) && in_window(v)) phi_inv[v] = k;
  }
  for (const auto& [k, v] : psi) {
    if (in_window(k) && in_window(v)) psi_inv[v] = k;
  }
  enum class Origin { a, b, cycle, open };
  // Walks back from (side, x); side 0 is A, 1 is B.
  auto origin = [&](int side, int x) {
    const int start_side = side;
    const int start = x;
    for (int steps = 0; steps <= 2 * n + 2; ++steps) {
      const auto& inv = side == 0 ? psi_inv : phi_inv;
      auto it = inv.find(x);
      if (it == inv.end()) {
        if (!options.preimages_in_window) return Origin::open;
        return side == 0 ? Origin::a : Origin::b;
      }
      x = it->second;
      side = 1 - side;
      if (side == start_side && x == start) return Origin::cycle;
    }
    return Origin::cycle;
  };
  BanachPartition out;
  for (int x = 1; x <= n; ++x) {
    switch (origin(0, x)) {
      case Origin::a:
      case Origin::cycle: out.a1.push_back(x); break;
      case Origin::b: out.a2.push_back(x); break;
      case Origin::open: out.undetermined_a.push_back(x); break;
    }
    switch (origin(1, x)) {
      case Origin::a:
      case Origin::cycle: out.b1.push_back(x); break;
      case Origin::b: out.b2.push_back(x); break;
      case Origin::open: out.undetermined_b.push_back(x); break;
    }
  }
  return out;
}

}  // namespace combinorm
