#include "combinorm/polytope.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "combinorm/errors.hpp"
#include "combinorm/linalg.hpp"
#include "combinorm/lp.hpp"

namespace combinorm {

Polytope::Polytope(std::size_t dimension, std::vector<Inequality> inequalities)
    : dimension_(dimension), inequalities_(std::move(inequalities)) {
  if (dimension_ < 1) throw InvalidArgument("polytope dimension must be at least 1");
  for (const auto& q : inequalities_) {
    if (q.normal.size() != dimension_) throw InvalidArgument("inequality normal has wrong length");
  }
}

bool Polytope::contains(const DensePoint& x) const {
  if (x.size() != dimension_) throw InvalidArgument("point has wrong dimension");
  return std::all_of(inequalities_.begin(), inequalities_.end(),
                     [&](const Inequality& q) { return dot(q.normal, x) <= q.bound; });
}

Polytope polar_of_points(std::size_t dimension, const std::vector<DensePoint>& points) {
  std::vector<Inequality> ineqs;
  ineqs.reserve(points.size());
  for (const auto& p : points) ineqs.push_back({p, Rat(1)});
  return Polytope(dimension, std::move(ineqs));
}

namespace {

void check_limit(const Polytope& p, const VertexConfig& config) {
  if (p.dimension() > config.dimension_limit) {
    throw DimensionLimitExceeded("polytope dimension " + std::to_string(p.dimension()) + " exceeds limit " +
                                 std::to_string(config.dimension_limit));
  }
}

// Fixed-width bitset over constraint indices.
class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1U; }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= o.w_[k];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      if (w_[k] & ~o.w_[k]) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> w_;
};

using IntVec = std::vector<mpz_class>;

struct Ray {
  IntVec v;
  Bits zeros;
};

void make_primitive(IntVec& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

mpz_class idot(const IntVec& a, const IntVec& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

// Indices of a maximal linearly independent subset of rows, greedily in order.
std::vector<std::size_t> independent_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  std::vector<std::size_t> picked;
  std::vector<std::vector<mpq_class>> basis;  // reduced echelon rows
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rows.size() && picked.size() < cols; ++r) {
    std::vector<mpq_class> v(cols);
    for (std::size_t c = 0; c < cols; ++c) v[c] = rows[r][c];
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (sgn(v[pivots[k]]) == 0) continue;
      mpq_class f = v[pivots[k]] / basis[k][pivots[k]];
      for (std::size_t c = 0; c < cols; ++c) v[c] -= f * basis[k][c];
    }
    std::size_t p = 0;
    while (p < cols && sgn(v[p]) == 0) ++p;
    if (p == cols) continue;
    basis.push_back(std::move(v));
    pivots.push_back(p);
    picked.push_back(r);
  }
  return picked;
}

}  // namespace

std::vector<DensePoint> vertices(const Polytope& p, const VertexConfig& config) {
  check_limit(p, config);
  const std::size_t d = p.dimension();
  const std::size_t D = d + 1;

  // Homogenised cone {(x, t) : normal·x − bound·t ≤ 0, −t ≤ 0}.
  std::vector<std::vector<Rat>> hrows;
  hrows.reserve(p.inequalities().size() + 1);
  {
    std::vector<Rat> tpos(D);
    tpos[d] = -1;
    hrows.push_back(std::move(tpos));
  }
  for (const auto& q : p.inequalities()) {
    std::vector<Rat> row(q.normal);
    row.push_back(-q.bound);
    hrows.push_back(std::move(row));
  }
  const std::vector<IntVec> rows = integer_rows(RatMatrix(hrows));
  const std::size_t m = rows.size();

  const auto init = independent_rows(rows, D);
  if (init.size() < D) {
    // Rank-deficient constraint matrix: the polytope is empty or unbounded.
    std::vector<Rat> zero(d);
    try {
      lp_maximize(zero, p);
    } catch (const Infeasible&) {
      return {};
    }
    throw Unbounded("polytope has a recession direction");
  }

  // Initial simplicial cone: rays are the columns of −H_B⁻¹.
  std::vector<Ray> rays;
  {
    std::vector<std::vector<Rat>> hb;
    for (std::size_t r : init) {
      std::vector<Rat> row(D);
      for (std::size_t c = 0; c < D; ++c) row[c] = Rat(rows[r][c]);
      hb.push_back(std::move(row));
    }
    RatMatrix hbm(hb);
    for (std::size_t j = 0; j < D; ++j) {
      DensePoint e(D);
      e[j] = -1;
      auto sol = solve(hbm, e);
      mpz_class l = 1;
      for (const Rat& v : *sol) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
      Ray ray{IntVec(D), Bits(m)};
      for (std::size_t c = 0; c < D; ++c) ray.v[c] = (*sol)[c].num() * (l / (*sol)[c].den());
      make_primitive(ray.v);
      for (std::size_t k = 0; k < D; ++k) {
        if (k != j) ray.zeros.set(init[k]);
      }
      rays.push_back(std::move(ray));
    }
  }

  std::vector<bool> processed(m, false);
  for (std::size_t r : init) processed[r] = true;

  for (std::size_t h = 0; h < m; ++h) {
    if (processed[h]) continue;
    processed[h] = true;
    std::vector<mpz_class> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = idot(rows[h], rays[i].v);
      if (sgn(val[i]) > 0) {
        pos.push_back(i);
      } else if (sgn(val[i]) < 0) {
        neg.push_back(i);
      }
    }
    if (pos.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (sgn(val[i]) == 0) rays[i].zeros.set(h);
      }
      continue;
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (sgn(val[i]) <= 0) {
        Ray keep = rays[i];
        if (sgn(val[i]) == 0) keep.zeros.set(h);
        next.push_back(std::move(keep));
      }
    }
    for (std::size_t ip : pos) {
      for (std::size_t in : neg) {
        Bits common = rays[ip].zeros & rays[in].zeros;
        if (common.count() + 2 < D) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == ip || k == in) continue;
          if (common.subset_of(rays[k].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray r{IntVec(D), common};
        for (std::size_t c = 0; c < D; ++c) r.v[c] = val[ip] * rays[in].v[c] - val[in] * rays[ip].v[c];
        make_primitive(r.v);
        r.zeros.set(h);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  std::vector<DensePoint> out;
  out.reserve(rays.size());
  for (const auto& r : rays) {
    if (sgn(r.v[d]) == 0) throw Unbounded("polytope has a recession direction");
    DensePoint x(d);
    for (std::size_t c = 0; c < d; ++c) x[c] = Rat(r.v[c], r.v[d]);
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Vertex candidate from the inequality subset `idx`, or nothing when the
// subset is singular or its solution violates some inequality.
std::optional<DensePoint> subset_vertex(const Polytope& p, const std::vector<std::size_t>& idx) {
  const std::size_t d = p.dimension();
  RatMatrix a(d, d);
  DensePoint b(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto& q = p.inequalities()[idx[i]];
    for (std::size_t j = 0; j < d; ++j) a.at(i, j) = q.normal[j];
    b[i] = q.bound;
  }
  auto x = solve(a, b);
  if (!x || !p.contains(*x)) return std::nullopt;
  return x;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

std::vector<DensePoint> vertices_bruteforce(const Polytope& p, const VertexConfig& config) {
  check_limit(p, config);
  const std::size_t d = p.dimension();
  const std::size_t m = p.inequalities().size();
  std::set<DensePoint> found;
  if (m >= d) {
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    do {
      if (auto x = subset_vertex(p, idx)) found.insert(std::move(*x));
    } while (next_combination(idx, m));
  }
  return {found.begin(), found.end()};
}

std::vector<DensePoint> vertices_bruteforce_parallel(const Polytope& p, const VertexConfig& config) {
  check_limit(p, config);
  const std::size_t d = p.dimension();
  const std::size_t m = p.inequalities().size();
  if (m < d) return {};
  // Partition by the first chosen inequality; each chunk enumerates the
  // (d−1)-subsets of the inequalities after it.
  std::vector<std::set<DensePoint>> partial(m);
  const long chunks = static_cast<long>(m - d + 1);
#pragma omp parallel for schedule(dynamic)
  for (long first = 0; first < chunks; ++first) {
    const auto f = static_cast<std::size_t>(first);
    std::vector<std::size_t> rest(d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i) rest[i] = f + 1 + i;
    std::vector<std::size_t> idx(d);
    for (;;) {
      idx[0] = f;
      std::copy(rest.begin(), rest.end(), idx.begin() + 1);
      if (rest.empty() || rest.back() < m) {
        if (auto x = subset_vertex(p, idx)) partial[f].insert(std::move(*x));
      }
      if (rest.empty()) break;
      // advance rest over combinations of {f+1, …, m−1}
      std::vector<std::size_t> shifted(rest.size());
      for (std::size_t i = 0; i < rest.size(); ++i) shifted[i] = rest[i] - (f + 1);
      if (!next_combination(shifted, m - f - 1)) break;
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = shifted[i] + f + 1;
    }
  }
  std::set<DensePoint> found;
  for (auto& s : partial) found.merge(s);
  return {found.begin(), found.end()};
}

}  // namespace combinorm
