#include "combinorm/lp.hpp"

#include <limits>

#include "combinorm/errors.hpp"

namespace combinorm {

namespace lp_detail {

namespace {

class Tableau {
 public:
  Tableau(std::vector<std::vector<mpq_class>> rows, std::vector<std::size_t> basis, std::size_t cols)
      : t_(std::move(rows)), basis_(std::move(basis)), cols_(cols) {}

  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return cols_; }
  const mpq_class& rhs(std::size_t i) const { return t_[i][cols_]; }
  const mpq_class& at(std::size_t i, std::size_t j) const { return t_[i][j]; }
  std::size_t basic(std::size_t i) const { return basis_[i]; }

  void pivot(std::size_t r, std::size_t c) {
    mpq_class inv = 1 / t_[r][c];
    for (auto& v : t_[r]) v *= inv;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || sgn(t_[i][c]) == 0) continue;
      mpq_class f = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(t_[r][j]) != 0) t_[i][j] -= f * t_[r][j];
      }
    }
    basis_[r] = c;
  }

  // Runs Bland's rule with the given cost vector restricted to columns for
  // which `allowed` is true. Returns false when unbounded.
  bool optimise(const std::vector<mpq_class>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t entering = cols_;
      for (std::size_t j = 0; j < cols_ && entering == cols_; ++j) {
        if (!allowed[j] || is_basic(j)) continue;
        mpq_class reduced = cost[j];
        for (std::size_t i = 0; i < t_.size(); ++i) {
          if (sgn(t_[i][j]) != 0) reduced -= cost[basis_[i]] * t_[i][j];
        }
        if (sgn(reduced) > 0) entering = j;
      }
      if (entering == cols_) return true;
      std::size_t leaving = t_.size();
      mpq_class best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (sgn(t_[i][entering]) <= 0) continue;
        mpq_class ratio = t_[i][cols_] / t_[i][entering];
        if (leaving == t_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving == t_.size()) return false;
      pivot(leaving, entering);
    }
  }

  bool is_basic(std::size_t j) const {
    for (std::size_t b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::vector<std::vector<mpq_class>> t_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace

StandardResult solve_standard(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                              const std::vector<Rat>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw InvalidArgument("lp: rhs length mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw InvalidArgument("lp: row length mismatch");
  }

  std::vector<std::vector<mpq_class>> rows(m, std::vector<mpq_class>(n));
  std::vector<mpq_class> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = flip ? mpq_class(-a[i][j].raw()) : a[i][j].raw();
    rhs[i] = flip ? mpq_class(-b[i].raw()) : b[i].raw();
  }

  // Reuse unit columns as the starting basis; add artificials elsewhere.
  std::vector<std::size_t> basis(m, std::numeric_limits<std::size_t>::max());
  std::vector<bool> used(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t one = m;
    bool unit = true;
    for (std::size_t i = 0; i < m && unit; ++i) {
      if (sgn(rows[i][j]) == 0) continue;
      if (rows[i][j] == 1 && one == m) {
        one = i;
      } else {
        unit = false;
      }
    }
    if (unit && one < m && basis[one] == std::numeric_limits<std::size_t>::max()) {
      basis[one] = j;
      used[j] = true;
    }
  }
  std::size_t artificials = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] == std::numeric_limits<std::size_t>::max()) ++artificials;
  }
  const std::size_t cols = n + artificials;
  std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(cols + 1));
  std::size_t next = n;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = rows[i][j];
    t[i][cols] = rhs[i];
    if (basis[i] == std::numeric_limits<std::size_t>::max()) {
      t[i][next] = 1;
      basis[i] = next++;
    }
  }
  Tableau tab(std::move(t), std::move(basis), cols);

  if (artificials > 0) {
    std::vector<mpq_class> phase1(cols);
    for (std::size_t j = n; j < cols; ++j) phase1[j] = -1;
    tab.optimise(phase1, std::vector<bool>(cols, true));
    mpq_class infeas;
    for (std::size_t i = 0; i < tab.rows(); ++i) {
      if (tab.basic(i) >= n) infeas += tab.rhs(i);
    }
    if (sgn(infeas) != 0) return {Status::infeasible, Rat(), {}};
    for (std::size_t i = 0; i < tab.rows();) {
      if (tab.basic(i) < n) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < n && sgn(tab.at(i, j)) == 0) ++j;
      if (j == n) {
        tab.drop_row(i);
      } else {
        tab.pivot(i, j);
        ++i;
      }
    }
  }

  std::vector<mpq_class> cost(cols);
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j].raw();
  std::vector<bool> allowed(cols, false);
  for (std::size_t j = 0; j < n; ++j) allowed[j] = true;
  if (!tab.optimise(cost, allowed)) return {Status::unbounded, Rat(), {}};

  StandardResult res;
  res.status = Status::optimal;
  res.y.assign(n, Rat());
  mpq_class value;
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    if (tab.basic(i) < n) {
      res.y[tab.basic(i)] = Rat(tab.rhs(i));
      value += cost[tab.basic(i)] * tab.rhs(i);
    }
  }
  res.value = Rat(value);
  return res;
}

}  // namespace lp_detail

LpSolution lp_maximize(const DensePoint& objective, const Polytope& p) {
  const std::size_t d = p.dimension();
  if (objective.size() != d) throw InvalidArgument("lp_maximize: objective dimension mismatch");
  const auto& ineqs = p.inequalities();
  const std::size_t m = ineqs.size();
  // x = x⁺ − x⁻, one slack per inequality.
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(2 * d + m));
  std::vector<Rat> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      a[i][j] = ineqs[i].normal[j];
      a[i][d + j] = -ineqs[i].normal[j];
    }
    a[i][2 * d + i] = 1;
    b[i] = ineqs[i].bound;
  }
  std::vector<Rat> c(2 * d + m);
  for (std::size_t j = 0; j < d; ++j) {
    c[j] = objective[j];
    c[d + j] = -objective[j];
  }
  auto res = lp_detail::solve_standard(a, b, c);
  if (res.status == lp_detail::Status::infeasible) throw Infeasible();
  if (res.status == lp_detail::Status::unbounded) throw Unbounded();
  DensePoint x(d);
  for (std::size_t j = 0; j < d; ++j) x[j] = res.y[j] - res.y[d + j];
  return {res.value, std::move(x)};
}

bool in_hull(const DensePoint& point, const std::vector<DensePoint>& generators) {
  if (generators.empty()) return false;
  const std::size_t d = point.size();
  for (const auto& g : generators) {
    if (g.size() != d) throw InvalidArgument("in_hull: dimension mismatch");
  }
  const std::size_t k = generators.size();
  std::vector<std::vector<Rat>> a(d + 1, std::vector<Rat>(k));
  std::vector<Rat> b(d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = generators[j][i];
    b[i] = point[i];
  }
  for (std::size_t j = 0; j < k; ++j) a[d][j] = 1;
  b[d] = 1;
  auto res = lp_detail::solve_standard(a, b, std::vector<Rat>(k));
  return res.status == lp_detail::Status::optimal;
}

}  // namespace combinorm
