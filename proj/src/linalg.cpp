#include "combinorm/linalg.hpp"

#include <utility>

#include "combinorm/errors.hpp"

namespace combinorm {

std::vector<std::vector<mpz_class>> integer_rows(const RatMatrix& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (const Rat& v : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rat& v = m.at(r, c);
      out[r][c] = v.num() * (l / v.den());
    }
  }
  return out;
}

namespace {

// Bareiss elimination in place. Returns the rank; `swaps` counts row swaps and
// `last_pivot` holds the final leading entry, which is the determinant of a
// full-rank square input up to the swap sign.
std::size_t bareiss(std::vector<std::vector<mpz_class>>& a, std::size_t cols, int& swaps, mpz_class& last_pivot) {
  const std::size_t rows = a.size();
  std::size_t r = 0;
  mpz_class prev = 1;
  swaps = 0;
  last_pivot = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      ++swaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    last_pivot = prev;
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  auto a = integer_rows(m);
  int swaps = 0;
  mpz_class pivot;
  return bareiss(a, m.cols(), swaps, pivot);
}

Rat determinant(const RatMatrix& m) {
  if (!m.square()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  auto a = integer_rows(m);
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (const Rat& v : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
    scale *= l;
  }
  int swaps = 0;
  mpz_class pivot;
  if (bareiss(a, n, swaps, pivot) < n) return Rat(0);
  if (swaps % 2) pivot = -pivot;
  return Rat(pivot, scale);
}

std::optional<DensePoint> solve(const RatMatrix& m, const DensePoint& rhs) {
  if (!m.square() || rhs.size() != m.rows()) throw InvalidArgument("solve: shape mismatch");
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j).raw();
    a[i][n] = rhs[i].raw();
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      mpq_class f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  DensePoint x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = Rat(mpq_class(a[i][n] / a[i][i]));
  return x;
}

}  // namespace combinorm
