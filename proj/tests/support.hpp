#pragma once

// Shared generators and brute-force oracles for the unit tests.

#include <cstdint>
#include <random>
#include <vector>

#include "combinorm/family.hpp"
#include "combinorm/graph.hpp"
#include "combinorm/rat.hpp"

namespace testing_support {

using namespace combinorm;

inline Rat random_rat(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rat(num(rng), den(rng));
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (coin(rng)) es.emplace_back(i, j);
    }
  }
  IdSet vs;
  for (int i = 1; i <= n; ++i) vs.push_back(i);
  return Graph(vs, es);
}

// All subsets of `ground` as sets, mask order.
inline std::vector<IdSet> all_subsets(const IdSet& ground) {
  std::vector<IdSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << ground.size()); ++m) out.push_back(subset_from_mask(ground, m));
  return out;
}

// Brute-force family norm: max over all subsets of supp(x) that are members.
inline Rat brute_norm(const Family& f, const RatVector& x) {
  IdSet supp = x.support();
  Rat best;
  for (const auto& s : all_subsets(supp)) {
    if (!f.contains(s)) continue;
    Rat total;
    for (int v : s) total += x.get(v).abs();
    if (total > best) best = total;
  }
  return best;
}

// Cofactor expansion along the first row.
inline Rat cofactor_det(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rat(1);
  if (n == 1) return m[0][0];
  Rat total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Rat>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rat> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    Rat term = m[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace testing_support
