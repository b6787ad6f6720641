#include "combinorm/emulation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_map>

#include "combinorm/errors.hpp"
#include "combinorm/sierpinski.hpp"

namespace combinorm {

Emulation::Emulation(std::vector<EmulationBlock> blocks, std::vector<Rat> theta)
    : blocks_(std::move(blocks)), theta_(std::move(theta)) {
  offsets_.push_back(0);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto& b = blocks_[i];
    if (b.size < 1) throw InvalidArgument("block " + std::to_string(b.label) + " has size < 1");
    if (!index_.emplace(b.label, i).second) throw InvalidArgument("label " + std::to_string(b.label) + " repeats");
    offsets_.push_back(offsets_.back() + static_cast<std::size_t>(b.size));
  }
  if (theta_.size() != offsets_.back()) {
    throw InvalidArgument("theta has " + std::to_string(theta_.size()) + " values for " +
                          std::to_string(offsets_.back()) + " positions");
  }
  std::set<Rat> seen(theta_.begin(), theta_.end());
  if (seen.size() != theta_.size()) throw InvalidArgument("theta is not injective");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t p = offsets_[i] + 1; p < offsets_[i + 1]; ++p) {
      if (!(theta_[p] < theta_[p - 1])) {
        throw InvalidArgument("theta is not decreasing on block " + std::to_string(blocks_[i].label));
      }
    }
  }
}

IdSet Emulation::labels() const {
  IdSet out;
  for (const auto& [label, idx] : index_) out.push_back(label);
  return out;
}

std::size_t Emulation::block_index(int label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw InvalidArgument("unknown label " + std::to_string(label));
  return it->second;
}

bool Emulation::label_ordered() const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].label != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Emulation Emulation::with_metadata(const std::string& key, const std::string& value) const {
  Emulation out = *this;
  out.metadata_[key] = value;
  return out;
}

Emulation unit_emulation(const IdSet& labels, bool increasing) {
  std::vector<EmulationBlock> blocks;
  std::vector<Rat> theta;
  const long n = static_cast<long>(labels.size());
  for (long i = 0; i < n; ++i) {
    blocks.push_back({labels[static_cast<std::size_t>(i)], 1});
    theta.emplace_back(increasing ? i + 1 : n - i);
  }
  return Emulation(std::move(blocks), std::move(theta));
}

std::size_t emulation_norm(const Emulation& e, const IdSet& labels) {
  std::vector<std::size_t> chosen;
  for (int t : labels) chosen.push_back(e.block_index(t));
  std::sort(chosen.begin(), chosen.end());
  // Strict LIS; θ decreases inside a block, so no block contributes twice.
  std::vector<Rat> tails;
  for (std::size_t b : chosen) {
    for (std::size_t p = e.offsets()[b]; p < e.offsets()[b + 1]; ++p) {
      const Rat& v = e.theta()[p];
      auto it = std::lower_bound(tails.begin(), tails.end(), v);
      if (it == tails.end()) {
        tails.push_back(v);
      } else {
        *it = v;
      }
    }
  }
  return tails.size();
}

Rat emulation_norm(const Emulation& e, const std::map<int, Rat>& coefficients) {
  RatVector x;
  for (const auto& [t, a] : coefficients) {
    const std::size_t b = e.block_index(t);
    if (a == Rat()) continue;
    for (std::size_t p = e.offsets()[b]; p < e.offsets()[b + 1]; ++p) x.set(static_cast<int>(p) + 1, a);
  }
  if (x.empty()) return Rat();
  SierpinskiContext ctx(RationalInjection::from_values(e.theta()));
  return chain_norm(ctx, x);
}

EmulationCheck verify_emulation(const Emulation& e, const Family& f, std::size_t max_size) {
  const IdSet labels = e.labels();
  const std::size_t n = labels.size();
  for (std::size_t k = 0; k <= std::min(max_size, n); ++k) {
    // Size-k index combinations in colex order.
    std::vector<std::size_t> c(k + 1);
    std::iota(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k), 0);
    c[k] = n;
    while (true) {
      IdSet s;
      for (std::size_t i = 0; i < k; ++i) s.push_back(labels[c[i]]);
      const bool full = emulation_norm(e, s) == k;
      if (full != f.contains(s)) return {false, s};
      std::size_t j = 0;
      while (j < k && c[j] + 1 == c[j + 1]) ++j;
      if (j >= k) break;
      ++c[j];
      for (std::size_t i = 0; i < j; ++i) c[i] = i;
    }
  }
  return {true, std::nullopt};
}

std::vector<Rat> normalize_theta(const std::vector<Rat>& theta) {
  if (theta.empty()) return {};
  const auto [lo, hi] = std::minmax_element(theta.begin(), theta.end());
  const Rat shift = *lo - Rat(1, 2);
  const Rat width = *hi - *lo + Rat(1);
  std::vector<Rat> out;
  out.reserve(theta.size());
  for (const Rat& v : theta) out.push_back((v - shift) / width);
  return out;
}

namespace {

void require_ordered(const Emulation& e, const std::string& what) {
  if (!e.label_ordered()) throw InvalidArgument(what + " needs blocks labelled 1, 2, 3, ... in order");
}

}  // namespace

Emulation schreier_transform(const Emulation& e) {
  require_ordered(e, "the Schreier transform");
  const auto theta = normalize_theta(e.theta());
  std::vector<EmulationBlock> blocks;
  std::vector<Rat> out;
  const auto& off = e.offsets();
  for (std::size_t i = 0; i < e.blocks().size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    blocks.push_back({n, n * e.blocks()[i].size});
    for (int k = 1; k <= n; ++k) {
      for (std::size_t p = off[i]; p < off[i + 1]; ++p) out.push_back(theta[p] - Rat(k));
    }
  }
  const std::size_t count = blocks.size();
  return Emulation(std::move(blocks), std::move(out))
      .with_metadata("construction", "schreier")
      .with_metadata("valid_labels", "1.." + std::to_string(count));
}

Emulation dstar_transform(const std::vector<Emulation>& parts) {
  if (parts.empty()) throw InvalidArgument("the D* transform needs at least one part");
  std::vector<std::vector<Rat>> thetas;
  for (const auto& p : parts) {
    require_ordered(p, "the D* transform");
    thetas.push_back(normalize_theta(p.theta()));
  }
  std::size_t m = 0;
  while (m < parts.size()) {
    const std::size_t n = m + 1;
    bool ok = true;
    for (std::size_t k = 0; k < n; ++k) ok = ok && parts[k].blocks().size() >= n;
    if (!ok) break;
    m = n;
  }
  std::vector<EmulationBlock> blocks;
  std::vector<Rat> out;
  for (std::size_t i = 0; i < m; ++i) {
    int size = 0;
    for (std::size_t k = 0; k <= i; ++k) {
      const auto& off = parts[k].offsets();
      size += parts[k].blocks()[i].size;
      for (std::size_t p = off[i]; p < off[i + 1]; ++p) out.push_back(thetas[k][p] - Rat(static_cast<long>(k) + 1));
    }
    blocks.push_back({static_cast<int>(i) + 1, size});
  }
  if (blocks.empty()) throw InvalidArgument("the D* transform has no complete block");
  return Emulation(std::move(blocks), std::move(out))
      .with_metadata("construction", "dstar")
      .with_metadata("valid_labels", "1.." + std::to_string(m));
}

namespace {

Emulation shifted_concat(const std::vector<Emulation>& parts, int direction, const std::string& name) {
  std::vector<EmulationBlock> blocks;
  std::vector<Rat> out;
  std::set<int> seen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& b : parts[i].blocks()) {
      if (!seen.insert(b.label).second) throw InvalidArgument(name + " parts share label " + std::to_string(b.label));
      blocks.push_back(b);
    }
    const Rat shift(direction * (static_cast<long>(i) + 1));
    for (const Rat& v : normalize_theta(parts[i].theta())) out.push_back(v + shift);
  }
  return Emulation(std::move(blocks), std::move(out)).with_metadata("construction", name);
}

}  // namespace

Emulation union_shift(const std::vector<Emulation>& parts) { return shifted_concat(parts, -1, "union"); }

Emulation farah_shift(const std::vector<Emulation>& parts) { return shifted_concat(parts, 1, "farah"); }

// ---------------------------------------------------------------------------
// Bounded search. A family on n ≤ 6 labels is a 64-bit set of subset masks.

namespace {

struct SearchSetup {
  std::size_t n = 0;
  IdSet labels;
  std::unordered_map<std::uint64_t, std::size_t> targets;  // mask family → first label order
  std::vector<std::vector<std::size_t>> orders;
  std::vector<std::vector<int>> size_vectors;
};

std::uint64_t multinomial(const std::vector<int>& sizes) {
  std::uint64_t total = 0;
  std::uint64_t value = 1;
  for (int s : sizes) {
    for (int j = 1; j <= s; ++j) {
      ++total;
      // value · total / j stays integral at every step.
      value = value / static_cast<std::uint64_t>(j) * total +
              value % static_cast<std::uint64_t>(j) * total / static_cast<std::uint64_t>(j);
    }
  }
  return value;
}

SearchSetup prepare_search(const Family& f, int max_block, const SearchConfig& config) {
  SearchSetup s;
  s.labels = f.universe().ids();
  s.n = s.labels.size();
  if (s.n == 0) throw InvalidArgument("emulation search needs a non-empty universe");
  if (s.n > config.max_universe || s.n > 6) {
    throw InvalidArgument("emulation search supports at most " + std::to_string(std::min<std::size_t>(config.max_universe, 6)) +
                          " labels");
  }
  if (max_block < 1 || max_block > config.max_block) {
    throw InvalidArgument("max_block must lie in 1.." + std::to_string(config.max_block));
  }
  if (emulation_search_size(s.n, max_block) > config.search_limit) {
    throw SearchSpaceExceeded("emulation search space " + std::to_string(emulation_search_size(s.n, max_block)) +
                              " exceeds the limit " + std::to_string(config.search_limit));
  }
  const std::size_t subsets = std::size_t{1} << s.n;
  std::uint64_t fmask = 0;
  for (std::size_t m = 0; m < subsets; ++m) {
    if (f.contains(subset_from_mask(s.labels, m))) fmask |= std::uint64_t{1} << m;
  }
  std::vector<std::size_t> perm(s.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::uint64_t mapped = 0;
    for (std::size_t m = 0; m < subsets; ++m) {
      std::size_t image = 0;
      for (std::size_t b = 0; b < s.n; ++b) {
        if (m >> b & 1) image |= std::size_t{1} << perm[b];
      }
      if (fmask >> image & 1) mapped |= std::uint64_t{1} << m;
    }
    s.targets.emplace(mapped, s.orders.size());
    s.orders.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<int> sizes(s.n, 1);
  while (true) {
    s.size_vectors.push_back(sizes);
    std::size_t i = s.n;
    while (i > 0 && sizes[i - 1] == max_block) sizes[--i] = 1;
    if (i == 0) break;
    ++sizes[i - 1];
  }
  return s;
}

struct Hit {
  std::vector<int> word;
  std::size_t order = 0;
};

// First word (lexicographic) for the given sizes whose full-chain family is a
// relabelling of the target.
std::optional<Hit> search_sizes(const SearchSetup& s, const std::vector<int>& sizes) {
  const std::size_t n = s.n;
  std::vector<int> word;
  for (std::size_t b = 0; b < n; ++b) word.insert(word.end(), static_cast<std::size_t>(sizes[b]), static_cast<int>(b));
  const std::size_t total = word.size();
  std::vector<std::size_t> start(n + 1, 0);
  for (std::size_t b = 0; b < n; ++b) start[b + 1] = start[b] + static_cast<std::size_t>(sizes[b]);
  std::vector<std::uint64_t> without(n, 0);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
      if (!(m >> b & 1)) without[b] |= std::uint64_t{1} << m;
    }
  }
  std::vector<int> block_of(total);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t p = start[b]; p < start[b + 1]; ++p) block_of[p] = static_cast<int>(b);
  }
  std::vector<std::size_t> rank(total);
  std::vector<std::size_t> fill(n);
  std::vector<std::uint64_t> ends(total);
  do {
    // Ranks rise through the word; a block's positions take them in reverse.
    for (std::size_t b = 0; b < n; ++b) fill[b] = start[b + 1];
    for (std::size_t r = 0; r < total; ++r) rank[--fill[static_cast<std::size_t>(word[r])]] = r;
    std::uint64_t family = 1;
    for (std::size_t p = 0; p < total; ++p) {
      std::uint64_t before = 0;
      for (std::size_t q = 0; q < start[static_cast<std::size_t>(block_of[p])]; ++q) {
        if (rank[q] < rank[p]) before |= ends[q];
      }
      const std::size_t b = static_cast<std::size_t>(block_of[p]);
      ends[p] = (std::uint64_t{1} << (std::size_t{1} << b)) | ((before & without[b]) << (std::size_t{1} << b));
      family |= ends[p];
    }
    auto it = s.targets.find(family);
    if (it != s.targets.end()) return Hit{word, it->second};
  } while (std::next_permutation(word.begin(), word.end()));
  return std::nullopt;
}

Emulation build(const SearchSetup& s, const std::vector<int>& sizes, const Hit& hit) {
  const std::size_t n = s.n;
  std::vector<std::size_t> start(n + 1, 0);
  for (std::size_t b = 0; b < n; ++b) start[b + 1] = start[b] + static_cast<std::size_t>(sizes[b]);
  std::vector<Rat> theta(start[n]);
  std::vector<std::size_t> fill(start.begin() + 1, start.end());
  for (std::size_t r = 0; r < hit.word.size(); ++r) {
    theta[--fill[static_cast<std::size_t>(hit.word[r])]] = Rat(static_cast<long>(r) + 1);
  }
  std::vector<EmulationBlock> blocks;
  for (std::size_t b = 0; b < n; ++b) blocks.push_back({s.labels[s.orders[hit.order][b]], sizes[b]});
  return Emulation(std::move(blocks), std::move(theta)).with_metadata("construction", "search");
}

}  // namespace

std::size_t emulation_search_size(std::size_t universe, int max_block) {
  std::vector<int> sizes(universe, 1);
  std::size_t total = 0;
  while (true) {
    const std::uint64_t w = multinomial(sizes);
    total = total > std::numeric_limits<std::size_t>::max() - w ? std::numeric_limits<std::size_t>::max() : total + w;
    std::size_t i = universe;
    while (i > 0 && sizes[i - 1] == max_block) sizes[--i] = 1;
    if (i == 0) break;
    ++sizes[i - 1];
  }
  return total;
}

std::optional<Emulation> search_emulation_serial(const Family& f, int max_block, const SearchConfig& config) {
  const SearchSetup s = prepare_search(f, max_block, config);
  for (const auto& sizes : s.size_vectors) {
    if (auto hit = search_sizes(s, sizes)) return build(s, sizes, *hit);
  }
  return std::nullopt;
}

std::optional<Emulation> search_emulation(const Family& f, int max_block, const SearchConfig& config) {
  const SearchSetup s = prepare_search(f, max_block, config);
  const std::size_t count = s.size_vectors.size();
  std::atomic<std::size_t> best{count};
  std::vector<std::optional<Hit>> hits(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < count; ++i) {
    if (i > best.load()) continue;
    hits[i] = search_sizes(s, s.size_vectors[i]);
    if (hits[i]) {
      std::size_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  const std::size_t i = best.load();
  if (i == count) return std::nullopt;
  return build(s, s.size_vectors[i], *hits[i]);
}

}  // namespace combinorm
