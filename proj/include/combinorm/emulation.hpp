#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "combinorm/family.hpp"
#include "combinorm/rat.hpp"
#include "combinorm/sets.hpp"

namespace combinorm {

struct EmulationBlock {
  int label = 0;
  int size = 0;

  friend bool operator==(const EmulationBlock&, const EmulationBlock&) = default;
};

/// Consecutive blocks of positions, one per label, and an injective rational
/// θ over the positions that decreases inside every block.
class Emulation {
 public:
  Emulation() = default;
  /// Throws InvalidArgument on empty or repeated labels, sizes < 1, a θ of the
  /// wrong length, repeated θ values, or θ not decreasing on a block.
  Emulation(std::vector<EmulationBlock> blocks, std::vector<Rat> theta);

  const std::vector<EmulationBlock>& blocks() const { return blocks_; }
  const std::vector<Rat>& theta() const { return theta_; }
  std::size_t positions() const { return theta_.size(); }

  /// Labels in ascending order.
  IdSet labels() const;
  bool has_label(int label) const { return index_.count(label) > 0; }
  /// Index of the block carrying `label`; throws InvalidArgument if absent.
  std::size_t block_index(int label) const;
  /// First position (0-based) of every block, plus the total at the end.
  const std::vector<std::size_t>& offsets() const { return offsets_; }

  /// True when the blocks carry the labels 1, 2, …, k in this order.
  bool label_ordered() const;

  const std::map<std::string, std::string>& metadata() const { return metadata_; }
  Emulation with_metadata(const std::string& key, const std::string& value) const;

  friend bool operator==(const Emulation& a, const Emulation& b) {
    return a.blocks_ == b.blocks_ && a.theta_ == b.theta_;
  }

 private:
  std::vector<EmulationBlock> blocks_;
  std::vector<Rat> theta_;
  std::vector<std::size_t> offsets_;
  std::map<int, std::size_t> index_;
  std::map<std::string, std::string> metadata_;
};

/// Unit blocks on `labels` in ascending order, θ increasing or decreasing.
Emulation unit_emulation(const IdSet& labels, bool increasing);

/// ‖Σ_{t∈E} x_t‖_θ: the longest sequence increasing in position and in θ
/// inside the blocks of E. Throws InvalidArgument on an unknown label.
std::size_t emulation_norm(const Emulation& e, const IdSet& labels);

/// ‖Σ a_t x_t‖_θ for coefficients on labels.
Rat emulation_norm(const Emulation& e, const std::map<int, Rat>& coefficients);

struct EmulationCheck {
  bool ok = true;
  std::optional<IdSet> counterexample;
};

/// Checks ‖Σ_{t∈E} x_t‖_θ = |E| ⟺ E ∈ f for every E ⊆ labels with
/// |E| ≤ max_size, by size and then colex; reports the first failure.
EmulationCheck verify_emulation(const Emulation& e, const Family& f, std::size_t max_size);

/// Order-preserving copy of θ inside (0, 1).
std::vector<Rat> normalize_theta(const std::vector<Rat>& theta);

/// Emulation of S(F) from a label-ordered emulation of F: block n becomes n
/// copies of I_n, the k-th copy shifted down by k.
Emulation schreier_transform(const Emulation& e);

/// Emulation of D*((F_k)_k) from label-ordered emulations of F_1, F_2, …:
/// block n is the concatenation of the n-th blocks of parts 1..n, part k
/// shifted down by k. Emits the blocks n for which parts 1..n all reach n.
Emulation dstar_transform(const std::vector<Emulation>& parts);

/// Concatenation of emulations on disjoint labels with θ ranges decreasing
/// from part to part; emulates the union of the families.
Emulation union_shift(const std::vector<Emulation>& parts);
/// Same with increasing θ ranges; emulates the Farah product.
Emulation farah_shift(const std::vector<Emulation>& parts);

struct SearchConfig {
  std::size_t max_universe = 6;
  int max_block = 3;
  /// Upper bound on the number of θ order types examined.
  std::size_t search_limit = 100'000'000;
};

/// Exhaustive search for an emulation of f over block-size vectors (in
/// lexicographic order), θ order types (words of block indices in ascending θ,
/// lexicographic), and label orders (lexicographic). θ takes the values 1..P.
/// Throws SearchSpaceExceeded when the order types exceed the limit.
std::optional<Emulation> search_emulation(const Family& f, int max_block, const SearchConfig& config = {});
/// Serial reference with the same ordering.
std::optional<Emulation> search_emulation_serial(const Family& f, int max_block, const SearchConfig& config = {});

/// Number of θ order types the search would examine.
std::size_t emulation_search_size(std::size_t universe, int max_block);

}  // namespace combinorm
