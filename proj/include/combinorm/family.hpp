#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "combinorm/ordinal.hpp"
#include "combinorm/rat.hpp"
#include "combinorm/sets.hpp"

namespace combinorm {

class Graph;

/// Ground set of a family: an explicit finite id set, or the ids 1..bound of
/// a countable enumeration truncated at `bound`.
class Universe {
 public:
  static Universe explicit_ids(IdSet ids);
  static Universe bounded(int bound);
  /// Finite prefix `ids` of a larger enumeration; queries beyond it throw.
  static Universe truncation_of(IdSet ids);

  bool is_explicit() const { return explicit_; }
  int bound() const { return static_cast<int>(ids_.size()); }
  const IdSet& ids() const { return ids_; }
  bool contains(int id) const;
  bool contains(const IdSet& s) const;

  /// The first `k` ids of the enumeration.
  Universe truncated(int k) const;

 private:
  bool explicit_ = false;
  IdSet ids_;
};

enum class FamilyKind { explicit_sets, graph_cliques, schreier, farah, union_of, perp, product_order, custom };

std::string to_string(FamilyKind kind);

/// Hereditary family of finite subsets that covers its universe. Membership
/// is a pure predicate; sets outside the universe are never members.
class Family {
 public:
  using Predicate = std::function<bool(const IdSet&)>;

  Family(Universe universe, Predicate contains, FamilyKind kind, std::string label = {});

  bool contains(const IdSet& s) const;

  const Universe& universe() const { return universe_; }
  FamilyKind kind() const { return kind_; }
  const std::string& label() const { return label_; }

  /// Graph whose cliques are exactly the members, when known.
  const Graph* clique_graph() const { return graph_.get(); }
  Family with_clique_graph(std::shared_ptr<const Graph> g) const;

  const std::map<std::string, std::string>& metadata() const { return metadata_; }
  Family with_metadata(const std::string& key, const std::string& value) const;

 private:
  Universe universe_;
  std::shared_ptr<const Predicate> contains_;
  FamilyKind kind_;
  std::string label_;
  std::shared_ptr<const Graph> graph_;
  std::map<std::string, std::string> metadata_;
};

/// Downward closure of `sets` plus all singletons of the universe.
Family explicit_family(const IdSet& universe, const std::vector<IdSet>& sets);

/// [V]^{≤1}.
Family singletons_family(const Universe& universe);

/// [V]^{<∞}.
Family full_family(const Universe& universe);

/// Orthogonal family on the first `truncation` universe elements: E is a
/// member iff no two-element subset of E belongs to f. Hereditarity of f makes
/// this equal to |E ∩ F| ≤ 1 for every F ∈ f. Throws InvalidArgument when
/// queried with ids outside the truncated universe.
Family perp(const Family& f, int truncation);

struct GraphGenerated {
  bool generated = false;
  std::optional<IdSet> witness;  // colex-first clique of the pair graph outside f
};

/// Compares f with the cliques of its pair graph on the truncated universe
/// (f^{⊥⊥} restricted there).
GraphGenerated is_graph_generated(const Family& f, int truncation);

/// All members contained in `ground`, colex order.
std::vector<IdSet> members_within(const Family& f, const IdSet& ground);

/// Members contained in `ground` with no strict superset inside `ground`,
/// colex order.
std::vector<IdSet> max_elements(const Family& f, const IdSet& ground);

/// Bounded search for a ⊆-chain ∅ ⊂ F₁ ⊂ … ⊂ F_depth of members within the
/// truncated universe. Compactness itself is not decidable from a predicate.
std::optional<std::vector<IdSet>> find_chain(const Family& f, int depth, int truncation);

/// Vector with entries ±1 on its support.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::map<int, int> values);

  const std::map<int, int>& values() const { return values_; }
  IdSet support() const;
  RatVector to_vector() const;
  DensePoint to_dense(const IdSet& ground) const;

  friend auto operator<=>(const SignVector&, const SignVector&) = default;

 private:
  std::map<int, int> values_;
};

/// W(H): every ±1 assignment on every set of H, deduplicated.
std::vector<SignVector> sign_vectors(const std::vector<IdSet>& sets);

enum class SchreierVariant { standard, star };

/// Schreier family S_α (standard) or S*_α (star) on subsets of {1..truncation},
/// following the ladder stored in `alpha`.
Family schreier(const Ordinal& alpha, SchreierVariant variant, int truncation);

/// S(f) on the universe of f: unions F₁ ∪ … ∪ F_m of non-empty members with
/// {m} ≤ F₁ < … < F_m.
Family schreier_operation(const Family& f);

/// Membership in S_α / S*_α without building a Family.
bool schreier_contains(const Ordinal& alpha, SchreierVariant variant, const IdSet& s);

using FamilyPart = std::pair<IdSet, Family>;

/// Fh(Q): sets whose trace on each part is a member of that part's family.
Family farah(const std::vector<FamilyPart>& parts);

/// ⋃Q: sets contained in a single part and a member there.
Family union_family(const std::vector<FamilyPart>& parts);

/// Finite partial order given by its relation pairs (a, b) meaning a ≤ b.
class Poset {
 public:
  /// Throws InvalidArgument naming the violated axiom when `leq` is not
  /// reflexive, antisymmetric and transitive on `elements`.
  Poset(IdSet elements, std::set<std::pair<int, int>> leq);

  const IdSet& elements() const { return elements_; }
  bool leq(int a, int b) const { return leq_.count({a, b}) > 0; }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  const std::set<std::pair<int, int>>& relation() const { return leq_; }

 private:
  IdSet elements_;
  std::set<std::pair<int, int>> leq_;
};

Family poset_chains(const Poset& p);
Family poset_antichains(const Poset& p);

/// Product order on {1..n}×{1..n}; the pair (i, j) has id (i−1)·n + j.
Poset product_order(int n);

}  // namespace combinorm
