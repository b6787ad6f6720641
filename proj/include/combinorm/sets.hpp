#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace combinorm {

/// Finite set of vertex ids, kept sorted and duplicate free.
using IdSet = std::vector<int>;

IdSet make_set(std::vector<int> ids);

/// Colexicographic order: A precedes B iff the largest element of the
/// symmetric difference lies in B.
bool colex_less(const IdSet& a, const IdSet& b);

void sort_colex(std::vector<IdSet>& sets);

bool is_subset(const IdSet& a, const IdSet& b);

IdSet set_union(const IdSet& a, const IdSet& b);
IdSet set_intersection(const IdSet& a, const IdSet& b);

/// Elements of `universe` selected by the bits of `mask` (bit i ↔ universe[i]).
IdSet subset_from_mask(const IdSet& universe, std::uint64_t mask);

/// Bit mask of `s` relative to `universe`; every element of `s` must occur in
/// `universe`.
std::uint64_t mask_of(const IdSet& universe, const IdSet& s);

std::string to_string(const IdSet& s);

/// Parses "3,4,5" (spaces allowed) into a sorted set.
IdSet parse_set(const std::string& text);

}  // namespace combinorm
