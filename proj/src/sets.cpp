#include "combinorm/sets.hpp"

#include <sstream>

#include "combinorm/errors.hpp"

namespace combinorm {

IdSet make_set(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool colex_less(const IdSet& a, const IdSet& b) {
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  while (ia != a.rend() && ib != b.rend()) {
    if (*ia != *ib) return *ia < *ib;
    ++ia;
    ++ib;
  }
  return ia == a.rend() && ib != b.rend();
}

void sort_colex(std::vector<IdSet>& sets) { std::sort(sets.begin(), sets.end(), colex_less); }

bool is_subset(const IdSet& a, const IdSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

IdSet set_union(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IdSet set_intersection(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IdSet subset_from_mask(const IdSet& universe, std::uint64_t mask) {
  IdSet out;
  for (std::size_t i = 0; i < universe.size() && mask; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(universe[i]);
  }
  return out;
}

std::uint64_t mask_of(const IdSet& universe, const IdSet& s) {
  std::uint64_t m = 0;
  for (int v : s) {
    auto it = std::lower_bound(universe.begin(), universe.end(), v);
    if (it == universe.end() || *it != v) throw InvalidArgument("id " + std::to_string(v) + " outside universe");
    m |= std::uint64_t{1} << (it - universe.begin());
  }
  return m;
}

std::string to_string(const IdSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << '}';
  return os.str();
}

IdSet parse_set(const std::string& text) {
  std::vector<int> ids;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size() || v < 0) throw InvalidArgument("bad id");
      ids.push_back(v);
    } catch (const std::logic_error&) {
      throw InvalidArgument("malformed set: '" + text + "'");
    }
  }
  return make_set(std::move(ids));
}

}  // namespace combinorm
