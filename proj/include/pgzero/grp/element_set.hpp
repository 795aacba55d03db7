#pragma once

#include <algorithm>
#include <vector>

#include "pgzero/grp/group.hpp"

namespace pgzero {

/// A set of group elements as sorted, duplicate-free indices.
using ElementSet = std::vector<Index>;

inline ElementSet normalized(ElementSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline ElementSet all_elements(const Group& G) {
  ElementSet s(G.order());
  for (Index i = 0; i < G.order(); ++i) s[i] = i;
  return s;
}

inline std::vector<char> membership_mask(const Group& G, const ElementSet& s) {
  std::vector<char> m(G.order(), 0);
  for (auto x : s) m.at(x) = 1;
  return m;
}

inline bool contains(const ElementSet& s, Index x) { return std::binary_search(s.begin(), s.end(), x); }

inline bool is_subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Elements of a not in b.
inline ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Subgroup test by closure: contains 1 and is closed under products.
/// Finite, so closure under products implies closure under inverses.
inline bool is_subgroup(const Group& G, const ElementSet& s) {
  if (s.empty() || s.front() != 0) return false;
  auto mask = membership_mask(G, s);
  for (auto a : s)
    for (auto b : s)
      if (!mask[G.mul(a, b)]) return false;
  return true;
}

inline bool is_normal(const Group& G, const ElementSet& s) {
  auto mask = membership_mask(G, s);
  for (auto g : G.generators())
    for (auto x : s)
      if (!mask[G.conj(x, g)]) return false;
  return true;
}

}  // namespace pgzero
