#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "pgzero/grp/element_set.hpp"
#include "pgzero/grp/group.hpp"

namespace pgzero {

/// Conjugacy classes of a group. Class 0 is the identity; the remaining
/// classes are ordered by their minimal element index, which is also the
/// class representative.
struct ClassData {
  Group group;
  std::vector<Index> representatives;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> class_of;
  std::vector<ElementSet> members;
  std::vector<std::uint32_t> inverse_class;
  std::vector<unsigned> rep_orders;
  std::vector<std::uint64_t> centralizer_orders;
  std::uint64_t exponent = 1;
  /// power_table[m][c] = class of rep_c^m for 0 <= m < exponent, when small
  /// enough to store; otherwise computed on demand.
  std::vector<std::vector<std::uint32_t>> power_table;

  std::size_t count() const { return representatives.size(); }

  std::uint32_t power_map(std::uint64_t m, std::uint32_t cls) const {
    m %= exponent;
    if (!power_table.empty()) return power_table[m][cls];
    return class_of[group.pow(representatives[cls], m)];
  }
};

inline constexpr std::size_t kPowerTableLimit = std::size_t{1} << 24;

inline ClassData conjugacy_classes(const Group& G) {
  ClassData cd{G};
  const std::size_t order = G.order();
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  cd.class_of.assign(order, unset);
  const auto gens = G.generators();
  std::vector<Index> gen_inv;
  for (auto g : gens) gen_inv.push_back(G.inv(g));
  for (Index x = 0; x < order; ++x) {
    if (cd.class_of[x] != unset) continue;
    const auto c = static_cast<std::uint32_t>(cd.representatives.size());
    ElementSet orbit{x};
    cd.class_of[x] = c;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Index y = G.mul(gen_inv[k], G.right_gen(orbit[head], k));
        if (cd.class_of[y] == unset) {
          cd.class_of[y] = c;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    cd.representatives.push_back(x);
    cd.sizes.push_back(orbit.size());
    cd.members.push_back(std::move(orbit));
  }
  const std::size_t k = cd.count();
  for (std::size_t c = 0; c < k; ++c) {
    const Index r = cd.representatives[c];
    cd.inverse_class.push_back(cd.class_of[G.inv(r)]);
    cd.rep_orders.push_back(G.element_order(r));
    cd.centralizer_orders.push_back(order / cd.sizes[c]);
    cd.exponent = std::lcm(cd.exponent, std::uint64_t{cd.rep_orders.back()});
  }
  if (cd.exponent * k <= kPowerTableLimit) {
    cd.power_table.assign(cd.exponent, std::vector<std::uint32_t>(k, 0));
    for (std::size_t c = 0; c < k; ++c) {
      const Index r = cd.representatives[c];
      Index cur = 0;
      for (std::uint64_t m = 0; m < cd.exponent; ++m) {
        cd.power_table[m][c] = cd.class_of[cur];
        cur = G.mul(cur, r);
      }
    }
  }
  return cd;
}

}  // namespace pgzero
