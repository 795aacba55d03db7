#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pgzero/cyclo/cycint.hpp"
#include "pgzero/grp/element_set.hpp"
#include "pgzero/structure/classes.hpp"

namespace pgzero {

/// Irreducible characters of a group, one row per character and one column
/// per conjugacy class. Row 0 is the trivial character; the remaining rows
/// are ordered by degree, then by their value encoding. All values live in
/// Z[zeta_e] with e the group exponent.
struct CharacterTable {
  std::shared_ptr<const ClassData> classes;
  std::uint64_t exponent = 1;
  std::uint64_t modular_prime = 0;
  std::vector<std::vector<CycInt>> values;
  std::vector<std::uint64_t> degrees;
  std::vector<std::vector<std::uint32_t>> kernel_classes;
  std::vector<std::uint64_t> kernel_orders;
  std::vector<bool> faithful;

  const Group& group() const { return classes->group; }
  std::size_t size() const { return values.size(); }
  bool is_linear(std::size_t chi) const { return degrees[chi] == 1; }

  ElementSet kernel(std::size_t chi) const {
    ElementSet k;
    for (auto c : kernel_classes[chi]) k.insert(k.end(), classes->members[c].begin(), classes->members[c].end());
    return normalized(std::move(k));
  }
};

}  // namespace pgzero
