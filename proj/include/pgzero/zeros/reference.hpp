#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgzero/util/numeric.hpp"
#include "pgzero/zeros/reports.hpp"

namespace pgzero {

/// Published minimum zero counts for full catalogs that are not bundled.
/// `printed` is the number as published; `formula` evaluates the expression
/// it was printed next to.
struct ReferenceValue {
  std::uint64_t prime;
  unsigned n;
  std::uint64_t printed;
  std::string claim;  // "exceeds_bound" or "equals_bound"
};

inline const std::vector<ReferenceValue>& reference_values() {
  static const std::vector<ReferenceValue> v{{5, 5, 2600, "exceeds_bound"}, {7, 5, 1448, "equals_bound"}};
  return v;
}

struct ReferenceCheck {
  ReferenceValue ref;
  std::uint64_t formula_value = 0;
  /// The printed number differs from what its claim implies.
  bool discrepancy = false;
  std::optional<std::uint64_t> computed;
  /// catalog_absent | reproduced | not_reproduced
  std::string status;
};

/// Compares a reference value with an mz computed from a catalog, when one
/// is available. For "equals_bound" the expected value is the formula, not
/// the printed number.
inline ReferenceCheck check_reference(const ReferenceValue& ref, std::optional<std::uint64_t> computed) {
  ReferenceCheck c{ref};
  c.formula_value = zero_bound(ref.prime, ref.n);
  const std::uint64_t expected = ref.claim == "equals_bound" ? c.formula_value : ref.printed;
  c.discrepancy = ref.claim == "equals_bound" ? ref.printed != c.formula_value : ref.printed <= c.formula_value;
  c.computed = computed;
  if (!computed)
    c.status = "catalog_absent";
  else
    c.status = *computed == expected ? "reproduced" : "not_reproduced";
  return c;
}

}  // namespace pgzero
