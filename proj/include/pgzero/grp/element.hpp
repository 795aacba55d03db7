#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace pgzero {

enum class Backend : std::uint8_t { permutation, pc };

/// A group element as seen by its backend: a permutation image array
/// (0-based) or a collected exponent vector.
struct Element {
  Backend backend = Backend::permutation;
  std::vector<std::uint32_t> data;

  bool operator==(const Element&) const = default;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::size_t h = static_cast<std::size_t>(e.backend);
    for (auto v : e.data) h = h * 1000003u ^ v;
    return h;
  }
};

inline Element make_permutation(std::vector<std::uint32_t> images) {
  return Element{Backend::permutation, std::move(images)};
}

inline Element identity_permutation(std::size_t degree) {
  std::vector<std::uint32_t> v(degree);
  for (std::size_t i = 0; i < degree; ++i) v[i] = static_cast<std::uint32_t>(i);
  return make_permutation(std::move(v));
}

/// Permutation from disjoint cycles on `degree` points.
inline Element permutation_from_cycles(std::size_t degree,
                                       const std::vector<std::vector<std::uint32_t>>& cycles) {
  Element e = identity_permutation(degree);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) e.data[c[i]] = c[(i + 1) % c.size()];
  return e;
}

}  // namespace pgzero
