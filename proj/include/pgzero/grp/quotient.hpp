#pragma once

#include <string>
#include <vector>

#include "pgzero/errors.hpp"
#include "pgzero/grp/element_set.hpp"
#include "pgzero/grp/group.hpp"

namespace pgzero {

struct Quotient {
  Group group;
  /// G index -> G/N index.
  std::vector<Index> projection;
  /// G/N index -> minimal G index in the coset.
  std::vector<Index> representatives;
};

/// G/N, realised as the regular permutation action on the cosets. Cosets are
/// numbered by their minimal element index, so the identity coset is 0.
inline Quotient quotient(const Group& G, const ElementSet& N_in) {
  const ElementSet N = normalized(N_in);
  if (!is_subgroup(G, N)) throw DomainError("quotient: N is not a subgroup");
  if (!is_normal(G, N)) throw DomainError("quotient: N is not normal");
  constexpr Index unset = ~Index{0};
  std::vector<Index> proj(G.order(), unset);
  std::vector<Index> reps;
  for (Index x = 0; x < G.order(); ++x) {
    if (proj[x] != unset) continue;
    const auto c = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (auto n : N) proj[G.mul(n, x)] = c;
  }
  const std::size_t m = reps.size();
  std::vector<Element> elems(m);
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<std::uint32_t> img(m);
    for (std::size_t d = 0; d < m; ++d) img[d] = proj[G.mul(reps[d], reps[c])];
    elems[c] = make_permutation(std::move(img));
  }
  std::vector<Index> gens;
  for (auto g : G.generators()) gens.push_back(proj[g]);
  std::string label = G.label() + "/N" + std::to_string(N.size());
  return Quotient{Group::from_permutation_elements(std::move(elems), std::move(gens), std::move(label)),
                  std::move(proj), std::move(reps)};
}

}  // namespace pgzero
