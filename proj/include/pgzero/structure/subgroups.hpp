#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgzero/errors.hpp"
#include "pgzero/grp/element_set.hpp"
#include "pgzero/grp/group.hpp"
#include "pgzero/structure/classes.hpp"
#include "pgzero/util/numeric.hpp"

namespace pgzero {

/// Incrementally grows <seeds> inside G.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const Group& G) : G_(&G), mask_(G.order(), 0), elements_{0} { mask_[0] = 1; }

  bool contains(Index x) const { return mask_[x] != 0; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Index>& generators() const { return gens_; }

  /// Adds x; returns false if it was already a member.
  bool add(Index x) {
    if (mask_[x]) return false;
    gens_.push_back(x);
    for (std::size_t head = 0; head < elements_.size(); ++head)
      for (auto g : gens_) {
        Index y = G_->mul(elements_[head], g);
        if (!mask_[y]) {
          mask_[y] = 1;
          elements_.push_back(y);
        }
      }
    return true;
  }

  ElementSet elements() const { return normalized(elements_); }

 private:
  const Group* G_;
  std::vector<char> mask_;
  std::vector<Index> elements_;
  std::vector<Index> gens_;
};

inline ElementSet generate_subgroup(const Group& G, std::span<const Index> seeds) {
  SubgroupBuilder b(G);
  for (auto s : seeds) b.add(s);
  return b.elements();
}

/// Smallest normal subgroup containing the seeds.
inline ElementSet normal_closure(const Group& G, std::span<const Index> seeds) {
  SubgroupBuilder b(G);
  for (auto s : seeds) b.add(s);
  for (std::size_t i = 0; i < b.generators().size(); ++i)
    for (auto g : G.generators()) b.add(G.conj(b.generators()[i], g));
  return b.elements();
}

inline bool is_abelian_subset(const Group& G, const ElementSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (G.mul(s[i], s[j]) != G.mul(s[j], s[i])) return false;
  return true;
}

inline ElementSet center(const ClassData& cd) {
  ElementSet z;
  for (std::size_t c = 0; c < cd.count(); ++c)
    if (cd.sizes[c] == 1) z.push_back(cd.representatives[c]);
  return normalized(z);
}

inline ElementSet center(const Group& G) { return center(conjugacy_classes(G)); }

/// Upper central series Z_0 = 1 < Z_1 < ... until it stabilises.
/// Z_{i+1} = { x : [x, g] in Z_i for every generator g }.
inline std::vector<ElementSet> upper_central_series(const Group& G) {
  std::vector<ElementSet> terms{ElementSet{0}};
  while (true) {
    auto mask = membership_mask(G, terms.back());
    ElementSet next;
    for (Index x = 0; x < G.order(); ++x) {
      bool ok = true;
      for (auto g : G.generators())
        if (!mask[G.comm(x, g)]) {
          ok = false;
          break;
        }
      if (ok) next.push_back(x);
    }
    if (next.size() == terms.back().size()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

inline ElementSet derived_subgroup(const Group& G) {
  std::vector<Index> seeds;
  auto gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(G.comm(gens[i], gens[j]));
  return normal_closure(G, seeds);
}

struct CentralSeriesData {
  ElementSet center;
  ElementSet second_center;
  ElementSet derived;
  /// nullopt when G is not nilpotent.
  std::optional<unsigned> nilpotency_class;
  std::vector<ElementSet> upper_series;
};

inline CentralSeriesData central_series(const Group& G) {
  CentralSeriesData d;
  d.upper_series = upper_central_series(G);
  const auto& u = d.upper_series;
  d.center = u.size() > 1 ? u[1] : u[0];
  d.second_center = u.size() > 2 ? u[2] : d.center;
  d.derived = derived_subgroup(G);
  if (u.back().size() == G.order()) d.nilpotency_class = static_cast<unsigned>(u.size() - 1);
  return d;
}

inline ElementSet second_center(const Group& G) { return central_series(G).second_center; }
inline std::optional<unsigned> nilpotency_class(const Group& G) { return central_series(G).nilpotency_class; }

inline std::optional<PrimePower> p_group_type(const Group& G) { return as_prime_power(G.order()); }

/// Maximal class: order p^n, n >= 3, non-abelian, and some element has a
/// centraliser of order p^2. The nilpotency-class criterion (class n-1) is
/// evaluated as well and must agree.
inline bool is_maximal_class(const Group& G, const ClassData& cd, std::uint64_t p) {
  auto pp = p_group_type(G);
  if (G.order() == 1 || !pp || pp->prime != p)
    throw DomainError("is_maximal_class: " + G.label() + " is not a " + std::to_string(p) + "-group");
  const unsigned n = pp->exponent;
  if (n < 3 || cd.count() == G.order()) return false;
  bool by_centralizer = false;
  for (auto c : cd.centralizer_orders) by_centralizer = by_centralizer || c == p * p;
  auto cls = nilpotency_class(G);
  bool by_class = cls && *cls == n - 1;
  if (by_centralizer != by_class)
    throw InternalError("is_maximal_class: centraliser and nilpotency-class criteria disagree for " + G.label());
  return by_centralizer;
}

inline bool is_maximal_class(const Group& G, std::uint64_t p) { return is_maximal_class(G, conjugacy_classes(G), p); }

/// Frattini subgroup of a p-group: G' G^p.
inline ElementSet frattini_subgroup(const Group& G, std::uint64_t p) {
  auto derived = derived_subgroup(G);
  SubgroupBuilder b(G);
  for (auto x : derived) b.add(x);
  for (auto g : G.generators()) b.add(G.pow(g, p));
  return b.elements();
}

/// Maximal subgroups of a p-group as kernels of the maps G -> G/Phi(G) -> F_p.
/// Ordered by the normalised functional (first nonzero coordinate 1),
/// lexicographically, relative to a basis of G/Phi(G) taken greedily from the
/// group generators.
inline std::vector<ElementSet> maximal_subgroups(const Group& G) {
  if (G.order() == 1) return {};
  auto pp = p_group_type(G);
  if (!pp) throw DomainError("maximal_subgroups: " + G.label() + " is not a p-group");
  const std::uint64_t p = pp->prime;
  const ElementSet phi = frattini_subgroup(G, p);
  SubgroupBuilder b(G);
  for (auto x : phi) b.add(x);
  std::vector<Index> basis;
  for (auto g : G.generators())
    if (b.add(g)) basis.push_back(g);
  const std::size_t r = basis.size();
  if (b.size() != G.order()) throw InternalError("maximal_subgroups: generators do not span G/Phi");
  // coordinates of each element in G/Phi
  std::vector<std::vector<std::uint32_t>> coord(G.order());
  std::vector<std::uint32_t> c(r, 0);
  std::size_t cosets = ipow(p, static_cast<unsigned>(r));
  for (std::size_t t = 0; t < cosets; ++t) {
    std::size_t v = t;
    Index rep = 0;
    for (std::size_t i = r; i-- > 0;) {
      c[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    for (std::size_t i = 0; i < r; ++i) rep = G.mul(rep, G.pow(basis[i], c[i]));
    for (auto f : phi) coord[G.mul(rep, f)] = c;
  }
  std::vector<ElementSet> out;
  for (std::size_t t = 1; t < cosets; ++t) {
    std::vector<std::uint32_t> a(r);
    std::size_t v = t;
    for (std::size_t i = r; i-- > 0;) {
      a[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    auto first = std::find_if(a.begin(), a.end(), [](auto x) { return x != 0; });
    if (*first != 1) continue;
    ElementSet m;
    for (Index x = 0; x < G.order(); ++x) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < r; ++i) s += std::uint64_t{a[i]} * coord[x][i];
      if (s % p == 0) m.push_back(x);
    }
    out.push_back(std::move(m));
  }
  return out;
}

inline std::optional<ElementSet> abelian_maximal_subgroup(const Group& G) {
  for (auto& m : maximal_subgroups(G))
    if (is_abelian_subset(G, m)) return m;
  return std::nullopt;
}

inline std::vector<ElementSet> abelian_maximal_subgroups(const Group& G) {
  std::vector<ElementSet> out;
  for (auto& m : maximal_subgroups(G))
    if (is_abelian_subset(G, m)) out.push_back(std::move(m));
  return out;
}

/// Normal subgroup enumeration stopped at the candidate limit.
class PartialResultError : public std::runtime_error {
 public:
  PartialResultError(const std::string& what, std::vector<ElementSet> partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const std::vector<ElementSet>& partial() const { return partial_; }

 private:
  std::vector<ElementSet> partial_;
};

/// All normal subgroups: normal closures of single classes, then closed
/// under joins. Ordered by size, then lexicographically.
inline std::vector<ElementSet> normal_subgroups(const Group& G, const ClassData& cd,
                                                std::size_t candidate_limit = 100'000) {
  struct Found {
    ElementSet elements;
    std::vector<Index> seeds;
  };
  std::vector<Found> atoms;
  std::set<ElementSet> seen;
  std::vector<Found> found;
  std::size_t candidates = 0;
  auto sorted_result = [&] {
    std::vector<ElementSet> out;
    for (auto& f : found) out.push_back(f.elements);
    std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
  };
  auto bump = [&] {
    if (++candidates > candidate_limit)
      throw PartialResultError("normal_subgroups: candidate limit exceeded", sorted_result());
  };
  found.push_back({ElementSet{0}, {}});
  seen.insert(ElementSet{0});
  for (std::size_t c = 1; c < cd.count(); ++c) {
    bump();
    std::vector<Index> seed{cd.representatives[c]};
    Found f{normal_closure(G, seed), seed};
    if (seen.insert(f.elements).second) {
      atoms.push_back(f);
      found.push_back(f);
    }
  }
  for (std::size_t head = 1; head < found.size(); ++head)
    for (const auto& a : atoms) {
      if (is_subset(a.elements, found[head].elements)) continue;
      bump();
      std::vector<Index> seeds = found[head].seeds;
      seeds.insert(seeds.end(), a.seeds.begin(), a.seeds.end());
      Found j{normal_closure(G, seeds), seeds};
      if (seen.insert(j.elements).second) found.push_back(std::move(j));
    }
  return sorted_result();
}

inline std::vector<ElementSet> normal_subgroups(const Group& G) { return normal_subgroups(G, conjugacy_classes(G)); }

struct SylowTower {
  bool exists = false;
  /// Primes in the order their normal Hall complements were peeled off; the
  /// last entry is the prime of the remaining Sylow subgroup.
  std::vector<std::uint64_t> primes;
};

namespace detail {

inline std::optional<std::vector<std::uint64_t>> sylow_tower_of(const Group& G, const ElementSet& S,
                                                                const std::vector<unsigned>& orders) {
  if (S.size() == 1) return std::vector<std::uint64_t>{};
  if (auto pp = as_prime_power(S.size())) return std::vector<std::uint64_t>{pp->prime};
  for (auto p : prime_divisors(S.size())) {
    std::uint64_t p_part = 1;
    while (S.size() % (p_part * p) == 0) p_part *= p;
    ElementSet T;
    for (auto x : S)
      if (orders[x] % p != 0) T.push_back(x);
    if (T.size() != S.size() / p_part) continue;
    if (generate_subgroup(G, T).size() != T.size()) continue;
    if (auto rest = sylow_tower_of(G, T, orders)) {
      std::vector<std::uint64_t> out{p};
      out.insert(out.end(), rest->begin(), rest->end());
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Sylow tower detection via iterated normal Hall p'-subgroups: the
/// p'-elements must form a subgroup of the right order.
inline SylowTower has_sylow_tower(const Group& G) {
  std::vector<unsigned> orders(G.order());
  for (Index x = 0; x < G.order(); ++x) orders[x] = G.element_order(x);
  auto r = detail::sylow_tower_of(G, all_elements(G), orders);
  if (!r) return {};
  return {true, *r};
}

}  // namespace pgzero
