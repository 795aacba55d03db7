#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pgzero/errors.hpp"
#include "pgzero/grp/element.hpp"
#include "pgzero/grp/pc_presentation.hpp"

namespace pgzero {

using Index = std::uint32_t;

/// Groups larger than this are refused at enumeration time.
inline constexpr std::size_t kMaxGroupOrder = std::size_t{1} << 21;
/// Full Cayley tables are kept up to this order.
inline constexpr std::size_t kCayleyTableLimit = 2048;

/// An immutable, fully enumerated finite group. Elements are addressed by
/// their index in [0, order()); the identity has index 0. Copies share state.
class Group {
 public:
  static Group from_permutation_generators(const std::vector<Element>& generators, std::string label);
  static Group from_permutation_elements(std::vector<Element> elements, std::vector<Index> generators,
                                         std::string label);
  static Group from_pc(const PcPresentation& presentation);

  std::size_t order() const { return s_->elements.size(); }
  Backend backend() const { return s_->backend; }
  const std::string& label() const { return s_->label; }
  /// Permutation degree, or number of pc generators.
  std::size_t degree() const { return s_->degree; }
  const PcPresentation* presentation() const {
    return s_->collector ? &s_->collector->presentation() : nullptr;
  }

  const Element& element(Index i) const { return s_->elements.at(i); }
  std::span<const Index> generators() const { return s_->generators; }

  std::optional<Index> find(const Element& g) const {
    if (g.backend != s_->backend || g.data.size() != s_->degree) return std::nullopt;
    if (s_->backend == Backend::pc) {
      std::size_t idx = 0;
      for (std::size_t k = 0; k < g.data.size(); ++k) {
        if (g.data[k] >= s_->rel_orders[k]) return std::nullopt;
        idx += g.data[k] * s_->strides[k];
      }
      return static_cast<Index>(idx);
    }
    auto it = s_->lookup.find(g);
    if (it == s_->lookup.end()) return std::nullopt;
    return it->second;
  }

  Index index_of(const Element& g) const {
    if (g.backend != s_->backend) throw StructuralError("element backend does not match group backend");
    auto i = find(g);
    if (!i) throw StructuralError("element does not belong to group " + s_->label);
    return *i;
  }

  /// Product through the backend oracle (composition or collection).
  Element multiply(const Element& g, const Element& h) const {
    if (g.backend != s_->backend || h.backend != s_->backend)
      throw StructuralError("element backend does not match group backend");
    if (g.data.size() != s_->degree || h.data.size() != s_->degree)
      throw StructuralError("element size does not match group");
    if (s_->backend == Backend::pc) return Element{Backend::pc, s_->collector->multiply(g.data, h.data)};
    return compose(g, h);
  }

  Index mul(Index a, Index b) const {
    if (!s_->cayley.empty()) return s_->cayley[std::size_t{a} * order() + b];
    if (s_->backend == Backend::pc) {
      // walk b's normal form word g_0^{b_0} ... g_{n-1}^{b_{n-1}}
      const auto& bv = s_->elements[b].data;
      Index cur = a;
      for (std::size_t k = 0; k < bv.size(); ++k)
        for (std::uint32_t c = 0; c < bv[k]; ++c) cur = right_gen(cur, k);
      return cur;
    }
    return *find(compose(s_->elements[a], s_->elements[b]));
  }

  Index inv(Index a) const { return s_->inverse[a]; }
  Index right_gen(Index x, std::size_t gen_pos) const {
    return s_->right_gen[std::size_t{x} * s_->generators.size() + gen_pos];
  }

  Index pow(Index a, std::uint64_t m) const {
    Index r = 0;
    Index base = a;
    while (m) {
      if (m & 1) r = mul(r, base);
      base = mul(base, base);
      m >>= 1;
    }
    return r;
  }

  /// g^{-1} x g
  Index conj(Index x, Index g) const { return mul(inv(g), mul(x, g)); }
  /// [a, b] = a^{-1} b^{-1} a b
  Index comm(Index a, Index b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  unsigned element_order(Index a) const {
    unsigned o = 1;
    for (Index cur = a; cur != 0; cur = mul(cur, a)) ++o;
    return o;
  }

  std::uint64_t exponent() const {
    std::uint64_t e = 1;
    for (Index i = 0; i < order(); ++i) e = std::lcm(e, std::uint64_t{element_order(i)});
    return e;
  }

  bool is_abelian() const {
    auto gens = generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (mul(gens[i], gens[j]) != mul(gens[j], gens[i])) return false;
    return true;
  }

  Group with_label(std::string label) const {
    auto copy = std::make_shared<State>(*s_);
    copy->label = std::move(label);
    return Group(std::move(copy));
  }

 private:
  struct State {
    Backend backend = Backend::permutation;
    std::string label;
    std::size_t degree = 0;
    std::vector<Element> elements;
    std::vector<Index> generators;
    std::unordered_map<Element, Index, ElementHash> lookup;
    std::shared_ptr<const Collector> collector;
    std::vector<std::uint32_t> rel_orders;
    std::vector<std::size_t> strides;
    std::vector<Index> right_gen;
    std::vector<Index> inverse;
    std::vector<Index> cayley;
  };

  explicit Group(std::shared_ptr<const State> s) : s_(std::move(s)) {}

  static Element compose(const Element& g, const Element& h) {
    // apply g first, then h
    Element r{Backend::permutation, std::vector<std::uint32_t>(g.data.size())};
    for (std::size_t i = 0; i < g.data.size(); ++i) r.data[i] = h.data[g.data[i]];
    return r;
  }

  static void check_permutation(const Element& g, std::size_t degree) {
    if (g.backend != Backend::permutation) throw StructuralError("expected a permutation element");
    if (g.data.size() != degree) throw StructuralError("permutation degrees differ");
    std::vector<char> seen(degree, 0);
    for (auto v : g.data) {
      if (v >= degree || seen[v]) throw StructuralError("permutation array is not a bijection");
      seen[v] = 1;
    }
  }

  static void finish(State& s);

  std::shared_ptr<const State> s_;
};

inline Group Group::from_permutation_generators(const std::vector<Element>& generators, std::string label) {
  auto s = std::make_shared<State>();
  s->backend = Backend::permutation;
  s->label = std::move(label);
  s->degree = generators.empty() ? 1 : generators.front().data.size();
  for (const auto& g : generators) check_permutation(g, s->degree);
  s->elements.push_back(identity_permutation(s->degree));
  s->lookup.emplace(s->elements[0], 0);
  std::vector<Index> gen_idx;
  // BFS closure under right multiplication
  std::vector<Index> table;
  for (std::size_t head = 0; head < s->elements.size(); ++head) {
    for (const auto& g : generators) {
      Element y = compose(s->elements[head], g);
      auto [it, inserted] = s->lookup.emplace(y, static_cast<Index>(s->elements.size()));
      if (inserted) {
        if (s->elements.size() >= kMaxGroupOrder)
          throw DomainError("group order exceeds the enumeration cap of 2^21");
        s->elements.push_back(std::move(y));
      }
      table.push_back(it->second);
    }
  }
  for (const auto& g : generators) s->generators.push_back(s->lookup.at(g));
  s->right_gen = std::move(table);
  finish(*s);
  return Group(std::move(s));
}

inline Group Group::from_permutation_elements(std::vector<Element> elements, std::vector<Index> generators,
                                              std::string label) {
  if (elements.empty()) throw StructuralError("group needs at least the identity");
  if (elements.size() > kMaxGroupOrder) throw DomainError("group order exceeds the enumeration cap of 2^21");
  auto s = std::make_shared<State>();
  s->backend = Backend::permutation;
  s->label = std::move(label);
  s->degree = elements[0].data.size();
  if (elements[0] != identity_permutation(s->degree)) throw StructuralError("element 0 must be the identity");
  s->elements = std::move(elements);
  for (std::size_t i = 0; i < s->elements.size(); ++i) {
    check_permutation(s->elements[i], s->degree);
    if (!s->lookup.emplace(s->elements[i], static_cast<Index>(i)).second)
      throw StructuralError("duplicate element in element list");
  }
  for (auto g : generators)
    if (g >= s->elements.size()) throw StructuralError("generator index out of range");
  s->generators = std::move(generators);
  s->right_gen.reserve(s->elements.size() * s->generators.size());
  for (std::size_t x = 0; x < s->elements.size(); ++x)
    for (auto g : s->generators) {
      auto it = s->lookup.find(compose(s->elements[x], s->elements[g]));
      if (it == s->lookup.end()) throw StructuralError("element list is not closed under multiplication");
      s->right_gen.push_back(it->second);
    }
  finish(*s);
  if (s->inverse.size() != s->elements.size()) throw InternalError("inverse table incomplete");
  return Group(std::move(s));
}

inline Group Group::from_pc(const PcPresentation& presentation) {
  auto collector = std::make_shared<const Collector>(presentation);
  if (auto bad = collector->find_inconsistency())
    throw InputError("inconsistent presentation: " + *bad);
  auto s = std::make_shared<State>();
  s->backend = Backend::pc;
  s->label = presentation.label;
  s->degree = presentation.ngens;
  s->collector = collector;
  s->rel_orders = presentation.rel_orders;
  const std::size_t n = presentation.ngens;
  s->strides.assign(n, 1);
  std::size_t order = 1;
  for (std::size_t k = n; k-- > 0;) {
    s->strides[k] = order;
    order *= presentation.rel_orders[k];
    if (order > kMaxGroupOrder) throw DomainError("group order exceeds the enumeration cap of 2^21");
  }
  s->elements.resize(order);
  for (std::size_t idx = 0; idx < order; ++idx) {
    ExponentVector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = static_cast<std::uint32_t>(idx / s->strides[k] % s->rel_orders[k]);
    s->elements[idx] = Element{Backend::pc, std::move(v)};
  }
  for (std::size_t k = 0; k < n; ++k) s->generators.push_back(static_cast<Index>(s->strides[k]));
  s->right_gen.resize(order * n);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t k = 0; k < n; ++k) {
      auto y = collector->multiply(s->elements[x].data, collector->generator(k));
      std::size_t idx = 0;
      for (std::size_t t = 0; t < n; ++t) idx += y[t] * s->strides[t];
      s->right_gen[x * n + k] = static_cast<Index>(idx);
    }
  // closure from the identity must reach every normal form
  std::vector<char> seen(order, 0);
  std::vector<Index> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::size_t k = 0; k < n; ++k) {
      Index y = s->right_gen[std::size_t{queue[head]} * n + k];
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  if (queue.size() != order)
    throw InputError("inconsistent presentation: closure yields " + std::to_string(queue.size()) +
                     " elements, expected " + std::to_string(order));
  finish(*s);
  return Group(std::move(s));
}

inline void Group::finish(State& s) {
  const std::size_t order = s.elements.size();
  const std::size_t ngens = s.generators.size();
  if (order <= kCayleyTableLimit) {
    // spanning tree from the identity, then one pass per row
    std::vector<Index> parent(order, 0), via(order, 0), bfs{0};
    std::vector<char> seen(order, 0);
    seen[0] = 1;
    for (std::size_t head = 0; head < bfs.size(); ++head)
      for (std::size_t k = 0; k < ngens; ++k) {
        Index y = s.right_gen[std::size_t{bfs[head]} * ngens + k];
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = bfs[head];
          via[y] = static_cast<Index>(k);
          bfs.push_back(y);
        }
      }
    if (bfs.size() != order) throw StructuralError("generators do not generate the element list");
    std::vector<Index> table(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      Index* row = table.data() + a * order;
      row[0] = static_cast<Index>(a);
      for (std::size_t t = 1; t < order; ++t) {
        Index b = bfs[t];
        row[b] = s.right_gen[std::size_t{row[parent[b]]} * ngens + via[b]];
      }
    }
    s.cayley = std::move(table);
  }
  s.inverse.assign(order, 0);
  if (!s.cayley.empty()) {
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        if (s.cayley[a * order + b] == 0) {
          s.inverse[a] = static_cast<Index>(b);
          break;
        }
  } else if (s.backend == Backend::pc) {
    const std::size_t n = s.degree;
    for (std::size_t x = 0; x < order; ++x) {
      Index cur = static_cast<Index>(x);
      std::size_t inv = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint32_t c = s.elements[cur].data[k];
        const std::uint32_t b = (s.rel_orders[k] - c) % s.rel_orders[k];
        for (std::uint32_t t = 0; t < b; ++t) cur = s.right_gen[std::size_t{cur} * n + k];
        inv += b * s.strides[k];
      }
      if (cur != 0) throw InternalError("pc inverse computation failed");
      s.inverse[x] = static_cast<Index>(inv);
    }
  } else {
    for (std::size_t a = 0; a < order; ++a) {
      const auto& g = s.elements[a].data;
      Element h{Backend::permutation, std::vector<std::uint32_t>(g.size())};
      for (std::size_t i = 0; i < g.size(); ++i) h.data[g[i]] = static_cast<std::uint32_t>(i);
      s.inverse[a] = s.lookup.at(h);
    }
  }
}

/// Order of g in G: least m >= 1 with g^m = 1.
inline unsigned element_order(const Element& g, const Group& G) { return G.element_order(G.index_of(g)); }
inline std::uint64_t exponent(const Group& G) { return G.exponent(); }
inline Element multiply(const Element& g, const Element& h, const Group& G) { return G.multiply(g, h); }

}  // namespace pgzero
