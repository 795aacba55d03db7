#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pgzero/errors.hpp"
#include "pgzero/grp/group.hpp"
#include "pgzero/util/numeric.hpp"

namespace pgzero {

/// A built-in group family with its parameters.
struct FamilySpec {
  enum class Kind {
    cyclic,
    dihedral,
    semidihedral,
    quaternion,
    extraspecial,
    elementary_abelian,
    sl2_3,
    symmetric,
    direct_product
  };

  Kind kind = Kind::cyclic;
  std::uint64_t order = 0;     // cyclic, dihedral, semidihedral, quaternion
  std::uint64_t prime = 0;     // extraspecial, elementary_abelian
  std::uint64_t exponent = 0;  // extraspecial: p or p^2
  unsigned rank = 0;           // elementary_abelian: k; symmetric: n
  std::vector<FamilySpec> factors;

  static FamilySpec cyclic_group(std::uint64_t m) { return {Kind::cyclic, m}; }
  static FamilySpec dihedral_group(std::uint64_t m) { return {Kind::dihedral, m}; }
  static FamilySpec semidihedral_group(std::uint64_t m) { return {Kind::semidihedral, m}; }
  static FamilySpec quaternion_group(std::uint64_t m) { return {Kind::quaternion, m}; }
  static FamilySpec extraspecial_group(std::uint64_t p, std::uint64_t exp) {
    return {Kind::extraspecial, 0, p, exp};
  }
  static FamilySpec elementary_abelian_group(std::uint64_t p, unsigned k) {
    return {Kind::elementary_abelian, 0, p, 0, k};
  }
  static FamilySpec sl2_3_group() { return {Kind::sl2_3}; }
  static FamilySpec symmetric_group(unsigned n) { return {Kind::symmetric, 0, 0, 0, n}; }
  static FamilySpec product(std::vector<FamilySpec> fs) {
    FamilySpec s{Kind::direct_product};
    s.factors = std::move(fs);
    return s;
  }

  /// Canonical spelling, e.g. "dihedral:16", "extraspecial:5:exp25",
  /// "product:cyclic:2,dihedral:8".
  std::string to_string() const {
    switch (kind) {
      case Kind::cyclic: return "cyclic:" + std::to_string(order);
      case Kind::dihedral: return "dihedral:" + std::to_string(order);
      case Kind::semidihedral: return "semidihedral:" + std::to_string(order);
      case Kind::quaternion: return "quaternion:" + std::to_string(order);
      case Kind::extraspecial:
        return "extraspecial:" + std::to_string(prime) + ":exp" + std::to_string(exponent);
      case Kind::elementary_abelian: return "elemab:" + std::to_string(prime) + ":" + std::to_string(rank);
      case Kind::sl2_3: return "sl23";
      case Kind::symmetric: return "symmetric:" + std::to_string(rank);
      case Kind::direct_product: {
        std::string s = "product:";
        for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "," : "") + factors[i].to_string();
        return s;
      }
    }
    return {};
  }

  static FamilySpec parse(std::string_view text);
};

namespace detail {

inline std::uint64_t parse_uint(std::string_view s, std::string_view context) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw DomainError("group spec '" + std::string(context) + "': expected an integer, got '" + std::string(s) + "'");
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

inline unsigned log2_exact(std::uint64_t m) {
  if (m == 0 || (m & (m - 1)) != 0) return 0;
  unsigned n = 0;
  while ((std::uint64_t{1} << n) < m) ++n;
  return n;
}

}  // namespace detail

inline FamilySpec FamilySpec::parse(std::string_view text) {
  if (text.rfind("product:", 0) == 0) {
    std::vector<FamilySpec> fs;
    for (auto part : detail::split(text.substr(8), ',')) fs.push_back(parse(part));
    if (fs.empty()) throw DomainError("group spec '" + std::string(text) + "': empty product");
    return product(std::move(fs));
  }
  auto parts = detail::split(text, ':');
  const auto& head = parts[0];
  auto need = [&](std::size_t n) {
    if (parts.size() != n) throw DomainError("group spec '" + std::string(text) + "': wrong number of fields");
  };
  auto num = [&](std::size_t i) { return detail::parse_uint(parts[i], text); };
  if (head == "cyclic") return need(2), cyclic_group(num(1));
  if (head == "dihedral") return need(2), dihedral_group(num(1));
  if (head == "semidihedral") return need(2), semidihedral_group(num(1));
  if (head == "quaternion") return need(2), quaternion_group(num(1));
  if (head == "elemab") return need(3), elementary_abelian_group(num(1), static_cast<unsigned>(num(2)));
  if (head == "sl23") return need(1), sl2_3_group();
  if (head == "symmetric") return need(2), symmetric_group(static_cast<unsigned>(num(1)));
  if (head == "extraspecial") {
    need(3);
    if (parts[2].rfind("exp", 0) != 0)
      throw DomainError("group spec '" + std::string(text) + "': expected exp<p> or exp<p^2>");
    return extraspecial_group(num(1), detail::parse_uint(parts[2].substr(3), text));
  }
  throw DomainError("unknown group family '" + std::string(head) + "'");
}

namespace detail {

/// Maximal-class 2-groups <x, g> with x of order m = 2^{n-1}, x^g = x^i and
/// g^2 = x^c. Dihedral and semidihedral act on Z/m by t -> t+1 and t -> i*t;
/// the quaternion group has no faithful action on m points and uses the
/// regular action on 2m points.
inline Group maximal_class_2group(std::uint64_t m, std::uint64_t i, bool quaternion, std::string label) {
  if (!quaternion) {
    std::vector<std::uint32_t> x(m), g(m);
    for (std::uint64_t t = 0; t < m; ++t) {
      x[t] = static_cast<std::uint32_t>((t + 1) % m);
      g[t] = static_cast<std::uint32_t>((i * t) % m);
    }
    return Group::from_permutation_generators({make_permutation(x), make_permutation(g)}, std::move(label));
  }
  const std::uint64_t c = m / 2;
  auto point = [m](std::uint64_t a, std::uint64_t eps) { return static_cast<std::uint32_t>(eps * m + a); };
  // (a, e)(b, d) = (a + i^e b + [e = d = 1] c, e xor d)
  auto right_mult = [&](std::uint64_t b, std::uint64_t d) {
    std::vector<std::uint32_t> img(2 * m);
    for (std::uint64_t eps = 0; eps < 2; ++eps)
      for (std::uint64_t a = 0; a < m; ++a) {
        std::uint64_t twisted = eps ? (i * b) % m : b;
        std::uint64_t na = (a + twisted + (eps && d ? c : 0)) % m;
        img[point(a, eps)] = point(na, eps ^ d);
      }
    return make_permutation(std::move(img));
  };
  return Group::from_permutation_generators({right_mult(1, 0), right_mult(0, 1)}, std::move(label));
}

inline PcPresentation extraspecial_presentation(std::uint64_t p, std::uint64_t exp) {
  PcPresentation pres;
  pres.prime = p;
  pres.ngens = 3;
  pres.rel_orders = {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p)};
  pres.commutators[{1, 0}] = {0, 0, 1};
  if (exp == p * p) pres.powers[0] = {0, 0, 1};
  pres.label = "extraspecial:" + std::to_string(p) + ":exp" + std::to_string(exp);
  return pres;
}

/// Right regular representation of a group as permutations of its indices.
inline std::vector<Element> regular_generators(const Group& H) {
  std::vector<Element> out;
  for (auto h : H.generators()) {
    std::vector<std::uint32_t> img(H.order());
    for (Index x = 0; x < H.order(); ++x) img[x] = H.mul(x, h);
    out.push_back(make_permutation(std::move(img)));
  }
  return out;
}

}  // namespace detail

Group build_family(const FamilySpec& spec);

inline Group direct_product(const std::vector<Group>& factors, std::string label) {
  bool all_pc = !factors.empty();
  for (const auto& f : factors) all_pc = all_pc && f.backend() == Backend::pc;
  if (all_pc) {
    PcPresentation pres;
    std::size_t offset = 0;
    for (const auto& f : factors) pres.ngens += f.presentation()->ngens;
    for (const auto& f : factors) {
      const auto& fp = *f.presentation();
      auto shift = [&](const ExponentVector& w) {
        ExponentVector v(pres.ngens, 0);
        for (std::size_t k = 0; k < w.size(); ++k) v[offset + k] = w[k];
        return v;
      };
      pres.rel_orders.insert(pres.rel_orders.end(), fp.rel_orders.begin(), fp.rel_orders.end());
      for (const auto& [i, w] : fp.powers) pres.powers[offset + i] = shift(w);
      for (const auto& [key, w] : fp.commutators) pres.commutators[{offset + key.first, offset + key.second}] = shift(w);
      if (pres.prime == 0) pres.prime = fp.prime;
      else if (pres.prime != fp.prime) pres.prime = 0;
      offset += fp.ngens;
    }
    pres.label = std::move(label);
    return Group::from_pc(pres);
  }
  std::vector<std::vector<Element>> blocks;
  std::size_t degree = 0;
  for (const auto& f : factors) {
    std::vector<Element> gens;
    if (f.backend() == Backend::pc) {
      gens = detail::regular_generators(f);
    } else {
      for (auto g : f.generators()) gens.push_back(f.element(g));
    }
    degree += gens.empty() ? f.degree() : gens[0].data.size();
    blocks.push_back(std::move(gens));
  }
  std::vector<Element> gens;
  std::size_t offset = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::size_t block_degree = blocks[b].empty() ? factors[b].degree() : blocks[b][0].data.size();
    for (const auto& g : blocks[b]) {
      Element e = identity_permutation(degree);
      for (std::size_t t = 0; t < g.data.size(); ++t) e.data[offset + t] = static_cast<std::uint32_t>(offset + g.data[t]);
      gens.push_back(std::move(e));
    }
    offset += block_degree;
  }
  if (gens.empty()) gens.push_back(identity_permutation(degree));
  return Group::from_permutation_generators(gens, std::move(label));
}

inline Group build_family(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  const std::string label = spec.to_string();
  switch (spec.kind) {
    case Kind::cyclic: {
      if (spec.order < 1) throw DomainError("cyclic: order must be positive");
      std::vector<std::uint32_t> img(spec.order);
      for (std::uint64_t t = 0; t < spec.order; ++t) img[t] = static_cast<std::uint32_t>((t + 1) % spec.order);
      return Group::from_permutation_generators({make_permutation(std::move(img))}, label);
    }
    case Kind::dihedral:
    case Kind::quaternion:
    case Kind::semidihedral: {
      const unsigned n = detail::log2_exact(spec.order);
      const unsigned min_n = spec.kind == Kind::semidihedral ? 4 : 3;
      if (n < min_n)
        throw DomainError(label + ": order must be 2^n with n >= " + std::to_string(min_n));
      const std::uint64_t m = spec.order / 2;
      const std::uint64_t i = spec.kind == Kind::semidihedral ? (m / 2 - 1) : (m - 1);
      return detail::maximal_class_2group(m, i, spec.kind == Kind::quaternion, label);
    }
    case Kind::extraspecial: {
      const auto p = spec.prime;
      if (!is_prime(p) || p == 2)
        throw DomainError(label + ": prime must be odd (order 8 extraspecial groups are dihedral:8 and quaternion:8)");
      if (spec.exponent != p && spec.exponent != p * p)
        throw DomainError(label + ": exponent must be p or p^2");
      return Group::from_pc(detail::extraspecial_presentation(p, spec.exponent));
    }
    case Kind::elementary_abelian: {
      if (!is_prime(spec.prime) || spec.rank < 1) throw DomainError(label + ": need a prime and rank >= 1");
      PcPresentation pres;
      pres.prime = spec.prime;
      pres.ngens = spec.rank;
      pres.rel_orders.assign(spec.rank, static_cast<std::uint32_t>(spec.prime));
      pres.label = label;
      return Group::from_pc(pres);
    }
    case Kind::sl2_3: {
      // nonzero vectors of F_3^2, acted on by matrices from the left
      std::vector<std::pair<unsigned, unsigned>> vecs;
      for (unsigned a = 0; a < 3; ++a)
        for (unsigned b = 0; b < 3; ++b)
          if (a || b) vecs.emplace_back(a, b);
      auto index = [&](unsigned a, unsigned b) {
        for (std::size_t k = 0; k < vecs.size(); ++k)
          if (vecs[k] == std::pair{a % 3, b % 3}) return static_cast<std::uint32_t>(k);
        throw InternalError("sl2_3: vector not found");
      };
      auto act = [&](unsigned m00, unsigned m01, unsigned m10, unsigned m11) {
        std::vector<std::uint32_t> img(vecs.size());
        for (std::size_t k = 0; k < vecs.size(); ++k) {
          auto [a, b] = vecs[k];
          img[k] = index(m00 * a + m01 * b, m10 * a + m11 * b);
        }
        return make_permutation(std::move(img));
      };
      return Group::from_permutation_generators({act(1, 1, 0, 1), act(0, 2, 1, 0)}, label);
    }
    case Kind::symmetric: {
      const unsigned n = spec.rank;
      if (n < 1) throw DomainError(label + ": degree must be positive");
      if (n == 1) return Group::from_permutation_generators({identity_permutation(1)}, label);
      std::vector<std::uint32_t> cyc(n);
      for (unsigned t = 0; t < n; ++t) cyc[t] = (t + 1) % n;
      return Group::from_permutation_generators(
          {permutation_from_cycles(n, {{0, 1}}), make_permutation(std::move(cyc))}, label);
    }
    case Kind::direct_product: {
      if (spec.factors.empty()) throw DomainError("direct product needs at least one factor");
      std::vector<Group> fs;
      for (const auto& f : spec.factors) fs.push_back(build_family(f));
      return direct_product(fs, label);
    }
  }
  throw DomainError("unknown family");
}

inline Group build_from_pcp(const PcPresentation& pres) { return Group::from_pc(pres); }

}  // namespace pgzero
