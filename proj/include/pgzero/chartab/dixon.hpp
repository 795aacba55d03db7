#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "pgzero/chartab/modular.hpp"
#include "pgzero/chartab/table.hpp"
#include "pgzero/cyclo/cycint.hpp"
#include "pgzero/errors.hpp"
#include "pgzero/structure/classes.hpp"
#include "pgzero/util/numeric.hpp"
#include "pgzero/util/parallel.hpp"

namespace pgzero {

/// Class multiplication coefficients: C_i C_j = sum_k a_ijk C_k.
struct ClassAlgebraTables {
  using Row = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

  std::size_t k = 0;
  std::uint64_t order = 0;
  std::uint64_t exponent = 1;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> inverse_class;
  /// constants[i * k + j] lists (class, a_ijk) with a_ijk > 0, by class.
  std::vector<Row> constants;
  std::uint64_t ell = 0;
  std::uint64_t z = 0;

  const Row& row(std::size_t i, std::size_t j) const { return constants[i * k + j]; }

  std::uint64_t coefficient(std::size_t i, std::size_t j, std::size_t c) const {
    for (auto [cls, a] : row(i, j))
      if (cls == c) return a;
    return 0;
  }
};

/// For each (i, j): tally the class of x * rep_j over x in C_i; then
/// a_ijk = count_k * |C_j| / |C_k|. Every row is checked against
/// sum_k a_ijk |C_k| = |C_i| |C_j|, and the table against commutativity.
inline ClassAlgebraTables structure_constants(const ClassData& cd, unsigned jobs = 1) {
  const Group& G = cd.group;
  ClassAlgebraTables t;
  t.k = cd.count();
  t.order = G.order();
  t.exponent = cd.exponent;
  t.sizes = cd.sizes;
  t.inverse_class = cd.inverse_class;
  t.constants.resize(t.k * t.k);
  const std::size_t k = t.k;
  parallel_for(k, jobs, [&](std::size_t i) {
    std::vector<std::uint64_t> tally(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      std::fill(tally.begin(), tally.end(), 0);
      const Index rep = cd.representatives[j];
      for (auto x : cd.members[i]) ++tally[cd.class_of[G.mul(x, rep)]];
      auto& row = t.constants[i * k + j];
      std::uint64_t check = 0;
      for (std::size_t c = 0; c < k; ++c) {
        if (tally[c] == 0) continue;
        const std::uint64_t num = tally[c] * cd.sizes[j];
        if (num % cd.sizes[c] != 0)
          throw InternalError("structure_constants: non-integral coefficient (class map inconsistent)");
        row.emplace_back(static_cast<std::uint32_t>(c), num / cd.sizes[c]);
        check += num;
      }
      if (check != cd.sizes[i] * cd.sizes[j])
        throw InternalError("structure_constants: row sum invariant violated for (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
    }
  });
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (t.constants[i * k + j] != t.constants[j * k + i])
        throw InternalError("structure_constants: class algebra not commutative");
  auto mp = choose_prime(t.order, t.exponent);
  t.ell = mp.ell;
  t.z = mp.z;
  return t;
}

/// An irreducible character reduced modulo ell.
struct ModularCharacter {
  std::uint64_t degree = 0;
  /// Central character omega_i, normalised so omega_0 = 1.
  std::vector<std::uint64_t> central;
  /// chi(g_i) mod ell.
  std::vector<std::uint64_t> values;
};

namespace detail {

struct EigenSpace {
  /// Basis rows in reduced row echelon form.
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::size_t> pivots;
};

inline EigenSpace make_space(std::vector<std::vector<std::uint64_t>> vecs, std::size_t k, std::uint64_t ell) {
  ModMatrix m(vecs.size(), k, ell);
  for (std::size_t r = 0; r < vecs.size(); ++r)
    for (std::size_t c = 0; c < k; ++c) m(r, c) = vecs[r][c];
  EigenSpace s;
  s.pivots = m.rref();
  for (std::size_t r = 0; r < s.pivots.size(); ++r) {
    std::vector<std::uint64_t> row(k);
    for (std::size_t c = 0; c < k; ++c) row[c] = m(r, c);
    s.basis.push_back(std::move(row));
  }
  return s;
}

/// (M_j v)_i = sum_c a_jic v_c
inline std::vector<std::uint64_t> apply_class_matrix(const ClassAlgebraTables& t, std::size_t j,
                                                     const std::vector<std::uint64_t>& v) {
  std::vector<std::uint64_t> out(t.k, 0);
  for (std::size_t i = 0; i < t.k; ++i) {
    unsigned __int128 acc = 0;
    for (auto [c, a] : t.row(j, i)) acc += static_cast<unsigned __int128>(a % t.ell) * v[c];
    out[i] = static_cast<std::uint64_t>(acc % t.ell);
  }
  return out;
}

/// Splits a common invariant subspace by the eigenspaces of M_j.
inline std::vector<EigenSpace> split_space(const ClassAlgebraTables& t, std::size_t j, const EigenSpace& s) {
  const std::size_t m = s.basis.size();
  const std::uint64_t ell = t.ell;
  ModMatrix a(m, m, ell);
  for (std::size_t col = 0; col < m; ++col) {
    auto image = apply_class_matrix(t, j, s.basis[col]);
    for (std::size_t r = 0; r < m; ++r) a(r, col) = image[s.pivots[r]];
  }
  auto eigenvalues = roots_mod(a.charpoly(), ell);
  if (eigenvalues.size() == 1) return {s};
  std::vector<EigenSpace> out;
  std::size_t total = 0;
  for (auto lambda : eigenvalues) {
    ModMatrix shifted = a;
    for (std::size_t r = 0; r < m; ++r) shifted(r, r) = (shifted(r, r) + ell - lambda) % ell;
    auto null = shifted.nullspace();
    std::vector<std::vector<std::uint64_t>> vecs;
    for (const auto& coords : null) {
      std::vector<std::uint64_t> v(t.k, 0);
      for (std::size_t b = 0; b < m; ++b) {
        if (coords[b] == 0) continue;
        for (std::size_t c = 0; c < t.k; ++c) v[c] = (v[c] + mul_mod(coords[b], s.basis[b][c], ell)) % ell;
      }
      vecs.push_back(std::move(v));
    }
    total += vecs.size();
    out.push_back(make_space(std::move(vecs), t.k, ell));
  }
  if (total != m) throw InternalError("modular_characters: class matrix not diagonalisable modulo ell");
  return out;
}

/// F[s] = sum_j f[j] w^{js} for n = f.size(), where powers[t] = w^t and w
/// has order n. Mixed-radix Cooley-Tukey over the prime factors of n.
inline std::vector<std::uint64_t> dft_mod(const std::vector<std::uint64_t>& f, const std::vector<std::uint64_t>& powers,
                                          std::uint64_t ell, std::size_t stride = 1) {
  const std::size_t n = f.size();
  if (n == 1) return f;
  std::size_t p = 2;
  while (n % p != 0) ++p;
  const std::size_t m = n / p;
  if (m == 1) {
    std::vector<std::uint64_t> out(n);
    for (std::size_t s = 0; s < n; ++s) {
      unsigned __int128 acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += static_cast<unsigned __int128>(f[j]) * powers[(j * s % n) * stride];
      out[s] = static_cast<std::uint64_t>(acc % ell);
    }
    return out;
  }
  std::vector<std::vector<std::uint64_t>> sub(p);
  for (std::size_t r = 0; r < p; ++r) {
    std::vector<std::uint64_t> part(m);
    for (std::size_t j = 0; j < m; ++j) part[j] = f[p * j + r];
    sub[r] = dft_mod(part, powers, ell, stride * p);
  }
  std::vector<std::uint64_t> out(n);
  for (std::size_t s = 0; s < n; ++s) {
    unsigned __int128 acc = 0;
    for (std::size_t r = 0; r < p; ++r) acc += static_cast<unsigned __int128>(sub[r][s % m]) * powers[(r * s % n) * stride];
    out[s] = static_cast<std::uint64_t>(acc % ell);
  }
  return out;
}

}  // namespace detail

/// Common eigenvectors of the class matrices over F_ell by sequential
/// refinement over M_1, M_2, ...; each yields one irreducible character.
inline std::vector<ModularCharacter> modular_characters(const ClassAlgebraTables& t) {
  const std::size_t k = t.k;
  const std::uint64_t ell = t.ell;
  std::vector<std::vector<std::uint64_t>> identity(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) identity[i][i] = 1;
  std::vector<detail::EigenSpace> spaces{detail::make_space(std::move(identity), k, ell)};
  for (std::size_t j = 1; j < k; ++j) {
    bool all_split = true;
    for (const auto& s : spaces) all_split = all_split && s.basis.size() == 1;
    if (all_split) break;
    std::vector<detail::EigenSpace> next;
    for (const auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& piece : detail::split_space(t, j, s)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw InternalError("modular_characters: refinement did not split into 1-dimensional spaces");
  std::vector<ModularCharacter> out;
  for (const auto& s : spaces) {
    const auto& w = s.basis[0];
    if (w[0] != 1) throw InternalError("modular_characters: eigenvector vanishes at the identity class");
    ModularCharacter mc;
    mc.central = w;
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t term = mul_mod(mul_mod(w[i], w[t.inverse_class[i]], ell), inv_mod(t.sizes[i] % ell, ell), ell);
      sum = (sum + term) % ell;
    }
    if (sum == 0) throw InternalError("modular_characters: degenerate norm");
    const std::uint64_t d2 = mul_mod(t.order % ell, inv_mod(sum, ell), ell);
    auto root = sqrt_mod(d2, ell);
    if (!root) throw InternalError("modular_characters: squared degree has no square root modulo ell");
    std::uint64_t d = *root;
    if (2 * d > ell) d = ell - d;
    if (d == 0 || d * d > t.order || t.order % d != 0)
      throw InternalError("modular_characters: recovered degree " + std::to_string(d) + " is impossible");
    mc.degree = d;
    mc.values.resize(k);
    for (std::size_t i = 0; i < k; ++i)
      mc.values[i] = mul_mod(mul_mod(d, w[i], ell), inv_mod(t.sizes[i] % ell, ell), ell);
    out.push_back(std::move(mc));
  }
  return out;
}

/// Recovers exact values: for class i of element order o,
///   m_r = o^{-1} sum_{j<o} chi(g_i^j) z_o^{-jr}   (mod ell),
/// then chi(g_i) = sum_r m_r zeta_o^r. Rows are sorted (trivial first, then
/// by degree and value encoding); kernels and faithfulness are filled in.
inline CharacterTable lift_table(const std::vector<ModularCharacter>& modular, std::shared_ptr<const ClassData> cd,
                                 const ClassAlgebraTables& t, unsigned jobs = 1) {
  const std::size_t k = cd->count();
  const std::uint64_t e = cd->exponent;
  const std::uint64_t ell = t.ell;
  if (e != t.exponent) throw InternalError("lift_table: exponent mismatch");
  if (modular.size() != k) throw InternalError("lift_table: wrong number of characters");
  if (e > detail::kMaxConductor) throw DomainError("lift_table: exponent too large");
  const auto conductor = static_cast<unsigned>(e);

  // per class: order, inverse roots z_o^{-t}, inverse of o, power classes
  struct ClassPlan {
    std::uint64_t order;
    std::vector<std::uint64_t> zinv;
    std::uint64_t order_inv;
    std::vector<std::uint32_t> powers;
  };
  std::vector<ClassPlan> plans(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto& p = plans[i];
    p.order = cd->rep_orders[i];
    const std::uint64_t zo = pow_mod(t.z, e / p.order, ell);
    const std::uint64_t zo_inv = inv_mod(zo, ell);
    p.zinv.resize(p.order);
    std::uint64_t cur = 1;
    for (std::uint64_t s = 0; s < p.order; ++s) {
      p.zinv[s] = cur;
      cur = mul_mod(cur, zo_inv, ell);
    }
    p.order_inv = inv_mod(p.order % ell, ell);
    p.powers.resize(p.order);
    for (std::uint64_t j = 0; j < p.order; ++j) p.powers[j] = cd->power_map(j, static_cast<std::uint32_t>(i));
  }

  std::vector<std::vector<CycInt>> rows(k);
  parallel_for(k, jobs, [&](std::size_t r) {
    const auto& mc = modular[r];
    auto& row = rows[r];
    row.reserve(k);
    std::vector<std::uint64_t> f;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& p = plans[i];
      f.resize(p.order);
      for (std::uint64_t j = 0; j < p.order; ++j) f[j] = mc.values[p.powers[j]];
      auto spectrum = detail::dft_mod(f, p.zinv, ell);
      CycInt value(conductor);
      std::uint64_t total = 0;
      for (std::uint64_t s = 0; s < p.order; ++s) {
        const std::uint64_t m = mul_mod(spectrum[s], p.order_inv, ell);
        if (m == 0) continue;
        if (2 * m >= ell) throw InternalError("lift_table: multiplicity exceeds ell/2 (prime bound too small)");
        total += m;
        value.add_monomial((s * (e / p.order)) % e, Integer(m));
      }
      if (total != mc.degree) throw InternalError("lift_table: multiplicities do not sum to the degree");
      row.push_back(std::move(value));
    }
  });

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  const CycInt one = CycInt::integer(conductor, 1);
  auto is_trivial = [&](std::size_t r) {
    return std::all_of(rows[r].begin(), rows[r].end(), [&](const CycInt& v) { return v == one; });
  };
  std::vector<char> trivial(k);
  for (std::size_t r = 0; r < k; ++r) trivial[r] = is_trivial(r);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (trivial[a] != trivial[b]) return trivial[a] > trivial[b];
    if (modular[a].degree != modular[b].degree) return modular[a].degree < modular[b].degree;
    for (std::size_t i = 0; i < k; ++i) {
      int c = compare(rows[a][i], rows[b][i]);
      if (c != 0) return c < 0;
    }
    return false;
  });

  CharacterTable table;
  table.classes = cd;
  table.exponent = e;
  table.modular_prime = ell;
  for (auto r : perm) {
    const std::uint64_t d = modular[r].degree;
    const CycInt deg = CycInt::integer(conductor, Integer(d));
    if (rows[r][0] != deg) throw InternalError("lift_table: value at identity differs from degree");
    std::vector<std::uint32_t> kc;
    std::uint64_t korder = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (rows[r][i] == deg) {
        kc.push_back(static_cast<std::uint32_t>(i));
        korder += cd->sizes[i];
      }
    table.values.push_back(std::move(rows[r]));
    table.degrees.push_back(d);
    table.kernel_classes.push_back(std::move(kc));
    table.kernel_orders.push_back(korder);
    table.faithful.push_back(korder == 1);
  }
  return table;
}

/// Full pipeline: classes, class algebra, modular characters, lifting.
inline CharacterTable character_table(std::shared_ptr<const ClassData> cd, unsigned jobs = 1) {
  auto tables = structure_constants(*cd, jobs);
  auto modular = modular_characters(tables);
  return lift_table(modular, std::move(cd), tables, jobs);
}

inline CharacterTable character_table(const Group& G, unsigned jobs = 1) {
  return character_table(std::make_shared<const ClassData>(conjugacy_classes(G)), jobs);
}

}  // namespace pgzero
