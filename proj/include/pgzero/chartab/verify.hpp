#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "pgzero/chartab/table.hpp"
#include "pgzero/cyclo/cycint.hpp"
#include "pgzero/errors.hpp"
#include "pgzero/util/numeric.hpp"
#include "pgzero/util/parallel.hpp"

namespace pgzero {

struct TableCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TableReport {
  std::vector<TableCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const TableCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
    return {};
  }
};

namespace detail {

inline Integer l1_norm(const CycInt& v) {
  Integer s = 0;
  for (const auto& c : v.coeffs()) s += c < 0 ? Integer(-c) : c;
  return s;
}

/// Images of every table value under zeta -> w^t modulo q.
struct Embedding {
  std::uint64_t q;
  std::vector<std::vector<std::uint64_t>> values;      // [chi][class]
  std::vector<std::vector<std::uint64_t>> conjugates;  // complex conjugates
};

inline std::uint64_t reduce(const Integer& v, std::uint64_t q) {
  Integer r = v % q;
  if (r < 0) r += q;
  return static_cast<std::uint64_t>(r);
}

inline Embedding embed_table(const CharacterTable& t, std::uint64_t q, std::uint64_t w) {
  const std::size_t k = t.size();
  const std::size_t phi = t.values.empty() ? 0 : t.values[0][0].coeffs().size();
  std::vector<std::uint64_t> wp(phi), wc(phi);
  const std::uint64_t winv = inv_mod(w, q);
  std::uint64_t a = 1, b = 1;
  for (std::size_t i = 0; i < phi; ++i) {
    wp[i] = a;
    wc[i] = b;
    a = mul_mod(a, w, q);
    b = mul_mod(b, winv, q);
  }
  Embedding emb{q, std::vector<std::vector<std::uint64_t>>(k, std::vector<std::uint64_t>(k)),
                std::vector<std::vector<std::uint64_t>>(k, std::vector<std::uint64_t>(k))};
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) {
      const auto& co = t.values[r][c].coeffs();
      std::uint64_t x = 0, y = 0;
      for (std::size_t i = 0; i < co.size(); ++i) {
        if (co[i] == 0) continue;
        const std::uint64_t m = reduce(co[i], q);
        x = (x + mul_mod(m, wp[i], q)) % q;
        y = (y + mul_mod(m, wc[i], q)) % q;
      }
      emb.values[r][c] = x;
      emb.conjugates[r][c] = y;
    }
  return emb;
}

/// A small generating set of the unit group modulo e.
inline std::vector<std::uint64_t> unit_generators(std::uint64_t e) {
  std::vector<std::uint64_t> gens;
  std::vector<char> reached(e + 1, 0);
  std::vector<std::uint64_t> members{1 % e};
  reached[1 % e] = 1;
  for (std::uint64_t s = 2; s < e; ++s) {
    if (std::gcd(s, e) != 1 || reached[s]) continue;
    gens.push_back(s);
    for (std::size_t head = 0; head < members.size(); ++head)
      for (auto g : gens) {
        const std::uint64_t y = members[head] * g % e;
        if (!reached[y]) {
          reached[y] = 1;
          members.push_back(y);
        }
      }
  }
  return gens;
}

/// A prime q = 1 (mod e) exceeding bound.
inline std::uint64_t prime_above(std::uint64_t bound, std::uint64_t e) {
  std::uint64_t q = (bound / e + 1) * e + 1;
  while (!is_prime(q)) q += e;
  return q;
}

}  // namespace detail

/// Checks the orthogonality relations, the degree equation, integrality of
/// degrees, the class equation and the shape of the table.
///
/// Orthogonality sums live in Z[zeta_e]. They are evaluated modulo a prime
/// q = 1 (mod e) under one embedding zeta -> w. Once the rows are known to
/// be permuted by the Galois group, the same holds under every embedding, so
/// a failing sum D is divisible by q; every conjugate of D is bounded by
/// B < q, hence D = 0.
inline TableReport verify_table(const CharacterTable& t, unsigned jobs = 1) {
  TableReport rep;
  const auto& cd = *t.classes;
  const std::size_t k = cd.count();
  const std::uint64_t order = t.group().order();
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  add("shape", t.values.size() == k && t.degrees.size() == k,
      std::to_string(t.values.size()) + " rows for " + std::to_string(k) + " classes");
  if (t.values.size() != k || t.degrees.size() != k) return rep;
  for (const auto& row : t.values)
    if (row.size() != k || row[0].conductor() != t.exponent) {
      add("row_shape", false, "row length or conductor mismatch");
      return rep;
    }

  bool trivial = true;
  for (const auto& v : t.values[0]) trivial = trivial && v == CycInt::integer(t.exponent, 1);
  add("trivial_first", trivial);

  bool integral = true;
  Integer deg_sum = 0;
  std::string bad_degree;
  for (std::size_t r = 0; r < k; ++r) {
    auto d = t.values[r][0].as_integer();
    if (!d || *d != Integer(t.degrees[r]) || *d <= 0) {
      integral = false;
      if (bad_degree.empty()) bad_degree = "row " + std::to_string(r);
    }
    deg_sum += Integer(t.degrees[r]) * t.degrees[r];
  }
  add("integral_degrees", integral, bad_degree);
  add("degree_sum", deg_sum == Integer(order), "sum of squared degrees " + deg_sum.str() + " vs " + std::to_string(order));

  std::uint64_t class_sum = 0;
  bool sizes_divide = true;
  for (std::size_t c = 0; c < k; ++c) {
    class_sum += cd.sizes[c];
    sizes_divide = sizes_divide && order % cd.sizes[c] == 0 && cd.sizes[c] * cd.centralizer_orders[c] == order;
  }
  add("class_equation", class_sum == order && sizes_divide);

  // bounds for the orthogonality sums
  std::vector<Integer> norms(k * k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) norms[r * k + c] = detail::l1_norm(t.values[r][c]);
  Integer bound = order;
  for (std::size_t r = 0; r < k; ++r) {
    Integer s = 0;
    for (std::size_t c = 0; c < k; ++c) s += Integer(cd.sizes[c]) * norms[r * k + c] * norms[r * k + c];
    if (s > bound) bound = s;
  }
  for (std::size_t c = 0; c < k; ++c) {
    Integer s = 0;
    for (std::size_t r = 0; r < k; ++r) s += norms[r * k + c] * norms[r * k + c];
    if (s > bound) bound = s;
  }
  bound = 2 * bound + 1;
  if (bound > (Integer(1) << 50)) {
    add("first_orthogonality", false, "value bound too large for modular check");
    add("second_orthogonality", false, "value bound too large for modular check");
    return rep;
  }
  const std::uint64_t e = t.exponent;
  const std::uint64_t q = detail::prime_above(std::max<std::uint64_t>(static_cast<std::uint64_t>(bound), 1u << 20), e);
  const std::uint64_t w = pow_mod(primitive_root(q), (q - 1) / e, q);

  // Exact Galois closure: sigma_g permutes the rows for every g in a
  // generating set of (Z/e)^*. Then the Gram matrices under any embedding
  // are row/column permutations of the ones under zeta -> w.
  std::string galois_fail;
  {
    std::map<std::vector<Integer>, std::size_t> index;
    auto flatten = [&](const std::vector<CycInt>& row) {
      std::vector<Integer> flat;
      for (const auto& v : row) flat.insert(flat.end(), v.coeffs().begin(), v.coeffs().end());
      return flat;
    };
    for (std::size_t r = 0; r < k; ++r)
      if (!index.emplace(flatten(t.values[r]), r).second && galois_fail.empty())
        galois_fail = "rows " + std::to_string(index[flatten(t.values[r])]) + "," + std::to_string(r) + " coincide";
    for (auto g : detail::unit_generators(e)) {
      std::vector<std::string> fails(k);
      parallel_for(k, jobs, [&](std::size_t r) {
        std::vector<CycInt> row;
        row.reserve(k);
        for (const auto& v : t.values[r]) row.push_back(v.galois(g));
        auto it = index.find(flatten(row));
        if (it == index.end()) fails[r] = "row " + std::to_string(r) + " under zeta -> zeta^" + std::to_string(g);
      });
      for (const auto& f : fails)
        if (galois_fail.empty() && !f.empty()) galois_fail = f;
    }
  }
  add("galois_closed", galois_fail.empty(), galois_fail);

  const auto emb = detail::embed_table(t, q, w);
  std::vector<std::vector<std::uint64_t>> weighted = emb.conjugates;
  for (auto& row : weighted)
    for (std::size_t c = 0; c < k; ++c) row[c] = mul_mod(row[c], cd.sizes[c] % q, q);
  std::vector<std::string> first_fail(k), second_fail(k);
  parallel_for(k, jobs, [&](std::size_t a) {
    for (std::size_t b = 0; b < k; ++b) {
      unsigned __int128 acc = 0;
      for (std::size_t c = 0; c < k; ++c) acc += static_cast<unsigned __int128>(emb.values[a][c]) * weighted[b][c];
      const std::uint64_t want = a == b ? order % q : 0;
      if (static_cast<std::uint64_t>(acc % q) != want) {
        first_fail[a] = "rows " + std::to_string(a) + "," + std::to_string(b);
        break;
      }
    }
    for (std::size_t b = 0; b < k; ++b) {
      unsigned __int128 acc = 0;
      for (std::size_t r = 0; r < k; ++r) acc += static_cast<unsigned __int128>(emb.values[r][a]) * emb.conjugates[r][b];
      const std::uint64_t want = a == b ? cd.centralizer_orders[a] % q : 0;
      if (static_cast<std::uint64_t>(acc % q) != want) {
        second_fail[a] = "classes " + std::to_string(a) + "," + std::to_string(b);
        break;
      }
    }
  });
  std::string f1, f2;
  for (std::size_t i = 0; i < k; ++i) {
    if (f1.empty()) f1 = first_fail[i];
    if (f2.empty()) f2 = second_fail[i];
  }
  add("first_orthogonality", f1.empty(), f1);
  add("second_orthogonality", f2.empty(), f2);
  return rep;
}

/// Throws TableIntegrityError when any check fails.
inline void require_valid(const CharacterTable& t, unsigned jobs = 1) {
  auto rep = verify_table(t, jobs);
  if (!rep.passed())
    throw TableIntegrityError("character table of " + t.group().label() + " failed " + rep.first_failure());
}

}  // namespace pgzero
