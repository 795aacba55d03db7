#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgzero/errors.hpp"
#include "pgzero/structure/subgroups.hpp"
#include "pgzero/util/numeric.hpp"
#include "pgzero/zeros/profile.hpp"

namespace pgzero {

enum class Status { pass, fail, consistent, counterexample_candidate, insufficient_data, scope_limited, not_applicable };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::consistent: return "consistent";
    case Status::counterexample_candidate: return "counterexample_candidate";
    case Status::insufficient_data: return "insufficient_data";
    case Status::scope_limited: return "scope_limited";
    case Status::not_applicable: return "not_applicable";
  }
  return "?";
}

enum class Statement { thmA, thmB, thmOdd, lemC2, rel, corMS, con3max, conMZ, thmC, millerRelative };

inline const char* to_string(Statement s) {
  switch (s) {
    case Statement::thmA: return "thmA";
    case Statement::thmB: return "thmB";
    case Statement::thmOdd: return "thmOdd";
    case Statement::lemC2: return "lemC2";
    case Statement::rel: return "rel";
    case Statement::corMS: return "corMS";
    case Statement::con3max: return "con3max";
    case Statement::conMZ: return "conMZ";
    case Statement::thmC: return "thmC";
    case Statement::millerRelative: return "millerRelative";
  }
  return "?";
}

/// Accepts the report ids plus "miller" for millerRelative.
inline Statement parse_statement(const std::string& s) {
  static const std::map<std::string, Statement> names{
      {"thmA", Statement::thmA},   {"thmB", Statement::thmB},       {"thmOdd", Statement::thmOdd},
      {"lemC2", Statement::lemC2}, {"rel", Statement::rel},         {"corMS", Statement::corMS},
      {"con3max", Statement::con3max}, {"conMZ", Statement::conMZ}, {"thmC", Statement::thmC},
      {"miller", Statement::millerRelative}, {"millerRelative", Statement::millerRelative}};
  auto it = names.find(s);
  if (it == names.end()) throw InputError("unknown statement '" + s + "'");
  return it->second;
}

struct VerificationReport {
  Statement statement = Statement::thmB;
  std::string group;
  Status status = Status::pass;
  /// Ordered key/value witness data.
  std::vector<std::pair<std::string, std::string>> witness;
  std::vector<std::string> notes;

  bool failed() const { return status == Status::fail || status == Status::counterexample_candidate; }
  void add(std::string key, std::string value) { witness.emplace_back(std::move(key), std::move(value)); }
  template <class T>
  void add(std::string key, const T& value) {
    if constexpr (std::is_same_v<T, bool>)
      witness.emplace_back(std::move(key), value ? "true" : "false");
    else if constexpr (std::is_arithmetic_v<T>)
      witness.emplace_back(std::move(key), std::to_string(value));
    else
      witness.emplace_back(std::move(key), value.str());
  }
};

/// p^n - p^{n-1} + p^2 - p
inline std::uint64_t zero_bound(std::uint64_t p, unsigned n) {
  if (n < 2) throw DomainError("zero_bound: n must be at least 2");
  return ipow(p, n) - ipow(p, n - 1) + p * p - p;
}

/// Smallest prime not dividing p - 1.
inline std::uint64_t smallest_prime_not_dividing(std::uint64_t m) {
  for (std::uint64_t r = 2;; ++r)
    if (is_prime(r) && m % r != 0) return r;
}

namespace detail {

inline PrimePower require_p_group(const Group& G, const char* who) {
  auto pp = as_prime_power(G.order());
  if (!pp) throw DomainError(std::string(who) + ": " + G.label() + " is not a p-group");
  return *pp;
}

inline std::string set_string(const std::vector<std::uint32_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

inline std::string list_string(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

inline bool attains(const AnalyzedGroup& a, std::uint64_t value) {
  for (const auto& z : a.profiles)
    if (z.degree > 1 && z.zero_elements == value) return true;
  return false;
}

struct MaximalClassData {
  bool maximal_class = false;
  std::vector<ElementSet> abelian_maximal;
};

inline MaximalClassData maximal_class_data(const AnalyzedGroup& a, std::uint64_t p) {
  MaximalClassData m;
  if (a.group().is_abelian()) return m;
  m.maximal_class = is_maximal_class(a.group(), *a.table.classes, p);
  if (m.maximal_class) m.abelian_maximal = abelian_maximal_subgroups(a.group());
  return m;
}

}  // namespace detail

/// Lower bound on zeros of non-linear characters of p-groups, with the
/// structure of equality witnesses: faithful, degree p, maximal class with
/// an abelian maximal subgroup U, and for n > 3 zero set (G-U) u (Z2-Z).
inline VerificationReport verify_thmB(const AnalyzedGroup& a, Statement id = Statement::thmB) {
  const Group& G = a.group();
  VerificationReport r{id, a.label()};
  const auto pp = detail::require_p_group(G, "verify_thmB");
  const std::uint64_t p = pp.prime;
  const unsigned n = pp.exponent;
  r.add("order", G.order());
  if (G.is_abelian()) {
    r.status = Status::not_applicable;
    r.notes.push_back("abelian: no non-linear characters");
    return r;
  }
  const std::uint64_t bound = zero_bound(p, n);
  r.add("bound", bound);
  std::vector<const ZeroProfile*> equality;
  for (const auto& z : a.profiles) {
    if (z.degree == 1) continue;
    if (z.zero_elements < bound) {
      r.status = Status::fail;
      r.add("char_id", z.character);
      r.add("zero_elements", z.zero_elements);
      r.notes.push_back("character below the bound");
      return r;
    }
    if (z.zero_elements == bound) equality.push_back(&z);
  }
  r.add("mz", mz(a));
  r.add("equality_witnesses", equality.size());
  if (equality.empty()) return r;

  const auto mc = detail::maximal_class_data(a, p);
  std::optional<CentralSeriesData> series;
  for (const auto* z : equality) {
    auto fail = [&](const std::string& what) {
      r.status = Status::fail;
      r.add("char_id", z->character);
      r.add("zero_elements", z->zero_elements);
      r.notes.push_back("equality witness " + what);
    };
    if (!z->faithful) return fail("is not faithful"), r;
    if (z->degree != p) return fail("has degree " + std::to_string(z->degree)), r;
    if (!mc.maximal_class) return fail("in a group not of maximal class"), r;
    if (mc.abelian_maximal.empty()) return fail("in a group without abelian maximal subgroup"), r;
    if (n > 3) {
      if (!series) series = central_series(G);
      const ElementSet zeros = zero_set(a.table, *z);
      const ElementSet outer = set_difference(series->second_center, series->center);
      bool matched = false;
      for (const auto& U : mc.abelian_maximal) {
        if (set_union(set_difference(all_elements(G), U), outer) == zeros) {
          matched = true;
          break;
        }
      }
      if (!matched) return fail("has zero set not of the form (G-U) u (Z2-Z)"), r;
    }
  }
  r.add("maximal_class", true);
  r.add("abelian_maximal_subgroups", mc.abelian_maximal.size());
  return r;
}

/// Class-2 groups: non-linear characters vanish on at least p^n - p^{n-2}.
inline VerificationReport verify_lemC2(const AnalyzedGroup& a) {
  const Group& G = a.group();
  VerificationReport r{Statement::lemC2, a.label()};
  const auto pp = detail::require_p_group(G, "verify_lemC2");
  const auto cls = nilpotency_class(G);
  r.add("order", G.order());
  r.add("nilpotency_class", cls ? *cls : 0u);
  if (!cls || *cls != 2) {
    r.status = Status::not_applicable;
    r.notes.push_back("nilpotency class is not 2");
    return r;
  }
  const std::uint64_t bound = ipow(pp.prime, pp.exponent) - ipow(pp.prime, pp.exponent - 2);
  r.add("bound", bound);
  for (const auto& z : a.profiles) {
    if (z.degree == 1 || z.zero_elements >= bound) continue;
    r.status = Status::fail;
    r.add("char_id", z.character);
    r.add("zero_elements", z.zero_elements);
    return r;
  }
  r.add("mz", mz(a));
  return r;
}

/// Faithful characters: zero count equals the bound iff exactly p^2 - 1
/// classes vanish.
inline VerificationReport verify_rel(const AnalyzedGroup& a) {
  const Group& G = a.group();
  VerificationReport r{Statement::rel, a.label()};
  const auto pp = detail::require_p_group(G, "verify_rel");
  r.add("order", G.order());
  if (G.is_abelian()) {
    r.status = Status::not_applicable;
    r.notes.push_back("abelian group");
    return r;
  }
  const std::uint64_t p = pp.prime;
  const std::uint64_t bound = zero_bound(p, pp.exponent);
  std::size_t faithful = 0, both = 0;
  for (const auto& z : a.profiles) {
    if (!z.faithful) continue;
    ++faithful;
    const bool lhs = z.zero_elements == bound;
    const bool rhs = z.zero_classes == p * p - 1;
    both += lhs && rhs;
    if (lhs != rhs) {
      r.status = Status::fail;
      r.add("char_id", z.character);
      r.add("zero_elements", z.zero_elements);
      r.add("zero_classes", z.zero_classes);
      r.add("bound", bound);
      return r;
    }
  }
  r.add("faithful_characters", faithful);
  r.add("attaining", both);
  if (faithful == 0) r.notes.push_back("no faithful character; holds vacuously");
  return r;
}

/// Characters vanishing on at least half of G whenever G has a Sylow tower.
inline VerificationReport verify_thmC(const AnalyzedGroup& a) {
  VerificationReport r{Statement::thmC, a.label()};
  const auto tower = has_sylow_tower(a.group());
  r.add("sylow_tower", tower.exists);
  if (!tower.exists) {
    r.status = Status::not_applicable;
    r.notes.push_back("no Sylow tower");
    return r;
  }
  Rational worst = 1;
  std::size_t worst_char = 0;
  for (const auto& z : a.profiles) {
    const Rational q = miller_proportion(a.table, z);
    if (q < worst) {
      worst = q;
      worst_char = z.character;
    }
  }
  r.add("min_proportion", worst);
  r.add("char_id", worst_char);
  if (worst < Rational(1, 2)) r.status = Status::fail;
  return r;
}

/// Proportion of zero or root-of-unity values outside every proper normal
/// subgroup, for every irreducible character. An observation, not a theorem,
/// so shortfalls are counterexample candidates.
inline VerificationReport verify_miller_relative(const AnalyzedGroup& a, std::size_t candidate_limit = 100'000) {
  const Group& G = a.group();
  VerificationReport r{Statement::millerRelative, a.label()};
  std::vector<ElementSet> normals;
  try {
    normals = normal_subgroups(G, *a.table.classes, candidate_limit);
  } catch (const PartialResultError& e) {
    normals = e.partial();
    r.notes.push_back("normal subgroup enumeration truncated; partial scan");
  }
  Rational worst = 1;
  std::size_t checked = 0;
  for (const auto& N : normals) {
    if (N.size() == G.order()) continue;
    for (const auto& z : a.profiles) {
      const Rational q = miller_relative(a.table, z, N);
      ++checked;
      if (q < worst) worst = q;
      if (q < Rational(1, 2)) {
        r.status = Status::counterexample_candidate;
        r.add("char_id", z.character);
        r.add("normal_subgroup_order", N.size());
        r.add("proportion", q);
        return r;
      }
    }
  }
  r.status = r.notes.empty() ? Status::consistent : Status::scope_limited;
  r.add("pairs_checked", checked);
  r.add("min_proportion", worst);
  return r;
}

/// Over a catalog of 2-groups: some character vanishes at exactly
/// 2^{n-1} + 2 elements iff the group has maximal class.
inline VerificationReport verify_thmA(const std::vector<AnalyzedGroup>& catalog) {
  VerificationReport r{Statement::thmA, "catalog"};
  if (catalog.empty()) {
    r.status = Status::insufficient_data;
    r.notes.push_back("empty catalog");
    return r;
  }
  std::size_t attaining = 0;
  for (const auto& a : catalog) {
    const auto pp = detail::require_p_group(a.group(), "verify_thmA");
    if (pp.prime != 2) throw DomainError("verify_thmA: " + a.label() + " is not a 2-group");
    if (pp.exponent < 3) continue;
    const std::uint64_t target = ipow(2, pp.exponent - 1) + 2;
    const bool att = detail::attains(a, target);
    const bool mc = !a.group().is_abelian() && is_maximal_class(a.group(), *a.table.classes, 2);
    attaining += att;
    if (att != mc) {
      r.status = Status::fail;
      r.group = a.label();
      r.add("order", a.group().order());
      r.add("target", target);
      r.add("attains", att);
      r.add("maximal_class", mc);
      return r;
    }
  }
  if (catalog.size() == 1) r.group = catalog[0].label();
  r.add("groups", catalog.size());
  r.add("attaining", attaining);
  r.notes.push_back("converse checked only over the " + std::to_string(catalog.size()) + " supplied groups");
  return r;
}

/// Over a catalog of p-groups, p > 3: a character attaining the bound forces
/// |G| <= p^{r+1} with r the smallest prime not dividing p - 1.
inline VerificationReport verify_corMS(const std::vector<AnalyzedGroup>& catalog, std::uint64_t p) {
  VerificationReport r{Statement::corMS, "catalog"};
  if (p <= 3 || !is_prime(p)) throw DomainError("verify_corMS: p must be a prime greater than 3");
  const std::uint64_t rr = smallest_prime_not_dividing(p - 1);
  const unsigned exponent = static_cast<unsigned>(rr + 1);
  r.add("p", p);
  r.add("r", rr);
  r.add("order_bound", "p^" + std::to_string(exponent));
  if (catalog.empty()) {
    r.status = Status::scope_limited;
    r.notes.push_back("no catalog supplied; bound computed only");
    return r;
  }
  std::map<unsigned, std::vector<const AnalyzedGroup*>> by_n;
  for (const auto& a : catalog) {
    const auto pp = detail::require_p_group(a.group(), "verify_corMS");
    if (pp.prime != p) throw DomainError("verify_corMS: " + a.label() + " is not a " + std::to_string(p) + "-group");
    by_n[pp.exponent].push_back(&a);
  }
  for (const auto& [n, groups] : by_n) {
    if (n < 2) continue;
    const std::uint64_t bound = zero_bound(p, n);
    for (const auto* a : groups) {
      if (n > exponent && detail::attains(*a, bound)) {
        r.status = Status::fail;
        r.group = a->label();
        r.add("order", a->group().order());
        r.add("attains", bound);
        return r;
      }
    }
  }
  r.add("groups", catalog.size());
  r.notes.push_back("checked over the supplied catalog only");
  r.status = Status::scope_limited;
  return r;
}

/// 3-groups: attaining 3^n - 3^{n-1} + 6 vs maximal class with an abelian
/// maximal subgroup.
inline VerificationReport verify_con3max(const std::vector<AnalyzedGroup>& catalog) {
  VerificationReport r{Statement::con3max, "catalog"};
  if (catalog.empty()) {
    r.status = Status::insufficient_data;
    r.notes.push_back("no catalog supplied");
    return r;
  }
  std::size_t agree = 0;
  std::vector<std::string> candidates;
  for (const auto& a : catalog) {
    const auto pp = detail::require_p_group(a.group(), "verify_con3max");
    if (pp.prime != 3) throw DomainError("verify_con3max: " + a.label() + " is not a 3-group");
    if (pp.exponent < 3) continue;
    const bool att = detail::attains(a, zero_bound(3, pp.exponent));
    const auto mc = detail::maximal_class_data(a, 3);
    const bool structure = mc.maximal_class && !mc.abelian_maximal.empty();
    if (att == structure)
      ++agree;
    else
      candidates.push_back(a.label() + (att ? " (attains without structure)" : " (structure without attaining)"));
  }
  r.add("groups", catalog.size());
  r.add("consistent", agree);
  if (!candidates.empty()) {
    r.status = Status::counterexample_candidate;
    r.add("candidates", detail::list_string(candidates));
  } else {
    r.status = Status::consistent;
  }
  if (catalog.size() == 1) r.group = catalog[0].label();
  return r;
}

/// Groups of one order p^n: mz(G) equals the catalog minimum iff G has
/// maximal class with an abelian maximal subgroup.
inline VerificationReport verify_conMZ(const std::vector<AnalyzedGroup>& catalog) {
  VerificationReport r{Statement::conMZ, "catalog"};
  if (catalog.empty()) {
    r.status = Status::insufficient_data;
    r.notes.push_back("no catalog supplied");
    return r;
  }
  const std::uint64_t order = catalog[0].group().order();
  const auto pp = detail::require_p_group(catalog[0].group(), "verify_conMZ");
  for (const auto& a : catalog)
    if (a.group().order() != order) throw DomainError("verify_conMZ: catalog mixes orders");
  const auto scan = mz_scan(catalog);
  r.add("order", order);
  r.add("mz", scan.value);
  r.add("attained_by", detail::list_string(scan.attained_by));
  std::vector<std::string> candidates;
  std::size_t agree = 0;
  for (const auto& a : catalog) {
    if (a.group().is_abelian()) continue;
    const bool att = mz(a) == scan.value;
    const auto mc = detail::maximal_class_data(a, pp.prime);
    const bool structure = mc.maximal_class && !mc.abelian_maximal.empty();
    if (att == structure)
      ++agree;
    else
      candidates.push_back(a.label() + (att ? " (minimum without structure)" : " (structure without minimum)"));
  }
  r.add("consistent", agree);
  if (!candidates.empty()) {
    r.status = Status::counterexample_candidate;
    r.add("candidates", detail::list_string(candidates));
  } else {
    r.status = Status::consistent;
  }
  r.notes.push_back("minimum taken over the supplied groups only");
  return r;
}

}  // namespace pgzero
