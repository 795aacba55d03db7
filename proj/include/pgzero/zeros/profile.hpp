#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pgzero/chartab/dixon.hpp"
#include "pgzero/chartab/verify.hpp"
#include "pgzero/errors.hpp"
#include "pgzero/grp/element_set.hpp"
#include "pgzero/util/parallel.hpp"

namespace pgzero {

using Rational = boost::multiprecision::cpp_rational;

/// Vanishing data of one irreducible character.
struct ZeroProfile {
  std::size_t character = 0;
  std::vector<std::uint32_t> vanishing_classes;
  std::uint64_t zero_elements = 0;
  std::size_t zero_classes = 0;
  std::uint64_t root_of_unity_elements = 0;
  std::uint64_t miller_count = 0;
  bool faithful = false;
  std::uint64_t degree = 0;
  /// Per class: value is a root of unity.
  std::vector<bool> root_classes;
};

inline ZeroProfile zero_profile(const CharacterTable& t, std::size_t chi) {
  if (chi >= t.size()) throw DomainError("zero_profile: character " + std::to_string(chi) + " out of range");
  const auto& cd = *t.classes;
  ZeroProfile z;
  z.character = chi;
  z.degree = t.degrees[chi];
  z.faithful = t.faithful[chi];
  z.root_classes.assign(cd.count(), false);
  for (std::size_t c = 0; c < cd.count(); ++c) {
    const auto& v = t.values[chi][c];
    if (v.is_zero()) {
      z.vanishing_classes.push_back(static_cast<std::uint32_t>(c));
      z.zero_elements += cd.sizes[c];
    } else if (v.is_root_of_unity()) {
      z.root_classes[c] = true;
      z.root_of_unity_elements += cd.sizes[c];
    }
  }
  z.zero_classes = z.vanishing_classes.size();
  z.miller_count = z.zero_elements + z.root_of_unity_elements;
  if (z.degree == 1 && z.zero_elements != 0) throw InternalError("zero_profile: linear character with zeros");
  return z;
}

inline std::vector<ZeroProfile> zero_profiles(const CharacterTable& t, unsigned jobs = 1) {
  std::vector<ZeroProfile> out(t.size());
  parallel_for(t.size(), jobs, [&](std::size_t chi) { out[chi] = zero_profile(t, chi); });
  return out;
}

/// Elements where the character vanishes.
inline ElementSet zero_set(const CharacterTable& t, const ZeroProfile& z) {
  ElementSet s;
  for (auto c : z.vanishing_classes) s.insert(s.end(), t.classes->members[c].begin(), t.classes->members[c].end());
  return normalized(std::move(s));
}

/// (Z + R) / |G|
inline Rational miller_proportion(const CharacterTable& t, const ZeroProfile& z) {
  return Rational(z.miller_count) / Rational(t.group().order());
}

inline Rational miller_proportion(const CharacterTable& t, std::size_t chi) {
  return miller_proportion(t, zero_profile(t, chi));
}

/// Proportion of zero or root-of-unity values on G - N.
inline Rational miller_relative(const CharacterTable& t, const ZeroProfile& z, const ElementSet& N) {
  const Group& G = t.group();
  if (N.size() >= G.order()) throw DomainError("miller_relative: N must be a proper subgroup");
  if (!is_subgroup(G, N) || !is_normal(G, N)) throw DomainError("miller_relative: N is not a normal subgroup");
  const auto& cd = *t.classes;
  auto inside = membership_mask(G, N);
  std::vector<char> vanish(cd.count(), 0);
  for (auto c : z.vanishing_classes) vanish[c] = 1;
  std::uint64_t count = 0;
  for (Index x = 0; x < G.order(); ++x) {
    if (inside[x]) continue;
    const auto c = cd.class_of[x];
    if (vanish[c] || z.root_classes[c]) ++count;
  }
  return Rational(count) / Rational(G.order() - N.size());
}

inline Rational miller_relative(const CharacterTable& t, std::size_t chi, const ElementSet& N) {
  return miller_relative(t, zero_profile(t, chi), N);
}

/// A group with its verified table and zero profiles.
struct AnalyzedGroup {
  CharacterTable table;
  std::vector<ZeroProfile> profiles;

  const Group& group() const { return table.group(); }
  const std::string& label() const { return table.group().label(); }
};

inline AnalyzedGroup analyze(const Group& G, unsigned jobs = 1) {
  AnalyzedGroup a{character_table(G, jobs), {}};
  require_valid(a.table, jobs);
  a.profiles = zero_profiles(a.table, jobs);
  return a;
}

/// Minimum zero count over non-linear characters.
inline std::uint64_t mz(const CharacterTable& t, const std::vector<ZeroProfile>& profiles) {
  bool any = false;
  std::uint64_t best = 0;
  for (const auto& z : profiles) {
    if (z.degree == 1) continue;
    if (!any || z.zero_elements < best) best = z.zero_elements;
    any = true;
  }
  if (!any) throw DomainError("mz: " + t.group().label() + " is abelian");
  return best;
}

inline std::uint64_t mz(const AnalyzedGroup& a) { return mz(a.table, a.profiles); }
inline std::uint64_t mz(const CharacterTable& t) { return mz(t, zero_profiles(t)); }

struct MzScan {
  std::uint64_t value = 0;
  std::vector<std::string> attained_by;
  /// Abelian members, which do not take part in the minimum.
  std::vector<std::string> skipped;
};

/// Minimum of mz over the non-abelian members; labels in sorted order.
inline MzScan mz_scan(const std::vector<AnalyzedGroup>& catalog) {
  if (catalog.empty()) throw DomainError("mz_scan: empty catalog");
  MzScan s;
  bool any = false;
  for (const auto& a : catalog) {
    if (a.group().is_abelian()) {
      s.skipped.push_back(a.label());
      continue;
    }
    const auto v = mz(a);
    if (!any || v < s.value) {
      s.value = v;
      s.attained_by.clear();
    }
    any = true;
    if (v == s.value) s.attained_by.push_back(a.label());
  }
  if (!any) throw DomainError("mz_scan: catalog has no non-abelian group");
  std::sort(s.attained_by.begin(), s.attained_by.end());
  std::sort(s.skipped.begin(), s.skipped.end());
  return s;
}

}  // namespace pgzero
