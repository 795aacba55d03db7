#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgzero/pgzero.hpp"

using namespace pgzero;

namespace {

Group family(const std::string& s) { return build_family(FamilySpec::parse(s)); }
AnalyzedGroup an(const std::string& s) { return analyze(family(s)); }

std::string witness(const VerificationReport& r, const std::string& key) {
  for (const auto& [k, v] : r.witness)
    if (k == key) return v;
  return "<missing>";
}

std::size_t first_of_degree(const AnalyzedGroup& a, std::uint64_t d) {
  for (std::size_t r = 0; r < a.table.size(); ++r)
    if (a.table.degrees[r] == d) return r;
  throw std::runtime_error("no character of that degree");
}

const std::vector<std::string> kPGroups = {
    "dihedral:8",          "dihedral:16",         "semidihedral:16",     "quaternion:16",
    "dihedral:64",         "semidihedral:64",     "quaternion:64",       "extraspecial:3:exp3",
    "extraspecial:3:exp9", "extraspecial:5:exp5", "extraspecial:5:exp25", "product:cyclic:2,dihedral:8",
    "product:cyclic:3,extraspecial:3:exp3", "product:quaternion:8,cyclic:2", "elemab:3:3"};

}  // namespace

TEST(ZeroProfile, Dihedral8DegreeTwo) {
  auto a = an("dihedral:8");
  const auto& z = a.profiles[first_of_degree(a, 2)];
  EXPECT_EQ(z.zero_elements, 6u);
  EXPECT_EQ(z.zero_elements, (1u << 2) + 2);
}

TEST(ZeroProfile, Extraspecial125DegreeFive) {
  auto a = an("extraspecial:5:exp5");
  for (const auto& z : a.profiles)
    if (z.degree == 5) EXPECT_EQ(z.zero_elements, 120u);
}

TEST(ZeroProfile, TrivialCharacter) {
  for (auto spec : {"sl23", "dihedral:16", "extraspecial:3:exp9"}) {
    auto a = an(spec);
    EXPECT_EQ(a.profiles[0].zero_elements, 0u);
    EXPECT_EQ(a.profiles[0].root_of_unity_elements, a.group().order());
  }
}

TEST(ZeroProfile, MatchesNumericOracle) {
  auto specs = kPGroups;
  specs.insert(specs.end(), {"sl23", "symmetric:4", "cyclic:9"});
  for (const auto& spec : specs) {
    auto a = an(spec);
    const auto& cd = *a.table.classes;
    const auto e = a.table.exponent;
    for (std::size_t r = 0; r < a.table.size(); ++r) {
      std::uint64_t zeros = 0, roots = 0, zc = 0;
      for (std::size_t c = 0; c < cd.count(); ++c) {
        const auto v = oracle::value(a.table.values[r][c]);
        if (std::abs(v) < 1e-9) {
          zeros += cd.sizes[c];
          ++zc;
        } else if (std::abs(std::pow(v, 2.0 * static_cast<double>(e)) - 1.0) < 1e-6 && std::abs(std::abs(v) - 1) < 1e-9) {
          roots += cd.sizes[c];
        }
      }
      const auto& z = a.profiles[r];
      EXPECT_EQ(z.zero_elements, zeros) << spec << " row " << r;
      EXPECT_EQ(z.zero_classes, zc) << spec;
      EXPECT_EQ(z.root_of_unity_elements, roots) << spec << " row " << r;
      EXPECT_EQ(z.miller_count, zeros + roots);
      EXPECT_EQ(z.zero_elements, zero_set(a.table, z).size());
      if (z.degree == 1) EXPECT_EQ(z.zero_elements, 0u);
    }
  }
}

TEST(Mz, ExamplesAndErrors) {
  EXPECT_EQ(mz(an("dihedral:16")), 10u);
  EXPECT_EQ(mz(an("quaternion:8")), 6u);
  EXPECT_THROW(mz(an("elemab:3:2")), DomainError);
  EXPECT_THROW(mz_scan({}), DomainError);
}

TEST(Mz, ScanOverOrder16) {
  std::vector<AnalyzedGroup> cat;
  for (auto s : {"quaternion:16", "dihedral:16", "product:cyclic:2,dihedral:8", "semidihedral:16", "elemab:2:4"})
    cat.push_back(an(s));
  auto scan = mz_scan(cat);
  EXPECT_EQ(scan.value, 10u);
  EXPECT_EQ(scan.attained_by, (std::vector<std::string>{"dihedral:16", "quaternion:16", "semidihedral:16"}));
  EXPECT_EQ(scan.skipped, (std::vector<std::string>{"elemab:2:4"}));
}

TEST(Miller, Proportions) {
  auto d8 = an("dihedral:8");
  const auto chi = first_of_degree(d8, 2);
  EXPECT_EQ(miller_proportion(d8.table, chi), Rational(6, 8));
  EXPECT_EQ(miller_relative(d8.table, chi, center(d8.group())), Rational(1));
  EXPECT_THROW(miller_relative(d8.table, chi, all_elements(d8.group())), DomainError);
  for (Index x = 1; x < d8.group().order(); ++x) {
    ElementSet H{0, x};
    if (is_subgroup(d8.group(), H) && !is_normal(d8.group(), H)) {
      EXPECT_THROW(miller_relative(d8.table, chi, H), DomainError);
      break;
    }
  }
  auto sl = an("sl23");
  for (const auto& z : sl.profiles) {
    if (z.degree == 2) EXPECT_EQ(z.zero_elements, 6u);
    EXPECT_GE(miller_proportion(sl.table, z), Rational(1, 2));
  }
}

TEST(VerifyThmB, MaximalClassTwoGroups) {
  for (unsigned n = 3; n <= 7; ++n)
    for (auto fam : {"dihedral", "semidihedral", "quaternion"}) {
      if (n == 3 && std::string(fam) == "semidihedral") continue;
      auto r = verify_thmB(an(std::string(fam) + ":" + std::to_string(1u << n)));
      EXPECT_EQ(r.status, Status::pass) << r.group;
      EXPECT_NE(witness(r, "equality_witnesses"), "0") << r.group;
      EXPECT_EQ(witness(r, "mz"), std::to_string((1u << (n - 1)) + 2));
    }
}

TEST(VerifyThmB, Extraspecial) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    auto r = verify_thmB(an("extraspecial:" + std::to_string(p) + ":exp" + std::to_string(p)));
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_EQ(witness(r, "mz"), std::to_string(p * p * p - p));
  }
}

TEST(VerifyThmB, AbelianNotApplicable) {
  EXPECT_EQ(verify_thmB(an("elemab:2:3")).status, Status::not_applicable);
  EXPECT_THROW(verify_thmB(an("sl23")), DomainError);
}

TEST(VerifyThmB, ShortfallIsFailureWithWitness) {
  auto a = an("dihedral:16");
  const auto chi = first_of_degree(a, 2);
  a.profiles[chi].zero_elements = 9;
  auto r = verify_thmB(a);
  EXPECT_TRUE(r.failed());
  EXPECT_EQ(witness(r, "char_id"), std::to_string(chi));
  EXPECT_EQ(witness(r, "zero_elements"), "9");
}

TEST(VerifyThmA, Catalog) {
  std::vector<AnalyzedGroup> cat;
  for (auto s : {"dihedral:16", "semidihedral:16", "quaternion:16", "product:cyclic:2,dihedral:8", "quaternion:32"})
    cat.push_back(an(s));
  EXPECT_TRUE(detail::attains(cat[1], 10));
  EXPECT_TRUE(detail::attains(cat[4], 18));
  EXPECT_GT(mz(cat[3]), 10u);
  auto r = verify_thmA(cat);
  EXPECT_EQ(r.status, Status::pass);
  EXPECT_EQ(witness(r, "attaining"), "4");
  EXPECT_EQ(verify_thmA({}).status, Status::insufficient_data);
}

TEST(VerifyRel, Examples) {
  auto d16 = an("dihedral:16");
  for (const auto& z : d16.profiles)
    if (z.faithful) {
      EXPECT_EQ(z.zero_elements, 10u);
      EXPECT_EQ(z.zero_classes, 3u);
    }
  EXPECT_EQ(verify_rel(d16).status, Status::pass);
  auto h = an("extraspecial:3:exp3");
  for (const auto& z : h.profiles)
    if (z.degree == 3) {
      EXPECT_EQ(z.zero_elements, 24u);
      EXPECT_EQ(z.zero_classes, 8u);
    }
  EXPECT_EQ(verify_rel(h).status, Status::pass);
}

TEST(VerifyRel, ClassTwoOrderP4StaysAboveBound) {
  auto a = an("product:cyclic:3,extraspecial:3:exp3");
  const auto bound = zero_bound(3, 4);
  for (const auto& z : a.profiles) {
    if (z.degree == 1) continue;
    EXPECT_GE(z.zero_elements, 81u - 9u);
    EXPECT_NE(z.zero_elements, bound);
    EXPECT_NE(z.zero_classes, 8u);
  }
  EXPECT_EQ(verify_rel(a).status, Status::pass);
  EXPECT_EQ(verify_lemC2(a).status, Status::pass);
}

TEST(VerifyCorMS, SmallestPrimeNotDividing) {
  EXPECT_EQ(smallest_prime_not_dividing(4), 3u);
  EXPECT_EQ(smallest_prime_not_dividing(6), 5u);
  EXPECT_EQ(smallest_prime_not_dividing(10), 3u);
  auto r = verify_corMS({}, 5);
  EXPECT_EQ(r.status, Status::scope_limited);
  EXPECT_EQ(witness(r, "r"), "3");
  EXPECT_EQ(witness(r, "order_bound"), "p^4");
  EXPECT_EQ(witness(verify_corMS({}, 7), "order_bound"), "p^6");
  EXPECT_EQ(witness(verify_corMS({}, 11), "r"), "3");
  EXPECT_THROW(verify_corMS({}, 3), DomainError);
}

TEST(VerifyCon3max, ExtraspecialConsistentAndEmpty) {
  auto a = an("extraspecial:3:exp3");
  EXPECT_TRUE(detail::attains(a, 27 - 9 + 6));
  EXPECT_EQ(verify_con3max({a}).status, Status::consistent);
  EXPECT_EQ(verify_con3max({}).status, Status::insufficient_data);
}

TEST(VerifyConMZ, Statuses) {
  EXPECT_EQ(verify_conMZ({}).status, Status::insufficient_data);
  auto r = verify_conMZ({an("dihedral:16"), an("semidihedral:16"), an("quaternion:16"), an("product:cyclic:2,dihedral:8")});
  EXPECT_EQ(r.status, Status::consistent);
  auto lone = verify_conMZ({an("product:cyclic:3,extraspecial:3:exp3")});
  EXPECT_EQ(lone.status, Status::counterexample_candidate);
  EXPECT_TRUE(lone.failed());
  EXPECT_THROW(verify_conMZ({an("dihedral:16"), an("dihedral:8")}), DomainError);
}

TEST(VerifyThmC, Examples) {
  auto r = verify_thmC(an("sl23"));
  EXPECT_EQ(r.status, Status::pass);
  EXPECT_EQ(an("sl23").table.size(), 7u);
  EXPECT_EQ(witness(verify_thmC(an("cyclic:9")), "min_proportion"), "1");
  EXPECT_EQ(verify_thmC(an("symmetric:4")).status, Status::not_applicable);
  for (const auto& s : kPGroups) EXPECT_EQ(verify_thmC(an(s)).status, Status::pass) << s;
}

TEST(VerifyMillerRelative, SmallGroups) {
  for (auto s : {"dihedral:8", "sl23", "extraspecial:3:exp3"}) EXPECT_FALSE(verify_miller_relative(an(s)).failed()) << s;
}

TEST(Properties, BoundsOverPGroups) {
  for (const auto& s : kPGroups) {
    auto a = an(s);
    const auto pp = *as_prime_power(a.group().order());
    const auto bound = zero_bound(pp.prime, pp.exponent);
    const auto cls = nilpotency_class(a.group());
    for (const auto& z : a.profiles) {
      if (z.degree == 1) continue;
      EXPECT_GE(z.zero_elements, bound) << s;
      if (cls == 2u) EXPECT_GE(z.zero_elements, a.group().order() - a.group().order() / (pp.prime * pp.prime)) << s;
      if (z.faithful) EXPECT_EQ(z.zero_elements == bound, z.zero_classes == pp.prime * pp.prime - 1) << s;
    }
    if (!a.group().is_abelian()) EXPECT_EQ(verify_thmB(a).status, Status::pass) << s;
  }
}

TEST(Properties, DegreeTwoCharactersVanishOutsideAbelianMaximal) {
  for (auto s : {"dihedral:32", "semidihedral:32", "quaternion:32"}) {
    auto a = an(s);
    const auto U = abelian_maximal_subgroup(a.group());
    ASSERT_TRUE(U);
    for (const auto& z : a.profiles) {
      if (z.degree != 2) continue;
      const auto zs = zero_set(a.table, z);
      EXPECT_TRUE(is_subset(set_difference(all_elements(a.group()), *U), zs)) << s;
    }
  }
}

TEST(ZeroBound, Values) {
  EXPECT_EQ(zero_bound(2, 3), 6u);
  EXPECT_EQ(zero_bound(5, 5), 2520u);
  EXPECT_EQ(zero_bound(7, 5), 14448u);
  EXPECT_EQ(zero_bound(3, 3), 24u);
}

TEST(Reference, PublishedValues) {
  const auto& refs = reference_values();
  ASSERT_EQ(refs.size(), 2u);
  auto five = check_reference(refs[0], std::nullopt);
  EXPECT_EQ(five.status, "catalog_absent");
  EXPECT_FALSE(five.discrepancy);
  EXPECT_EQ(five.formula_value, 2520u);
  EXPECT_EQ(check_reference(refs[0], 2600).status, "reproduced");
  auto seven = check_reference(refs[1], std::nullopt);
  EXPECT_TRUE(seven.discrepancy);
  EXPECT_EQ(seven.ref.printed, 1448u);
  EXPECT_EQ(seven.formula_value, 14448u);
  EXPECT_EQ(check_reference(refs[1], 14448).status, "reproduced");
  EXPECT_EQ(check_reference(refs[1], 1448).status, "not_reproduced");
}

TEST(Statements, Parse) {
  EXPECT_EQ(parse_statement("miller"), Statement::millerRelative);
  EXPECT_EQ(parse_statement("thmB"), Statement::thmB);
  EXPECT_THROW(parse_statement("thmZ"), InputError);
}
