#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgzero/pgzero.hpp"

using namespace pgzero;

namespace {

Group family(const std::string& s) { return build_family(FamilySpec::parse(s)); }

std::vector<std::uint64_t> sorted_degrees(const CharacterTable& t) {
  auto d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

const std::vector<std::string> kGroups = {
    "dihedral:8",          "quaternion:8",        "dihedral:32",          "semidihedral:16",
    "quaternion:32",       "sl23",                "symmetric:4",          "extraspecial:3:exp3",
    "extraspecial:3:exp9", "extraspecial:5:exp5", "cyclic:9",             "elemab:2:3",
    "product:cyclic:2,dihedral:8", "product:cyclic:3,extraspecial:3:exp3", "product:cyclic:4,cyclic:6"};

}  // namespace

TEST(ChoosePrime, Examples) {
  EXPECT_EQ(choose_prime(8, 4).ell, 13u);
  EXPECT_EQ(choose_prime(27, 3).ell, 13u);
  EXPECT_EQ(choose_prime(16807, 49).ell, 491u);
}

TEST(ChoosePrime, RootHasExactOrder) {
  for (auto [order, e] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{8, 4}, {27, 3}, {16807, 49}, {512, 256}, {24, 12}}) {
    auto mp = choose_prime(order, e);
    EXPECT_EQ((mp.ell - 1) % e, 0u);
    EXPECT_GT(mp.ell * mp.ell, 4 * order);
    std::uint64_t x = 1;
    for (std::uint64_t k = 1; k <= e; ++k) {
      x = x * mp.z % mp.ell;
      EXPECT_EQ(x == 1, k == e) << "ell=" << mp.ell << " k=" << k;
    }
  }
}

TEST(StructureConstants, AbelianIsMultiplicationTable) {
  auto G = family("product:cyclic:4,cyclic:6");
  auto cd = conjugacy_classes(G);
  auto t = structure_constants(cd);
  for (std::size_t i = 0; i < t.k; ++i)
    for (std::size_t j = 0; j < t.k; ++j) {
      const auto prod = cd.class_of[G.mul(cd.representatives[i], cd.representatives[j])];
      for (std::size_t c = 0; c < t.k; ++c) EXPECT_EQ(t.coefficient(i, j, c), c == prod ? 1u : 0u);
    }
}

TEST(StructureConstants, Q8ClassSquared) {
  auto G = family("quaternion:8");
  auto cd = conjugacy_classes(G);
  auto t = structure_constants(cd);
  const auto Z = center(G);
  ASSERT_EQ(Z.size(), 2u);
  const auto minus_one = cd.class_of[Z[1]];
  for (std::size_t i = 0; i < t.k; ++i) {
    if (cd.sizes[i] != 2) continue;
    EXPECT_EQ(t.coefficient(i, i, 0), 2u);
    EXPECT_EQ(t.coefficient(i, i, minus_one), 2u);
    EXPECT_EQ(t.row(i, i).size(), 2u);
  }
}

TEST(StructureConstants, IdentityRow) {
  auto t = structure_constants(conjugacy_classes(family("sl23")));
  for (std::size_t j = 0; j < t.k; ++j)
    for (std::size_t c = 0; c < t.k; ++c) EXPECT_EQ(t.coefficient(0, j, c), j == c ? 1u : 0u);
}

TEST(StructureConstants, MatchPairCounts) {
  for (auto spec : {"dihedral:16", "sl23", "symmetric:4", "extraspecial:3:exp9"}) {
    auto G = family(spec);
    auto cd = conjugacy_classes(G);
    auto t = structure_constants(cd, 3);
    for (std::size_t i = 0; i < t.k; ++i)
      for (std::size_t j = 0; j < t.k; ++j) {
        std::uint64_t sum = 0;
        for (std::size_t c = 0; c < t.k; ++c) {
          const Index z = cd.representatives[c];
          std::uint64_t n = 0;
          for (auto x : cd.members[i])
            for (auto y : cd.members[j]) n += G.mul(x, y) == z;
          ASSERT_EQ(t.coefficient(i, j, c), n) << spec;
          sum += n * cd.sizes[c];
        }
        EXPECT_EQ(sum, cd.sizes[i] * cd.sizes[j]);
      }
  }
}

TEST(ModularCharacters, Degrees) {
  auto cd = conjugacy_classes(family("quaternion:8"));
  auto mods = modular_characters(structure_constants(cd));
  std::vector<std::uint64_t> d;
  for (const auto& m : mods) d.push_back(m.degree);
  std::sort(d.begin(), d.end());
  EXPECT_EQ(d, (std::vector<std::uint64_t>{1, 1, 1, 1, 2}));
}

TEST(CharacterTable, DegreesOfSmallGroups) {
  EXPECT_EQ(sorted_degrees(character_table(family("quaternion:8"))), (std::vector<std::uint64_t>{1, 1, 1, 1, 2}));
  EXPECT_EQ(sorted_degrees(character_table(family("dihedral:8"))), (std::vector<std::uint64_t>{1, 1, 1, 1, 2}));
  EXPECT_EQ(sorted_degrees(character_table(family("sl23"))), (std::vector<std::uint64_t>{1, 1, 1, 2, 2, 2, 3}));
  EXPECT_EQ(sorted_degrees(character_table(family("symmetric:4"))), (std::vector<std::uint64_t>{1, 1, 2, 3, 3}));
  for (auto d : character_table(family("elemab:3:3")).degrees) EXPECT_EQ(d, 1u);
}

TEST(CharacterTable, TrivialRowFirst) {
  for (const auto& spec : kGroups) {
    auto t = character_table(family(spec));
    for (const auto& v : t.values[0]) EXPECT_EQ(v, CycInt::integer(v.conductor(), Integer(1))) << spec;
  }
}

TEST(CharacterTable, DegreeTwoRowOfQ8AndD8) {
  for (auto spec : {"quaternion:8", "dihedral:8"}) {
    auto G = family(spec);
    auto t = character_table(G);
    const auto minus = t.classes->class_of[center(G)[1]];
    ASSERT_EQ(t.degrees.back(), 2u);
    const auto& row = t.values.back();
    for (std::size_t c = 0; c < t.classes->count(); ++c) {
      long expect = c == 0 ? 2 : c == minus ? -2 : 0;
      EXPECT_EQ(row[c], CycInt::integer(row[c].conductor(), Integer(expect))) << spec << " class " << c;
    }
  }
}

TEST(CharacterTable, AbelianMatchesDualGroup) {
  for (auto spec : {"cyclic:9", "elemab:3:4", "product:cyclic:4,cyclic:6", "elemab:2:3", "cyclic:16"}) {
    auto G = family(spec);
    auto t = character_table(G);
    const auto e = static_cast<unsigned>(oracle::exponent(G));
    auto dual = oracle::linear_characters(G, e);
    ASSERT_EQ(dual.size(), G.order()) << spec;
    ASSERT_EQ(t.size(), G.order());
    std::vector<char> used(t.size(), 0);
    for (const auto& lam : dual) {
      bool found = false;
      for (std::size_t r = 0; r < t.size() && !found; ++r) {
        if (used[r]) continue;
        bool same = true;
        for (std::size_t c = 0; c < t.classes->count() && same; ++c)
          same = t.values[r][c] == CycInt::root(e, lam[t.classes->representatives[c]]);
        if (same) found = used[r] = 1;
      }
      EXPECT_TRUE(found) << spec;
    }
  }
}

TEST(CharacterTable, NumericOrthogonality) {
  for (const auto& spec : kGroups) {
    auto t = character_table(family(spec));
    const auto& cd = *t.classes;
    const double n = static_cast<double>(t.group().order());
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b) {
        std::complex<double> s = 0;
        for (std::size_t c = 0; c < cd.count(); ++c)
          s += static_cast<double>(cd.sizes[c]) * oracle::value(t.values[a][c]) * std::conj(oracle::value(t.values[b][c]));
        EXPECT_NEAR(s.real(), a == b ? n : 0.0, 1e-6) << spec;
        EXPECT_NEAR(s.imag(), 0.0, 1e-6);
      }
  }
}

TEST(CharacterTable, PGroupDegreesAndLinearCount) {
  for (const auto& spec : kGroups) {
    auto G = family(spec);
    auto t = character_table(G);
    std::uint64_t sum = 0, linear = 0;
    for (auto d : t.degrees) {
      sum += d * d;
      linear += d == 1;
    }
    EXPECT_EQ(sum, G.order());
    EXPECT_EQ(linear * derived_subgroup(G).size(), G.order()) << spec;
    if (auto pp = as_prime_power(G.order()))
      for (auto d : t.degrees) EXPECT_TRUE(as_prime_power(d * pp->prime).has_value()) << spec << " degree " << d;
  }
}

TEST(CharacterTable, NonlinearPGroupCharactersVanishSomewhere) {
  for (const auto& spec : kGroups) {
    auto G = family(spec);
    if (!as_prime_power(G.order())) continue;
    auto t = character_table(G);
    for (std::size_t r = 0; r < t.size(); ++r) {
      if (t.is_linear(r)) continue;
      bool zero = false;
      for (const auto& v : t.values[r]) zero = zero || is_zero(v);
      EXPECT_TRUE(zero) << spec << " row " << r;
    }
  }
}

TEST(CharacterTable, KernelsAndFaithfulness) {
  for (const auto& spec : kGroups) {
    auto G = family(spec);
    auto t = character_table(G);
    for (std::size_t r = 0; r < t.size(); ++r) {
      auto K = t.kernel(r);
      EXPECT_TRUE(is_normal(G, K));
      EXPECT_EQ(t.faithful[r], K.size() == 1);
      EXPECT_EQ(t.values[r][0], CycInt::integer(t.values[r][0].conductor(), Integer(t.degrees[r])));
      for (Index x = 0; x < G.order(); ++x)
        EXPECT_EQ(contains(K, x), t.values[r][t.classes->class_of[x]] == t.values[r][0]);
    }
  }
}

TEST(CharacterTable, IdenticalAcrossJobCounts) {
  for (auto spec : {"dihedral:64", "extraspecial:5:exp5", "sl23", "product:cyclic:3,extraspecial:3:exp3"}) {
    auto G = family(spec);
    auto a = character_table(G, 1);
    auto b = character_table(G, 4);
    auto c = character_table(G, 1);
    EXPECT_EQ(a.values, b.values) << spec;
    EXPECT_EQ(a.values, c.values) << spec;
    EXPECT_EQ(a.degrees, b.degrees);
  }
}

TEST(VerifyTable, BuiltInFamiliesPass) {
  for (const auto& spec : kGroups) {
    auto t = character_table(family(spec));
    auto rep = verify_table(t, 2);
    EXPECT_TRUE(rep.passed()) << spec << ": " << rep.first_failure();
    for (auto name : {"shape", "trivial_first", "integral_degrees", "degree_sum", "class_equation", "galois_closed",
                      "first_orthogonality", "second_orthogonality"})
      EXPECT_NE(rep.find(name), nullptr) << name;
  }
}

TEST(VerifyTable, PerturbedValueFailsSecondOrthogonality) {
  auto t = character_table(family("dihedral:8"));
  t.values[1][1] += CycInt::integer(t.values[1][1].conductor(), Integer(1));
  auto rep = verify_table(t);
  EXPECT_FALSE(rep.passed());
  ASSERT_NE(rep.find("second_orthogonality"), nullptr);
  EXPECT_FALSE(rep.find("second_orthogonality")->passed);
  EXPECT_THROW(require_valid(t), TableIntegrityError);
}

TEST(VerifyTable, WrongDegreeFailsDegreeSum) {
  auto t = character_table(family("quaternion:8"));
  t.degrees.back() = 3;
  EXPECT_FALSE(verify_table(t).find("degree_sum")->passed);
}
