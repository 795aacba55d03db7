#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgzero/pgzero.hpp"

using namespace pgzero;

namespace {

Group family(const std::string& s) { return build_family(FamilySpec::parse(s)); }

const std::vector<std::string> kSmall = {"dihedral:8",   "dihedral:16",         "semidihedral:16",
                                         "quaternion:8", "quaternion:16",       "sl23",
                                         "symmetric:4",  "extraspecial:3:exp3", "extraspecial:3:exp9",
                                         "cyclic:9",     "product:cyclic:2,dihedral:8"};

ElementSet brute_center(const Group& G) {
  ElementSet z;
  for (Index x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (Index g = 0; g < G.order() && ok; ++g) ok = G.mul(x, g) == G.mul(g, x);
    if (ok) z.push_back(x);
  }
  return z;
}

ElementSet closure(const Group& G, std::set<Index> s) {
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Index> cur(s.begin(), s.end());
    for (auto a : cur)
      for (auto b : cur)
        if (s.insert(G.mul(a, b)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

/// Subgroups of index p generated by at most two elements.
std::set<ElementSet> brute_maximal(const Group& G, std::uint64_t p) {
  std::set<ElementSet> out;
  for (Index a = 0; a < G.order(); ++a)
    for (Index b = a; b < G.order(); ++b) {
      auto H = closure(G, {a, b});
      if (H.size() * p == G.order()) out.insert(H);
    }
  return out;
}

}  // namespace

TEST(ConjugacyClasses, Dihedral8) {
  auto cd = conjugacy_classes(family("dihedral:8"));
  std::vector<std::uint64_t> sizes = cd.sizes;
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::uint64_t>{1, 1, 2, 2, 2}));
}

TEST(ConjugacyClasses, AbelianGivesSingletons) {
  for (auto spec : {"cyclic:9", "elemab:3:4", "product:cyclic:4,cyclic:6"}) {
    auto G = family(spec);
    auto cd = conjugacy_classes(G);
    EXPECT_EQ(cd.count(), G.order());
  }
}

TEST(ConjugacyClasses, Extraspecial125) {
  auto cd = conjugacy_classes(family("extraspecial:5:exp5"));
  ASSERT_EQ(cd.count(), 29u);
  EXPECT_EQ(std::count(cd.sizes.begin(), cd.sizes.end(), 1u), 5);
  EXPECT_EQ(std::count(cd.sizes.begin(), cd.sizes.end(), 5u), 24);
}

TEST(ConjugacyClasses, MatchBruteForceOrbits) {
  for (const auto& spec : kSmall) {
    auto G = family(spec);
    auto cd = conjugacy_classes(G);
    auto ref = oracle::classes(G);
    ASSERT_EQ(cd.count(), ref.size()) << spec;
    // both are ordered by minimal element
    for (std::size_t c = 0; c < ref.size(); ++c) {
      EXPECT_EQ(cd.members[c], ref[c]) << spec;
      EXPECT_EQ(cd.representatives[c], ref[c].front());
    }
  }
}

TEST(ConjugacyClasses, ClassEquationAndCentralizers) {
  for (const auto& spec : kSmall) {
    auto G = family(spec);
    auto cd = conjugacy_classes(G);
    EXPECT_EQ(cd.representatives[0], 0u);
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < cd.count(); ++c) {
      total += cd.sizes[c];
      EXPECT_EQ(cd.sizes[c] * cd.centralizer_orders[c], G.order());
      for (auto x : cd.members[c]) EXPECT_EQ(cd.class_of[x], c);
    }
    EXPECT_EQ(total, G.order()) << spec;
  }
}

TEST(ConjugacyClasses, PowerMaps) {
  for (const auto& spec : kSmall) {
    auto G = family(spec);
    auto cd = conjugacy_classes(G);
    for (std::uint64_t m = 0; m <= cd.exponent; ++m)
      for (Index x = 0; x < G.order(); ++x)
        ASSERT_EQ(cd.class_of[G.pow(x, m)], cd.power_map(m, cd.class_of[x])) << spec << " m=" << m;
  }
}

TEST(CentralSeries, Dihedral16) {
  auto G = family("dihedral:16");
  EXPECT_EQ(center(G).size(), 2u);
  EXPECT_EQ(second_center(G).size(), 4u);
  EXPECT_EQ(nilpotency_class(G), 3u);
}

TEST(CentralSeries, AbelianCenterIsEverything) {
  auto G = family("elemab:3:3");
  EXPECT_EQ(center(G).size(), G.order());
  EXPECT_EQ(nilpotency_class(G), 1u);
}

TEST(CentralSeries, DerivedSubgroupOfQ8) {
  auto G = family("quaternion:8");
  auto D = derived_subgroup(G);
  EXPECT_EQ(D.size(), 2u);
  EXPECT_EQ(D, center(G));
}

TEST(CentralSeries, MatchesBruteForce) {
  for (const auto& spec : kSmall) {
    auto G = family(spec);
    auto data = central_series(G);
    EXPECT_EQ(data.center, brute_center(G)) << spec;
    std::set<Index> comms;
    for (Index a = 0; a < G.order(); ++a)
      for (Index b = 0; b < G.order(); ++b) comms.insert(G.comm(a, b));
    EXPECT_EQ(data.derived, closure(G, comms)) << spec;
    EXPECT_TRUE(is_subset(data.center, data.second_center));
    EXPECT_TRUE(is_normal(G, data.center));
    EXPECT_TRUE(is_normal(G, data.second_center));
  }
}

TEST(CentralSeries, SecondCenterViaQuotient) {
  for (const auto& spec : kSmall) {
    auto G = family(spec);
    auto Z = center(G);
    auto Z2 = second_center(G);
    auto q = quotient(G, Z);
    auto Zq = brute_center(q.group);
    for (Index x = 0; x < G.order(); ++x)
      EXPECT_EQ(contains(Z2, x), contains(Zq, q.projection[x])) << spec;
  }
}

TEST(CentralSeries, NotNilpotent) {
  EXPECT_FALSE(nilpotency_class(family("symmetric:4")).has_value());
  EXPECT_FALSE(nilpotency_class(family("sl23")).has_value());
}

TEST(MaximalClass, DihedralFamily) {
  for (unsigned n = 3; n <= 7; ++n) EXPECT_TRUE(is_maximal_class(family("dihedral:" + std::to_string(1u << n)), 2));
}

TEST(MaximalClass, Extraspecial) { EXPECT_TRUE(is_maximal_class(family("extraspecial:5:exp5"), 5)); }

TEST(MaximalClass, AbelianIsNot) { EXPECT_FALSE(is_maximal_class(family("elemab:3:4"), 3)); }

TEST(MaximalClass, NotPGroup) {
  EXPECT_THROW(is_maximal_class(family("sl23"), 2), DomainError);
  EXPECT_THROW(is_maximal_class(family("dihedral:8"), 3), DomainError);
}

TEST(MaximalClass, CriteriaAgreeOnCatalog) {
  for (auto spec : {"dihedral:32", "semidihedral:32", "quaternion:32", "extraspecial:3:exp3", "extraspecial:7:exp49",
                    "product:cyclic:2,dihedral:8", "product:cyclic:3,extraspecial:3:exp3", "elemab:2:4"}) {
    auto G = family(spec);
    auto pp = as_prime_power(G.order());
    ASSERT_TRUE(pp);
    bool m = false;
    ASSERT_NO_THROW(m = is_maximal_class(G, pp->prime)) << spec;
    auto cls = nilpotency_class(G);
    EXPECT_EQ(m, cls && pp->exponent >= 3 && *cls == pp->exponent - 1) << spec;
  }
}

TEST(MaximalSubgroups, Dihedral16) {
  auto G = family("dihedral:16");
  auto M = maximal_subgroups(G);
  ASSERT_EQ(M.size(), 3u);
  auto ab = abelian_maximal_subgroups(G);
  ASSERT_EQ(ab.size(), 1u);
  EXPECT_EQ(ab[0].size(), 8u);
  unsigned max_order = 0;
  for (auto x : ab[0]) max_order = std::max(max_order, G.element_order(x));
  EXPECT_EQ(max_order, 8u);
}

TEST(MaximalSubgroups, Q8AllCyclic) {
  auto G = family("quaternion:8");
  auto M = maximal_subgroups(G);
  ASSERT_EQ(M.size(), 3u);
  for (const auto& H : M) {
    EXPECT_EQ(H.size(), 4u);
    EXPECT_TRUE(is_abelian_subset(G, H));
    unsigned max_order = 0;
    for (auto x : H) max_order = std::max(max_order, G.element_order(x));
    EXPECT_EQ(max_order, 4u);
  }
}

TEST(MaximalSubgroups, ElementaryAbelianRankTwo) {
  EXPECT_EQ(maximal_subgroups(family("elemab:3:2")).size(), 4u);
}

TEST(MaximalSubgroups, MatchBruteForce) {
  for (auto spec : {"dihedral:16", "quaternion:16", "semidihedral:16", "extraspecial:3:exp3", "extraspecial:3:exp9",
                    "elemab:3:2", "dihedral:8"}) {
    auto G = family(spec);
    auto pp = as_prime_power(G.order());
    auto M = maximal_subgroups(G);
    std::set<ElementSet> got(M.begin(), M.end());
    EXPECT_EQ(got.size(), M.size());
    EXPECT_EQ(got, brute_maximal(G, pp->prime)) << spec;
  }
}

TEST(MaximalSubgroups, MaximalClassTwoGroupsHaveAbelianIndexTwo) {
  for (unsigned n = 3; n <= 7; ++n)
    for (auto fam : {"dihedral", "semidihedral", "quaternion"}) {
      if (n == 3 && std::string(fam) == "semidihedral") continue;
      auto G = family(std::string(fam) + ":" + std::to_string(1u << n));
      auto U = abelian_maximal_subgroup(G);
      ASSERT_TRUE(U) << G.label();
      EXPECT_EQ(U->size() * 2, G.order());
    }
}

TEST(NormalSubgroups, Counts) {
  EXPECT_EQ(normal_subgroups(family("quaternion:8")).size(), 6u);
  EXPECT_EQ(normal_subgroups(family("dihedral:8")).size(), 6u);
  EXPECT_EQ(normal_subgroups(family("cyclic:7")).size(), 2u);
  EXPECT_EQ(normal_subgroups(family("symmetric:4")).size(), 4u);
}

TEST(NormalSubgroups, AreNormalAndDistinct) {
  for (const auto& spec : kSmall) {
    auto G = family(spec);
    auto N = normal_subgroups(G);
    std::set<ElementSet> uniq(N.begin(), N.end());
    EXPECT_EQ(uniq.size(), N.size());
    for (const auto& H : N) {
      EXPECT_TRUE(is_subgroup(G, H));
      EXPECT_TRUE(is_normal(G, H));
    }
    EXPECT_TRUE(uniq.count(ElementSet{0}));
    EXPECT_TRUE(uniq.count(all_elements(G)));
    // every normal closure of a single element appears
    for (Index x = 0; x < G.order(); ++x) {
      std::vector<Index> seed{x};
      EXPECT_TRUE(uniq.count(normal_closure(G, seed))) << spec;
    }
  }
}

TEST(SylowTower, Sl23) {
  auto t = has_sylow_tower(family("sl23"));
  EXPECT_TRUE(t.exists);
  EXPECT_EQ(t.primes, (std::vector<std::uint64_t>{3, 2}));
}

TEST(SylowTower, PGroups) {
  EXPECT_TRUE(has_sylow_tower(family("dihedral:32")).exists);
  EXPECT_TRUE(has_sylow_tower(family("extraspecial:5:exp5")).exists);
}

TEST(SylowTower, S4HasNone) { EXPECT_FALSE(has_sylow_tower(family("symmetric:4")).exists); }
