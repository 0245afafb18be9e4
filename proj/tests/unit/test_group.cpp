#include <gtest/gtest.h>

#include "adk/errors.hpp"
#include "adk/group.hpp"
#include "bridge.hpp"
#include "oracle.hpp"

using namespace adk;

TEST(GroupSpec, BasicInvariants) {
  const auto g = make_group({2, 4});
  EXPECT_EQ(g.cardinality(), 8);
  EXPECT_EQ(g.exponent(), 4);
  EXPECT_EQ(g.rank(), 2u);
  EXPECT_EQ(g.weight(0), 2);
  EXPECT_EQ(g.weight(1), 1);
}

TEST(GroupSpec, RejectsBadOrders) {
  EXPECT_THROW(make_group({}), Error);
  EXPECT_THROW(make_group({1}), Error);
  EXPECT_THROW(make_group({2, 0}), Error);
  EXPECT_THROW(make_group({1LL << 40, 1LL << 40}), Error);
}

TEST(GroupSpec, IndexOrderIsLexOrder) {
  for (const auto& d : std::vector<oracle::Vec>{{2, 4}, {3, 3}, {2, 2, 2}, {9}, {4, 2, 3}}) {
    const auto g = make_group(d);
    const auto els = oracle::elements(d);
    ASSERT_EQ(static_cast<std::int64_t>(els.size()), g.cardinality());
    for (std::size_t i = 0; i < els.size(); ++i) {
      EXPECT_EQ(g.coords_of(static_cast<std::int64_t>(i)), els[i]);
      EXPECT_EQ(g.index_of(els[i]), static_cast<std::int64_t>(i));
    }
  }
}

TEST(GroupSpec, IndexArithmeticMatchesCoordinates) {
  const oracle::Vec d{2, 4, 3};
  const auto g = make_group(d);
  for (std::int64_t x = 0; x < g.cardinality(); ++x) {
    for (std::int64_t y = 0; y < g.cardinality(); ++y) {
      EXPECT_EQ(g.coords_of(g.add_index(x, y)), oracle::add(d, g.coords_of(x), g.coords_of(y)));
    }
    EXPECT_EQ(g.add_index(x, g.neg_index(x)), 0);
    EXPECT_EQ(g.scale_index(x, 5), g.add_index(g.scale_index(x, 2), g.scale_index(x, 3)));
  }
}

TEST(GroupElement, OrderAndArithmetic) {
  const auto g = make_group({2, 4});
  EXPECT_EQ(g.element({0, 1}).order(), 4);
  EXPECT_EQ(g.element({1, 2}).order(), 2);
  EXPECT_EQ(g.zero().order(), 1);
  EXPECT_EQ(g.element({1, 3}) + g.element({1, 3}), g.element({0, 2}));
  EXPECT_EQ(-g.element({1, 1}), g.element({1, 3}));
  EXPECT_EQ(g.element({-1, -1}), g.element({1, 3}));
}

TEST(Subgroups, MatchOracleLattice) {
  for (const auto& d : std::vector<oracle::Vec>{{2, 2}, {2, 4}, {3, 3}, {8}, {9}, {2, 2, 2}, {4, 4}, {2, 6}}) {
    const auto g = make_group(d);
    const auto subs = all_subgroups(g);
    std::set<oracle::Set> got;
    for (const auto& h : subs) got.insert(bridge::to_set(h));
    EXPECT_EQ(got.size(), subs.size()) << "duplicates for " << d.size();
    EXPECT_EQ(got, oracle::subgroups(d));
    EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end()));
  }
}

TEST(Subgroups, KnownCounts) {
  EXPECT_EQ(all_subgroups(make_group({2, 4})).size(), 8u);
  EXPECT_EQ(all_subgroups(make_group({2, 2})).size(), 5u);
  EXPECT_EQ(all_subgroups(make_group({3, 3})).size(), 6u);
  EXPECT_EQ(all_subgroups(make_group({2, 2, 2})).size(), 16u);
  EXPECT_EQ(all_subgroups(make_group({8})).size(), 4u);
}

TEST(Subgroups, ClosureAndMembership) {
  const auto g = make_group({2, 4});
  const auto h = subgroup_closure(g, {g.element({1, 0}), g.element({0, 2})});
  EXPECT_EQ(h.order(), 4);
  EXPECT_TRUE(h.contains(g.element({1, 2})));
  EXPECT_FALSE(h.contains(g.element({0, 1})));
  EXPECT_TRUE(trivial_subgroup(g).is_subset_of(h));
  EXPECT_TRUE(h.is_subset_of(whole_group(g)));
  EXPECT_THROW(subgroup_closure(g, {make_group({2, 2}).element({1, 0})}), Error);
}

TEST(Subgroups, EnumerationLimit) {
  Limits small;
  small.enumeration = 16;
  try {
    all_subgroups(make_group({2, 2, 2, 2, 2}), small);
    FAIL() << "expected LimitError";
  } catch (const LimitError& e) {
    EXPECT_EQ(e.cardinality(), 32);
    EXPECT_EQ(e.bound(), 16);
  }
}

TEST(Homomorphism, ValidatesOrderCondition) {
  const auto z2 = make_group({2});
  const auto z4 = make_group({4});
  EXPECT_NO_THROW(Homomorphism(z2, z4, {{2}}));
  EXPECT_THROW(Homomorphism(z2, z4, {{1}}), Error);
  EXPECT_NO_THROW(Homomorphism(z4, z2, {{1}}));
}

TEST(Automorphisms, MatchOracle) {
  for (const auto& d : std::vector<oracle::Vec>{{2, 2}, {2, 4}, {3, 3}, {8}, {9}, {2, 2, 2}, {4, 4}}) {
    const auto g = make_group(d);
    const auto auts = automorphism_group(g);
    const auto want = oracle::automorphisms(d);
    ASSERT_EQ(auts.size(), want.size());
    for (std::size_t i = 0; i < auts.size(); ++i) EXPECT_EQ(auts[i].matrix(), want[i]);
  }
}

TEST(Automorphisms, KnownOrders) {
  EXPECT_EQ(automorphism_group(make_group({2, 2, 2})).size(), 168u);
  EXPECT_EQ(automorphism_group(make_group({2, 4})).size(), 8u);
  EXPECT_EQ(automorphism_group(make_group({9})).size(), 6u);
  EXPECT_EQ(automorphism_group(make_group({4, 4})).size(), 96u);
}

TEST(Automorphisms, GroupLaws) {
  const auto g = make_group({2, 4});
  const auto auts = automorphism_group(g);
  const auto id = Automorphism::identity(g);
  for (const auto& a : auts) {
    EXPECT_EQ(a.then(a.inverse()), id);
    EXPECT_EQ(a.power(a.order()), id);
    for (const auto& b : auts)
      for (std::int64_t x = 0; x < g.cardinality(); ++x)
        EXPECT_EQ(a.then(b).apply_index(x), b.apply_index(a.apply_index(x)));
  }
}

TEST(Automorphisms, DihedralPresentation) {
  const auto g = make_group({2, 4});
  const Automorphism sigma(Homomorphism(g, g, {{1, 0}, {1, 1}}));
  const Automorphism tau(Homomorphism(g, g, {{1, 2}, {1, 1}}));
  EXPECT_EQ(sigma.order(), 2);
  EXPECT_EQ(tau.order(), 4);
  EXPECT_EQ(tau.then(sigma), sigma.then(tau.power(3)));
}

TEST(Automorphisms, RejectsNonBijective) {
  const auto g = make_group({2, 2});
  EXPECT_THROW(Automorphism(Homomorphism(g, g, {{1, 1}, {1, 1}})), Error);
  EXPECT_FALSE(Automorphism::try_from(Homomorphism(g, g, {{0, 0}, {0, 1}})).has_value());
}

TEST(Characteristic, SubgroupsOfTwoByFour) {
  const auto g = make_group({2, 4});
  std::size_t count = 0;
  for (const auto& h : all_subgroups(g)) {
    bool oracle_char = true;
    const auto hs = bridge::to_set(h);
    for (const auto& t : oracle::automorphisms({2, 4})) {
      oracle::Set moved;
      for (const auto& a : hs) moved.insert(oracle::act({2, 4}, t, a));
      oracle_char = oracle_char && moved == hs;
    }
    EXPECT_EQ(is_characteristic(h), oracle_char);
    count += oracle_char;
    EXPECT_EQ(stabilizer(h).size() == 8, oracle_char);
  }
  EXPECT_EQ(count, 4u);
}

TEST(Primary, Decomposition) {
  const auto g = make_group({6, 4});
  const auto parts = primary_decomposition(g);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at(2), make_group({2, 4}));
  EXPECT_EQ(parts.at(3), make_group({3}));
  EXPECT_EQ(primary_component(g, 3).order(), 3);
  EXPECT_EQ(primary_component(g, 2).order(), 8);
  EXPECT_EQ(p_group_prime(make_group({2, 8})), 2);
  EXPECT_FALSE(p_group_prime(g).has_value());
  EXPECT_EQ(prime_factors(360), (std::vector<std::int64_t>{2, 3, 5}));
}
