#include <gtest/gtest.h>

#include "adk/codes.hpp"
#include "adk/dualities.hpp"
#include "adk/errors.hpp"
#include "bridge.hpp"
#include "oracle.hpp"

using namespace adk;

namespace {

Duality dual(const GroupSpec& g, const Matrix& m) { return bridge::duality(g, m); }

}  // namespace

TEST(Dualities, InnerProductMatchesOracle) {
  for (const auto& d : std::vector<oracle::Vec>{{2, 2}, {2, 4}, {3, 3}, {9}, {2, 6}}) {
    const auto g = make_group(d);
    for (const auto& phi : all_dualities(g)) {
      for (const auto& a : g.elements())
        for (const auto& b : g.elements()) {
          const oracle::Vec av(a.coords().begin(), a.coords().end()), bv(b.coords().begin(), b.coords().end());
          EXPECT_EQ(phi.iexp(a, b), oracle::pair_exp(d, bridge::mat(phi), av, bv));
          EXPECT_EQ(inner_product(phi, a, b), root_power(g.exponent(), phi.iexp(a, b)));
        }
    }
  }
}

TEST(Dualities, ImageIsCharacter) {
  const auto g = make_group({2, 4});
  const auto phi = dual(g, {{1, 2}, {1, 1}});
  EXPECT_EQ(phi.image(g.element({0, 1})).index(), 5);
  EXPECT_EQ(phi.image(g.element({1, 0})).index(), 6);
}

TEST(Dualities, CountsAndSymmetry) {
  EXPECT_EQ(all_dualities(make_group({2, 2})).size(), 6u);
  EXPECT_EQ(all_dualities(make_group({2, 2, 2})).size(), 168u);
  std::size_t sym = 0;
  for (const auto& phi : all_dualities(make_group({2, 2, 2}))) sym += is_symmetric(phi);
  EXPECT_EQ(sym, 28u);
}

TEST(Dualities, AdjointIsInvolutionMatchingOracle) {
  for (const auto& d : std::vector<oracle::Vec>{{2, 2}, {2, 4}, {3, 3}, {4, 4}}) {
    const auto g = make_group(d);
    for (const auto& phi : all_dualities(g)) {
      const auto star = adjoint(phi);
      EXPECT_EQ(adjoint(star), phi);
      EXPECT_EQ(is_symmetric(phi), star == phi);
      for (const auto& a : g.elements())
        for (const auto& b : g.elements()) EXPECT_EQ(star.iexp(a, b), phi.iexp(b, a));
    }
  }
}

TEST(Dualities, FromGramRoundTrip) {
  for (const auto& d : std::vector<oracle::Vec>{{2, 4}, {3, 3}, {2, 6}}) {
    const auto g = make_group(d);
    for (const auto& phi : all_dualities(g)) EXPECT_EQ(Duality::from_gram(g, phi.gram()), phi);
  }
  const auto g = make_group({2, 4});
  EXPECT_THROW(Duality::from_gram(g, {{1, 0}, {0, 1}}), Error);  // 1 is not a multiple of w_0 = 2
  EXPECT_THROW(Duality::from_gram(g, {{2, 0}, {0, 0}}), Error);  // degenerate
}

TEST(Dualities, CanonicalIsWeightedDiagonal) {
  const auto g = make_group({2, 4});
  const auto phi = Duality::canonical(g);
  EXPECT_EQ(phi.tau(), Automorphism::identity(g));
  EXPECT_EQ(phi.gram(), (Matrix{{2, 0}, {0, 1}}));
  EXPECT_TRUE(is_symmetric(phi));
}

TEST(SymmetricCount, FormulaAndRatio) {
  EXPECT_EQ(count_symmetric_invertible(1, 7), 6);
  EXPECT_EQ(count_symmetric_invertible(2, 3), 18);
  EXPECT_EQ(general_linear_order(2, 3), 48);
  EXPECT_EQ(symmetric_ratio(2, 3), BigRational(3, 8));
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::int64_t q : {2, 3})
      EXPECT_EQ(count_symmetric_invertible(static_cast<std::int64_t>(n), q), oracle::count_symmetric_invertible(n, q));
}

TEST(Congruence, TransportAndWitness) {
  const auto g = make_group({3, 3});
  const auto all = all_dualities(g);
  for (const auto& tau : automorphism_group(g)) {
    const auto moved = transport(all[5], tau);
    for (const auto& a : g.elements())
      for (const auto& b : g.elements()) EXPECT_EQ(moved.iexp(a, b), all[5].iexp(tau.apply(a), tau.apply(b)));
    const auto w = congruent(all[5], moved);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(transport(all[5], *w), moved);
  }
}

TEST(Congruence, KleinClasses) {
  const auto g = make_group({2, 2});
  const auto all = all_dualities(g);
  const auto classes = congruence_classes(g);
  ASSERT_EQ(classes.size(), 3u);
  // phi_0 ~ phi_1 ~ phi_2, phi_3 alone, phi_4 ~ phi_5, in the worked ordering
  auto idx = [&](const Matrix& m) {
    return static_cast<std::size_t>(std::find(all.begin(), all.end(), dual(g, m)) - all.begin());
  };
  auto cls = [&](std::size_t i) {
    return std::find_if(classes.begin(), classes.end(), [&](const auto& c) {
      return std::find(c.begin(), c.end(), i) != c.end();
    }) - classes.begin();
  };
  EXPECT_EQ(cls(idx({{1, 0}, {0, 1}})), cls(idx({{1, 1}, {1, 0}})));
  EXPECT_EQ(cls(idx({{1, 0}, {0, 1}})), cls(idx({{0, 1}, {1, 1}})));
  EXPECT_NE(cls(idx({{1, 0}, {0, 1}})), cls(idx({{0, 1}, {1, 0}})));
  EXPECT_EQ(cls(idx({{1, 1}, {0, 1}})), cls(idx({{1, 0}, {1, 1}})));
  for (const auto& c : classes) EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
}

TEST(Congruence, AdjointCongruentInF3Squared) {
  const auto g = make_group({3, 3});
  for (const auto& phi : all_dualities(g)) EXPECT_TRUE(congruent(phi, adjoint(phi)).has_value());
}

TEST(Powers, F3SquaredRelations) {
  const auto g = make_group({3, 3});
  const auto phi2 = dual(g, {{1, 1}, {0, 1}});
  const auto phi5 = dual(g, {{2, 2}, {0, 2}});
  EXPECT_EQ(power_duality(phi2, 2), phi5);
  EXPECT_EQ(negated(phi2), phi5);
  EXPECT_EQ(power_relation(phi2, phi5), 2);
  EXPECT_TRUE(same_duals_everywhere(phi2, phi5));
  EXPECT_FALSE(same_duals_everywhere(phi2, dual(g, {{2, 1}, {0, 1}})));
  EXPECT_THROW(power_duality(phi2, 3), Error);
}

TEST(Powers, SameDualsMeansEqualDualCodes) {
  for (const auto& d : std::vector<oracle::Vec>{{3, 3}, {2, 4}, {9}}) {
    const auto g = make_group(d);
    const auto all = all_dualities(g);
    const auto subs = all_subgroups(g);
    for (const auto& a : all)
      for (const auto& b : all) {
        bool equal = true;
        for (const auto& h : subs) equal = equal && left_dual(h, a) == left_dual(h, b) && right_dual(h, a) == right_dual(h, b);
        EXPECT_EQ(same_duals_everywhere(a, b), equal);
      }
  }
}

TEST(DirectSum, BlockForm) {
  const auto a = make_group({2});
  const auto b = make_group({4});
  const auto phi = direct_sum(Duality::canonical(a), dual(b, {{3}}));
  EXPECT_EQ(phi.parent(), make_group({2, 4}));
  EXPECT_EQ(phi.tau().matrix(), (Matrix{{1, 0}, {0, 3}}));
}
