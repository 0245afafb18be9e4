#include <gtest/gtest.h>

#include <random>

#include "adk/enumerators.hpp"
#include "adk/errors.hpp"
#include "bridge.hpp"
#include "oracle.hpp"

using namespace adk;

namespace {

HammingEnumerator hamming(std::size_t n, std::vector<std::int64_t> c) {
  HammingEnumerator e;
  e.n = n;
  for (auto x : c) e.coeffs.emplace_back(x);
  return e;
}

}  // namespace

TEST(Enumerators, RepetitionAndEvenWeight) {
  const auto z2 = make_group({2});
  const auto p = power_group(z2, 3);
  const auto rep = subgroup_closure(p, {p.element({1, 1, 1})});
  EXPECT_EQ(hwe(rep, z2), hamming(3, {1, 0, 0, 1}));
  const auto even = mw_hamming_transform(hwe(rep, z2), 2, rep.order());
  EXPECT_EQ(even, hamming(3, {1, 0, 3, 0}));
  EXPECT_EQ(hwe(left_dual(rep, Duality::canonical(z2)), z2), even);
}

TEST(Enumerators, HammingTransformIsInvolutiveUpToScale) {
  // Transforming twice multiplies by |A|^n / (|C| |D|) = 1 when |C||D| = |A|^n.
  const auto e = hamming(2, {1, 1, 2});
  const auto once = mw_hamming_transform(e, 8, 4);
  EXPECT_EQ(once, hamming(2, {1, 4, 11}));
  EXPECT_EQ(mw_hamming_transform(once, 8, 16), e);
}

TEST(Enumerators, NonIntegralTransformReported) {
  EXPECT_THROW(mw_hamming_transform(hamming(2, {1, 1, 0}), 2, 4), NonIntegralError);
}

TEST(Enumerators, CompleteCountsMatchOracle) {
  const auto a = make_group({3});
  const auto p = power_group(a, 3);
  const auto c = subgroup_closure(p, {p.element({1, 1, 1}), p.element({0, 1, 2})});
  const auto e = cwe(c, a);
  std::map<Monomial, BigInt> want;
  for (const auto& x : c.elements()) {
    Monomial m(3, 0);
    for (auto v : x.coords()) ++m[static_cast<std::size_t>(v)];
    want[m] += 1;
  }
  EXPECT_EQ(e.terms, want);
  EXPECT_EQ(hamming_specialization(e), hwe(c, a));
}

TEST(Enumerators, CompleteTransformBothOrientations) {
  const auto a = make_group({2, 4});
  const auto p = power_group(a, 2);
  const auto c = subgroup_closure(p, {p.element({1, 0, 0, 1})});
  for (const auto& phi : all_dualities(a)) {
    const auto l = left_dual(c, phi), r = right_dual(c, phi);
    EXPECT_EQ(mw_complete_transform(cwe(c, a), phi, Side::left, Direction::to_dual), cwe(l, a));
    EXPECT_EQ(mw_complete_transform(cwe(c, a), phi, Side::right, Direction::to_dual), cwe(r, a));
    EXPECT_EQ(mw_complete_transform(cwe(l, a), phi, Side::left, Direction::from_dual), cwe(c, a));
    EXPECT_EQ(mw_complete_transform(cwe(r, a), phi, Side::right, Direction::from_dual), cwe(c, a));
  }
}

TEST(Enumerators, WrongOrientationDetectedForNonsymmetric) {
  // For a nonsymmetric duality the left and right duals differ, so the
  // complete transform must pick the matching orientation.
  const auto a = make_group({2, 2});
  const auto c = subgroup_closure(a, {a.element({1, 0})});
  const Duality phi(Automorphism(Homomorphism(a, a, {{1, 1}, {0, 1}})));
  ASSERT_NE(left_dual(c, phi), right_dual(c, phi));
  EXPECT_NE(mw_complete_transform(cwe(c, a), phi, Side::right, Direction::to_dual), cwe(left_dual(c, phi), a));
}

TEST(Fourier, InversionOnRandomFunctions) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (const auto& d : std::vector<oracle::Vec>{{2, 4}, {3, 3}, {9}}) {
    const auto g = make_group(d);
    std::vector<CycMultiPoly> f(static_cast<std::size_t>(g.cardinality()));
    for (auto& v : f) {
      v.modulus = g.exponent();
      v.add({dist(rng) & 1}, CycInt(g.exponent(), dist(rng)));
    }
    EXPECT_TRUE(fourier_inversion_holds(g, f));
  }
}

TEST(Fourier, SingleCoordinateHamming) {
  const auto a = make_group({2, 4});
  for (const auto& pi : all_characters(a)) {
    const auto [x, y] = ft_hamming_single(a, pi);
    EXPECT_EQ(x, 1);
    EXPECT_EQ(y, pi.is_trivial() ? 7 : -1);
  }
  // agrees with the general transform of a -> X^(1-h) Y^h
  const auto f = hamming_monomial_map(a, 1);
  const auto fh = fourier_transform(a, f);
  for (std::int64_t i = 0; i < a.cardinality(); ++i) {
    CycMultiPoly want;
    want.modulus = 4;
    want.add({1, 0}, CycInt(4, 1));
    want.add({0, 1}, CycInt(4, i == 0 ? 7 : -1));
    EXPECT_EQ(fh[static_cast<std::size_t>(i)], want);
  }
}

TEST(Poisson, SubgroupsOfSmallGroups) {
  for (const auto& d : std::vector<oracle::Vec>{{2, 4}, {3, 3}}) {
    const auto g = make_group(d);
    const auto f = complete_monomial_map(g, 1);
    for (const auto& h : all_subgroups(g)) {
      EXPECT_TRUE(poisson_check(h, f));
      const auto s = poisson_sides(h, f);
      EXPECT_EQ(s.lhs, s.rhs);
    }
  }
}

TEST(Enumerators, LargeCoefficientsStayExact) {
  // The whole of (Z/2)^20: binomial coefficients, and its dual is zero.
  const auto a = make_group({2});
  const auto p = power_group(a, 20);
  const auto whole = whole_group(p);
  const auto w = hwe(whole, a);
  EXPECT_EQ(w.coeffs[10], 184756);
  const auto zero = mw_hamming_transform(w, 2, whole.order());
  EXPECT_EQ(zero.coeffs[0], 1);
  for (std::size_t i = 1; i <= 20; ++i) EXPECT_EQ(zero.coeffs[i], 0);
}
