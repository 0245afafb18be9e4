#include <gtest/gtest.h>

#include <random>

#include "adk/cyclotomic.hpp"
#include "adk/errors.hpp"

using namespace adk;

TEST(CyclotomicPoly, KnownCoefficients) {
  const std::map<std::int64_t, std::vector<std::int64_t>> known = {
      {1, {-1, 1}},
      {2, {1, 1}},
      {3, {1, 1, 1}},
      {4, {1, 0, 1}},
      {5, {1, 1, 1, 1, 1}},
      {6, {1, -1, 1}},
      {8, {1, 0, 0, 0, 1}},
      {9, {1, 0, 0, 1, 0, 0, 1}},
      {10, {1, -1, 1, -1, 1}},
      {12, {1, 0, -1, 0, 1}},
      {15, {1, -1, 0, 1, -1, 1, 0, -1, 1}},
  };
  for (const auto& [m, c] : known) EXPECT_EQ(cyclotomic_poly(m).coeffs(), c) << "m = " << m;
}

TEST(CyclotomicPoly, FirstNonUnitCoefficientAt105) {
  const auto& c = cyclotomic_poly(105).coeffs();
  EXPECT_EQ(c.size(), 49u);
  EXPECT_EQ(c[7], -2);
  EXPECT_EQ(c[41], -2);
}

TEST(CyclotomicPoly, ProductOverDivisorsIsXmMinusOne) {
  for (std::int64_t m = 1; m <= 40; ++m) {
    CycPoly prod({1});
    for (std::int64_t d = 1; d <= m; ++d)
      if (m % d == 0) prod = prod * cyclotomic_poly(d);
    EXPECT_EQ(prod, CycPoly::x_pow_minus_one(m)) << "m = " << m;
    EXPECT_EQ(cyclotomic_poly(m).degree(), euler_phi(m));
  }
}

TEST(CycInt, RootsOfUnity) {
  for (std::int64_t m : {1, 2, 3, 4, 6, 8, 9, 12, 15, 16}) {
    EXPECT_EQ(root_power(m, m), CycInt(m, 1));
    EXPECT_EQ(root_power(m, 0), CycInt(m, 1));
    CycInt sum(m);
    for (std::int64_t e = 0; e < m; ++e) sum += root_power(m, e);
    EXPECT_EQ(sum, CycInt(m, m == 1 ? 1 : 0)) << "m = " << m;
    for (std::int64_t e = 0; e < m; ++e)
      for (std::int64_t f = 0; f < m; ++f) EXPECT_EQ(root_power(m, e) * root_power(m, f), root_power(m, e + f));
    EXPECT_EQ(root_power(m, -1), root_power(m, m - 1));
  }
}

TEST(CycInt, PrimitiveRootSumsAreMobius) {
  // sum of primitive m-th roots is mu(m)
  const std::map<std::int64_t, std::int64_t> mu = {{1, 1}, {2, -1}, {3, -1}, {4, 0}, {5, -1}, {6, 1},
                                                   {8, 0}, {9, 0},  {10, 1}, {12, 0}, {30, -1}};
  for (const auto& [m, want] : mu) {
    CycInt sum(m);
    for (std::int64_t e = 1; e <= m; ++e)
      if (std::gcd(e, m) == 1) sum += root_power(m, e);
    BigInt v;
    ASSERT_TRUE(sum.is_integer(&v)) << m;
    EXPECT_EQ(v, want) << "m = " << m;
  }
}

TEST(CycInt, RingAxiomsOnRandomElements) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (std::int64_t m : {4, 8, 9, 12}) {
    auto random = [&] {
      std::vector<BigInt> p(static_cast<std::size_t>(m));
      for (auto& x : p) x = dist(rng);
      return CycInt::from_powers(m, p);
    };
    for (int t = 0; t < 30; ++t) {
      const auto a = random(), b = random(), c = random();
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - a, CycInt(m));
      EXPECT_EQ(-(-a), a);
      EXPECT_EQ(a.mul_root(3), a * root_power(m, 3));
      EXPECT_EQ((a * BigInt(6)).divide_exact(6), a);
    }
  }
}

TEST(CycInt, DivideExactReportsRemainders) {
  EXPECT_THROW(CycInt(4, 3).divide_exact(2), NonIntegralError);
  EXPECT_THROW(CycInt(4, 3).divide_exact(0), NonIntegralError);
  const auto x = (CycInt(4, 1) + root_power(4, 1)) * BigInt(2);
  EXPECT_EQ(x.divide_exact(2), CycInt(4, 1) + root_power(4, 1));
}

TEST(CycInt, IntegerDetection) {
  BigInt v;
  EXPECT_TRUE(CycInt(8, 5).is_integer(&v));
  EXPECT_EQ(v, 5);
  EXPECT_FALSE(root_power(8, 1).is_integer());
  EXPECT_TRUE((root_power(4, 1) * root_power(4, 1)).is_integer(&v));
  EXPECT_EQ(v, -1);
}

TEST(CycInt, EmbedPreservesValues) {
  for (std::int64_t e = 0; e < 4; ++e) EXPECT_EQ(root_power(4, e).embed(12), root_power(12, 3 * e));
  EXPECT_THROW(root_power(4, 1).embed(6), Error);
}

TEST(CycInt, MixedModuliRejected) { EXPECT_THROW(CycInt(4, 1) + CycInt(8, 1), Error); }

TEST(CycInt, TextForm) {
  EXPECT_EQ(CycInt(8).to_string(), "0");
  EXPECT_EQ(CycInt(8, -3).to_string(), "-3");
  EXPECT_EQ((CycInt(8, 1) - root_power(8, 2) + root_power(8, 3) * BigInt(2)).to_string(), "1 - ζ8^2 + 2·ζ8^3");
}

TEST(RootSum, MatchesDirectSum) {
  for (std::int64_t m : {6, 8, 9, 1000}) {
    RootSum s(m);
    CycInt direct(m);
    std::mt19937 rng(static_cast<unsigned>(m));
    for (int t = 0; t < 50; ++t) {
      const std::int64_t e = std::uniform_int_distribution<std::int64_t>(-m, 2 * m)(rng);
      const std::int64_t k = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
      s.add(e, k);
      direct += root_power(m, e) * BigInt(k);
    }
    EXPECT_EQ(s.value(), direct) << "m = " << m;
  }
}
