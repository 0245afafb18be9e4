#include <gtest/gtest.h>

#include "adk/codes.hpp"
#include "adk/errors.hpp"
#include "adk/io.hpp"
#include "bridge.hpp"
#include "oracle.hpp"

using namespace adk;

namespace {

Subgroup span(const GroupSpec& g, std::initializer_list<const char*> gens) {
  std::vector<GroupElement> els;
  for (const auto* s : gens) els.push_back(parse_element(g, s));
  return subgroup_closure(g, els);
}

}  // namespace

TEST(Codes, PowerGroups) {
  const auto a = make_group({2, 4});
  EXPECT_EQ(power_group(a, 3), make_group({2, 4, 2, 4, 2, 4}));
  EXPECT_EQ(power_length(power_group(a, 3), a), 3u);
  EXPECT_THROW(power_length(make_group({2, 4, 2}), a), Error);
}

TEST(Codes, ExtendedDualityIsProduct) {
  const auto a = make_group({2, 4});
  const auto phi = all_dualities(a)[3];
  const auto ext = extend_duality(phi, 2);
  const auto p = power_group(a, 2);
  for (std::int64_t x = 0; x < p.cardinality(); ++x)
    for (std::int64_t y = 0; y < p.cardinality(); ++y) {
      const auto xv = p.coords_of(x), yv = p.coords_of(y);
      EXPECT_EQ(ext.iexp_index(x, y), oracle::word_exp({2, 4}, bridge::mat(phi), xv, yv));
    }
}

TEST(Codes, DualsMatchOracleOverF2Cubed) {
  const oracle::Vec d{2, 2, 2};
  const auto g = make_group(d);
  const auto subs = all_subgroups(g);
  for (const auto& phi : all_dualities(g))
    for (const auto& c : subs) {
      const auto cs = bridge::to_set(c);
      EXPECT_EQ(bridge::to_set(left_dual(c, phi)), oracle::dual(d, 1, bridge::mat(phi), cs, true));
      EXPECT_EQ(bridge::to_set(right_dual(c, phi)), oracle::dual(d, 1, bridge::mat(phi), cs, false));
    }
}

TEST(Codes, ReversesInclusion) {
  const auto g = make_group({2, 4});
  const auto subs = all_subgroups(g);
  for (const auto& phi : all_dualities(g))
    for (const auto& a : subs)
      for (const auto& b : subs)
        if (a.is_subset_of(b)) EXPECT_TRUE(left_dual(b, phi).is_subset_of(left_dual(a, phi)));
}

TEST(Codes, SelfDualKinds) {
  const auto g = make_group({2, 2, 2});
  const Duality phi(Automorphism(Homomorphism(g, g, {{0, 0, 1}, {1, 1, 0}, {1, 0, 0}})));
  EXPECT_EQ(self_dual_kind(span(g, {"100"}), phi), SelfDualKind::self_orthogonal);
  const auto k = make_group({2, 2});
  const Duality swap(Automorphism(Homomorphism(k, k, {{0, 1}, {1, 0}})));
  for (const char* gen : {"10", "01", "11"}) EXPECT_EQ(self_dual_kind(span(k, {gen}), swap), SelfDualKind::self_dual);
  EXPECT_EQ(self_dual_kind(whole_group(k), swap), SelfDualKind::none);
}

TEST(Codes, CharacterSumCriterion) {
  const auto a = make_group({3, 3});
  const auto p = power_group(a, 2);
  const auto phi = all_dualities(a)[7];
  const auto c = subgroup_closure(p, {p.element({1, 2, 0, 1})});
  const auto l = left_dual(c, phi), r = right_dual(c, phi);
  for (const auto& x : p.elements()) {
    EXPECT_EQ(dual_sum_check(c, phi, x, Side::left), CycInt(3, l.contains(x) ? 3 : 0));
    EXPECT_EQ(dual_sum_check(c, phi, x, Side::right), CycInt(3, r.contains(x) ? 3 : 0));
  }
}

TEST(Codes, ScanLimit) {
  Limits small;
  small.scan = 100;
  const auto a = make_group({3, 3});
  const auto p = power_group(a, 3);
  const auto c = subgroup_closure(p, {p.element({1, 0, 0, 0, 0, 0})});
  try {
    left_dual(c, Duality::canonical(a), small);
    FAIL() << "expected LimitError";
  } catch (const LimitError& e) {
    EXPECT_EQ(e.cardinality(), 729);
  }
}

TEST(Codes, BasisForm) {
  const auto g = make_group({2, 2});
  const std::vector<GroupElement> basis = {g.element({1, 1}), g.element({0, 1})};
  const auto phi = duality_from_basis_form(g, basis, {{0, 1}, {1, 0}});
  EXPECT_EQ(phi.iexp(basis[0], basis[1]), 1);
  EXPECT_EQ(phi.iexp(basis[0], basis[0]), 0);
  EXPECT_EQ(phi.iexp(basis[1], basis[1]), 0);
}

TEST(ConstructPair, DirectSumCase) {
  const auto g = make_group({2, 4});
  const auto h = span(g, {"10"});
  const auto k = span(g, {"01"});
  const auto phi = construct_duality_for_pair(h, k);
  EXPECT_TRUE(is_symmetric(phi));
  EXPECT_EQ(left_dual(h, phi), k);
  EXPECT_EQ(right_dual(h, phi), k);
  EXPECT_EQ(left_dual(k, phi), h);
}

TEST(ConstructPair, ImpossiblePairs) {
  const auto g = make_group({2, 4});
  const auto l_inf = span(g, {"02"});
  const auto c1 = span(g, {"01"});
  EXPECT_THROW(construct_duality_for_pair(l_inf, c1), UnsupportedError);
  EXPECT_FALSE(search_duality_for_pair(l_inf, c1).has_value());
  EXPECT_THROW(construct_duality_for_pair(l_inf, l_inf), Error);
}

TEST(ConstructPair, ElementaryAbelianRankFour) {
  const auto g = make_group({2, 2, 2, 2});
  const auto subs = all_subgroups(g);
  for (const auto& h : subs)
    for (const auto& k : subs) {
      if (h.order() * k.order() != g.cardinality()) continue;
      const auto phi = construct_duality_for_pair(h, k);
      EXPECT_TRUE(is_symmetric(phi));
      EXPECT_EQ(left_dual(h, phi), k);
      EXPECT_EQ(right_dual(k, phi), h);
    }
}

TEST(DualsTable, Shape) {
  const auto g = make_group({2, 4});
  const auto subs = all_subgroups(g);
  const auto t = duals_table(g, subs);
  ASSERT_EQ(t.dualities.size(), 8u);
  ASSERT_EQ(t.cells.size(), 8u);
  for (std::size_t d = 0; d < 8; ++d)
    for (std::size_t s = 0; s < subs.size(); ++s) {
      EXPECT_EQ(t.cells[d][s].first, left_dual(subs[s], t.dualities[d]));
      EXPECT_EQ(t.cells[d][s].second, right_dual(subs[s], t.dualities[d]));
    }
}

TEST(Filtration, KernelsAndImages) {
  const auto g = make_group({2, 8});
  const auto steps = mult_by_p_filtration(g, 2);
  ASSERT_EQ(steps.size(), 4u);
  EXPECT_EQ(steps[1].kernel.order(), 4);
  EXPECT_EQ(steps[1].image.order(), 4);
  EXPECT_EQ(steps[2].kernel.order(), 8);
  EXPECT_EQ(steps[2].image.order(), 2);
  EXPECT_TRUE(steps[3].image.is_trivial());
  EXPECT_TRUE(verify_filtration_duality(g, 2));
  EXPECT_TRUE(verify_filtration_duality(make_group({4, 4}), 2));
}

TEST(Dependence, CharacteristicMeansOneClass) {
  const auto g = make_group({2, 4});
  for (const auto& h : all_subgroups(g)) {
    const auto rep = duality_dependence(h);
    EXPECT_EQ(rep.characteristic, is_characteristic(h));
    EXPECT_EQ(rep.right_values.size() == 1, rep.characteristic);
    EXPECT_EQ(rep.left_values.size() == 1, rep.characteristic);
    std::size_t total = 0;
    for (const auto& c : rep.right_classes) {
      EXPECT_EQ(c.size(), rep.stabilizer_order);
      total += c.size();
    }
    EXPECT_EQ(total, 8u);
  }
}
