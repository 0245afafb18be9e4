#include "adk/codes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "adk/errors.hpp"

namespace adk {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Visits every element of g in index order with its coordinates.
template <class F>
void for_each_element(const GroupSpec& g, F&& f) {
  std::vector<std::int64_t> x(g.rank(), 0);
  for (std::int64_t idx = 0; idx < g.cardinality(); ++idx) {
    f(idx, x);
    for (std::size_t i = g.rank(); i-- > 0;) {
      if (++x[i] < g.order(i)) break;
      x[i] = 0;
    }
  }
}

Duality on_code_group(const Subgroup& code, const Duality& phi) {
  if (phi.parent() == code.parent()) return phi;
  return extend_duality(phi, power_length(code.parent(), phi.parent()));
}

}  // namespace

GroupSpec power_group(const GroupSpec& base, std::size_t n) {
  if (n < 1) throw Error("code length must be >= 1");
  std::vector<std::int64_t> orders;
  for (std::size_t b = 0; b < n; ++b) orders.insert(orders.end(), base.orders().begin(), base.orders().end());
  return GroupSpec(std::move(orders));
}

std::size_t power_length(const GroupSpec& power, const GroupSpec& base) {
  const auto k = base.rank();
  if (power.rank() % k != 0) throw Error("group is not a power of the base group");
  const auto n = power.rank() / k;
  for (std::size_t i = 0; i < power.rank(); ++i)
    if (power.order(i) != base.order(i % k)) throw Error("group is not a power of the base group");
  return n;
}

Duality extend_duality(const Duality& phi, std::size_t n) {
  if (n == 1) return phi;
  const auto power = power_group(phi.parent(), n);
  return Duality(Automorphism::block_diagonal(phi.tau(), n, power));
}

Subgroup dual_code(const Subgroup& code, const Duality& phi_in, Side side, const Limits& limits) {
  const Duality phi = on_code_group(code, phi_in);
  const auto& g = code.parent();
  if (g.cardinality() > limits.scan) throw LimitError("dual code scan", g.cardinality(), limits.scan);
  const auto k = g.rank();
  const auto m = g.exponent();
  const auto& gram = phi.gram();

  // One linear functional per generator of C.
  std::vector<std::vector<std::int64_t>> functionals;
  for (const auto& c : code.generators()) {
    std::vector<std::int64_t> u(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (side == Side::left) u[i] = (u[i] + gram[i][j] * c[j]) % m;
        else u[j] = (u[j] + c[i] * gram[i][j]) % m;
      }
    functionals.push_back(std::move(u));
  }
  std::vector<std::int64_t> members;
  for_each_element(g, [&](std::int64_t idx, const std::vector<std::int64_t>& x) {
    for (const auto& u : functionals) {
      std::int64_t e = 0;
      for (std::size_t i = 0; i < k; ++i) e += x[i] * u[i];
      if (e % m != 0) return;
    }
    members.push_back(idx);
  });
  if (static_cast<std::int64_t>(members.size()) * code.order() != g.cardinality()) {
    throw InternalError("dual code has the wrong size");
  }
  return Subgroup::from_indices(g, std::move(members));
}

Subgroup left_dual(const Subgroup& code, const Duality& phi, const Limits& limits) {
  return dual_code(code, phi, Side::left, limits);
}

Subgroup right_dual(const Subgroup& code, const Duality& phi, const Limits& limits) {
  return dual_code(code, phi, Side::right, limits);
}

SelfDualKind self_dual_kind(const Subgroup& code, const Duality& phi, const Limits& limits) {
  const auto l = left_dual(code, phi, limits);
  const auto r = right_dual(code, phi, limits);
  const bool left_orth = code.is_subset_of(l);
  if (left_orth != code.is_subset_of(r)) throw InternalError("left and right self-orthogonality disagree");
  if (!left_orth) return SelfDualKind::none;
  if ((code == l) != (code == r)) throw InternalError("left and right self-duality disagree");
  return code == l ? SelfDualKind::self_dual : SelfDualKind::self_orthogonal;
}

CycInt dual_sum_check(const Subgroup& code, const Duality& phi_in, const GroupElement& x, Side side) {
  const Duality phi = on_code_group(code, phi_in);
  if (!(x.parent() == code.parent())) throw Error("element is not in the code's ambient group");
  RootSum sum(code.parent().exponent());
  const auto xi = x.index();
  for (const auto y : code.indices()) sum.add(side == Side::left ? phi.iexp_index(xi, y) : phi.iexp_index(y, xi));
  return sum.value();
}

Duality duality_from_basis_form(const GroupSpec& group, const std::vector<GroupElement>& basis, const Matrix& gram) {
  const auto m = group.exponent();
  const auto r = basis.size();
  if (gram.size() != r) throw Error("form matrix does not match the basis");
  std::vector<std::int64_t> ord;
  std::int64_t total = 1;
  for (const auto& e : basis) {
    ord.push_back(e.order());
    total *= ord.back();
  }
  if (total != group.cardinality()) throw Error("basis orders do not multiply to |A|");
  for (std::size_t l = 0; l < r; ++l) {
    if (gram[l].size() != r) throw Error("form matrix does not match the basis");
    for (std::size_t s = 0; s < r; ++s) {
      if (mod(ord[l] * gram[l][s], m) != 0 || mod(ord[s] * gram[l][s], m) != 0) {
        throw Error("form is not well defined on the basis orders");
      }
    }
  }
  // Coordinates of every element against the basis.
  std::vector<std::vector<std::int64_t>> coef(static_cast<std::size_t>(group.cardinality()));
  std::vector<std::int64_t> c(r, 0);
  for (std::int64_t count = 0; count < total; ++count) {
    std::int64_t x = 0;
    for (std::size_t l = 0; l < r; ++l) x = group.add_index(x, group.scale_index(basis[l].index(), c[l]));
    auto& slot = coef[static_cast<std::size_t>(x)];
    if (!slot.empty()) throw Error("elements do not form a basis");
    slot = c;
    for (std::size_t l = r; l-- > 0;) {
      if (++c[l] < ord[l]) break;
      c[l] = 0;
    }
  }
  const auto k = group.rank();
  Matrix g(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    const auto& ci = coef[static_cast<std::size_t>(group.generator(i).index())];
    for (std::size_t j = 0; j < k; ++j) {
      const auto& cj = coef[static_cast<std::size_t>(group.generator(j).index())];
      std::int64_t e = 0;
      for (std::size_t l = 0; l < r; ++l)
        for (std::size_t s = 0; s < r; ++s) e = mod(e + ci[l] * cj[s] % m * gram[l][s], m);
      g[i][j] = e;
    }
  }
  return Duality::from_gram(group, g);
}

namespace {

bool all_orders_equal_prime(const GroupSpec& g) {
  const auto p = g.order(0);
  if (prime_factors(p).size() != 1 || prime_factors(p).front() != p) return false;
  return std::all_of(g.orders().begin(), g.orders().end(), [&](auto d) { return d == p; });
}

// Extends `basis` greedily by elements of `within` (canonical order) until
// it spans `within`.
void extend_basis(const GroupSpec& g, std::vector<GroupElement>& basis, const Subgroup& within) {
  for (const auto x : within.indices()) {
    if (subgroup_closure(g, basis).contains_index(x)) continue;
    basis.push_back(g.element_at(x));
  }
}

// Elements e_1..e_r of h with h = <e_1> + ... + <e_r> a direct sum, preferring
// large orders, by backtracking.
std::optional<std::vector<GroupElement>> direct_sum_basis(const Subgroup& h) {
  const auto& g = h.parent();
  std::vector<std::int64_t> cand(h.indices().begin() + 1, h.indices().end());
  std::stable_sort(cand.begin(), cand.end(), [&](auto a, auto b) {
    return g.element_at(a).order() > g.element_at(b).order();
  });
  std::vector<GroupElement> chosen;
  std::function<bool(const Subgroup&)> go = [&](const Subgroup& span) -> bool {
    if (span.order() == h.order()) return true;
    for (const auto x : cand) {
      const auto e = g.element_at(x);
      // <e> meets span trivially iff the closure grows by the full order.
      auto gens = span.generators();
      gens.push_back(e);
      const auto bigger = subgroup_closure(g, gens);
      if (bigger.order() != span.order() * e.order()) continue;
      if (h.order() % bigger.order() != 0) continue;
      chosen.push_back(e);
      if (go(bigger)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!go(trivial_subgroup(g))) return std::nullopt;
  return chosen;
}

void check_pair(const Duality& phi, const Subgroup& h, const Subgroup& k) {
  if (!is_symmetric(phi) || !(left_dual(h, phi) == k) || !(right_dual(h, phi) == k) || !(left_dual(k, phi) == h) ||
      !(right_dual(k, phi) == h)) {
    throw InternalError("constructed duality does not pair the two subgroups");
  }
}

}  // namespace

Duality construct_duality_for_pair(const Subgroup& h, const Subgroup& k) {
  const auto& g = h.parent();
  if (!(k.parent() == g)) throw Error("subgroups live in different groups");
  if (h.order() * k.order() != g.cardinality()) throw Error("|H||K| must equal |A|");
  const auto m = g.exponent();

  if (all_orders_equal_prime(g)) {
    std::vector<GroupElement> basis;
    std::vector<std::int64_t> meet;
    for (const auto x : h.indices())
      if (k.contains_index(x)) meet.push_back(x);
    extend_basis(g, basis, Subgroup::from_indices(g, meet));
    const auto i = basis.size();
    extend_basis(g, basis, h);
    const auto dim_h = basis.size();
    // Continue with K's basis, starting from H cap K only.
    std::vector<GroupElement> kbasis(basis.begin(), basis.begin() + static_cast<std::ptrdiff_t>(i));
    extend_basis(g, kbasis, k);
    basis.insert(basis.end(), kbasis.begin() + static_cast<std::ptrdiff_t>(i), kbasis.end());
    const auto c = basis.size();
    extend_basis(g, basis, whole_group(g));
    const auto n = basis.size();
    (void)dim_h;
    // The involution swapping e_1..e_i with e_{c+1}..e_n.
    auto sigma = [&](std::size_t j) {  // 0-based
      if (j < i) return c + j;
      if (j < c) return j;
      return j - c;
    };
    Matrix form(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t j = 0; j < n; ++j) form[j][sigma(j)] = 1;
    Duality phi = duality_from_basis_form(g, basis, form);
    check_pair(phi, h, k);
    return phi;
  }

  bool meet_trivial = true;
  for (const auto x : h.indices())
    if (x != 0 && k.contains_index(x)) meet_trivial = false;
  if (meet_trivial) {
    auto hb = direct_sum_basis(h);
    auto kb = direct_sum_basis(k);
    if (!hb || !kb) throw InternalError("no cyclic decomposition found");
    std::vector<GroupElement> basis = *hb;
    basis.insert(basis.end(), kb->begin(), kb->end());
    Matrix form(basis.size(), std::vector<std::int64_t>(basis.size(), 0));
    for (std::size_t l = 0; l < basis.size(); ++l) form[l][l] = m / basis[l].order();
    Duality phi = duality_from_basis_form(g, basis, form);
    check_pair(phi, h, k);
    return phi;
  }
  throw UnsupportedError("no construction for this pair: the group is not elementary abelian and A is not H + K");
}

std::optional<Duality> search_duality_for_pair(const Subgroup& h, const Subgroup& k, bool symmetric_only,
                                               const Limits& limits) {
  if (!(k.parent() == h.parent())) throw Error("subgroups live in different groups");
  for (auto& phi : all_dualities(h.parent(), limits)) {
    if (symmetric_only && !is_symmetric(phi)) continue;
    if (left_dual(h, phi, limits) == k && right_dual(h, phi, limits) == k) return std::move(phi);
  }
  return std::nullopt;
}

DualsTable duals_table(const GroupSpec& group, const std::vector<Subgroup>& subgroups, const Limits& limits) {
  DualsTable t;
  t.dualities = all_dualities(group, limits);
  t.subgroups = subgroups;
  for (const auto& phi : t.dualities) {
    std::vector<std::pair<Subgroup, Subgroup>> row;
    for (const auto& h : subgroups) row.emplace_back(left_dual(h, phi, limits), right_dual(h, phi, limits));
    t.cells.push_back(std::move(row));
  }
  return t;
}

std::vector<FiltrationStep> mult_by_p_filtration(const GroupSpec& group, std::int64_t p, const Limits& limits) {
  const auto q = p_group_prime(group);
  if (!q || *q != p) throw Error("group is not a " + std::to_string(p) + "-group");
  std::vector<FiltrationStep> steps;
  std::int64_t power = 1;
  for (std::int64_t j = 0;; ++j) {
    std::vector<std::int64_t> ker, im;
    std::vector<char> hit(static_cast<std::size_t>(group.cardinality()), 0);
    for (std::int64_t x = 0; x < group.cardinality(); ++x) {
      const auto y = group.scale_index(x, power);
      if (y == 0) ker.push_back(x);
      hit[static_cast<std::size_t>(y)] = 1;
    }
    for (std::int64_t x = 0; x < group.cardinality(); ++x)
      if (hit[static_cast<std::size_t>(x)]) im.push_back(x);
    FiltrationStep step{j, Subgroup::from_indices(group, std::move(ker)), Subgroup::from_indices(group, std::move(im))};
    if (!is_characteristic(step.kernel, limits) || !is_characteristic(step.image, limits)) {
      throw InternalError("filtration subgroup is not characteristic");
    }
    const bool done = step.image.is_trivial();
    steps.push_back(std::move(step));
    if (done) break;
    power *= p;
  }
  return steps;
}

bool verify_filtration_duality(const GroupSpec& group, std::int64_t p, const Limits& limits) {
  const auto steps = mult_by_p_filtration(group, p, limits);
  for (const auto& phi : all_dualities(group, limits)) {
    for (const auto& s : steps) {
      if (!(left_dual(s.kernel, phi, limits) == s.image) || !(right_dual(s.kernel, phi, limits) == s.image)) return false;
    }
  }
  return true;
}

namespace {

void group_by_value(const std::vector<Subgroup>& values_in, std::vector<Subgroup>& values,
                    std::vector<std::vector<std::size_t>>& classes) {
  for (std::size_t d = 0; d < values_in.size(); ++d) {
    const auto it = std::find(values.begin(), values.end(), values_in[d]);
    if (it == values.end()) {
      values.push_back(values_in[d]);
      classes.push_back({d});
    } else {
      classes[static_cast<std::size_t>(it - values.begin())].push_back(d);
    }
  }
}

}  // namespace

DependenceReport duality_dependence(const Subgroup& h, const Limits& limits) {
  DependenceReport r;
  r.dualities = all_dualities(h.parent(), limits);
  const auto stab = stabilizer(h, limits);
  r.stabilizer_order = stab.size();
  r.characteristic = is_characteristic(h, limits);

  std::vector<Subgroup> lefts, rights;
  for (const auto& phi : r.dualities) {
    lefts.push_back(left_dual(h, phi, limits));
    rights.push_back(right_dual(h, phi, limits));
  }
  group_by_value(lefts, r.left_values, r.left_classes);
  group_by_value(rights, r.right_values, r.right_classes);

  auto coset = [&](const Duality& phi) {
    std::vector<Duality> out;
    for (const auto& s : stab) out.emplace_back(s.then(phi.tau()));
    std::sort(out.begin(), out.end());
    return out;
  };
  for (const auto& cls : r.right_classes) {
    std::vector<Duality> members;
    for (const auto d : cls) members.push_back(r.dualities[d]);
    if (members != coset(members.front())) throw InternalError("right-dual class is not a stabilizer coset");
  }
  for (const auto& cls : r.left_classes) {
    std::vector<Duality> adjoints;
    for (const auto d : cls) adjoints.push_back(adjoint(r.dualities[d]));
    std::sort(adjoints.begin(), adjoints.end());
    if (adjoints != coset(adjoints.front())) throw InternalError("left-dual class is not a stabilizer coset");
  }
  if ((r.right_classes.size() == 1) != r.characteristic || (r.left_classes.size() == 1) != r.characteristic) {
    throw InternalError("duality dependence disagrees with characteristic test");
  }
  return r;
}

}  // namespace adk
