#include "adk/dualities.hpp"

#include <algorithm>
#include <numeric>

#include "adk/errors.hpp"

namespace adk {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

constexpr std::int64_t kVerifyPairs = 1 << 20;

Matrix gram_of(const Automorphism& tau) {
  const auto& g = tau.group();
  const auto k = g.rank();
  Matrix gram(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = mod(g.weight(j) * tau.matrix()[i][j], g.exponent());
  return gram;
}

}  // namespace

Duality::Duality(Automorphism tau) : tau_(std::move(tau)), gram_(gram_of(tau_)) {}

Duality Duality::canonical(const GroupSpec& group) { return Duality(Automorphism::identity(group)); }

Duality Duality::from_gram(const GroupSpec& group, const Matrix& gram) {
  const auto k = group.rank();
  if (gram.size() != k) throw Error("Gram matrix has the wrong size");
  Homomorphism::Matrix t(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    if (gram[i].size() != k) throw Error("Gram matrix has the wrong size");
    for (std::size_t j = 0; j < k; ++j) {
      const auto v = mod(gram[i][j], group.exponent());
      if (v % group.weight(j) != 0) {
        throw Error("Gram entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not a multiple of " +
                    std::to_string(group.weight(j)));
      }
      t[i][j] = v / group.weight(j);
    }
  }
  auto tau = Automorphism::try_from(Homomorphism(group, group, std::move(t)));
  if (!tau) throw Error("bilinear form is degenerate");
  return Duality(std::move(*tau));
}

std::int64_t Duality::iexp_coords(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const {
  const auto m = parent().exponent();
  std::int64_t e = 0;
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    if (a[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < gram_.size(); ++j) row = (row + b[j] * gram_[i][j]) % m;
    e = (e + a[i] * row) % m;
  }
  return e;
}

std::int64_t Duality::iexp(const GroupElement& a, const GroupElement& b) const {
  if (!(a.parent() == parent()) || !(b.parent() == parent())) throw Error("elements do not belong to the duality's group");
  return iexp_coords(a.coords(), b.coords());
}

std::int64_t Duality::iexp_index(std::int64_t a, std::int64_t b) const {
  const auto k = parent().rank();
  std::vector<std::int64_t> x(k), y(k);
  parent().coords_of(a, x);
  parent().coords_of(b, y);
  return iexp_coords(x, y);
}

Character Duality::image(const GroupElement& a) const {
  const auto img = tau_.apply(a);
  return Character(parent(), std::vector<std::int64_t>(img.coords().begin(), img.coords().end()));
}

std::vector<Duality> all_dualities(const GroupSpec& group, const Limits& limits) {
  std::vector<Duality> out;
  for (auto& tau : automorphism_group(group, limits)) out.emplace_back(std::move(tau));
  return out;
}

std::int64_t inner_product_exponent(const Duality& phi, const GroupElement& a, const GroupElement& b) {
  return phi.iexp(a, b);
}

CycInt inner_product(const Duality& phi, const GroupElement& a, const GroupElement& b) {
  return root_power(phi.parent().exponent(), phi.iexp(a, b));
}

Duality adjoint(const Duality& phi) {
  // Row j of the adjoint's Gram matrix is the character b -> iexp(b, g_j).
  const auto& g = phi.parent();
  const auto k = g.rank();
  Matrix gram(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t l = 0; l < k; ++l) gram[j][l] = phi.gram()[l][j];
  Duality star = Duality::from_gram(g, gram);
  if (g.cardinality() * g.cardinality() <= kVerifyPairs) {
    for (std::int64_t a = 0; a < g.cardinality(); ++a)
      for (std::int64_t b = 0; b < g.cardinality(); ++b)
        if (star.iexp_index(a, b) != phi.iexp_index(b, a)) throw InternalError("adjoint fails its defining identity");
  }
  return star;
}

bool is_symmetric(const Duality& phi) {
  const auto& gram = phi.gram();
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram[i][j] != gram[j][i]) return false;
  return true;
}

BigInt count_symmetric_invertible(std::int64_t n, std::int64_t q) {
  if (n < 1) throw Error("matrix size must be >= 1");
  if (q < 2) throw Error("field size must be >= 2");
  const BigInt bq(q);
  BigInt out = 1;
  const auto t = n / 2;
  if (n % 2 == 0) {
    for (std::int64_t i = 1; i <= t; ++i)
      out *= boost::multiprecision::pow(bq, static_cast<unsigned>(2 * t + 1)) -
             boost::multiprecision::pow(bq, static_cast<unsigned>(2 * i));
  } else {
    for (std::int64_t i = 0; i <= t; ++i)
      out *= boost::multiprecision::pow(bq, static_cast<unsigned>(2 * t + 1)) -
             boost::multiprecision::pow(bq, static_cast<unsigned>(2 * i));
  }
  return out;
}

BigInt general_linear_order(std::int64_t n, std::int64_t q) {
  if (n < 1) throw Error("matrix size must be >= 1");
  const BigInt bq(q);
  BigInt out = 1;
  for (std::int64_t i = 0; i < n; ++i)
    out *= boost::multiprecision::pow(bq, static_cast<unsigned>(n)) - boost::multiprecision::pow(bq, static_cast<unsigned>(i));
  return out;
}

BigRational symmetric_ratio(std::int64_t n, std::int64_t q) {
  return BigRational(count_symmetric_invertible(n, q), general_linear_order(n, q));
}

Duality transport(const Duality& phi, const Automorphism& tau) {
  if (!(tau.group() == phi.parent())) throw Error("automorphism and duality live on different groups");
  const auto k = phi.parent().rank();
  Matrix gram(k, std::vector<std::int64_t>(k, 0));
  const auto& rows = tau.matrix();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = phi.iexp_coords(rows[i], rows[j]);
  return Duality::from_gram(phi.parent(), gram);
}

std::optional<Automorphism> congruent(const Duality& phi1, const Duality& phi2, const Limits& limits) {
  if (!(phi1.parent() == phi2.parent())) throw Error("dualities live on different groups");
  for (auto& tau : automorphism_group(phi1.parent(), limits)) {
    if (transport(phi1, tau) == phi2) return std::move(tau);
  }
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> congruence_classes(const GroupSpec& group, const Limits& limits) {
  const auto auts = automorphism_group(group, limits);
  std::vector<Duality> phis;
  phis.reserve(auts.size());
  for (const auto& tau : auts) phis.emplace_back(tau);
  std::vector<int> assigned(phis.size(), 0);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> cls;
    for (const auto& tau : auts) {
      const auto moved = transport(phis[i], tau);
      const auto it = std::lower_bound(phis.begin(), phis.end(), moved);
      if (it == phis.end() || !(*it == moved)) throw InternalError("transported duality missing from enumeration");
      const auto idx = static_cast<std::size_t>(it - phis.begin());
      if (!assigned[idx]) {
        assigned[idx] = 1;
        cls.push_back(idx);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace {

std::int64_t require_p_group(const GroupSpec& g) {
  const auto p = p_group_prime(g);
  if (!p) throw Error("group is not a p-group");
  return *p;
}

Duality scaled(const Duality& phi, std::int64_t k) {
  return Duality(phi.tau().then(Automorphism(Homomorphism::scalar(phi.parent(), k))));
}

}  // namespace

Duality power_duality(const Duality& phi, std::int64_t k) {
  const auto p = require_p_group(phi.parent());
  if (mod(k, p) == 0) throw Error("power must be coprime to " + std::to_string(p));
  // phi(k a) = phi_0(a (k tau)); k id is central so the order does not matter.
  Duality out = scaled(phi, k);
  if (!(adjoint(out) == scaled(adjoint(phi), k))) throw InternalError("power does not commute with the adjoint");
  return out;
}

Duality negated(const Duality& phi) { return scaled(phi, -1); }

std::optional<std::int64_t> power_relation(const Duality& phi1, const Duality& phi2) {
  if (!(phi1.parent() == phi2.parent())) throw Error("dualities live on different groups");
  const auto p = require_p_group(phi1.parent());
  const auto& g = phi1.parent();
  for (std::int64_t k = 1; k < g.exponent() || k == 1; ++k) {
    if (k % p == 0) continue;
    bool same = true;
    for (std::size_t i = 0; i < g.rank() && same; ++i)
      for (std::size_t j = 0; j < g.rank() && same; ++j)
        same = mod(k * phi1.tau().matrix()[i][j], g.order(j)) == phi2.tau().matrix()[i][j];
    if (same) return k;
  }
  return std::nullopt;
}

bool same_duals_everywhere(const Duality& phi1, const Duality& phi2) { return power_relation(phi1, phi2).has_value(); }

Duality direct_sum(const Duality& phi1, const Duality& phi2) {
  const auto& g1 = phi1.parent();
  const auto& g2 = phi2.parent();
  std::vector<std::int64_t> orders(g1.orders().begin(), g1.orders().end());
  orders.insert(orders.end(), g2.orders().begin(), g2.orders().end());
  GroupSpec g(std::move(orders));
  const auto m = g.exponent();
  const auto k1 = g1.rank();
  Matrix gram(g.rank(), std::vector<std::int64_t>(g.rank(), 0));
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < k1; ++j) gram[i][j] = phi1.gram()[i][j] * (m / g1.exponent());
  for (std::size_t i = 0; i < g2.rank(); ++i)
    for (std::size_t j = 0; j < g2.rank(); ++j) gram[k1 + i][k1 + j] = phi2.gram()[i][j] * (m / g2.exponent());
  return Duality::from_gram(g, gram);
}

}  // namespace adk
