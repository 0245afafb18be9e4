#pragma once

// Dualities phi: A -> Â. Each is phi(a) = phi_0(a tau) for an automorphism
// tau, where phi_0 is the weighted diagonal form
//   <phi_0(a), b> = zeta_m^(sum_i w_i a_i b_i).
// The inner product exponent is iexp(a, b) = sum_ij a_i b_j G[i][j] mod m
// with Gram matrix G[i][j] = w_j tau[i][j].

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "adk/characters.hpp"
#include "adk/group.hpp"

namespace adk {

using Matrix = std::vector<std::vector<std::int64_t>>;
using BigRational = boost::multiprecision::cpp_rational;

class Duality {
 public:
  explicit Duality(Automorphism tau);
  static Duality canonical(const GroupSpec& group);
  /// The duality whose Gram matrix is `gram` (entries mod m). Throws Error if
  /// some entry is not a multiple of its column weight or the form is
  /// degenerate.
  static Duality from_gram(const GroupSpec& group, const Matrix& gram);

  const GroupSpec& parent() const noexcept { return tau_.group(); }
  const Automorphism& tau() const noexcept { return tau_; }
  const Matrix& gram() const noexcept { return gram_; }

  std::int64_t iexp(const GroupElement& a, const GroupElement& b) const;
  std::int64_t iexp_index(std::int64_t a, std::int64_t b) const;
  std::int64_t iexp_coords(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const;
  /// phi(a) as a character.
  Character image(const GroupElement& a) const;

  friend bool operator==(const Duality& a, const Duality& b) { return a.tau_ == b.tau_; }
  friend std::strong_ordering operator<=>(const Duality& a, const Duality& b) { return a.tau_ <=> b.tau_; }

 private:
  Automorphism tau_;
  Matrix gram_;
};

/// One duality per automorphism, in the automorphisms' canonical order.
std::vector<Duality> all_dualities(const GroupSpec& group, const Limits& limits = {});

std::int64_t inner_product_exponent(const Duality& phi, const GroupElement& a, const GroupElement& b);
CycInt inner_product(const Duality& phi, const GroupElement& a, const GroupElement& b);

/// phi* with <phi*(a), b> = <phi(b), a>.
Duality adjoint(const Duality& phi);
bool is_symmetric(const Duality& phi);

/// Number of symmetric invertible n x n matrices over F_q.
BigInt count_symmetric_invertible(std::int64_t n, std::int64_t q);
/// |GL(n, F_q)|.
BigInt general_linear_order(std::int64_t n, std::int64_t q);
/// count_symmetric_invertible / general_linear_order.
BigRational symmetric_ratio(std::int64_t n, std::int64_t q);

/// The image of phi under the change of basis tau: a, b -> iexp(a tau, b tau).
Duality transport(const Duality& phi, const Automorphism& tau);
/// A witness tau with iexp_2(a, b) = iexp_1(a tau, b tau), searched over Aut(A)
/// in canonical order.
std::optional<Automorphism> congruent(const Duality& phi1, const Duality& phi2, const Limits& limits = {});

/// Partition of all_dualities(group) into congruence classes, as indices into
/// that sequence. Each class is sorted; classes are ordered by their least
/// member, which is the representative.
std::vector<std::vector<std::size_t>> congruence_classes(const GroupSpec& group, const Limits& limits = {});

/// phi o (k id). Requires a p-group parent and gcd(k, p) = 1.
Duality power_duality(const Duality& phi, std::int64_t k);
/// a -> phi(-a).
Duality negated(const Duality& phi);
/// Some k coprime to p, 0 < k < exponent, with phi2 = phi1^k.
std::optional<std::int64_t> power_relation(const Duality& phi1, const Duality& phi2);
/// True iff phi2 = phi1^k for some k coprime to p; this is exactly when the
/// two dualities give the same left and right duals on every subgroup.
bool same_duals_everywhere(const Duality& phi1, const Duality& phi2);

/// The duality of A1 x A2 acting as phi1 on the first factor and phi2 on the
/// second.
Duality direct_sum(const Duality& phi1, const Duality& phi2);

}  // namespace adk
