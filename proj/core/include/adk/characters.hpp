#pragma once

// Characters of A held as exponent tuples: the character e sends b to
// zeta_m^(sum_i w_i e_i b_i), w_i = m / d_i. The character group therefore
// has the same order sequence as A, and its subgroups are ordinary
// Subgroup values over the same GroupSpec.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "adk/cyclotomic.hpp"
#include "adk/group.hpp"

namespace adk {

class Character {
 public:
  /// Entries are reduced modulo the orders of `parent`.
  Character(GroupSpec parent, std::vector<std::int64_t> etuple);
  static Character trivial(const GroupSpec& parent);
  static Character at(const GroupSpec& parent, std::int64_t index);

  const GroupSpec& parent() const noexcept { return parent_; }
  std::span<const std::int64_t> etuple() const noexcept { return etuple_; }
  /// Canonical index of the etuple, read as an element of A.
  std::int64_t index() const { return parent_.index_of(etuple_); }
  bool is_trivial() const noexcept;

  /// Pointwise product.
  Character operator*(const Character& other) const;
  Character inverse() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.parent_ == b.parent_ && a.etuple_ == b.etuple_;
  }
  friend std::strong_ordering operator<=>(const Character& a, const Character& b) {
    return a.etuple_ <=> b.etuple_;
  }

 private:
  GroupSpec parent_;
  std::vector<std::int64_t> etuple_;
};

std::vector<Character> all_characters(const GroupSpec& group);

/// e with <pi, a> = zeta_m^e, m the exponent of A.
std::int64_t pairing_exponent(const Character& pi, const GroupElement& a);
/// Same pairing with both sides given by canonical index.
std::int64_t pairing_exponent_index(const GroupSpec& group, std::int64_t pi, std::int64_t a);
CycInt evaluate(const Character& pi, const GroupElement& a);

/// (Â : H), as a subgroup of Â.
Subgroup annihilator(const Subgroup& h);
/// (A : X) for a subgroup X of Â, identifying A with its double dual.
Subgroup annihilator_of_characters(const Subgroup& x);
/// (A : (Â : H)) == H.
bool double_annihilator_check(const Subgroup& h);

/// A character of A restricting to theta on H. theta is given by its value
/// exponents (mod exponent of A) on h.generators(). Throws Error if theta is
/// not a homomorphism on H.
Character extend_character(const Subgroup& h, std::span<const std::int64_t> theta);
/// Value exponents of pi on h.generators().
std::vector<std::int64_t> restrict_character(const Character& pi, const Subgroup& h);

/// alpha*: Â2 -> Â1 with <alpha*(pi), a> = <pi, alpha(a)>.
Homomorphism induced_hom(const Homomorphism& alpha);
/// Checks the defining identity of alpha* over all pairs.
bool verify_induced_hom(const Homomorphism& alpha, const Homomorphism& alpha_star);

}  // namespace adk
