#pragma once

// Hamming and complete weight enumerators of additive codes, the Fourier
// transform on A^n, and the MacWilliams transforms. Everything is exact.

#include <cstdint>
#include <map>
#include <vector>

#include "adk/codes.hpp"
#include "adk/cyclotomic.hpp"
#include "adk/dualities.hpp"

namespace adk {

/// Homogeneous polynomial of degree n in X, Y: sum_w coeffs[w] X^(n-w) Y^w.
struct HammingEnumerator {
  std::size_t n = 0;
  std::vector<BigInt> coeffs;

  friend bool operator==(const HammingEnumerator&, const HammingEnumerator&) = default;
};

/// Monomial prod_a Z_a^counts[a], keyed by the count vector over A in
/// canonical element order.
using Monomial = std::vector<std::int64_t>;

struct CompleteEnumerator {
  GroupSpec base;
  std::size_t n = 0;
  std::map<Monomial, BigInt> terms;  // zero coefficients never stored

  friend bool operator==(const CompleteEnumerator& a, const CompleteEnumerator& b) {
    return a.base == b.base && a.n == b.n && a.terms == b.terms;
  }
};

/// Number of nonzero blocks of x in A^n, A of rank `block_rank`.
std::int64_t hamming_weight(const GroupElement& x, std::size_t block_rank);
/// Count vector of x over A.
Monomial monomial_of(const GroupSpec& base, const GroupElement& x);

HammingEnumerator hwe(const Subgroup& code, const GroupSpec& base);
CompleteEnumerator cwe(const Subgroup& code, const GroupSpec& base);

/// Z_0 -> X, Z_a -> Y for a != 0.
HammingEnumerator hamming_specialization(const CompleteEnumerator& e);

/// (1/size_code) E(X + (size_a - 1) Y, X - Y), size_code being the size of
/// the code E enumerates. Throws NonIntegralError when
/// the division leaves a remainder.
HammingEnumerator mw_hamming_transform(const HammingEnumerator& e, std::int64_t size_a, const BigInt& size_code);

enum class Direction {
  /// E is the enumerator of C; the result is that of L(C) (left) or R(C) (right).
  to_dual,
  /// E is the enumerator of L(C) (left) or R(C) (right); the result is that of C.
  from_dual,
};

/// (1/|D|) sum over the words of D of prod_i sum_a Phi(.,.) Z_a with the
/// orientation fixed by side and direction:
///   to_dual/left and from_dual/right substitute Z_b <- sum_a Phi(a, b) Z_a,
///   to_dual/right and from_dual/left substitute Z_b <- sum_a Phi(b, a) Z_a.
/// phi lives on the base group A. Throws NonIntegralError if a coefficient
/// is not an integer after division.
CompleteEnumerator mw_complete_transform(const CompleteEnumerator& e, const Duality& phi, Side side,
                                         Direction direction, const Limits& limits = {});

/// Polynomial in some fixed set of variables with coefficients in Z[zeta_m],
/// keyed by exponent vector.
struct CycMultiPoly {
  std::int64_t modulus = 1;
  std::map<std::vector<std::int64_t>, CycInt> terms;  // zero coefficients never stored

  void add(const std::vector<std::int64_t>& exps, const CycInt& c);
  friend bool operator==(const CycMultiPoly& a, const CycMultiPoly& b) {
    return a.modulus == b.modulus && a.terms == b.terms;
  }
};

/// f-hat(pi) = sum_a <pi, a> f(a), for f given by value at every element
/// index of g; the result is indexed by character index.
std::vector<CycMultiPoly> fourier_transform(const GroupSpec& g, const std::vector<CycMultiPoly>& f);
/// f-hat at the listed characters only.
std::vector<CycMultiPoly> fourier_transform_at(const GroupSpec& g, const std::vector<CycMultiPoly>& f,
                                               std::span<const std::int64_t> characters);
/// |G| f(a) = sum_pi <pi, -a> f-hat(pi) for every a.
bool fourier_inversion_holds(const GroupSpec& g, const std::vector<CycMultiPoly>& f);

struct PoissonSides {
  CycMultiPoly lhs;  // sum over H of f
  CycMultiPoly rhs;  // (|H| / |A|) sum over (Â : H) of f-hat
};
PoissonSides poisson_sides(const Subgroup& h, const std::vector<CycMultiPoly>& f);
bool poisson_check(const Subgroup& h, const std::vector<CycMultiPoly>& f);

/// The functions a -> X^(n - h(a)) Y^(h(a)) and a -> prod_i Z_{a_i} on A^n.
std::vector<CycMultiPoly> hamming_monomial_map(const GroupSpec& base, std::size_t n);
std::vector<CycMultiPoly> complete_monomial_map(const GroupSpec& base, std::size_t n);

/// Fourier transform of a -> X^(1 - h(a)) Y^(h(a)) on A at pi: X + (|A|-1) Y
/// for trivial pi, X - Y otherwise. Coefficients of X and Y.
std::pair<BigInt, BigInt> ft_hamming_single(const GroupSpec& base, const Character& pi);

}  // namespace adk
