#pragma once

// Exact arithmetic in Z[zeta_m], held as residues modulo the m-th
// cyclotomic polynomial.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace adk {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial, coefficients from the constant term up. Trailing
/// zeros are trimmed; the zero polynomial has no coefficients.
class CycPoly {
 public:
  CycPoly() = default;
  explicit CycPoly(std::vector<std::int64_t> coeffs);

  /// x^n - 1.
  static CycPoly x_pow_minus_one(std::int64_t n);

  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

  friend CycPoly operator*(const CycPoly& a, const CycPoly& b);
  /// Division by a monic polynomial that must leave no remainder.
  CycPoly divide_exact(const CycPoly& monic) const;

  std::string to_string() const;

  friend bool operator==(const CycPoly&, const CycPoly&) = default;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// Phi_m. Memoized; safe to call from several threads.
const CycPoly& cyclotomic_poly(std::int64_t m);

/// Euler phi, which is also deg Phi_m.
std::int64_t euler_phi(std::int64_t m);

/// An element of Z[zeta_m] in canonical form: the coefficient vector (length
/// phi(m)) of its reduced representative against 1, zeta, ..., zeta^(phi(m)-1).
class CycInt {
 public:
  /// Zero in Z[zeta_m].
  explicit CycInt(std::int64_t m);
  CycInt(std::int64_t m, const BigInt& n);
  /// Reduces an arbitrary coefficient sequence in powers of zeta.
  static CycInt from_powers(std::int64_t m, const std::vector<BigInt>& powers);

  std::int64_t modulus() const noexcept { return m_; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;
  /// The integer n if this equals n.
  bool is_integer(BigInt* value = nullptr) const;

  CycInt& operator+=(const CycInt& other);
  CycInt& operator-=(const CycInt& other);
  CycInt& operator*=(const CycInt& other);
  CycInt& operator*=(const BigInt& k);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  friend CycInt operator*(CycInt a, const BigInt& k) { return a *= k; }
  CycInt operator-() const;

  /// this * zeta^e.
  CycInt mul_root(std::int64_t e) const;
  /// Coefficientwise division; throws NonIntegralError on a remainder.
  CycInt divide_exact(const BigInt& n) const;
  /// The same number inside Z[zeta_big], using zeta_m = zeta_big^(big/m).
  CycInt embed(std::int64_t big) const;

  /// e.g. "1 - ζ8^2 + 2·ζ8^3".
  std::string to_string() const;

  friend bool operator==(const CycInt&, const CycInt&) = default;

 private:
  std::int64_t m_;
  std::vector<BigInt> coeffs_;
};

CycInt root_power(std::int64_t m, std::int64_t e);
CycInt add(const CycInt& a, const CycInt& b);
CycInt mul(const CycInt& a, const CycInt& b);
CycInt neg(const CycInt& a);
CycInt scale(const CycInt& a, const BigInt& k);
inline bool is_zero(const CycInt& x) { return x.is_zero(); }
inline CycInt divide_exact(const CycInt& x, const BigInt& n) { return x.divide_exact(n); }

/// Sum of integer multiples of m-th roots of unity, kept as a count per
/// exponent until reduced once at the end.
class RootSum {
 public:
  explicit RootSum(std::int64_t m) : m_(m), counts_(static_cast<std::size_t>(m), 0) {}

  void add(std::int64_t e, std::int64_t times = 1) {
    e %= m_;
    if (e < 0) e += m_;
    counts_[static_cast<std::size_t>(e)] += times;
  }
  std::int64_t modulus() const noexcept { return m_; }
  const std::vector<std::int64_t>& counts() const noexcept { return counts_; }
  CycInt value() const;

 private:
  std::int64_t m_;
  std::vector<std::int64_t> counts_;
};

}  // namespace adk
