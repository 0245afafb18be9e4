#include "adk/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "adk/errors.hpp"

namespace adk {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("cyclotomic polynomial coefficient overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error("cyclotomic polynomial coefficient overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("cyclotomic polynomial coefficient overflow");
  return r;
}

// Per-modulus data: Phi_m, and x^e mod Phi_m for 0 <= e < m when m is small
// enough for the table to be worth keeping.
struct ModulusData {
  CycPoly phi;
  std::vector<std::vector<std::int64_t>> roots;
};

constexpr std::int64_t kRootTableMax = 720;

std::shared_mutex cache_mutex;
std::map<std::int64_t, std::unique_ptr<const ModulusData>> cache;

const ModulusData& modulus_data(std::int64_t m);

ModulusData build(std::int64_t m) {
  ModulusData data;
  CycPoly divisor(std::vector<std::int64_t>{1});
  for (std::int64_t d = 1; d < m; ++d) {
    if (m % d == 0) divisor = divisor * modulus_data(d).phi;
  }
  data.phi = CycPoly::x_pow_minus_one(m).divide_exact(divisor);
  if (m <= kRootTableMax) {
    const auto& phi = data.phi.coeffs();
    const auto n = static_cast<std::size_t>(data.phi.degree());
    std::vector<std::int64_t> cur(n, 0);
    cur[0] = 1;
    if (n == 0) cur.clear();
    for (std::int64_t e = 0; e < m; ++e) {
      data.roots.push_back(cur);
      if (n == 0) continue;
      // multiply by x, then fold the x^n term back using Phi (monic)
      const auto top = cur[n - 1];
      for (std::size_t k = n - 1; k > 0; --k) cur[k] = cur[k - 1];
      cur[0] = 0;
      if (top != 0) {
        for (std::size_t k = 0; k < n; ++k) cur[k] = checked_sub(cur[k], checked_mul(top, phi[k]));
      }
    }
  }
  return data;
}

const ModulusData& modulus_data(std::int64_t m) {
  if (m < 1) throw Error("cyclotomic modulus must be >= 1");
  {
    std::shared_lock lock(cache_mutex);
    if (auto it = cache.find(m); it != cache.end()) return *it->second;
  }
  // Built outside the lock: the recursion re-enters for each divisor.
  auto data = std::make_unique<const ModulusData>(build(m));
  std::unique_lock lock(cache_mutex);
  auto [it, inserted] = cache.emplace(m, std::move(data));
  return *it->second;
}

// Reduces p (coefficients of 1, x, x^2, ...) modulo the monic Phi_m in place
// and resizes it to deg Phi_m.
void reduce(std::vector<BigInt>& p, const CycPoly& phi) {
  const auto n = static_cast<std::size_t>(phi.degree());
  const auto& c = phi.coeffs();
  for (std::size_t k = p.size(); k-- > n;) {
    if (p[k] == 0) continue;
    const BigInt top = p[k];
    for (std::size_t j = 0; j < n; ++j) {
      if (c[j] != 0) p[k - n + j] -= top * c[j];
    }
    p[k] = 0;
  }
  p.resize(n);
}

void require_same(const CycInt& a, const CycInt& b) {
  if (a.modulus() != b.modulus()) {
    throw Error("cyclotomic modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                std::to_string(b.modulus()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// CycPoly

CycPoly::CycPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void CycPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

CycPoly CycPoly::x_pow_minus_one(std::int64_t n) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = -1;
  c.back() += 1;
  return CycPoly(std::move(c));
}

CycPoly operator*(const CycPoly& a, const CycPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  return CycPoly(std::move(c));
}

CycPoly CycPoly::divide_exact(const CycPoly& monic) const {
  if (!monic.is_monic()) throw Error("polynomial division needs a monic divisor");
  if (coeffs_.empty()) return {};
  auto rem = coeffs_;
  const auto n = monic.coeffs_.size() - 1;
  if (rem.size() <= n) throw NonIntegralError("polynomial division leaves a remainder");
  std::vector<std::int64_t> q(rem.size() - n, 0);
  for (std::size_t k = rem.size(); k-- > n;) {
    const auto top = rem[k];
    q[k - n] = top;
    if (top == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) rem[k - n + j] = checked_sub(rem[k - n + j], checked_mul(top, monic.coeffs_[j]));
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (rem[k] != 0) throw NonIntegralError("polynomial division leaves a remainder");
  }
  return CycPoly(std::move(q));
}

std::string CycPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const auto c = coeffs_[k];
    if (c == 0) continue;
    const auto mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) out << mag;
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

const CycPoly& cyclotomic_poly(std::int64_t m) { return modulus_data(m).phi; }

std::int64_t euler_phi(std::int64_t m) {
  std::int64_t result = m;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// ---------------------------------------------------------------------------
// CycInt

CycInt::CycInt(std::int64_t m) : m_(m) {
  coeffs_.assign(static_cast<std::size_t>(cyclotomic_poly(m).degree()), BigInt(0));
}

CycInt::CycInt(std::int64_t m, const BigInt& n) : CycInt(m) { coeffs_.at(0) = n; }

CycInt CycInt::from_powers(std::int64_t m, const std::vector<BigInt>& powers) {
  CycInt out(m);
  std::vector<BigInt> folded(static_cast<std::size_t>(m), BigInt(0));
  for (std::size_t k = 0; k < powers.size(); ++k) folded[k % static_cast<std::size_t>(m)] += powers[k];
  reduce(folded, cyclotomic_poly(m));
  out.coeffs_ = std::move(folded);
  return out;
}

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycInt::is_integer(BigInt* value) const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  if (value) *value = coeffs_[0];
  return true;
}

CycInt& CycInt::operator+=(const CycInt& other) {
  require_same(*this, other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) {
  require_same(*this, other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& other) {
  require_same(*this, other);
  const auto n = coeffs_.size();
  std::vector<BigInt> prod(2 * n - 1, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (other.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  reduce(prod, cyclotomic_poly(m_));
  coeffs_ = std::move(prod);
  return *this;
}

CycInt& CycInt::operator*=(const BigInt& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycInt CycInt::mul_root(std::int64_t e) const {
  e %= m_;
  if (e < 0) e += m_;
  std::vector<BigInt> powers(static_cast<std::size_t>(m_), BigInt(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) powers[(k + static_cast<std::size_t>(e)) % static_cast<std::size_t>(m_)] = coeffs_[k];
  return from_powers(m_, powers);
}

CycInt CycInt::divide_exact(const BigInt& n) const {
  if (n == 0) throw NonIntegralError("division by zero");
  CycInt out = *this;
  for (auto& c : out.coeffs_) {
    if (c % n != 0) {
      throw NonIntegralError("cyclotomic integer " + to_string() + " is not divisible by " + n.str());
    }
    c /= n;
  }
  return out;
}

CycInt CycInt::embed(std::int64_t big) const {
  if (big % m_ != 0) throw Error("cannot embed Z[ζ" + std::to_string(m_) + "] into Z[ζ" + std::to_string(big) + "]");
  const auto step = big / m_;
  std::vector<BigInt> powers(static_cast<std::size_t>(big), BigInt(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) powers[k * static_cast<std::size_t>(step)] = coeffs_[k];
  return from_powers(big, powers);
}

std::string CycInt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto& c = coeffs_[k];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "·";
    out << "ζ" << m_;
    if (k >= 2) out << "^" << k;
  }
  return first ? "0" : out.str();
}

CycInt root_power(std::int64_t m, std::int64_t e) {
  e %= m;
  if (e < 0) e += m;
  const auto& data = modulus_data(m);
  if (!data.roots.empty()) {
    std::vector<BigInt> c(data.roots[static_cast<std::size_t>(e)].begin(), data.roots[static_cast<std::size_t>(e)].end());
    return CycInt::from_powers(m, c);
  }
  std::vector<BigInt> powers(static_cast<std::size_t>(e) + 1, BigInt(0));
  powers.back() = 1;
  return CycInt::from_powers(m, powers);
}

CycInt add(const CycInt& a, const CycInt& b) { return a + b; }
CycInt mul(const CycInt& a, const CycInt& b) { return a * b; }
CycInt neg(const CycInt& a) { return -a; }
CycInt scale(const CycInt& a, const BigInt& k) { return a * k; }

CycInt RootSum::value() const {
  const auto& data = modulus_data(m_);
  if (data.roots.empty()) {
    std::vector<BigInt> powers(counts_.begin(), counts_.end());
    return CycInt::from_powers(m_, powers);
  }
  const auto n = static_cast<std::size_t>(data.phi.degree());
  std::vector<BigInt> acc(n, BigInt(0));
  for (std::size_t e = 0; e < counts_.size(); ++e) {
    const auto k = counts_[e];
    if (k == 0) continue;
    const auto& r = data.roots[e];
    for (std::size_t j = 0; j < n; ++j) {
      if (r[j] != 0) acc[j] += BigInt(k) * r[j];
    }
  }
  return CycInt::from_powers(m_, acc);
}

}  // namespace adk
