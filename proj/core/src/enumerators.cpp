#include "adk/enumerators.hpp"

#include <algorithm>

#include "adk/characters.hpp"
#include "adk/errors.hpp"

namespace adk {

namespace {

// Sums in the group ring Z[C_m]: slot e holds the coefficient of zeta^e.
// Reduction to Z[zeta_m] happens once, at the end.
using GroupRing = std::vector<BigInt>;

void add_shifted(GroupRing& acc, const CycInt& c, std::int64_t e) {
  const auto m = static_cast<std::int64_t>(acc.size());
  const auto& k = c.coeffs();
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] != 0) acc[static_cast<std::size_t>((static_cast<std::int64_t>(i) + e) % m)] += k[i];
  }
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> c(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::vector<BigInt> poly_pow(const std::vector<BigInt>& a, std::size_t e) {
  std::vector<BigInt> out{BigInt(1)};
  for (std::size_t i = 0; i < e; ++i) out = poly_mul(out, a);
  return out;
}

}  // namespace

std::int64_t hamming_weight(const GroupElement& x, std::size_t block_rank) {
  const auto c = x.coords();
  if (block_rank == 0 || c.size() % block_rank != 0) throw Error("block rank does not divide the element length");
  std::int64_t w = 0;
  for (std::size_t b = 0; b < c.size(); b += block_rank) {
    if (std::any_of(c.begin() + static_cast<std::ptrdiff_t>(b), c.begin() + static_cast<std::ptrdiff_t>(b + block_rank),
                    [](auto v) { return v != 0; })) {
      ++w;
    }
  }
  return w;
}

Monomial monomial_of(const GroupSpec& base, const GroupElement& x) {
  const auto k = base.rank();
  const auto c = x.coords();
  if (c.size() % k != 0) throw Error("element length is not a multiple of the base rank");
  Monomial counts(static_cast<std::size_t>(base.cardinality()), 0);
  for (std::size_t b = 0; b < c.size(); b += k) ++counts[static_cast<std::size_t>(base.index_of(c.subspan(b, k)))];
  return counts;
}

HammingEnumerator hwe(const Subgroup& code, const GroupSpec& base) {
  HammingEnumerator e;
  e.n = power_length(code.parent(), base);
  e.coeffs.assign(e.n + 1, BigInt(0));
  for (const auto& x : code.elements()) ++e.coeffs[static_cast<std::size_t>(hamming_weight(x, base.rank()))];
  return e;
}

CompleteEnumerator cwe(const Subgroup& code, const GroupSpec& base) {
  CompleteEnumerator e{base, power_length(code.parent(), base), {}};
  for (const auto& x : code.elements()) e.terms[monomial_of(base, x)] += 1;
  return e;
}

HammingEnumerator hamming_specialization(const CompleteEnumerator& e) {
  HammingEnumerator h;
  h.n = e.n;
  h.coeffs.assign(e.n + 1, BigInt(0));
  for (const auto& [counts, c] : e.terms) {
    const auto zeros = static_cast<std::size_t>(counts.at(0));
    h.coeffs.at(e.n - zeros) += c;
  }
  return h;
}

HammingEnumerator mw_hamming_transform(const HammingEnumerator& e, std::int64_t size_a, const BigInt& size_code) {
  if (e.coeffs.size() != e.n + 1) throw Error("Hamming enumerator has the wrong number of coefficients");
  // Polynomials in Y after setting X = 1; homogeneous degree is implicit.
  const std::vector<BigInt> plus{BigInt(1), BigInt(size_a - 1)};
  const std::vector<BigInt> minus{BigInt(1), BigInt(-1)};
  std::vector<BigInt> sum(e.n + 1, BigInt(0));
  for (std::size_t w = 0; w <= e.n; ++w) {
    if (e.coeffs[w] == 0) continue;
    const auto term = poly_mul(poly_pow(plus, e.n - w), poly_pow(minus, w));
    for (std::size_t v = 0; v < term.size(); ++v) sum[v] += e.coeffs[w] * term[v];
  }
  HammingEnumerator out;
  out.n = e.n;
  for (const auto& c : sum) {
    if (c % size_code != 0) {
      throw NonIntegralError("Hamming transform coefficient " + c.str() + " is not divisible by " + size_code.str());
    }
    out.coeffs.push_back(c / size_code);
  }
  return out;
}

CompleteEnumerator mw_complete_transform(const CompleteEnumerator& e, const Duality& phi, Side side,
                                         Direction direction, const Limits& limits) {
  const auto& a = e.base;
  if (!(phi.parent() == a)) throw Error("duality does not live on the enumerator's base group");
  const auto q = a.cardinality();
  const auto m = a.exponent();
  const auto n = e.n;
  std::int64_t words = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (words > limits.scan / q) throw LimitError("complete transform expansion", words * q, limits.scan);
    words *= q;
  }

  // exps[b][a] is the exponent of the coefficient of Z_a in the image of Z_b.
  const bool phi_ab = (direction == Direction::to_dual) == (side == Side::left);
  std::vector<std::vector<std::int64_t>> exps(static_cast<std::size_t>(q), std::vector<std::int64_t>(static_cast<std::size_t>(q)));
  for (std::int64_t b = 0; b < q; ++b)
    for (std::int64_t x = 0; x < q; ++x)
      exps[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)] = phi_ab ? phi.iexp_index(x, b) : phi.iexp_index(b, x);

  BigInt size_d = 0;
  std::map<Monomial, GroupRing> acc;
  std::map<Monomial, std::vector<std::int64_t>> per_word;
  for (const auto& [counts, coeff] : e.terms) {
    size_d += coeff;
    std::vector<std::int64_t> word;
    for (std::size_t b = 0; b < counts.size(); ++b)
      for (std::int64_t r = 0; r < counts[b]; ++r) word.push_back(static_cast<std::int64_t>(b));
    if (word.size() != n) throw Error("monomial degree does not match the code length");

    // Roots counted per output monomial for this one word.
    per_word.clear();
    std::vector<std::int64_t> x(n, 0);
    for (std::int64_t it = 0; it < words; ++it) {
      Monomial key(static_cast<std::size_t>(q), 0);
      std::int64_t ex = 0;
      for (std::size_t i = 0; i < n; ++i) {
        ++key[static_cast<std::size_t>(x[i])];
        ex += exps[static_cast<std::size_t>(word[i])][static_cast<std::size_t>(x[i])];
      }
      auto& slot = per_word[key];
      if (slot.empty()) slot.assign(static_cast<std::size_t>(m), 0);
      ++slot[static_cast<std::size_t>(ex % m)];
      for (std::size_t i = n; i-- > 0;) {
        if (++x[i] < q) break;
        x[i] = 0;
      }
    }
    for (const auto& [key, slots] : per_word) {
      auto& ring = acc[key];
      if (ring.empty()) ring.assign(static_cast<std::size_t>(m), BigInt(0));
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (slots[s] != 0) ring[s] += coeff * slots[s];
    }
  }
  if (size_d == 0) throw Error("enumerator of an empty set");

  CompleteEnumerator out{a, n, {}};
  for (const auto& [key, ring] : acc) {
    const auto value = CycInt::from_powers(m, ring).divide_exact(size_d);
    BigInt c;
    if (!value.is_integer(&c)) {
      throw NonIntegralError("complete transform coefficient " + value.to_string() + " is not an integer");
    }
    if (c != 0) out.terms.emplace(key, c);
  }
  return out;
}

void CycMultiPoly::add(const std::vector<std::int64_t>& exps, const CycInt& c) {
  if (c.modulus() != modulus) throw Error("coefficient modulus does not match the polynomial");
  auto it = terms.find(exps);
  if (it == terms.end()) {
    if (!c.is_zero()) terms.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

std::vector<CycMultiPoly> fourier_transform_at(const GroupSpec& g, const std::vector<CycMultiPoly>& f,
                                               std::span<const std::int64_t> characters) {
  if (static_cast<std::int64_t>(f.size()) != g.cardinality()) throw Error("function needs one value per element");
  const auto m = g.exponent();
  std::vector<CycMultiPoly> out;
  for (const auto pi : characters) {
    std::map<std::vector<std::int64_t>, GroupRing> acc;
    for (std::int64_t a = 0; a < g.cardinality(); ++a) {
      const auto& fa = f[static_cast<std::size_t>(a)];
      if (fa.modulus != m) throw Error("function values must have coefficients in Z[ζ_m], m the exponent");
      if (fa.terms.empty()) continue;
      const auto e = pairing_exponent_index(g, pi, a);
      for (const auto& [exps, c] : fa.terms) {
        auto& ring = acc[exps];
        if (ring.empty()) ring.assign(static_cast<std::size_t>(m), BigInt(0));
        add_shifted(ring, c, e);
      }
    }
    CycMultiPoly p;
    p.modulus = m;
    for (const auto& [exps, ring] : acc) p.add(exps, CycInt::from_powers(m, ring));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<CycMultiPoly> fourier_transform(const GroupSpec& g, const std::vector<CycMultiPoly>& f) {
  std::vector<std::int64_t> all(static_cast<std::size_t>(g.cardinality()));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::int64_t>(i);
  return fourier_transform_at(g, f, all);
}

bool fourier_inversion_holds(const GroupSpec& g, const std::vector<CycMultiPoly>& f) {
  const auto fh = fourier_transform(g, f);
  // Transforming f-hat again gives sum_pi <pi, a> f-hat(pi) = |G| f(-a).
  const auto back = fourier_transform(g, fh);
  for (std::int64_t a = 0; a < g.cardinality(); ++a) {
    CycMultiPoly scaled;
    scaled.modulus = g.exponent();
    for (const auto& [exps, c] : f[static_cast<std::size_t>(a)].terms) scaled.add(exps, c * BigInt(g.cardinality()));
    if (!(back[static_cast<std::size_t>(g.neg_index(a))] == scaled)) return false;
  }
  return true;
}

namespace {

CycMultiPoly sum_over(const std::vector<CycMultiPoly>& f, std::span<const std::int64_t> idx, std::int64_t m) {
  CycMultiPoly s;
  s.modulus = m;
  for (const auto i : idx)
    for (const auto& [exps, c] : f[static_cast<std::size_t>(i)].terms) s.add(exps, c);
  return s;
}

}  // namespace

PoissonSides poisson_sides(const Subgroup& h, const std::vector<CycMultiPoly>& f) {
  const auto& g = h.parent();
  const auto ann = annihilator(h);
  const auto fh = fourier_transform_at(g, f, ann.indices());
  std::vector<std::int64_t> all(fh.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::int64_t>(i);
  PoissonSides sides;
  sides.lhs = sum_over(f, h.indices(), g.exponent());
  const auto total = sum_over(fh, all, g.exponent());
  sides.rhs.modulus = g.exponent();
  for (const auto& [exps, c] : total.terms) sides.rhs.add(exps, c.divide_exact(ann.order()));
  return sides;
}

bool poisson_check(const Subgroup& h, const std::vector<CycMultiPoly>& f) {
  const auto& g = h.parent();
  const auto ann = annihilator(h);
  const auto fh = fourier_transform_at(g, f, ann.indices());
  std::vector<std::int64_t> all(fh.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::int64_t>(i);
  const auto rhs = sum_over(fh, all, g.exponent());
  CycMultiPoly lhs;
  lhs.modulus = g.exponent();
  for (const auto& [exps, c] : sum_over(f, h.indices(), g.exponent()).terms) lhs.add(exps, c * BigInt(ann.order()));
  return lhs == rhs;
}

std::vector<CycMultiPoly> hamming_monomial_map(const GroupSpec& base, std::size_t n) {
  const auto g = power_group(base, n);
  std::vector<CycMultiPoly> f;
  for (const auto& x : g.elements()) {
    const auto w = hamming_weight(x, base.rank());
    CycMultiPoly p;
    p.modulus = g.exponent();
    p.add({static_cast<std::int64_t>(n) - w, w}, CycInt(g.exponent(), 1));
    f.push_back(std::move(p));
  }
  return f;
}

std::vector<CycMultiPoly> complete_monomial_map(const GroupSpec& base, std::size_t n) {
  const auto g = power_group(base, n);
  std::vector<CycMultiPoly> f;
  for (const auto& x : g.elements()) {
    CycMultiPoly p;
    p.modulus = g.exponent();
    p.add(monomial_of(base, x), CycInt(g.exponent(), 1));
    f.push_back(std::move(p));
  }
  return f;
}

std::pair<BigInt, BigInt> ft_hamming_single(const GroupSpec& base, const Character& pi) {
  if (!(pi.parent() == base)) throw Error("character does not belong to the group");
  if (pi.is_trivial()) return {BigInt(1), BigInt(base.cardinality() - 1)};
  return {BigInt(1), BigInt(-1)};
}

}  // namespace adk
