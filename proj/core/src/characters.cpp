#include "adk/characters.hpp"

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

}  // namespace

Character::Character(GroupSpec parent, std::vector<std::int64_t> etuple)
    : parent_(std::move(parent)), etuple_(std::move(etuple)) {
  if (etuple_.size() != parent_.rank()) throw Error("etuple length does not match the group rank");
  for (std::size_t i = 0; i < etuple_.size(); ++i) etuple_[i] = mod(etuple_[i], parent_.order(i));
}

Character Character::trivial(const GroupSpec& parent) {
  return Character(parent, std::vector<std::int64_t>(parent.rank(), 0));
}

Character Character::at(const GroupSpec& parent, std::int64_t index) {
  return Character(parent, parent.coords_of(index));
}

bool Character::is_trivial() const noexcept {
  return std::all_of(etuple_.begin(), etuple_.end(), [](auto e) { return e == 0; });
}

Character Character::operator*(const Character& other) const {
  if (!(parent_ == other.parent_)) throw Error("multiplying characters of different groups");
  auto e = etuple_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.etuple_[i];
  return Character(parent_, std::move(e));
}

Character Character::inverse() const {
  auto e = etuple_;
  for (auto& x : e) x = -x;
  return Character(parent_, std::move(e));
}

std::vector<Character> all_characters(const GroupSpec& group) {
  std::vector<Character> out;
  out.reserve(static_cast<std::size_t>(group.cardinality()));
  for (std::int64_t i = 0; i < group.cardinality(); ++i) out.push_back(Character::at(group, i));
  return out;
}

std::int64_t pairing_exponent(const Character& pi, const GroupElement& a) {
  if (!(pi.parent() == a.parent())) throw Error("character and element belong to different groups");
  const auto& g = pi.parent();
  std::int64_t e = 0;
  for (std::size_t i = 0; i < g.rank(); ++i) e = (e + g.weight(i) * ((pi.etuple()[i] * a[i]) % g.order(i))) % g.exponent();
  return e;
}

std::int64_t pairing_exponent_index(const GroupSpec& group, std::int64_t pi, std::int64_t a) {
  std::vector<std::int64_t> x(group.rank()), y(group.rank());
  group.coords_of(pi, x);
  group.coords_of(a, y);
  std::int64_t e = 0;
  for (std::size_t i = 0; i < group.rank(); ++i) e = (e + group.weight(i) * ((x[i] * y[i]) % group.order(i))) % group.exponent();
  return e;
}

CycInt evaluate(const Character& pi, const GroupElement& a) {
  return root_power(pi.parent().exponent(), pairing_exponent(pi, a));
}

Subgroup annihilator(const Subgroup& h) {
  const auto& g = h.parent();
  std::vector<std::int64_t> gens;
  for (const auto& x : h.generators()) gens.push_back(x.index());
  std::vector<std::int64_t> out;
  for (std::int64_t pi = 0; pi < g.cardinality(); ++pi) {
    const bool kills = std::all_of(gens.begin(), gens.end(),
                                   [&](std::int64_t x) { return pairing_exponent_index(g, pi, x) == 0; });
    if (kills) out.push_back(pi);
  }
  if (out.size() * static_cast<std::size_t>(h.order()) != static_cast<std::size_t>(g.cardinality())) {
    throw InternalError("annihilator has the wrong order");
  }
  return Subgroup::from_indices(g, std::move(out));
}

// The pairing is symmetric in (etuple, coords), so ev identifies the
// annihilator in A of X with the same computation.
Subgroup annihilator_of_characters(const Subgroup& x) { return annihilator(x); }

bool double_annihilator_check(const Subgroup& h) { return annihilator_of_characters(annihilator(h)) == h; }

std::vector<std::int64_t> restrict_character(const Character& pi, const Subgroup& h) {
  std::vector<std::int64_t> out;
  for (const auto& g : h.generators()) out.push_back(pairing_exponent(pi, g));
  return out;
}

Character extend_character(const Subgroup& h, std::span<const std::int64_t> theta) {
  const auto& g = h.parent();
  const auto m = g.exponent();
  if (theta.size() != h.generators().size()) throw Error("theta needs one value per generator of H");

  // value[x] = exponent of the character at x, or -1 while x lies outside
  // the subgroup P built so far.
  std::vector<std::int64_t> value(static_cast<std::size_t>(g.cardinality()), -1);
  std::vector<std::int64_t> members{0};
  value[0] = 0;

  auto adjoin = [&](std::int64_t gen, std::int64_t t, bool check) {
    std::int64_t k = 1;
    std::int64_t x = gen;
    while (value[static_cast<std::size_t>(x)] < 0) {
      x = g.add_index(x, gen);
      ++k;
    }
    // k is minimal with k*gen in P, and x = k*gen.
    if (check) {
      if (mod(k * t, m) != value[static_cast<std::size_t>(x)]) throw Error("theta is not a homomorphism on H");
    } else {
      const auto target = value[static_cast<std::size_t>(x)];
      t = -1;
      for (std::int64_t c = 0; c < m; ++c) {
        if (mod(k * c, m) == target) {
          t = c;
          break;
        }
      }
      if (t < 0) throw InternalError("no k-th root available while extending a character");
    }
    const std::size_t base = members.size();
    std::int64_t shift = gen;
    for (std::int64_t j = 1; j < k; ++j) {
      for (std::size_t i = 0; i < base; ++i) {
        const auto y = g.add_index(members[i], shift);
        value[static_cast<std::size_t>(y)] = mod(value[static_cast<std::size_t>(members[i])] + j * t, m);
        members.push_back(y);
      }
      shift = g.add_index(shift, gen);
    }
  };

  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto x = gens[i].index();
    const auto t = mod(theta[i], m);
    if (value[static_cast<std::size_t>(x)] >= 0) {
      if (value[static_cast<std::size_t>(x)] != t) throw Error("theta is not a homomorphism on H");
      continue;
    }
    adjoin(x, t, true);
  }
  for (std::int64_t x = 0; x < g.cardinality(); ++x) {
    if (value[static_cast<std::size_t>(x)] < 0) adjoin(x, 0, false);
  }

  std::vector<std::int64_t> e(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const auto v = value[static_cast<std::size_t>(g.generator(i).index())];
    if (v % g.weight(i) != 0) throw InternalError("extended character is not well defined");
    e[i] = v / g.weight(i);
  }
  Character pi(g, std::move(e));
  for (std::int64_t x = 0; x < g.cardinality(); ++x) {
    if (pairing_exponent_index(g, pi.index(), x) != value[static_cast<std::size_t>(x)]) {
      throw InternalError("extended character disagrees with its construction");
    }
  }
  return pi;
}

Homomorphism induced_hom(const Homomorphism& alpha) {
  const auto& a1 = alpha.source();
  const auto& a2 = alpha.target();
  Homomorphism::Matrix m(a2.rank(), std::vector<std::int64_t>(a1.rank(), 0));
  for (std::size_t j = 0; j < a2.rank(); ++j)
    for (std::size_t i = 0; i < a1.rank(); ++i) {
      const auto num = alpha.entry(i, j) * a1.order(i);
      if (num % a2.order(j) != 0) throw InternalError("homomorphism entry violates the order condition");
      m[j][i] = mod(num / a2.order(j), a1.order(i));
    }
  Homomorphism star(a2, a1, std::move(m));
  if (a1.cardinality() * a2.cardinality() <= kVerifyPairs && !verify_induced_hom(alpha, star)) {
    throw InternalError("induced homomorphism fails its defining identity");
  }
  return star;
}

bool verify_induced_hom(const Homomorphism& alpha, const Homomorphism& alpha_star) {
  const auto& a1 = alpha.source();
  const auto& a2 = alpha.target();
  const auto m1 = a1.exponent();
  const auto m2 = a2.exponent();
  const auto l = std::lcm(m1, m2);
  for (std::int64_t pi = 0; pi < a2.cardinality(); ++pi) {
    const auto pulled = alpha_star.apply_index(pi);
    for (std::int64_t a = 0; a < a1.cardinality(); ++a) {
      const auto lhs = pairing_exponent_index(a1, pulled, a) * (l / m1);
      const auto rhs = pairing_exponent_index(a2, pi, alpha.apply_index(a)) * (l / m2);
      if (lhs % l != rhs % l) return false;
    }
  }
  return true;
}

}  // namespace adk
