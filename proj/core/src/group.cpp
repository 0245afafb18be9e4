#include "adk/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "adk/errors.hpp"

namespace adk {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupSpec

struct GroupSpec::Data {
  std::vector<std::int64_t> orders;
  std::vector<std::int64_t> strides;
  std::int64_t exponent = 1;
  std::int64_t cardinality = 1;
};

GroupSpec::GroupSpec(std::vector<std::int64_t> orders) {
  if (orders.empty()) throw Error("group needs at least one cyclic factor");
  auto data = std::make_shared<Data>();
  for (const auto d : orders) {
    if (d < 2) throw Error("cyclic order " + std::to_string(d) + " is < 2");
    if (__builtin_mul_overflow(data->cardinality, d, &data->cardinality) ||
        data->cardinality > (std::int64_t{1} << 62)) {
      throw Error("group cardinality overflows");
    }
    data->exponent = std::lcm(data->exponent, d);
  }
  data->strides.assign(orders.size(), 1);
  for (std::size_t i = orders.size(); i-- > 1;) data->strides[i - 1] = data->strides[i] * orders[i];
  data->orders = std::move(orders);
  data_ = std::move(data);
}

std::span<const std::int64_t> GroupSpec::orders() const noexcept { return data_->orders; }
std::size_t GroupSpec::rank() const noexcept { return data_->orders.size(); }
std::int64_t GroupSpec::order(std::size_t i) const { return data_->orders.at(i); }
std::int64_t GroupSpec::exponent() const noexcept { return data_->exponent; }
std::int64_t GroupSpec::cardinality() const noexcept { return data_->cardinality; }
std::int64_t GroupSpec::weight(std::size_t i) const { return data_->exponent / order(i); }

std::int64_t GroupSpec::index_of(std::span<const std::int64_t> coords) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) idx += coords[i] * data_->strides[i];
  return idx;
}

std::vector<std::int64_t> GroupSpec::coords_of(std::int64_t index) const {
  std::vector<std::int64_t> out(rank());
  coords_of(index, out);
  return out;
}

void GroupSpec::coords_of(std::int64_t index, std::span<std::int64_t> out) const {
  for (std::size_t i = 0; i < rank(); ++i) {
    out[i] = index / data_->strides[i];
    index %= data_->strides[i];
  }
}

GroupElement GroupSpec::element(std::vector<std::int64_t> coords) const {
  return GroupElement(*this, std::move(coords));
}

GroupElement GroupSpec::element_at(std::int64_t index) const {
  if (index < 0 || index >= cardinality()) throw Error("element index out of range");
  return GroupElement(*this, coords_of(index));
}

GroupElement GroupSpec::zero() const { return GroupElement(*this, std::vector<std::int64_t>(rank(), 0)); }

GroupElement GroupSpec::generator(std::size_t i) const {
  std::vector<std::int64_t> c(rank(), 0);
  c.at(i) = 1;
  return GroupElement(*this, std::move(c));
}

std::vector<GroupElement> GroupSpec::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  for (std::int64_t i = 0; i < cardinality(); ++i) out.push_back(element_at(i));
  return out;
}

std::int64_t GroupSpec::add_index(std::int64_t x, std::int64_t y) const {
  std::int64_t out = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto s = data_->strides[i];
    const auto d = data_->orders[i];
    const auto xi = (x / s) % d;
    const auto yi = (y / s) % d;
    out += ((xi + yi) % d) * s;
  }
  return out;
}

std::int64_t GroupSpec::neg_index(std::int64_t x) const {
  std::int64_t out = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto s = data_->strides[i];
    const auto d = data_->orders[i];
    out += ((d - (x / s) % d) % d) * s;
  }
  return out;
}

std::int64_t GroupSpec::scale_index(std::int64_t x, std::int64_t k) const {
  std::int64_t out = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto s = data_->strides[i];
    const auto d = data_->orders[i];
    out += mod(((x / s) % d) * mod(k, d), d) * s;
  }
  return out;
}

bool operator==(const GroupSpec& a, const GroupSpec& b) noexcept {
  return a.data_ == b.data_ || a.data_->orders == b.data_->orders;
}

GroupSpec make_group(std::vector<std::int64_t> orders) { return GroupSpec(std::move(orders)); }

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(GroupSpec parent, std::vector<std::int64_t> coords)
    : parent_(std::move(parent)), coords_(std::move(coords)) {
  if (coords_.size() != parent_.rank()) {
    throw Error("element has " + std::to_string(coords_.size()) + " coordinates, group has rank " +
                std::to_string(parent_.rank()));
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = mod(coords_[i], parent_.order(i));
}

bool GroupElement::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

std::int64_t GroupElement::order() const {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const auto d = parent_.order(i);
    o = std::lcm(o, d / std::gcd(coords_[i], d));
  }
  return o;
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  if (!(parent_ == other.parent_)) throw Error("adding elements of different groups");
  auto c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return GroupElement(parent_, std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement& other) const { return *this + (-other); }

GroupElement GroupElement::operator-() const { return scaled(-1); }

GroupElement GroupElement::scaled(std::int64_t k) const {
  auto c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(c[i] * mod(k, parent_.order(i)), parent_.order(i));
  return GroupElement(parent_, std::move(c));
}

// ---------------------------------------------------------------------------
// Subgroup

namespace {

// Grows the subgroup held in (member, list) to include g.
// Returns false when g was already a member.
bool adjoin(const GroupSpec& parent, std::vector<char>& member, std::vector<std::int64_t>& list,
            std::int64_t g) {
  if (member[static_cast<std::size_t>(g)]) return false;
  const std::size_t base = list.size();
  std::int64_t shift = g;
  while (!member[static_cast<std::size_t>(shift)]) {
    for (std::size_t i = 0; i < base; ++i) {
      const auto x = parent.add_index(list[i], shift);
      member[static_cast<std::size_t>(x)] = 1;
      list.push_back(x);
    }
    shift = parent.add_index(shift, g);
  }
  return true;
}

}  // namespace

Subgroup Subgroup::from_indices(GroupSpec parent, std::vector<std::int64_t> sorted_indices) {
  std::vector<char> member(static_cast<std::size_t>(parent.cardinality()), 0);
  std::vector<std::int64_t> list{0};
  member[0] = 1;
  std::vector<GroupElement> gens;
  for (const auto x : sorted_indices) {
    if (adjoin(parent, member, list, x)) gens.push_back(parent.element_at(x));
  }
  if (list.size() != sorted_indices.size()) throw InternalError("index set is not a subgroup");
  return Subgroup(std::move(parent), std::move(gens), std::move(sorted_indices));
}

std::vector<GroupElement> Subgroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(indices_.size());
  for (const auto i : indices_) out.push_back(parent_.element_at(i));
  return out;
}

bool Subgroup::contains(const GroupElement& x) const {
  return x.parent() == parent_ && contains_index(x.index());
}

bool Subgroup::contains_index(std::int64_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return parent_ == other.parent_ &&
         std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
}

std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
  if (auto c = a.order() <=> b.order(); c != 0) return c;
  return a.indices_ <=> b.indices_;
}

Subgroup subgroup_closure(const GroupSpec& parent, std::span<const GroupElement> gens) {
  std::vector<char> member(static_cast<std::size_t>(parent.cardinality()), 0);
  std::vector<std::int64_t> list{0};
  member[0] = 1;
  std::vector<GroupElement> kept;
  for (const auto& g : gens) {
    if (!(g.parent() == parent)) throw Error("generators belong to different groups");
    if (adjoin(parent, member, list, g.index())) kept.push_back(g);
  }
  std::sort(list.begin(), list.end());
  return Subgroup(parent, std::move(kept), std::move(list));
}

Subgroup subgroup_closure(const GroupSpec& parent, std::initializer_list<GroupElement> gens) {
  return subgroup_closure(parent, std::span<const GroupElement>(gens.begin(), gens.size()));
}

Subgroup trivial_subgroup(const GroupSpec& parent) { return subgroup_closure(parent, {}); }

Subgroup whole_group(const GroupSpec& parent) {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < parent.rank(); ++i) gens.push_back(parent.generator(i));
  return subgroup_closure(parent, gens);
}

std::vector<Subgroup> all_subgroups(const GroupSpec& group, const Limits& limits) {
  if (group.cardinality() > limits.enumeration) {
    throw LimitError("subgroup enumeration", group.cardinality(), limits.enumeration);
  }
  std::set<std::vector<std::int64_t>> seen;
  std::vector<Subgroup> found{trivial_subgroup(group)};
  seen.insert(std::vector<std::int64_t>(found[0].indices().begin(), found[0].indices().end()));
  for (std::size_t next = 0; next < found.size(); ++next) {
    const Subgroup current = found[next];
    if (current.is_whole()) continue;
    for (std::int64_t x = 1; x < group.cardinality(); ++x) {
      if (current.contains_index(x)) continue;
      auto gens = current.generators();
      gens.push_back(group.element_at(x));
      Subgroup bigger = subgroup_closure(group, gens);
      std::vector<std::int64_t> key(bigger.indices().begin(), bigger.indices().end());
      if (seen.insert(std::move(key)).second) found.push_back(std::move(bigger));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

// ---------------------------------------------------------------------------
// Homomorphism

Homomorphism::Homomorphism(GroupSpec source, GroupSpec target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.size() != source_.rank()) throw Error("homomorphism matrix needs one row per source generator");
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    auto& row = matrix_[i];
    if (row.size() != target_.rank()) throw Error("homomorphism matrix row has wrong length");
    for (std::size_t j = 0; j < row.size(); ++j) {
      row[j] = mod(row[j], target_.order(j));
      if (mod(source_.order(i) * row[j], target_.order(j)) != 0) {
        throw Error("generator " + std::to_string(i) + " cannot map to an element of larger order (entry " +
                    std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

Homomorphism Homomorphism::identity(const GroupSpec& group) { return scalar(group, 1); }

Homomorphism Homomorphism::zero(const GroupSpec& source, const GroupSpec& target) {
  return Homomorphism(source, target, Matrix(source.rank(), std::vector<std::int64_t>(target.rank(), 0)));
}

Homomorphism Homomorphism::scalar(const GroupSpec& group, std::int64_t k) {
  Matrix m(group.rank(), std::vector<std::int64_t>(group.rank(), 0));
  for (std::size_t i = 0; i < group.rank(); ++i) m[i][i] = k;
  return Homomorphism(group, group, std::move(m));
}

GroupElement Homomorphism::apply(const GroupElement& a) const {
  if (!(a.parent() == source_)) throw Error("element is not in the homomorphism's source");
  std::vector<std::int64_t> out(target_.rank(), 0);
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    const auto ai = a[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = (out[j] + ai * matrix_[i][j]) % target_.order(j);
  }
  return GroupElement(target_, std::move(out));
}

std::int64_t Homomorphism::apply_index(std::int64_t index) const {
  std::vector<std::int64_t> a(source_.rank());
  source_.coords_of(index, a);
  std::vector<std::int64_t> out(target_.rank(), 0);
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = (out[j] + a[i] * matrix_[i][j]) % target_.order(j);
  }
  return target_.index_of(out);
}

Homomorphism compose(const Homomorphism& first, const Homomorphism& second) {
  if (!(first.target() == second.source())) throw Error("cannot compose: target/source mismatch");
  Homomorphism::Matrix m;
  m.reserve(first.source().rank());
  for (const auto& row : first.matrix()) {
    const auto img = second.apply(GroupElement(first.target(), row));
    m.emplace_back(img.coords().begin(), img.coords().end());
  }
  return Homomorphism(first.source(), second.target(), std::move(m));
}

// ---------------------------------------------------------------------------
// Automorphism

namespace {

bool is_bijective(const Homomorphism& map) {
  const auto& g = map.source();
  std::vector<char> hit(static_cast<std::size_t>(g.cardinality()), 0);
  std::int64_t distinct = 0;
  for (std::int64_t x = 0; x < g.cardinality(); ++x) {
    auto& h = hit[static_cast<std::size_t>(map.apply_index(x))];
    if (!h) {
      h = 1;
      ++distinct;
    }
  }
  return distinct == g.cardinality();
}

}  // namespace

Automorphism::Automorphism(Homomorphism map) : map_(std::move(map)) {
  if (!(map_.source() == map_.target())) throw Error("automorphism must be an endomorphism");
  if (!is_bijective(map_)) throw Error("map is not bijective");
}

std::optional<Automorphism> Automorphism::try_from(Homomorphism map) {
  if (!(map.source() == map.target()) || !is_bijective(map)) return std::nullopt;
  return Automorphism(std::move(map), Trusted{});
}

Automorphism Automorphism::identity(const GroupSpec& group) {
  return Automorphism(Homomorphism::identity(group), Trusted{});
}

Automorphism Automorphism::block_diagonal(const Automorphism& tau, std::size_t n, const GroupSpec& power) {
  const std::size_t k = tau.group().rank();
  if (power.rank() != k * n) throw Error("power group rank does not match block count");
  Homomorphism::Matrix m(k * n, std::vector<std::int64_t>(k * n, 0));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[b * k + i][b * k + j] = tau.matrix()[i][j];
  return Automorphism(Homomorphism(power, power, std::move(m)), Trusted{});
}

std::int64_t Automorphism::order() const {
  const auto id = Homomorphism::identity(group());
  Homomorphism cur = map_;
  std::int64_t k = 1;
  while (!(cur == id)) {
    cur = compose(cur, map_);
    ++k;
  }
  return k;
}

Automorphism Automorphism::inverse() const { return power(order() - 1); }

Automorphism Automorphism::then(const Automorphism& other) const {
  return Automorphism(compose(map_, other.map_), Trusted{});
}

Automorphism Automorphism::power(std::int64_t k) const {
  if (k < 0) return inverse().power(-k);
  Homomorphism cur = Homomorphism::identity(group());
  for (std::int64_t i = 0; i < k; ++i) cur = compose(cur, map_);
  return Automorphism(std::move(cur), Trusted{});
}

namespace {

struct AutSearch {
  const GroupSpec& group;
  const Limits& limits;
  std::vector<std::vector<std::int64_t>> candidates;  // per generator: element indices with d_i x = 0
  std::vector<std::int64_t> rows;
  std::vector<Automorphism>& out;

  void run(std::size_t level, const std::vector<char>& member, const std::vector<std::int64_t>& list) {
    if (level == group.rank()) {
      // list is the image set of the assembled map.
      if (static_cast<std::int64_t>(list.size()) != group.cardinality()) return;
      Homomorphism::Matrix m;
      for (const auto r : rows) m.push_back(group.coords_of(r));
      auto aut = Automorphism::try_from(Homomorphism(group, group, std::move(m)));
      if (!aut) throw InternalError("partial-injectivity search produced a non-bijective map");
      if (static_cast<std::int64_t>(out.size()) >= limits.automorphisms) {
        throw LimitError("automorphism enumeration", static_cast<std::int64_t>(out.size()) + 1,
                         limits.automorphisms);
      }
      out.push_back(std::move(*aut));
      return;
    }
    const auto d = group.order(level);
    for (const auto r : candidates[level]) {
      // The restriction to <g_1..g_level> must stay injective: the multiples
      // r, 2r, ..., (d-1)r must avoid the image built so far.
      bool ok = true;
      std::int64_t x = r;
      for (std::int64_t k = 1; k < d && ok; ++k) {
        if (member[static_cast<std::size_t>(x)]) ok = false;
        x = group.add_index(x, r);
      }
      if (!ok) continue;
      auto member2 = member;
      auto list2 = list;
      adjoin(group, member2, list2, r);
      rows[level] = r;
      run(level + 1, member2, list2);
    }
  }
};

}  // namespace

std::vector<Automorphism> automorphism_group(const GroupSpec& group, const Limits& limits) {
  if (group.cardinality() > limits.enumeration) {
    throw LimitError("automorphism enumeration", group.cardinality(), limits.enumeration);
  }
  std::vector<Automorphism> out;
  AutSearch search{group, limits, {}, std::vector<std::int64_t>(group.rank(), 0), out};
  for (std::size_t i = 0; i < group.rank(); ++i) {
    std::vector<std::int64_t> c;
    for (std::int64_t x = 0; x < group.cardinality(); ++x) {
      if (group.scale_index(x, group.order(i)) == 0) c.push_back(x);
    }
    search.candidates.push_back(std::move(c));
  }
  std::vector<char> member(static_cast<std::size_t>(group.cardinality()), 0);
  member[0] = 1;
  search.run(0, member, {0});
  return out;
}

Subgroup image(const Subgroup& h, const Automorphism& tau) {
  if (!(h.parent() == tau.group())) throw Error("subgroup and automorphism live in different groups");
  std::vector<std::int64_t> idx;
  idx.reserve(h.indices().size());
  for (const auto x : h.indices()) idx.push_back(tau.apply_index(x));
  std::sort(idx.begin(), idx.end());
  return Subgroup::from_indices(h.parent(), std::move(idx));
}

std::vector<Automorphism> stabilizer(const Subgroup& h, const Limits& limits) {
  std::vector<Automorphism> out;
  for (auto& tau : automorphism_group(h.parent(), limits)) {
    // tau is injective, so mapping H into H means H tau = H.
    const bool stable = std::all_of(h.indices().begin(), h.indices().end(),
                                    [&](std::int64_t x) { return h.contains_index(tau.apply_index(x)); });
    if (stable) out.push_back(std::move(tau));
  }
  return out;
}

bool is_characteristic(const Subgroup& h, const Limits& limits) {
  return stabilizer(h, limits).size() == automorphism_group(h.parent(), limits).size();
}

// ---------------------------------------------------------------------------
// Primary decomposition

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::map<std::int64_t, GroupSpec> primary_decomposition(const GroupSpec& group) {
  std::map<std::int64_t, GroupSpec> parts;
  for (const auto p : prime_factors(group.cardinality())) {
    std::vector<std::int64_t> orders;
    for (const auto d : group.orders()) {
      std::int64_t q = 1;
      for (auto r = d; r % p == 0; r /= p) q *= p;
      if (q > 1) orders.push_back(q);
    }
    parts.emplace(p, GroupSpec(std::move(orders)));
  }
  return parts;
}

Subgroup primary_component(const GroupSpec& group, std::int64_t p) {
  std::vector<std::int64_t> idx;
  for (std::int64_t x = 0; x < group.cardinality(); ++x) {
    auto o = group.element_at(x).order();
    while (o % p == 0) o /= p;
    if (o == 1) idx.push_back(x);
  }
  return Subgroup::from_indices(group, std::move(idx));
}

std::optional<std::int64_t> p_group_prime(const GroupSpec& group) {
  const auto ps = prime_factors(group.cardinality());
  if (ps.size() != 1) return std::nullopt;
  return ps.front();
}

}  // namespace adk
