#pragma once

// Finite abelian groups presented as products of cyclic groups
// Z/d_1 x ... x Z/d_k, with elements as residue tuples against the
// cyclic-factor basis g_1, ..., g_k.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "adk/limits.hpp"

namespace adk {

class GroupElement;

/// A finite abelian group given by its cyclic orders. Cheap to copy: the
/// order data is shared. Two specs are equal iff their order sequences are.
class GroupSpec {
 public:
  /// Throws Error on an empty sequence, an order < 2, or overflow of |A|.
  explicit GroupSpec(std::vector<std::int64_t> orders);

  std::span<const std::int64_t> orders() const noexcept;
  std::size_t rank() const noexcept;
  std::int64_t order(std::size_t i) const;
  /// lcm of the orders.
  std::int64_t exponent() const noexcept;
  std::int64_t cardinality() const noexcept;
  /// exponent / order(i): the multiplier that embeds Z/d_i into Z/exponent.
  std::int64_t weight(std::size_t i) const;

  /// Mixed-radix index, first coordinate most significant. Index order is
  /// the canonical (lexicographic) element order.
  std::int64_t index_of(std::span<const std::int64_t> coords) const;
  std::vector<std::int64_t> coords_of(std::int64_t index) const;
  void coords_of(std::int64_t index, std::span<std::int64_t> out) const;

  GroupElement element(std::vector<std::int64_t> coords) const;
  GroupElement element_at(std::int64_t index) const;
  GroupElement zero() const;
  /// The i-th basis generator.
  GroupElement generator(std::size_t i) const;
  std::vector<GroupElement> elements() const;

  std::int64_t add_index(std::int64_t x, std::int64_t y) const;
  std::int64_t neg_index(std::int64_t x) const;
  std::int64_t scale_index(std::int64_t x, std::int64_t k) const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) noexcept;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

GroupSpec make_group(std::vector<std::int64_t> orders);

class GroupElement {
 public:
  /// Coordinates are reduced modulo their orders; negatives are allowed.
  GroupElement(GroupSpec parent, std::vector<std::int64_t> coords);

  const GroupSpec& parent() const noexcept { return parent_; }
  std::span<const std::int64_t> coords() const noexcept { return coords_; }
  std::int64_t operator[](std::size_t i) const { return coords_.at(i); }
  std::int64_t index() const { return parent_.index_of(coords_); }
  bool is_zero() const noexcept;
  /// Additive order.
  std::int64_t order() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-(const GroupElement& other) const;
  GroupElement operator-() const;
  GroupElement scaled(std::int64_t k) const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.parent_ == b.parent_ && a.coords_ == b.coords_;
  }
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  GroupSpec parent_;
  std::vector<std::int64_t> coords_;
};

/// A subgroup held as its full sorted element set plus a generating list.
class Subgroup {
 public:
  /// Builds from a sorted, duplicate-free index list that is known to be a
  /// subgroup; a generating set is derived greedily in canonical order.
  static Subgroup from_indices(GroupSpec parent, std::vector<std::int64_t> sorted_indices);

  const GroupSpec& parent() const noexcept { return parent_; }
  const std::vector<GroupElement>& generators() const noexcept { return generators_; }
  std::span<const std::int64_t> indices() const noexcept { return indices_; }
  std::vector<GroupElement> elements() const;
  std::int64_t order() const noexcept { return static_cast<std::int64_t>(indices_.size()); }

  bool contains(const GroupElement& x) const;
  bool contains_index(std::int64_t index) const;
  bool is_subset_of(const Subgroup& other) const;
  bool is_trivial() const noexcept { return indices_.size() == 1; }
  bool is_whole() const noexcept { return order() == parent_.cardinality(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.indices_ == b.indices_;
  }
  /// Canonical order: by order, then by element list.
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b);

 private:
  Subgroup(GroupSpec parent, std::vector<GroupElement> generators, std::vector<std::int64_t> indices)
      : parent_(std::move(parent)), generators_(std::move(generators)), indices_(std::move(indices)) {}

  friend Subgroup subgroup_closure(const GroupSpec& parent, std::span<const GroupElement> gens);

  GroupSpec parent_;
  std::vector<GroupElement> generators_;
  std::vector<std::int64_t> indices_;
};

/// Smallest subgroup of `parent` containing `gens`. Throws Error if a
/// generator belongs to another group.
Subgroup subgroup_closure(const GroupSpec& parent, std::span<const GroupElement> gens);
Subgroup subgroup_closure(const GroupSpec& parent, std::initializer_list<GroupElement> gens);
Subgroup trivial_subgroup(const GroupSpec& parent);
Subgroup whole_group(const GroupSpec& parent);

/// Every subgroup exactly once, in canonical order.
std::vector<Subgroup> all_subgroups(const GroupSpec& group, const Limits& limits = {});

/// Group homomorphism given by generator images: row i of the matrix is the
/// image of source generator g_i, entry (i, j) reduced modulo target order j.
class Homomorphism {
 public:
  using Matrix = std::vector<std::vector<std::int64_t>>;

  /// Throws Error unless d_i(source) * T[i][j] = 0 mod d_j(target) for all i, j.
  Homomorphism(GroupSpec source, GroupSpec target, Matrix matrix);

  static Homomorphism identity(const GroupSpec& group);
  static Homomorphism zero(const GroupSpec& source, const GroupSpec& target);
  /// a -> k a.
  static Homomorphism scalar(const GroupSpec& group, std::int64_t k);

  const GroupSpec& source() const noexcept { return source_; }
  const GroupSpec& target() const noexcept { return target_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  std::int64_t entry(std::size_t i, std::size_t j) const { return matrix_.at(i).at(j); }

  GroupElement apply(const GroupElement& a) const;
  std::int64_t apply_index(std::int64_t index) const;

  friend bool operator==(const Homomorphism& a, const Homomorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
  }

 private:
  GroupSpec source_;
  GroupSpec target_;
  Matrix matrix_;
};

/// a -> second(first(a)). With row-vector conventions this is the matrix
/// product first * second.
Homomorphism compose(const Homomorphism& first, const Homomorphism& second);

/// A bijective endomorphism. Ordered lexicographically by matrix.
class Automorphism {
 public:
  /// Throws Error when the map is not an endomorphism or not bijective.
  explicit Automorphism(Homomorphism map);
  static std::optional<Automorphism> try_from(Homomorphism map);
  static Automorphism identity(const GroupSpec& group);
  /// tau acting independently on each of n coordinate blocks of A^n.
  static Automorphism block_diagonal(const Automorphism& tau, std::size_t n, const GroupSpec& power);

  const Homomorphism& map() const noexcept { return map_; }
  const GroupSpec& group() const noexcept { return map_.source(); }
  const Homomorphism::Matrix& matrix() const noexcept { return map_.matrix(); }

  GroupElement apply(const GroupElement& a) const { return map_.apply(a); }
  std::int64_t apply_index(std::int64_t index) const { return map_.apply_index(index); }

  /// Order under composition.
  std::int64_t order() const;
  Automorphism inverse() const;
  /// a -> other(this(a)).
  Automorphism then(const Automorphism& other) const;
  Automorphism power(std::int64_t k) const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.map_ == b.map_; }
  friend std::strong_ordering operator<=>(const Automorphism& a, const Automorphism& b) {
    return a.matrix() <=> b.matrix();
  }

 private:
  struct Trusted {};
  Automorphism(Homomorphism map, Trusted) : map_(std::move(map)) {}

  friend std::vector<Automorphism> automorphism_group(const GroupSpec&, const Limits&);

  Homomorphism map_;
};

/// All automorphisms in lexicographic matrix order.
std::vector<Automorphism> automorphism_group(const GroupSpec& group, const Limits& limits = {});

/// H tau.
Subgroup image(const Subgroup& h, const Automorphism& tau);
std::vector<Automorphism> stabilizer(const Subgroup& h, const Limits& limits = {});
bool is_characteristic(const Subgroup& h, const Limits& limits = {});

/// p-primary parts keyed by prime. Each part keeps the p-power parts of the
/// orders in their original sequence, dropping trivial factors.
std::map<std::int64_t, GroupSpec> primary_decomposition(const GroupSpec& group);

/// Subgroup of elements of p-power order, inside the original presentation.
Subgroup primary_component(const GroupSpec& group, std::int64_t p);

/// The prime p if every order is a power of p.
std::optional<std::int64_t> p_group_prime(const GroupSpec& group);

std::vector<std::int64_t> prime_factors(std::int64_t n);

}  // namespace adk
