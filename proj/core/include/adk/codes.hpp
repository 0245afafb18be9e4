#pragma once

// Additive codes C in A^n and their left and right duals
//   L(C) = {x : iexp(x, c) = 0 for all c in C},
//   R(C) = {x : iexp(c, x) = 0 for all c in C}.

#include <cstdint>
#include <optional>
#include <vector>

#include "adk/cyclotomic.hpp"
#include "adk/dualities.hpp"
#include "adk/group.hpp"

namespace adk {

/// A^n: the order sequence of A repeated n times.
GroupSpec power_group(const GroupSpec& base, std::size_t n);
/// n with power = A^n; throws Error if power is not a power of base.
std::size_t power_length(const GroupSpec& power, const GroupSpec& base);

/// The coordinatewise extension of phi to A^n.
Duality extend_duality(const Duality& phi, std::size_t n);

enum class Side { left, right };

/// phi may live on A^n itself or on A, in which case it is extended.
Subgroup dual_code(const Subgroup& code, const Duality& phi, Side side, const Limits& limits = {});
Subgroup left_dual(const Subgroup& code, const Duality& phi, const Limits& limits = {});
Subgroup right_dual(const Subgroup& code, const Duality& phi, const Limits& limits = {});

enum class SelfDualKind { none, self_orthogonal, self_dual };
SelfDualKind self_dual_kind(const Subgroup& code, const Duality& phi, const Limits& limits = {});

/// sum over y in C of Phi(x, y) (left) or Phi(y, x) (right), exactly.
CycInt dual_sum_check(const Subgroup& code, const Duality& phi, const GroupElement& x, Side side = Side::left);

/// A basis of each of the subgroups spanned by rows e_1..e_k together with
/// the Gram matrix of the form on that basis defines a duality; entries of
/// `gram` are exponents mod m.
Duality duality_from_basis_form(const GroupSpec& group, const std::vector<GroupElement>& basis, const Matrix& gram);

/// A symmetric duality with L(H) = R(H) = K and L(K) = R(K) = H, built by
/// basis completion when A is elementary abelian and |H||K| = |A|, or from
/// factor forms when A = H + K is a direct sum. Throws UnsupportedError
/// otherwise.
Duality construct_duality_for_pair(const Subgroup& h, const Subgroup& k);

/// The least duality in canonical order with L(H) = R(H) = K, optionally
/// restricted to symmetric ones.
std::optional<Duality> search_duality_for_pair(const Subgroup& h, const Subgroup& k, bool symmetric_only = false,
                                               const Limits& limits = {});

struct DualsTable {
  std::vector<Duality> dualities;
  std::vector<Subgroup> subgroups;
  /// cells[d][s] = {L, R} of subgroups[s] under dualities[d].
  std::vector<std::vector<std::pair<Subgroup, Subgroup>>> cells;
};

DualsTable duals_table(const GroupSpec& group, const std::vector<Subgroup>& subgroups, const Limits& limits = {});

struct FiltrationStep {
  std::int64_t j;
  Subgroup kernel;  // ker f^j
  Subgroup image;   // im f^j
};

/// (ker f^j, im f^j) for f(a) = p a and j = 0..N, N minimal with f^N = 0.
std::vector<FiltrationStep> mult_by_p_filtration(const GroupSpec& group, std::int64_t p, const Limits& limits = {});
/// im f^j = L(ker f^j) = R(ker f^j) for every duality and every j.
bool verify_filtration_duality(const GroupSpec& group, std::int64_t p, const Limits& limits = {});

struct DependenceReport {
  std::vector<Duality> dualities;
  /// Distinct values of L(H) and, per value, the dualities producing it.
  std::vector<Subgroup> left_values;
  std::vector<std::vector<std::size_t>> left_classes;
  std::vector<Subgroup> right_values;
  std::vector<std::vector<std::size_t>> right_classes;
  std::size_t stabilizer_order = 0;
  bool characteristic = false;
};

/// How the duals of H vary with the duality. Checks that the right-dual
/// classes are the cosets stab(H) tau and that there is a single class
/// exactly when H is characteristic.
DependenceReport duality_dependence(const Subgroup& h, const Limits& limits = {});

}  // namespace adk
