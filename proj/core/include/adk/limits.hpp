#pragma once

#include <cstdint>

namespace adk {

/// Bounds on exhaustive work. Exceeding any of them raises LimitError;
/// nothing is ever sampled.
struct Limits {
  /// Largest |A| for subgroup and automorphism enumeration.
  std::int64_t enumeration = 4096;
  /// Largest number of elements scanned when computing dual codes and transforms.
  std::int64_t scan = 10'000'000;
  /// Largest |Aut(A)| materialized.
  std::int64_t automorphisms = 1'000'000;

  /// Defaults, with the scan bound overridden by ADK_LIMIT when set.
  static Limits from_env();
};

}  // namespace adk
