#pragma once

// Plain tables with a byte-stable text layout and a JSON form. The named
// tables reproduce the worked examples; every cell is computed.

#include <string>
#include <string_view>
#include <vector>

#include "adk/io.hpp"
#include "adk/limits.hpp"

namespace adk {

struct Table {
  std::string id;
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// A rule is drawn after each listed row index.
  std::vector<std::size_t> separators;
  std::vector<std::string> notes;

  /// Title, header, rule, rows, notes. Columns are left-aligned on code
  /// point widths and separated by two spaces; no trailing blanks.
  std::string to_text() const;
  /// {"id","title","columns","rows","notes"}.
  Json to_json() const;
  static Table from_json(const Json& j);

  friend bool operator==(const Table&, const Table&) = default;
};

/// Width of a UTF-8 string in code points.
std::size_t display_width(std::string_view s);

/// Ids accepted by paper_table, in listing order.
const std::vector<std::string>& paper_table_ids();
/// Throws Error for an unknown id.
Table paper_table(std::string_view id, const Limits& limits = {});

/// Index, matrix, symmetry, adjoint index and order of every duality.
Table dualities_view(const GroupSpec& group, const Limits& limits = {});
/// Left and right duals of each subgroup under every duality, by index.
Table duals_view(const GroupSpec& group, const std::vector<Subgroup>& subgroups, const Limits& limits = {});
/// Congruence classes with size, representative, symmetry and the number of
/// self-dual subgroups.
Table congruence_view(const GroupSpec& group, const Limits& limits = {});

}  // namespace adk
