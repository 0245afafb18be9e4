#include "adk/tables.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "adk/codes.hpp"
#include "adk/dualities.hpp"
#include "adk/errors.hpp"

namespace adk {

std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

namespace {

std::string pad_row(const std::vector<std::string>& cells, const std::vector<std::size_t>& widths) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += "  ";
    line += cells[i];
    if (i + 1 < cells.size()) line.append(widths[i] - display_width(cells[i]), ' ');
  }
  return line;
}

}  // namespace

std::string Table::to_text() const {
  std::vector<std::size_t> widths(columns.size(), 0);
  for (std::size_t c = 0; c < columns.size(); ++c) widths[c] = display_width(columns[c]);
  for (const auto& r : rows) {
    if (r.size() != columns.size()) throw InternalError("table " + id + ": ragged row");
    for (std::size_t c = 0; c < r.size(); ++c) widths[c] = std::max(widths[c], display_width(r[c]));
  }
  std::size_t total = 0;
  for (const auto w : widths) total += w;
  total += 2 * (widths.empty() ? 0 : widths.size() - 1);
  const std::string rule(total, '-');

  std::ostringstream out;
  if (!title.empty()) out << title << "\n";
  out << pad_row(columns, widths) << "\n" << rule << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << pad_row(rows[i], widths) << "\n";
    if (i + 1 < rows.size() && std::find(separators.begin(), separators.end(), i) != separators.end()) {
      out << rule << "\n";
    }
  }
  for (const auto& n : notes) out << n << "\n";
  return out.str();
}

Json Table::to_json() const {
  return {{"id", id}, {"title", title}, {"columns", columns}, {"rows", rows}, {"separators", separators},
          {"notes", notes}};
}

Table Table::from_json(const Json& j) {
  Table t;
  try {
    t.id = j.at("id").get<std::string>();
    t.title = j.at("title").get<std::string>();
    t.columns = j.at("columns").get<std::vector<std::string>>();
    t.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    if (j.contains("separators")) t.separators = j.at("separators").get<std::vector<std::size_t>>();
    t.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed table: ") + e.what());
  }
  return t;
}

namespace {

Automorphism aut(const GroupSpec& g, Matrix m) { return Automorphism(Homomorphism(g, g, std::move(m))); }

Subgroup span(const GroupSpec& g, std::initializer_list<const char*> gens) {
  std::vector<GroupElement> els;
  for (const auto* s : gens) els.push_back(parse_element(g, s));
  return subgroup_closure(g, els);
}

struct Named {
  std::vector<std::pair<Subgroup, std::string>> names;

  std::string operator()(const Subgroup& h) const {
    for (const auto& [s, n] : names)
      if (s == h) return n;
    return subgroup_text(h);
  }
};

std::string phi_label(std::size_t i) { return "φ_" + std::to_string(i); }

// Label of `d` within a labelled list of dualities.
std::string label_in(const std::vector<Duality>& list, const Duality& d) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i] == d) return phi_label(i);
  throw InternalError("duality " + matrix_text(d.tau().matrix()) + " missing from table rows");
}

std::size_t count_symmetric(const std::vector<Duality>& all) {
  return static_cast<std::size_t>(std::count_if(all.begin(), all.end(), [](const Duality& d) { return is_symmetric(d); }));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void add_dual_columns(Table& t, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    t.columns.push_back("L(" + n + ")");
    t.columns.push_back("R(" + n + ")");
  }
}

void add_dual_cells(std::vector<std::string>& row, const Duality& phi, const std::vector<Subgroup>& subs,
                    const Named& name, const Limits& limits) {
  for (const auto& h : subs) {
    row.push_back(name(left_dual(h, phi, limits)));
    row.push_back(name(right_dual(h, phi, limits)));
  }
}

// ---------------------------------------------------------------------------

const std::vector<Matrix> klein_rows = {
    {{1, 0}, {0, 1}}, {{1, 1}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 1}, {1, 0}}, {{1, 1}, {0, 1}}, {{1, 0}, {1, 1}},
};

Table klein_dualities(const Limits& limits) {
  const auto g = make_group({2, 2});
  std::vector<Duality> rows;
  for (const auto& m : klein_rows) rows.emplace_back(aut(g, m));

  Table t{"3.3", "Dualities of F_2^2", {"φ_i", "P"}, {}, {3}, {}};
  for (const auto& a : g.elements()) t.columns.push_back("φ_P(" + element_text(a) + ")");
  t.columns.insert(t.columns.end(), {"φ*_P", "o(P)"});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::string> r{phi_label(i), matrix_text(rows[i].tau().matrix())};
    for (const auto& a : g.elements()) r.push_back("π_" + std::to_string(rows[i].image(a).index()));
    r.push_back(label_in(rows, adjoint(rows[i])));
    r.push_back(std::to_string(rows[i].tau().order()));
    t.rows.push_back(std::move(r));
  }
  const auto all = all_dualities(g, limits);
  t.notes.push_back(std::to_string(all.size()) + " dualities, " + std::to_string(count_symmetric(all)) + " symmetric");
  return t;
}

// phi_0..phi_7 of Z/2 x Z/4 as sigma^e tau^j.
std::vector<std::pair<std::string, Duality>> two_by_four_rows(const GroupSpec& g) {
  const auto sigma = aut(g, {{1, 0}, {1, 1}});
  const auto tau = aut(g, {{1, 2}, {1, 1}});
  const char* powers[] = {"", "τ", "τ^2", "τ^3"};
  std::vector<std::pair<std::string, Duality>> out;
  for (int e = 0; e < 2; ++e) {
    for (int j = 0; j < 4; ++j) {
      std::string label = std::string(e ? "σ" : "") + powers[j];
      if (label.empty()) label = "I";
      out.emplace_back(label, Duality(sigma.power(e).then(tau.power(j))));
    }
  }
  return out;
}

Table two_by_four_dualities(const Limits& limits) {
  const auto g = make_group({2, 4});
  const auto labelled = two_by_four_rows(g);
  std::vector<Duality> rows;
  for (const auto& [l, d] : labelled) rows.push_back(d);

  Table t{"3.4", "Dualities of Z/2 x Z/4", {"φ_i", "σ^ε τ^j", "P", "φ_P(01)", "φ_P(10)", "φ_P*"}, {}, {3}, {}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& d = rows[i];
    t.rows.push_back({phi_label(i), labelled[i].first, matrix_text(d.tau().matrix()),
                      "π_" + std::to_string(d.image(parse_element(g, "01")).index()),
                      "π_" + std::to_string(d.image(parse_element(g, "10")).index()), label_in(rows, adjoint(d))});
  }
  const auto all = all_dualities(g, limits);
  t.notes.push_back(std::to_string(all.size()) + " dualities, " + std::to_string(count_symmetric(all)) + " symmetric");
  return t;
}

const std::vector<Matrix> klein_dual_rows = {
    {{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}, {{1, 1}, {1, 0}}, {{0, 1}, {1, 0}}, {{1, 1}, {0, 1}}, {{1, 0}, {1, 1}},
};

Table klein_duals(const Limits& limits) {
  const auto g = make_group({2, 2});
  const std::vector<Subgroup> subs = {span(g, {"10"}), span(g, {"11"}), span(g, {"01"})};
  const Named name{{{subs[0], "C_0"}, {subs[1], "C_1"}, {subs[2], "C_∞"}}};

  Table t{"4.4", "Dual codes of the order-2 subgroups of F_2^2", {"P"}, {}, {3}, {}};
  add_dual_columns(t, {"C_0", "C_1", "C_∞"});
  for (const auto& m : klein_dual_rows) {
    const Duality phi(aut(g, m));
    std::vector<std::string> r{matrix_text(m)};
    add_dual_cells(r, phi, subs, name, limits);
    std::size_t self_dual = 0;
    for (const auto& h : subs) self_dual += self_dual_kind(h, phi, limits) == SelfDualKind::self_dual;
    t.rows.push_back(std::move(r));
    t.notes.push_back(matrix_text(m) + ": " + std::to_string(self_dual) + " self-dual");
  }
  return t;
}

Table f2_cubed_example(const Limits& limits) {
  const auto g = make_group({2, 2, 2});
  const Matrix p = {{0, 0, 1}, {1, 1, 0}, {1, 0, 0}};
  const Duality phi(aut(g, p));
  const auto c = span(g, {"100"});
  const auto l = left_dual(c, phi, limits);
  const auto r = right_dual(c, phi, limits);
  std::vector<std::int64_t> meet;
  std::set_intersection(l.indices().begin(), l.indices().end(), r.indices().begin(), r.indices().end(),
                        std::back_inserter(meet));
  const auto all = all_dualities(g, limits);

  Table t{"4.5", "A nonsymmetric duality of F_2^3", {"quantity", "value"}, {}, {}, {}};
  t.rows = {
      {"P", matrix_text(p)},
      {"symmetric", yes_no(is_symmetric(phi))},
      {"C", subgroup_text(c)},
      {"L(C)", subgroup_text(l)},
      {"R(C)", subgroup_text(r)},
      {"C = L(C) ∩ R(C)", yes_no(meet == std::vector<std::int64_t>(c.indices().begin(), c.indices().end()))},
      {"L(C) = R(C)", yes_no(l == r)},
      {"self-orthogonal", yes_no(self_dual_kind(c, phi, limits) != SelfDualKind::none)},
      {"self-dual", yes_no(self_dual_kind(c, phi, limits) == SelfDualKind::self_dual)},
      {"dualities", std::to_string(all.size())},
      {"symmetric dualities", std::to_string(count_symmetric(all))},
  };
  return t;
}

Table two_by_four_duals(const Limits& limits) {
  const auto g = make_group({2, 4});
  const auto l0 = span(g, {"10"}), l1 = span(g, {"12"}), linf = span(g, {"02"});
  const auto c1 = span(g, {"01"}), c2 = span(g, {"11"}), s = span(g, {"10", "02"});
  const Named name{{{l0, "ℓ_0"}, {l1, "ℓ_1"}, {linf, "ℓ_∞"}, {c1, "C_1"}, {c2, "C_2"}, {s, "S"}}};
  const std::vector<Subgroup> subs = {l0, l1, linf};

  Table t{"4.11", "Dual codes of the order-2 subgroups of Z/2 x Z/4", {"φ"}, {}, {}, {}};
  add_dual_columns(t, {"ℓ_0", "ℓ_1", "ℓ_∞"});
  const auto rows = two_by_four_rows(g);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::string> r{phi_label(i)};
    add_dual_cells(r, rows[i].second, subs, name, limits);
    t.rows.push_back(std::move(r));
  }
  const auto all = all_dualities(g, limits);
  std::size_t hits = 0;
  for (const auto& d : all) hits += left_dual(linf, d, limits) == c1;
  t.notes.push_back("dualities with L(ℓ_∞) = C_1: " + std::to_string(hits) + " of " + std::to_string(all.size()));
  return t;
}

const std::vector<Matrix> f3_reps = {
    {{1, 0}, {0, 1}}, {{1, 0}, {0, 2}}, {{1, 1}, {0, 1}}, {{0, 2}, {1, 0}}, {{2, 1}, {0, 1}}, {{2, 2}, {0, 2}},
};

Table f3_classes(const Limits& limits) {
  const auto g = make_group({3, 3});
  const auto all = all_dualities(g, limits);
  const auto classes = congruence_classes(g, limits);
  Table t{"6.3-classes", "Congruence classes of dualities of F_3^2", {"representative", "number"}, {}, {1}, {}};
  for (const auto& m : f3_reps) {
    const Duality phi(aut(g, m));
    const auto pos = static_cast<std::size_t>(std::find(all.begin(), all.end(), phi) - all.begin());
    const auto cls = std::find_if(classes.begin(), classes.end(), [&](const auto& c) {
      return std::binary_search(c.begin(), c.end(), pos);
    });
    if (cls == classes.end()) throw InternalError("representative outside every congruence class");
    t.rows.push_back({matrix_text(m), std::to_string(cls->size())});
  }
  t.notes.push_back(std::to_string(all.size()) + " dualities, " + std::to_string(count_symmetric(all)) +
                    " symmetric, " + std::to_string(classes.size()) + " classes");
  return t;
}

Table f3_duals(const Limits& limits) {
  const auto g = make_group({3, 3});
  const std::vector<Subgroup> subs = {span(g, {"10"}), span(g, {"11"}), span(g, {"12"}), span(g, {"01"})};
  const Named name{{{subs[0], "ℓ_0"}, {subs[1], "ℓ_1"}, {subs[2], "ℓ_2"}, {subs[3], "ℓ_∞"}}};
  Table t{"6.3-duals", "Dual codes of the order-3 subgroups of F_3^2 at the class representatives", {"φ", "τ"}, {}, {1}, {}};
  add_dual_columns(t, {"ℓ_0", "ℓ_1", "ℓ_2", "ℓ_∞"});
  for (std::size_t i = 0; i < f3_reps.size(); ++i) {
    std::vector<std::string> r{phi_label(i), matrix_text(f3_reps[i])};
    add_dual_cells(r, Duality(aut(g, f3_reps[i])), subs, name, limits);
    t.rows.push_back(std::move(r));
  }
  return t;
}

}  // namespace

const std::vector<std::string>& paper_table_ids() {
  static const std::vector<std::string> ids = {"3.3", "3.4", "4.4", "4.5", "4.11", "6.3-classes", "6.3-duals"};
  return ids;
}

Table paper_table(std::string_view id, const Limits& limits) {
  if (id == "3.3") return klein_dualities(limits);
  if (id == "3.4") return two_by_four_dualities(limits);
  if (id == "4.4") return klein_duals(limits);
  if (id == "4.5") return f2_cubed_example(limits);
  if (id == "4.11") return two_by_four_duals(limits);
  if (id == "6.3-classes") return f3_classes(limits);
  if (id == "6.3-duals") return f3_duals(limits);
  std::string known;
  for (const auto& k : paper_table_ids()) known += (known.empty() ? "" : ", ") + k;
  throw Error("unknown table id '" + std::string(id) + "' (known: " + known + ")");
}

Table dualities_view(const GroupSpec& group, const Limits& limits) {
  const auto all = all_dualities(group, limits);
  Table t{"dualities", "Dualities of " + group_text(group), {"index", "tau", "symmetric", "adjoint", "order"}, {}, {}, {}};
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto adj = adjoint(all[i]);
    const auto pos = std::lower_bound(all.begin(), all.end(), adj) - all.begin();
    t.rows.push_back({std::to_string(i), matrix_text(all[i].tau().matrix()), yes_no(adj == all[i]),
                      std::to_string(pos), std::to_string(all[i].tau().order())});
  }
  t.notes.push_back(std::to_string(all.size()) + " total, " + std::to_string(count_symmetric(all)) + " symmetric");
  return t;
}

Table duals_view(const GroupSpec& group, const std::vector<Subgroup>& subgroups, const Limits& limits) {
  const auto table = duals_table(group, subgroups, limits);
  Table t{"duals-table", "Left and right duals in " + group_text(group), {"duality"}, {}, {}, {}};
  std::vector<std::string> names;
  for (std::size_t s = 0; s < subgroups.size(); ++s) names.push_back("H_" + std::to_string(s));
  add_dual_columns(t, names);
  for (std::size_t d = 0; d < table.dualities.size(); ++d) {
    std::vector<std::string> r{std::to_string(d)};
    for (const auto& [l, rr] : table.cells[d]) {
      r.push_back(subgroup_text(l));
      r.push_back(subgroup_text(rr));
    }
    t.rows.push_back(std::move(r));
  }
  for (std::size_t s = 0; s < subgroups.size(); ++s) t.notes.push_back(names[s] + " = " + subgroup_text(subgroups[s]));
  return t;
}

Table congruence_view(const GroupSpec& group, const Limits& limits) {
  const auto all = all_dualities(group, limits);
  const auto classes = congruence_classes(group, limits);
  const auto subs = all_subgroups(group, limits);
  Table t{"congruence", "Congruence classes of dualities of " + group_text(group),
          {"class", "size", "representative", "symmetric", "self-dual", "members"}, {}, {}, {}};
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& rep = all[classes[c].front()];
    std::size_t self_dual = 0;
    for (const auto& h : subs) self_dual += self_dual_kind(h, rep, limits) == SelfDualKind::self_dual;
    std::string members;
    for (const auto i : classes[c]) members += (members.empty() ? "" : ",") + std::to_string(i);
    t.rows.push_back({std::to_string(c), std::to_string(classes[c].size()), matrix_text(rep.tau().matrix()),
                      yes_no(is_symmetric(rep)), std::to_string(self_dual), members});
  }
  t.notes.push_back(std::to_string(classes.size()) + " classes over " + std::to_string(all.size()) + " dualities");
  return t;
}

}  // namespace adk
