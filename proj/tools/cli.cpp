#include "cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "adk/codes.hpp"
#include "adk/dualities.hpp"
#include "adk/enumerators.hpp"
#include "adk/errors.hpp"
#include "adk/io.hpp"
#include "adk/tables.hpp"

namespace adk::cli {

namespace {

struct Options {
  std::string group;
  std::string format = "text";
  std::int64_t limit = 0;

  bool subgroups = false;
  bool list = false;
  bool count_only = false;
  std::vector<std::string> code_gens;
  std::size_t n = 1;
  std::size_t duality_index = 0;
  std::string side = "both";
  std::int64_t order = 0;
  std::int64_t p = 0;
  std::string enumerator = "both";
  std::string table_id;
  std::vector<std::string> h_gens;
  std::vector<std::string> k_gens;
  bool symmetric_only = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  const Options& opt;
  Limits limits;
  std::ostream& out;

  bool json() const { return opt.format == "json"; }

  GroupSpec group() const {
    if (opt.group.empty()) throw UsageError("--group is required");
    return parse_group(opt.group);
  }

  void emit(const Json& j) const { out << j.dump(2) << "\n"; }
  void emit(const Table& t) const {
    if (json()) emit(t.to_json());
    else out << t.to_text();
  }
};

std::vector<Side> sides(const std::string& s) {
  if (s == "left") return {Side::left};
  if (s == "right") return {Side::right};
  return {Side::left, Side::right};
}

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

Duality pick_duality(const Context& c, const GroupSpec& g) {
  const auto all = all_dualities(g, c.limits);
  if (c.opt.duality_index >= all.size()) {
    throw Error("duality index " + std::to_string(c.opt.duality_index) + " out of range (" +
                std::to_string(all.size()) + " dualities)");
  }
  return all[c.opt.duality_index];
}

Subgroup code_from(const GroupSpec& base, std::size_t n, const std::vector<std::string>& gens) {
  const auto power = power_group(base, n);
  std::vector<GroupElement> els;
  for (const auto& s : gens) els.push_back(parse_word(base, n, s));
  return subgroup_closure(power, els);
}

// ---------------------------------------------------------------------------

int cmd_group(const Context& c) {
  const auto g = c.group();
  std::vector<Subgroup> subs;
  if (c.opt.subgroups) subs = all_subgroups(g, c.limits);
  if (c.json()) {
    Json j = {{"group", to_json(g)}, {"order", g.cardinality()}, {"exponent", g.exponent()}};
    if (c.opt.subgroups) {
      Json list = Json::array();
      for (const auto& h : subs) {
        auto hj = to_json(h);
        hj["characteristic"] = is_characteristic(h, c.limits);
        list.push_back(hj);
      }
      j["subgroups"] = list;
    }
    c.emit(j);
    return 0;
  }
  c.out << "group " << group_text(g) << ": order " << g.cardinality() << ", exponent " << g.exponent() << "\n";
  if (!c.opt.subgroups) return 0;
  Table t{"subgroups", "", {"index", "order", "elements", "characteristic"}, {}, {}, {}};
  for (std::size_t i = 0; i < subs.size(); ++i) {
    t.rows.push_back({std::to_string(i), std::to_string(subs[i].order()), subgroup_text(subs[i]),
                      is_characteristic(subs[i], c.limits) ? "yes" : "no"});
  }
  t.notes.push_back(std::to_string(subs.size()) + " subgroups");
  c.out << t.to_text();
  return 0;
}

int cmd_dualities(const Context& c) {
  const auto g = c.group();
  const auto all = all_dualities(g, c.limits);
  const auto symmetric = std::count_if(all.begin(), all.end(), [](const Duality& d) { return is_symmetric(d); });
  if (c.opt.count_only) {
    if (c.json()) c.emit(Json{{"group", to_json(g)}, {"total", all.size()}, {"symmetric", symmetric}});
    else c.out << all.size() << " total, " << symmetric << " symmetric\n";
    return 0;
  }
  if (!c.json()) {
    c.out << dualities_view(g, c.limits).to_text();
    return 0;
  }
  Json list = Json::array();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto adj = adjoint(all[i]);
    list.push_back({{"index", i},
                    {"tau", all[i].tau().matrix()},
                    {"symmetric", adj == all[i]},
                    {"adjoint", std::lower_bound(all.begin(), all.end(), adj) - all.begin()},
                    {"order", all[i].tau().order()}});
  }
  c.emit(Json{{"group", to_json(g)}, {"total", all.size()}, {"symmetric", symmetric}, {"dualities", list}});
  return 0;
}

int cmd_dual(const Context& c) {
  const auto base = c.group();
  if (c.opt.code_gens.empty()) throw UsageError("--code-gens is required");
  const auto phi = pick_duality(c, base);
  const auto code = code_from(base, c.opt.n, c.opt.code_gens);
  Json j = {{"group", to_json(base)}, {"n", c.opt.n}, {"duality", to_json(phi)}, {"code", to_json(code)}};
  if (!c.json()) {
    c.out << "duality " << c.opt.duality_index << " " << matrix_text(phi.tau().matrix()) << "\n";
    c.out << "C = " << code_text(base, code) << " (order " << code.order() << ")\n";
  }
  for (const auto s : sides(c.opt.side)) {
    const auto d = dual_code(code, phi, s, c.limits);
    if (c.json()) {
      j[side_name(s)] = to_json(d);
    } else {
      c.out << (s == Side::left ? "L(C) = " : "R(C) = ") << code_text(base, d) << " (order " << d.order() << ")\n";
    }
  }
  const auto kind = self_dual_kind(code, phi, c.limits);
  const char* kind_text = kind == SelfDualKind::self_dual ? "self-dual"
                          : kind == SelfDualKind::self_orthogonal ? "self-orthogonal"
                                                                  : "neither";
  if (c.json()) {
    j["kind"] = kind_text;
    c.emit(j);
  } else {
    c.out << "C is " << kind_text << "\n";
  }
  return 0;
}

int cmd_duals_table(const Context& c) {
  const auto g = c.group();
  auto subs = all_subgroups(g, c.limits);
  if (c.opt.order > 0) {
    std::erase_if(subs, [&](const Subgroup& h) { return h.order() != c.opt.order; });
  }
  if (!c.json()) {
    c.emit(duals_view(g, subs, c.limits));
    return 0;
  }
  const auto table = duals_table(g, subs, c.limits);
  Json j = {{"group", to_json(g)}, {"subgroups", Json::array()}, {"dualities", Json::array()}, {"cells", Json::array()}};
  for (const auto& h : subs) j["subgroups"].push_back(to_json(h));
  for (const auto& d : table.dualities) j["dualities"].push_back(to_json(d));
  for (const auto& row : table.cells) {
    Json r = Json::array();
    for (const auto& [l, rr] : row) r.push_back({{"left", to_json(l)}, {"right", to_json(rr)}});
    j["cells"].push_back(r);
  }
  c.emit(j);
  return 0;
}

int cmd_congruence(const Context& c) {
  const auto g = c.group();
  if (!c.json()) {
    c.emit(congruence_view(g, c.limits));
    return 0;
  }
  const auto all = all_dualities(g, c.limits);
  Json classes = Json::array();
  for (const auto& cls : congruence_classes(g, c.limits)) {
    classes.push_back({{"members", cls},
                       {"representative", to_json(all[cls.front()])},
                       {"symmetric", is_symmetric(all[cls.front()])}});
  }
  c.emit(Json{{"group", to_json(g)}, {"classes", classes}});
  return 0;
}

int cmd_filtration(const Context& c) {
  const auto g = c.group();
  std::int64_t p = c.opt.p;
  if (p == 0) {
    const auto q = p_group_prime(g);
    if (!q) throw Error("group " + group_text(g) + " is not a p-group; pass --p");
    p = *q;
  }
  const auto steps = mult_by_p_filtration(g, p, c.limits);
  const bool holds = verify_filtration_duality(g, p, c.limits);
  if (c.json()) {
    Json list = Json::array();
    for (const auto& s : steps) list.push_back({{"j", s.j}, {"kernel", to_json(s.kernel)}, {"image", to_json(s.image)}});
    c.emit(Json{{"group", to_json(g)}, {"p", p}, {"steps", list}, {"duality_holds", holds}});
  } else {
    Table t{"filtration", "Filtration by multiplication by " + std::to_string(p) + " on " + group_text(g),
            {"j", "ker f^j", "im f^j"}, {}, {}, {}};
    for (const auto& s : steps) t.rows.push_back({std::to_string(s.j), subgroup_text(s.kernel), subgroup_text(s.image)});
    t.notes.push_back(std::string("im f^j = L(ker f^j) = R(ker f^j) for every duality: ") + (holds ? "yes" : "no"));
    c.out << t.to_text();
  }
  return holds ? 0 : 1;
}

int cmd_macwilliams(const Context& c) {
  const auto base = c.group();
  if (c.opt.code_gens.empty()) throw UsageError("--code-gens is required");
  const auto phi = pick_duality(c, base);
  const auto code = code_from(base, c.opt.n, c.opt.code_gens);
  const bool do_h = c.opt.enumerator != "complete";
  const bool do_c = c.opt.enumerator != "hamming";
  const std::int64_t q = base.cardinality();

  bool all_ok = true;
  Json checks = Json::array();
  auto report = [&](const std::string& what, bool ok, const std::string& lhs, const std::string& rhs) {
    all_ok = all_ok && ok;
    checks.push_back({{"check", what}, {"holds", ok}});
    if (!c.json()) {
      c.out << (ok ? "holds  " : "FAILS  ") << what << "\n";
      if (!ok) c.out << "  expected " << lhs << "\n  got      " << rhs << "\n";
    }
  };

  if (!c.json()) {
    c.out << "duality " << c.opt.duality_index << " " << matrix_text(phi.tau().matrix()) << ", C of order "
          << code.order() << " in A^" << c.opt.n << "\n";
  }
  for (const auto s : sides(c.opt.side)) {
    const auto d = dual_code(code, phi, s, c.limits);
    const std::string dn = s == Side::left ? "L(C)" : "R(C)";
    if (do_h) {
      const auto wc = hwe(code, base), wd = hwe(d, base);
      const auto to = mw_hamming_transform(wc, q, code.order());
      const auto from = mw_hamming_transform(wd, q, d.order());
      if (!c.json()) c.out << "W_C = " << hwe_text(wc) << "\nW_" << dn << " = " << hwe_text(wd) << "\n";
      report("hamming C -> " + dn, to == wd, hwe_text(wd), hwe_text(to));
      report("hamming " + dn + " -> C", from == wc, hwe_text(wc), hwe_text(from));
    }
    if (do_c) {
      const auto ec = cwe(code, base), ed = cwe(d, base);
      const auto to = mw_complete_transform(ec, phi, s, Direction::to_dual, c.limits);
      const auto from = mw_complete_transform(ed, phi, s, Direction::from_dual, c.limits);
      if (!c.json()) c.out << "cwe C = " << cwe_text(ec) << "\ncwe " << dn << " = " << cwe_text(ed) << "\n";
      report("complete C -> " + dn, to == ed, cwe_text(ed), cwe_text(to));
      report("complete " + dn + " -> C", from == ec, cwe_text(ec), cwe_text(from));
    }
  }
  if (c.json()) c.emit(Json{{"code", to_json(code)}, {"duality", to_json(phi)}, {"checks", checks}, {"holds", all_ok}});
  return all_ok ? 0 : 1;
}

int cmd_paper_table(const Context& c) {
  std::string id = c.opt.table_id;
  if (id.rfind("example-", 0) == 0) id = id.substr(8);
  c.emit(paper_table(id, c.limits));
  return 0;
}

int cmd_construct_pair(const Context& c) {
  const auto g = c.group();
  if (c.opt.h_gens.empty() || c.opt.k_gens.empty()) throw UsageError("--h-gens and --k-gens are required");
  const auto h = code_from(g, 1, c.opt.h_gens);
  const auto k = code_from(g, 1, c.opt.k_gens);
  std::optional<Duality> phi;
  std::string method = "construction";
  try {
    phi = construct_duality_for_pair(h, k);
  } catch (const UnsupportedError&) {
    method = "search";
    phi = search_duality_for_pair(h, k, true, c.limits);
    if (!phi) {
      phi = search_duality_for_pair(h, k, false, c.limits);
      if (phi) method = "search (no symmetric duality exists)";
    }
  }
  if (!phi) {
    if (c.json()) c.emit(Json{{"found", false}});
    else c.out << "no duality has L(H) = R(H) = K\n";
    return 1;
  }
  if (c.json()) {
    c.emit(Json{{"found", true}, {"method", method}, {"duality", to_json(*phi)}, {"symmetric", is_symmetric(*phi)}});
  } else {
    c.out << "H = " << subgroup_text(h) << "\nK = " << subgroup_text(k) << "\n";
    c.out << "tau = " << matrix_text(phi->tau().matrix()) << " via " << method << ", "
          << (is_symmetric(*phi) ? "symmetric" : "not symmetric") << "\n";
    c.out << "L(H) = " << subgroup_text(left_dual(h, *phi, c.limits))
          << ", R(H) = " << subgroup_text(right_dual(h, *phi, c.limits)) << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Dualities, dual codes and MacWilliams identities over finite abelian groups", "adk"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--group", opt.group, "cyclic orders, e.g. 2,4");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--limit", opt.limit, "scan bound (overrides ADK_LIMIT)")->check(CLI::PositiveNumber);

  auto* group = app.add_subcommand("group", "describe a group");
  group->add_flag("--subgroups", opt.subgroups, "list every subgroup");

  auto* dualities = app.add_subcommand("dualities", "enumerate dualities");
  dualities->add_flag("--list", opt.list, "print index and matrix of each duality (default)");
  dualities->add_flag("--count-only", opt.count_only, "print only the totals");

  auto add_code = [&](CLI::App* sub) {
    sub->add_option("--code-gens", opt.code_gens, "generators of C in A^n, e.g. 1001 or \"(10,01)\"");
    sub->add_option("--n", opt.n, "code length")->check(CLI::PositiveNumber);
    sub->add_option("--duality-index", opt.duality_index, "index from `dualities --list`");
    sub->add_option("--side", opt.side)->check(CLI::IsMember({"left", "right", "both"}));
  };
  auto* dual = app.add_subcommand("dual", "left and right duals of a code");
  add_code(dual);

  auto* duals = app.add_subcommand("duals-table", "duals of every subgroup under every duality");
  duals->add_option("--order", opt.order, "only subgroups of this order");

  auto* congruence = app.add_subcommand("congruence", "congruence classes of dualities");

  auto* filtration = app.add_subcommand("filtration", "kernels and images of powers of multiplication by p");
  filtration->add_option("--p", opt.p, "the prime (default: the group's)");

  auto* mw = app.add_subcommand("macwilliams", "MacWilliams identities");
  mw->require_subcommand(1);
  auto* verify = mw->add_subcommand("verify", "check both directions of the identities for a code");
  add_code(verify);
  verify->add_option("--enumerator", opt.enumerator)->check(CLI::IsMember({"hamming", "complete", "both"}));

  auto* paper = app.add_subcommand("paper-table", "reproduce a worked table");
  paper->add_option("id", opt.table_id, "table id")->required();
  auto* table = app.add_subcommand("table", "alias of paper-table; accepts example-<id>");
  table->add_option("id", opt.table_id, "table id")->required();

  auto* construct = app.add_subcommand("construct-pair", "a symmetric duality making H and K mutual duals");
  construct->add_option("--h-gens", opt.h_gens, "generators of H")->required();
  construct->add_option("--k-gens", opt.k_gens, "generators of K")->required();

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Limits limits = Limits::from_env();
    if (opt.limit > 0) limits.scan = opt.limit;
    const Context c{opt, limits, out};
    if (group->parsed()) return cmd_group(c);
    if (dualities->parsed()) return cmd_dualities(c);
    if (dual->parsed()) return cmd_dual(c);
    if (duals->parsed()) return cmd_duals_table(c);
    if (congruence->parsed()) return cmd_congruence(c);
    if (filtration->parsed()) return cmd_filtration(c);
    if (verify->parsed()) return cmd_macwilliams(c);
    if (paper->parsed() || table->parsed()) return cmd_paper_table(c);
    if (construct->parsed()) return cmd_construct_pair(c);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace adk::cli
