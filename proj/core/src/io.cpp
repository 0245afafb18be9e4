#include "adk/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "adk/errors.hpp"

namespace adk {

namespace {

std::vector<std::string_view> split(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || seps.find(s[i]) != std::string_view::npos) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw Error("cannot parse " + std::string(what) + " from '" + std::string(s) + "'");
  }
  return v;
}

bool digit_form(const GroupSpec& g) {
  return std::all_of(g.orders().begin(), g.orders().end(), [](auto d) { return d <= 10; });
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// coefficient-times-monomial text with CycInt-style signs
void append_term(std::ostringstream& out, bool& first, const BigInt& c, const std::string& mono) {
  if (c == 0) return;
  const BigInt mag = c < 0 ? BigInt(-c) : c;
  if (first) {
    if (c < 0) out << "-";
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  first = false;
  if (mono.empty()) {
    out << mag;
  } else {
    if (mag != 1) out << mag << "·";
    out << mono;
  }
}

std::string power_text(const std::string& var, std::int64_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

GroupSpec parse_group(std::string_view text) {
  std::vector<std::int64_t> orders;
  for (const auto part : split(trim(text), ",x")) orders.push_back(parse_int(part, "cyclic order"));
  return GroupSpec(std::move(orders));
}

std::string group_text(const GroupSpec& g) {
  std::vector<std::string> parts;
  for (const auto d : g.orders()) parts.push_back(std::to_string(d));
  return join(parts, ",");
}

std::string element_text(const GroupElement& x) {
  std::vector<std::string> parts;
  for (const auto c : x.coords()) parts.push_back(std::to_string(c));
  return join(parts, digit_form(x.parent()) ? "" : ",");
}

std::string element_text(const GroupSpec& g, std::int64_t index) { return element_text(g.element_at(index)); }

GroupElement parse_element(const GroupSpec& g, std::string_view text) {
  text = trim(text);
  std::vector<std::int64_t> coords;
  if (text.find(',') != std::string_view::npos || g.rank() == 1) {
    for (const auto part : split(text, ",")) coords.push_back(parse_int(part, "coordinate"));
  } else if (digit_form(g) && text.size() == g.rank()) {
    for (const char ch : text) {
      if (ch < '0' || ch > '9') throw Error("cannot parse element '" + std::string(text) + "'");
      coords.push_back(ch - '0');
    }
  } else {
    throw Error("cannot parse element '" + std::string(text) + "' of group " + group_text(g));
  }
  if (coords.size() != g.rank()) throw Error("element '" + std::string(text) + "' has the wrong number of coordinates");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= g.order(i)) {
      throw Error("coordinate " + std::to_string(coords[i]) + " out of range for Z/" + std::to_string(g.order(i)));
    }
  }
  return GroupElement(g, std::move(coords));
}

std::string word_text(const GroupSpec& base, const GroupElement& x) {
  const auto k = base.rank();
  const auto c = x.coords();
  const auto n = c.size() / k;
  std::vector<std::string> blocks;
  for (std::size_t b = 0; b < n; ++b) blocks.push_back(element_text(base, base.index_of(c.subspan(b * k, k))));
  if (n == 1) return blocks.front();
  return "(" + join(blocks, digit_form(base) ? "," : ";") + ")";
}

GroupElement parse_word(const GroupSpec& base, std::size_t n, std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  const auto power = power_group(base, n);
  std::vector<std::string> blocks;
  if (text.find_first_of(";|") != std::string_view::npos) {
    for (const auto b : split(text, ";|")) blocks.emplace_back(trim(b));
  } else if (digit_form(base)) {
    std::string digits;
    for (const char ch : text)
      if (ch != ',' && ch != ' ') digits += ch;
    if (digits.size() != base.rank() * n) throw Error("word '" + std::string(text) + "' has the wrong length");
    for (std::size_t b = 0; b < n; ++b) blocks.push_back(digits.substr(b * base.rank(), base.rank()));
  } else if (n == 1) {
    blocks.emplace_back(text);
  } else {
    throw Error("separate the blocks of word '" + std::string(text) + "' with ';'");
  }
  if (blocks.size() != n) throw Error("word '" + std::string(text) + "' has the wrong number of blocks");
  std::vector<std::int64_t> coords;
  for (const auto& b : blocks) {
    const auto e = parse_element(base, b);
    coords.insert(coords.end(), e.coords().begin(), e.coords().end());
  }
  return GroupElement(power, std::move(coords));
}

std::string subgroup_text(const Subgroup& h) {
  std::vector<std::string> parts;
  for (const auto i : h.indices()) parts.push_back(element_text(h.parent(), i));
  return "{" + join(parts, ",") + "}";
}

std::string code_text(const GroupSpec& base, const Subgroup& c) {
  std::vector<std::string> parts;
  for (const auto& x : c.elements()) parts.push_back(word_text(base, x));
  return "{" + join(parts, ",") + "}";
}

std::string matrix_text(const Homomorphism::Matrix& m) {
  std::vector<std::string> rows;
  for (const auto& r : m) {
    std::vector<std::string> e;
    for (const auto v : r) e.push_back(std::to_string(v));
    rows.push_back("[" + join(e, ",") + "]");
  }
  return "[" + join(rows, ",") + "]";
}

Homomorphism::Matrix parse_matrix(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception&) {
    throw Error("cannot parse matrix '" + std::string(text) + "'");
  }
  if (!j.is_array()) throw Error("matrix must be a list of rows");
  Homomorphism::Matrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error("matrix must be a list of rows");
    std::vector<std::int64_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw Error("matrix entries must be integers");
      r.push_back(v.get<std::int64_t>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

std::string hwe_text(const HammingEnumerator& e) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t w = 0; w < e.coeffs.size(); ++w) {
    std::vector<std::string> vars;
    if (auto x = power_text("X", static_cast<std::int64_t>(e.n - w)); !x.empty()) vars.push_back(x);
    if (auto y = power_text("Y", static_cast<std::int64_t>(w)); !y.empty()) vars.push_back(y);
    append_term(out, first, e.coeffs[w], join(vars, "·"));
  }
  return first ? "0" : out.str();
}

std::string cwe_text(const CompleteEnumerator& e) {
  std::ostringstream out;
  bool first = true;
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
    std::vector<std::string> vars;
    for (std::size_t a = 0; a < it->first.size(); ++a) {
      if (auto z = power_text("Z_" + element_text(e.base, static_cast<std::int64_t>(a)), it->first[a]); !z.empty())
        vars.push_back(z);
    }
    append_term(out, first, it->second, join(vars, "·"));
  }
  return first ? "0" : out.str();
}

// ---------------------------------------------------------------------------
// JSON

Json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error("expected an integer, got " + j.dump());
}

Json to_json(const GroupSpec& g) { return {{"orders", std::vector<std::int64_t>(g.orders().begin(), g.orders().end())}}; }

Json to_json(const GroupElement& x) {
  return {{"coords", std::vector<std::int64_t>(x.coords().begin(), x.coords().end())}};
}

Json to_json(const Subgroup& h) {
  Json gens = Json::array();
  for (const auto& g : h.generators()) gens.push_back(std::vector<std::int64_t>(g.coords().begin(), g.coords().end()));
  return {{"generators", gens}, {"order", h.order()}};
}

Json to_json(const Character& pi) {
  return {{"etuple", std::vector<std::int64_t>(pi.etuple().begin(), pi.etuple().end())}};
}

Json to_json(const Duality& phi) { return {{"tau", phi.tau().matrix()}}; }

Json to_json(const CycInt& x) {
  Json c = Json::array();
  for (const auto& v : x.coeffs()) c.push_back(bigint_json(v));
  return {{"modulus", x.modulus()}, {"coeffs", c}};
}

Json to_json(const HammingEnumerator& e) {
  Json c = Json::array();
  for (const auto& v : e.coeffs) c.push_back(bigint_json(v));
  return {{"n", e.n}, {"coeffs", c}};
}

Json to_json(const CompleteEnumerator& e) {
  Json terms = Json::array();
  for (const auto& [counts, coeff] : e.terms) {
    Json cj = Json::object();
    for (std::size_t a = 0; a < counts.size(); ++a)
      if (counts[a] != 0) cj[element_text(e.base, static_cast<std::int64_t>(a))] = counts[a];
    terms.push_back({{"counts", cj}, {"coeff", bigint_json(coeff)}});
  }
  return {{"n", e.n}, {"terms", terms}};
}

namespace {

std::vector<std::int64_t> int_list(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw Error(std::string("expected an object with array field '") + key + "'");
  }
  std::vector<std::int64_t> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number_integer()) throw Error(std::string("field '") + key + "' must hold integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

}  // namespace

GroupSpec group_from_json(const Json& j) { return GroupSpec(int_list(j, "orders")); }

GroupElement element_from_json(const GroupSpec& g, const Json& j) { return GroupElement(g, int_list(j, "coords")); }

Subgroup subgroup_from_json(const GroupSpec& g, const Json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.at("generators").is_array()) {
    throw Error("expected an object with a 'generators' list");
  }
  std::vector<GroupElement> gens;
  for (const auto& row : j.at("generators")) gens.emplace_back(g, row.get<std::vector<std::int64_t>>());
  auto h = subgroup_closure(g, gens);
  if (j.contains("order") && j.at("order").get<std::int64_t>() != h.order()) {
    throw Error("subgroup order does not match its generators");
  }
  return h;
}

Character character_from_json(const GroupSpec& g, const Json& j) { return Character(g, int_list(j, "etuple")); }

Duality duality_from_json(const GroupSpec& g, const Json& j) {
  if (!j.is_object() || !j.contains("tau")) throw Error("expected an object with field 'tau'");
  return Duality(Automorphism(Homomorphism(g, g, j.at("tau").get<Homomorphism::Matrix>())));
}

CycInt cycint_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("modulus") || !j.contains("coeffs")) {
    throw Error("expected an object with 'modulus' and 'coeffs'");
  }
  std::vector<BigInt> c;
  for (const auto& v : j.at("coeffs")) c.push_back(bigint_from_json(v));
  const auto m = j.at("modulus").get<std::int64_t>();
  return CycInt::from_powers(m, c);
}

HammingEnumerator hwe_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("coeffs")) throw Error("expected an object with 'n' and 'coeffs'");
  HammingEnumerator e;
  e.n = j.at("n").get<std::size_t>();
  for (const auto& v : j.at("coeffs")) e.coeffs.push_back(bigint_from_json(v));
  if (e.coeffs.size() != e.n + 1) throw Error("Hamming enumerator needs n + 1 coefficients");
  return e;
}

CompleteEnumerator cwe_from_json(const GroupSpec& base, const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms")) throw Error("expected an object with 'n' and 'terms'");
  CompleteEnumerator e{base, j.at("n").get<std::size_t>(), {}};
  for (const auto& t : j.at("terms")) {
    Monomial counts(static_cast<std::size_t>(base.cardinality()), 0);
    for (const auto& [key, v] : t.at("counts").items()) counts[static_cast<std::size_t>(parse_element(base, key).index())] = v.get<std::int64_t>();
    const auto c = bigint_from_json(t.at("coeff"));
    if (c != 0) e.terms[counts] += c;
  }
  return e;
}

}  // namespace adk
