#pragma once

// Text forms and JSON encodings of the library's values.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "adk/characters.hpp"
#include "adk/codes.hpp"
#include "adk/cyclotomic.hpp"
#include "adk/dualities.hpp"
#include "adk/enumerators.hpp"
#include "adk/group.hpp"

namespace adk {

using Json = nlohmann::json;

/// "2,4" -> [2,4].
GroupSpec parse_group(std::string_view text);
std::string group_text(const GroupSpec& g);

/// Digits run together when every order is at most 10 ("12"), comma-joined
/// otherwise ("3,11").
std::string element_text(const GroupElement& x);
std::string element_text(const GroupSpec& g, std::int64_t index);
/// Accepts either text form.
GroupElement parse_element(const GroupSpec& g, std::string_view text);
/// Words of A^n shown block by block: "(10,01)". For n = 1 this is
/// element_text of the single block.
std::string word_text(const GroupSpec& base, const GroupElement& x);
/// A word of A^n: n element texts joined by '|' or ';', or a single run of
/// digits for the whole word.
GroupElement parse_word(const GroupSpec& base, std::size_t n, std::string_view text);

/// "{00,10}".
std::string subgroup_text(const Subgroup& h);
/// Subgroup text over A^n using word_text.
std::string code_text(const GroupSpec& base, const Subgroup& c);
/// "[[1,1],[0,1]]".
std::string matrix_text(const Homomorphism::Matrix& m);
Homomorphism::Matrix parse_matrix(std::string_view text);

std::string hwe_text(const HammingEnumerator& e);
std::string cwe_text(const CompleteEnumerator& e);

Json to_json(const GroupSpec& g);
Json to_json(const GroupElement& x);
Json to_json(const Subgroup& h);
Json to_json(const Character& pi);
Json to_json(const Duality& phi);
Json to_json(const CycInt& x);
Json to_json(const HammingEnumerator& e);
Json to_json(const CompleteEnumerator& e);
Json bigint_json(const BigInt& v);

GroupSpec group_from_json(const Json& j);
GroupElement element_from_json(const GroupSpec& g, const Json& j);
Subgroup subgroup_from_json(const GroupSpec& g, const Json& j);
Character character_from_json(const GroupSpec& g, const Json& j);
Duality duality_from_json(const GroupSpec& g, const Json& j);
CycInt cycint_from_json(const Json& j);
HammingEnumerator hwe_from_json(const Json& j);
CompleteEnumerator cwe_from_json(const GroupSpec& base, const Json& j);
BigInt bigint_from_json(const Json& j);

}  // namespace adk
