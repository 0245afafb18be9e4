#pragma once

// Conversions between library values and the oracle's plain vectors.

#include "adk/group.hpp"
#include "adk/dualities.hpp"
#include "oracle.hpp"

namespace bridge {

inline oracle::Vec orders(const adk::GroupSpec& g) { return {g.orders().begin(), g.orders().end()}; }

inline oracle::Set to_set(const adk::Subgroup& h) {
  oracle::Set s;
  for (const auto& x : h.elements()) s.insert(oracle::Vec(x.coords().begin(), x.coords().end()));
  return s;
}

inline adk::Subgroup from_set(const adk::GroupSpec& g, const oracle::Set& s) {
  std::vector<adk::GroupElement> gens;
  for (const auto& v : s) gens.push_back(g.element(v));
  return adk::subgroup_closure(g, gens);
}

inline const oracle::Mat& mat(const adk::Duality& phi) { return phi.tau().matrix(); }

inline adk::Duality duality(const adk::GroupSpec& g, const oracle::Mat& m) {
  return adk::Duality(adk::Automorphism(adk::Homomorphism(g, g, m)));
}

}  // namespace bridge
