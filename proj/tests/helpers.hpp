#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bicoh/parse.hpp"
#include "bicoh/relation.hpp"

namespace bicoh::test {

inline Formula F(const std::string& s) { return parse_formula(s); }
inline Term T(const std::string& s) { return parse_term(s); }
// Most letter occurrences in any formula the term mentions; bounds the size
// of its pointed-set interpretation.
inline std::size_t max_letters(const Term& t) {
  std::size_t m = 0;
  map_formulas(t, [&](const Formula& a) {
    m = std::max(m, a.letters());
    return a;
  });
  return std::max({m, t.source().letters(), t.target().letters()});
}

inline std::vector<OccPair> P(std::initializer_list<OccPair> l) { return {l}; }

}  // namespace bicoh::test
