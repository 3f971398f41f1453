#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "bicoh/term.hpp"

namespace bicoh {

// Bounded equational search, independent of G. Terms are compared in their
// expanded Gentzen form, kept canonical modulo (cat 1), (cat 2) and the
// kappa equations; every other equation is a single rewrite step.

enum class OracleStatus : unsigned char { ConnectedWithin, NotConnectedWithin, CapExceeded };

struct OracleOptions {
  std::size_t size_cap = 0;         // 0: three times the larger canonical input
  std::size_t max_states = 200000;  // per search ball
};

struct OracleResult {
  OracleStatus status;
  int depth;                // the bound that was searched
  int steps = -1;           // ConnectedWithin: length of the path found
  std::size_t states = 0;   // states visited over both balls
};

std::string oracle_status_name(OracleStatus s);

Term oracle_canonical(const Term& t, System sys);
// One-step rewrites of a canonical term, canonicalised and deduplicated.
std::vector<Term> oracle_neighbours(const Term& t, System sys);

// Caches search balls, so many queries over a common term pool stay cheap.
class Oracle {
 public:
  explicit Oracle(System sys, OracleOptions opt = {}) : sys_(sys), opt_(opt) {}
  OracleResult equal(const Term& f, const Term& g, int depth);

 private:
  struct Ball {
    std::unordered_map<Term, int> dist;
    bool capped = false;
  };
  const Ball& ball(const Term& canon, int radius, std::size_t cap);

  System sys_;
  OracleOptions opt_;
  std::map<std::tuple<Term, int, std::size_t>, Ball> cache_;
};

OracleResult oracle_equal(const Term& f, const Term& g, System sys, int depth, const OracleOptions& opt = {});

}  // namespace bicoh
