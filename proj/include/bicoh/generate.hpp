#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bicoh/formula.hpp"
#include "bicoh/term.hpp"

namespace bicoh {

using Rng = std::mt19937_64;

enum class TermStyle : unsigned char { Arrow, Gentzen, Mixed };

struct GenOptions {
  System sys = System::L;
  std::vector<std::string> letters{"p", "q", "r", "s"};
  int max_leaves = 6;     // atomic leaves per generated formula
  int max_nodes = 30;     // term size bound for random_term
  TermStyle style = TermStyle::Mixed;
};

// Uniform over binary shapes with 1..max_leaves leaves; constants appear
// only when the system has them.
Formula random_formula(Rng& rng, const GenOptions& opt);
Formula random_formula(Rng& rng, const GenOptions& opt, int leaves);

// Whether some arrow A |- B exists in `sys` (cut-free search).
bool provable(const Formula& a, const Formula& b, System sys);

// A random composition-free Gentzen term A |- B, if the sequent is provable.
std::optional<Term> random_cutfree(Rng& rng, const Formula& a, const Formula& b, System sys);

// The first composition-free Gentzen term A |- B in a fixed rule order.
std::optional<Term> find_cutfree(const Formula& a, const Formula& b, System sys);

// Every composition-free Gentzen term A |- B built from Id, the kappas,
// pair, copair, projections and injections. Id is admitted at any formula.
std::vector<Term> enumerate_cutfree(const Formula& a, const Formula& b, System sys);

// Random well-typed term with the given source (resp. target) and roughly
// `budget` nodes.
Term random_from(Rng& rng, const Formula& a, const GenOptions& opt, int budget);
Term random_to(Rng& rng, const Formula& b, const GenOptions& opt, int budget);

// Random term with at most opt.max_nodes nodes over a random source.
Term random_term(Rng& rng, const GenOptions& opt);

}  // namespace bicoh
