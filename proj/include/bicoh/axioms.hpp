#pragma once

#include <string>
#include <vector>

#include "bicoh/generate.hpp"
#include "bicoh/term.hpp"

namespace bicoh {

struct AxiomInstance {
  std::string schema;
  Term lhs;
  Term rhs;
};

// Names of the axiom schemas of `sys`: the arrow equations of L, the
// Gentzen equations, and the constant equations the system admits.
std::vector<std::string> axiom_schemas(System sys);

// One instance of `schema` over formulas drawn from `pool`, with sampled
// terms for the term variables. Both sides typecheck in `opt.sys`.
AxiomInstance instantiate_axiom(const std::string& schema, Rng& rng, const std::vector<Formula>& pool,
                                const GenOptions& opt);

// Every schema of `sys` instantiated at each formula of the pool.
std::vector<AxiomInstance> axiom_instances(System sys, const std::vector<Formula>& pool, Rng& rng);

}  // namespace bicoh
