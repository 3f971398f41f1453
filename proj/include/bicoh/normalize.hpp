#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bicoh/errors.hpp"
#include "bicoh/term.hpp"

namespace bicoh {

struct RewriteStep {
  std::string rule;
  std::string path;  // dotted child indices from the root, or "root"
  Term before;
  Term after;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
  // One line per step: `<rule> @ <path>: <before> => <after>`.
  std::string render() const;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct Eliminated {
  Term term;
  RewriteTrace trace;
};

// Composition-free Gentzen term equal to `t` in `sys`. A nonzero `max_steps`
// bounds the number of cut reductions.
Eliminated eliminate_composition(const Term& t, System sys, std::size_t max_steps = 0);

// f : A1 /\ A2 |- B with every source occurrence of Gf inside A_i; returns
// f' : A_i |- B with HK_i(f') = f.
Term invert_conj(const Term& f, int i);
// f : A |- B1 \/ B2 with every target occurrence of Gf inside B_i; returns
// f' : A |- B_i with CK_i(f') = f.
Term invert_disj(const Term& f, int i);

// f : A |- B1 \/ B2 with Gf nonempty, A free of \/ and every target
// occurrence of Gf inside B1. Returns g : A |- B1 with G(CK1(g)) = Gf.
Term lemma3_factor(const Term& f);

struct StandardForm {
  Term f;  // no cw, ck or ckap
  Term g;  // no hw, hk or hkap
  RewriteTrace trace;
};

// t = g . f with f in the hat fragment and g in the check fragment.
StandardForm standard_form(const Term& t);

}  // namespace bicoh
