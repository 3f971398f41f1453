#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicoh/relation.hpp"
#include "bicoh/term.hpp"

namespace bicoh {

enum class CollapseEquation : unsigned char {
  HatHat,         // hk1<p,p> = hk2<p,p>
  CheckCheck,     // ck1<p,p> = ck2<p,p>
  HatCheck,       // ck1<p,top> . hk1<p,bot> = ck2<p,top> . 0 . hk2<p,bot>
  HatKappaCheck,  // hk1<p,bot> = ckap<p> . hk2<p,bot>
  CheckKappaHat,  // ck1<p,top> = ck2<p,top> . hkap<p>
};

std::string equation_name(CollapseEquation e);

// Composites t_i = post . f_i . pre. When `swapped` is set, the chosen pair
// lies in G(f2) and not in G(f1), so t2 carries the left side of `equation`.
struct CollapseWitness {
  CollapseEquation equation;
  Formula source;  // type of f1 and f2
  Formula target;
  OccPair chosen;
  bool swapped = false;
  Term pre_context;
  Term post_context;
  Term composite1;
  Term composite2;
  Relation image1;
  Relation image2;
  std::optional<Term> h_a, h_b, j_a, j_b;  // dicartesian witnesses only
  bool valid = true;
  std::string note;  // first step whose image check failed
};

// Every letter replaced by `letter`.
Term monoletter(const Term& f, const std::string& letter = "p");

// p |- a for a conjunction tree a of one letter, linking the source to every
// occurrence; codiagonal is the dual a |- p for a disjunction tree.
Term diagonal(const Formula& a);
Term codiagonal(const Formula& a);

// f1, f2 : A |- B in L over a single letter with G(f1) != G(f2). The
// composites have type p/\p |- p or p |- p\/p and singleton images.
CollapseWitness collapse_witness_L(const Term& f1, const Term& f2);

// f1, f2 : A |- B in Ltopbot with G(f1) != G(f2). The composites have type
// p/\bot |- p\/top with images {(1,1)} and {}. With `refine`, a side whose
// path siblings allow it is rebuilt isomorphic to p, giving (k^kappa) or
// its dual instead.
CollapseWitness collapse_witness_dicart(const Term& f1, const Term& f2, bool refine = false);

std::vector<std::string> derived_consequences(const CollapseWitness& w);

// Contexts, composites and the equation name as JSON.
std::string witness_json(const CollapseWitness& w);

}  // namespace bicoh
