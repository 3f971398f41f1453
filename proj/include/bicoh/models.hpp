#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bicoh/formula.hpp"
#include "bicoh/term.hpp"

namespace bicoh {

// Pointed-set models. In both variants top is I = {*}; bot is I in Star and
// the empty set in StarEmpty.
//   a /\ b = ((a-I) x (b-I)) u a' u b'' u I
//   a \/ b = a' u b'' u I
// with a' = {(x,*) | x in a-I} and b'' = {(*,y) | y in b-I}. In StarEmpty,
// empty /\ a = a /\ empty = empty and empty \/ a = a \/ empty = a.
enum class Variant : unsigned char { Star, StarEmpty };

std::string variant_name(Variant v);

struct Element {
  enum class Kind : unsigned char { Star, Atom, Pair };
  Kind kind = Kind::Star;
  std::string atom;
  std::vector<Element> parts;  // Pair: exactly two

  static Element star() { return {}; }
  static Element make_atom(std::string name) { return {Kind::Atom, std::move(name), {}}; }
  static Element make_pair(Element a, Element b) { return {Kind::Pair, {}, {std::move(a), std::move(b)}}; }
  bool is_star() const { return kind == Kind::Star; }
  std::string str() const;

  friend bool operator==(const Element& a, const Element& b) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);
};

// The empty set is the extra object of StarEmpty; every other object holds *.
using PointedSet = std::set<Element>;

struct PointedFn {
  PointedSet domain;
  PointedSet codomain;
  std::map<Element, Element> table;
  friend bool operator==(const PointedFn& a, const PointedFn& b) = default;
};

using Assignment = std::map<std::string, PointedSet>;

// {*, a, b, ...} with `size` elements in all.
PointedSet pointed_set(int size);
// Every letter of the given formulas mapped to pointed_set(size).
Assignment uniform_assignment(const std::vector<Formula>& formulas, int size = 2);

PointedSet interp_formula(const Formula& a, const Assignment& asg, Variant v);
PointedFn interp_term(const Term& t, const Assignment& asg, Variant v);
bool model_equal(const Term& f, const Term& g, const Assignment& asg, Variant v);

std::string set_str(const PointedSet& s);
// {"domain":[...], "codomain":[...], "table":{"x":"y",...}}
std::string fn_json(const PointedFn& f);

// X^0_bot = X /\ bot, X^{n+1}_bot = (X^n_bot \/ top) /\ bot, and duals.
Formula bot_tower(const Formula& x, int n);
Formula top_tower(const Formula& x, int n);
// f^0_bot = f /\ 1_bot, f^{n+1}_bot = (f^n_bot \/ 1_top) /\ 1_bot, and duals.
Term bot_tower(const Term& f, int n);
Term top_tower(const Term& f, int n);

// f^n, g^n : A^{n+1}_bot |- A^{n+1}_top with equal G-images.
std::pair<Term, Term> counterexample_pair(int n, const Formula& a);

}  // namespace bicoh
