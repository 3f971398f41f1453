#pragma once

#include <compare>
#include <functional>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "bicoh/formula.hpp"

namespace bicoh {

enum class System : unsigned char { L, Lbot, Ltop, Ltopbot, Bicart };

std::string system_name(System s);
std::optional<System> parse_system(const std::string& s);
System dual_system(System s);
bool system_has_top(System s);
bool system_has_bot(System s);

// One term language for both presentations. Arrow terms use the primitives
// with Comp/Conj/Disj; Gentzen terms use Id, the kappas, HPair, CPair, HProj,
// CInj and Comp, with Conj/Disj admitted in fragment terms. Every Term value
// is well-typed: the smart constructors compute the type and throw TypeError.
class Term {
 public:
  enum class Kind : unsigned char {
    Id, Hw, Cw, Hk, Ck, Hkappa, Ckappa,
    Comp, Conj, Disj,
    HPair, CPair, HProj, CInj
  };

  static Term id(Formula a);
  static Term hw(Formula a);
  static Term cw(Formula a);
  static Term hk(int i, Formula a1, Formula a2);
  static Term ck(int i, Formula a1, Formula a2);
  static Term hkappa(Formula a);
  static Term ckappa(Formula a);
  // g . f, defined when target(f) = source(g).
  static Term comp(Term g, Term f);
  static Term conj(Term f1, Term f2);
  static Term disj(Term f1, Term f2);
  static Term binary(Conn c, Term f1, Term f2);
  static Term pair(Term f1, Term f2);
  static Term copair(Term g1, Term g2);
  // HProj(i, other, g): g has source A_i, other is A_{3-i}.
  static Term hproj(int i, Formula other, Term g);
  // CInj(i, other, f): f has target B_i, other is B_{3-i}.
  static Term cinj(int i, Formula other, Term f);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  int index() const;               // Hk, Ck, HProj, CInj
  const Formula& formula() const;  // Id, Hw, Cw, kappas: A; Hk/Ck: A1; HProj/CInj: other
  const Formula& formula2() const; // Hk/Ck: A2
  const Term& arg(int k) const;    // Comp: 0 = g, 1 = f; binary nodes: 0, 1; HProj/CInj: 0
  int arity() const;

  const Formula& source() const;
  const Formula& target() const;

  std::size_t nodes() const;
  std::size_t hash() const;
  bool has_comp() const;
  // Contains hw, cw, hk or ck.
  bool has_arrow_primitive() const;
  // Contains HPair, CPair, HProj or CInj.
  bool has_gentzen_constructor() const;
  // Contains Conj or Disj.
  bool has_functorial() const;
  // Contains any of cw, ck, ckappa, CPair, CInj.
  bool has_check() const;
  // Contains any of hw, hk, hkappa, HPair, HProj.
  bool has_hat() const;
  bool has_hkappa() const;
  bool has_ckappa() const;
  bool mentions_top() const;
  bool mentions_bot() const;

  std::string str() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  static Term make(std::shared_ptr<Node> n);
  std::shared_ptr<const Node> n_;
};

// Type of a term, after checking that every constant and formula it uses
// belongs to `sys`.
std::pair<Formula, Formula> typecheck(const Term& t, System sys);
bool in_system(const Term& t, System sys);

bool is_arrow_term(const Term& t);
bool is_gentzen_term(const Term& t);

// Expand rewrites every /\ and \/ on terms into pairs and projections;
// Keep leaves them all; Fragment keeps \/ in check-free terms and /\ in
// hat-free terms.
enum class Functorial : unsigned char { Expand, Keep, Fragment };
Term to_gentzen(const Term& t, Functorial mode = Functorial::Fragment);
Term to_arrow(const Term& t);

// Dual term in the dual system: type A |- B becomes dual(B) |- dual(A).
std::pair<Term, System> dualize(const Term& t, System sys);
Term dual(const Term& t);

enum class Fragment : unsigned char { Hat, Check, Both, Neither };
std::string fragment_name(Fragment f);
Fragment fragment_of(const Term& t);

// Applies `f` to every formula stored in the term.
Term map_formulas(const Term& t, const std::function<Formula(const Formula&)>& f);

// Identity-elimination and interchange cleanup that stays inside the same
// fragment: drops identities from composition chains, fuses id/\id and
// regroups (a ξ b) . (c ξ d) into (a . c) ξ (b . d).
Term simplify(const Term& t);

}  // namespace bicoh

template <>
struct std::hash<bicoh::Term> {
  std::size_t operator()(const bicoh::Term& t) const noexcept { return t.hash(); }
};
