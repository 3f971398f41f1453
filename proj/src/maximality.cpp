#include "bicoh/maximality.hpp"

#include <algorithm>
#include <deque>

#include <json.hpp>

#include "bicoh/errors.hpp"
#include "bicoh/generate.hpp"

namespace bicoh {

std::string equation_name(CollapseEquation e) {
  switch (e) {
    case CollapseEquation::HatHat: return "(k̂k̂)";
    case CollapseEquation::CheckCheck: return "(ǩǩ)";
    case CollapseEquation::HatCheck: return "(k̂ǩ)";
    case CollapseEquation::HatKappaCheck: return "(k̂κ̌)";
    case CollapseEquation::CheckKappaHat: return "(ǩκ̂)";
  }
  return "?";
}

Term monoletter(const Term& f, const std::string& letter) {
  Formula p = Formula::letter(letter);
  return map_formulas(f, [&](const Formula& a) { return substitute_all(a, p); });
}

Term diagonal(const Formula& a) {
  if (!a.is_conj()) return Term::id(a);
  Term l = diagonal(a.left()), r = diagonal(a.right());
  if (!(l.source() == r.source())) throw PreconditionError("diagonal: more than one letter in " + a.str());
  return Term::comp(Term::conj(l, r), Term::hw(l.source()));
}

Term codiagonal(const Formula& a) { return dual(diagonal(dual(a))); }

namespace {

bool contains(const Relation& r, OccPair p) { return std::binary_search(r.pairs.begin(), r.pairs.end(), p); }

// Least pair in G(f1) and not in G(f2), else the least pair the other way.
std::pair<OccPair, bool> choose_pair(const Relation& g1, const Relation& g2) {
  for (const OccPair& p : g1.pairs)
    if (!contains(g2, p)) return {p, false};
  for (const OccPair& p : g2.pairs)
    if (!contains(g1, p)) return {p, true};
  throw PreconditionError("no witness: the G-images are equal");
}

bool has_prefix(const OccPath& p, const OccPath& pre) {
  return p.size() >= pre.size() && std::equal(pre.begin(), pre.end(), p.begin());
}

// Shallowest, then leftmost, subformula with connective c.
std::optional<OccPath> outermost(const Formula& a, Conn c) {
  std::deque<OccPath> queue{{}};
  while (!queue.empty()) {
    OccPath p = queue.front();
    queue.pop_front();
    const Formula& s = subformula_at(a, p);
    if (!s.is_binary()) continue;
    if (s.conn() == c) return p;
    for (Side d : {Side::Left, Side::Right}) {
      OccPath q = p;
      q.push_back(d);
      queue.push_back(std::move(q));
    }
  }
  return std::nullopt;
}

// `t` placed at `at` inside a, with identities elsewhere.
Term in_context(const Formula& a, const OccPath& at, std::size_t depth, const Term& t) {
  if (depth == at.size()) return t;
  if (at[depth] == Side::Left)
    return Term::binary(a.conn(), in_context(a.left(), at, depth + 1, t), Term::id(a.right()));
  return Term::binary(a.conn(), Term::id(a.left()), in_context(a.right(), at, depth + 1, t));
}

// Some x' with (x', x) in G(h).
int pull_back(const Term& h, int x) {
  for (const OccPair& q : g_of(h).pairs)
    if (q.second == x) return q.first;
  throw Error("maximality: occurrence " + std::to_string(x) + " lost under " + h.str());
}

// The leaf of a conjunction tree t at `at`, reached by projections.
Term leaf_projection(const Formula& t, const OccPath& at, std::size_t depth) {
  if (depth == at.size()) return Term::id(t);
  if (at[depth] == Side::Left) return Term::comp(leaf_projection(t.left(), at, depth + 1), Term::hk(1, t.left(), t.right()));
  return Term::comp(leaf_projection(t.right(), at, depth + 1), Term::hk(2, t.left(), t.right()));
}

// p /\ t |- t sending the new p to the leaf at z and every other leaf to itself.
Term spread(const Formula& p, const Formula& t, const OccPath& z, OccPath& cur) {
  const Formula& s = subformula_at(t, cur);
  if (s.is_conj()) {
    cur.push_back(Side::Left);
    Term l = spread(p, t, z, cur);
    cur.back() = Side::Right;
    Term r = spread(p, t, z, cur);
    cur.pop_back();
    return Term::pair(l, r);
  }
  if (cur == z) return Term::hk(1, p, t);
  return Term::comp(leaf_projection(t, cur, 0), Term::hk(2, p, t));
}

// Context c : S |- a with (1, x) in G(c), where S is p or p /\ a' for a
// conjunction tree a' of p. The disjunctions of a are removed first.
Term reduce_source(const Formula& a, int x) {
  Term ctx = Term::id(a);
  Formula cur = a;
  while (auto at = outermost(cur, Conn::Or)) {
    OccPath px = path_of_occurrence(cur, x);
    const Formula& d = subformula_at(cur, *at);
    int j = has_prefix(px, *at) && px.size() > at->size() && px[at->size()] == Side::Right ? 2 : 1;
    Term h = in_context(cur, *at, 0, Term::ck(j, d.left(), d.right()));
    x = pull_back(h, x);
    ctx = Term::comp(ctx, h);
    cur = h.source();
  }
  if (!cur.is_conj()) return ctx;
  Formula p = subformula_at(cur, path_of_occurrence(cur, x));
  if (x == 1 && cur.left().is_letter()) return ctx;
  OccPath start;
  Term r = spread(p, cur, path_of_occurrence(cur, x), start);
  return Term::comp(ctx, r);
}

Term output(const Term& t) { return simplify(to_arrow(t)); }

void check_step(CollapseWitness& w, const std::string& step, const Term& t1, const Term& t2, OccPair at) {
  if (!w.valid) return;
  const Term& holder = w.swapped ? t2 : t1;
  const Term& other = w.swapped ? t1 : t2;
  if (!contains(g_of(holder), at) || contains(g_of(other), at)) {
    w.valid = false;
    w.note = step;
  }
}

CollapseWitness start(const Term& f1, const Term& f2) {
  if (!(f1.source() == f2.source()) || !(f1.target() == f2.target()))
    throw TypeError(TypeError::Kind::TypeMismatch, "witness: terms have different types");
  auto [chosen, swapped] = choose_pair(g_of(f1), g_of(f2));
  Term one = Term::id(f1.source());
  return CollapseWitness{CollapseEquation::HatHat, f1.source(), f1.target(), chosen, swapped, one, one, f1, f2,
                         g_of(f1), g_of(f2), std::nullopt, std::nullopt, std::nullopt, std::nullopt, true, {}};
}

void finish(CollapseWitness& w, const Term& f1, const Term& f2, const Term& pre, const Term& post) {
  w.pre_context = output(pre);
  w.post_context = output(post);
  w.composite1 = Term::comp(w.post_context, Term::comp(f1, w.pre_context));
  w.composite2 = Term::comp(w.post_context, Term::comp(f2, w.pre_context));
  w.image1 = g_of(w.composite1);
  w.image2 = g_of(w.composite2);
}

// Sides of a dicartesian witness: h : a' |- a with G(h) = {(1,x)} and an
// isomorphism j : s |- a' with G(j) = {(1,1)}, where s is p /\ bot, or p
// when the side is refined.
struct Side_ {
  Term h;
  Term j;
  bool refined = false;
};

// Every letter and top of a replaced by bot.
Formula all_bot(const Formula& a) {
  if (a.is_binary()) return Formula::binary(a.conn(), all_bot(a.left()), all_bot(a.right()));
  return Formula::bot();
}

// The arrow a' |- a for all_bot(a) = a'.
Term from_bot(const Formula& a) {
  if (a.is_binary()) return Term::binary(a.conn(), from_bot(a.left()), from_bot(a.right()));
  if (a.is_bot()) return Term::id(a);
  return Term::ckappa(a);
}

std::pair<Term, Term> plain_side(const Formula& a, const OccPath& px, std::size_t depth) {
  if (depth == px.size()) {
    Formula pb = Formula::conj(a, Formula::bot());
    return {Term::hk(1, a, Formula::bot()), Term::id(pb)};
  }
  bool left = px[depth] == Side::Left;
  const Formula& on = left ? a.left() : a.right();
  const Formula& off = left ? a.right() : a.left();
  auto [h, j] = plain_side(on, px, depth + 1);
  Term hoff = from_bot(off);
  Term h2 = left ? Term::binary(a.conn(), h, hoff) : Term::binary(a.conn(), hoff, h);
  Formula offp = hoff.source();
  Term jn = [&] {
    if (a.is_disj()) return Term::comp(left ? Term::ck(1, j.target(), offp) : Term::ck(2, offp, j.target()), j);
    Formula p = j.source().left();
    Term z = Term::comp(Term::ckappa(offp), Term::hk(2, p, Formula::bot()));
    return left ? Term::pair(j, z) : Term::pair(z, j);
  }();
  return {h2, jn};
}

// A side kept isomorphic to p: disjunctive siblings on the path become bot,
// conjunctive ones top. Needs every conjunctive sibling to be a tautology.
std::optional<std::pair<Term, Term>> refined_side(const Formula& a, const OccPath& px, std::size_t depth) {
  if (depth == px.size()) return std::pair{Term::id(a), Term::id(a)};
  bool left = px[depth] == Side::Left;
  const Formula& on = left ? a.left() : a.right();
  const Formula& off = left ? a.right() : a.left();
  auto inner = refined_side(on, px, depth + 1);
  if (!inner) return std::nullopt;
  auto [h, j] = *inner;
  Term hoff = Term::ckappa(off);
  if (a.is_conj()) {
    if (!is_tautology(off)) return std::nullopt;
    auto t = find_cutfree(Formula::top(), off, System::Ltopbot);
    if (!t) return std::nullopt;
    hoff = *t;
  }
  Term h2 = left ? Term::binary(a.conn(), h, hoff) : Term::binary(a.conn(), hoff, h);
  Formula offp = hoff.source();
  Term jn = [&] {
    if (a.is_disj()) return Term::comp(left ? Term::ck(1, j.target(), offp) : Term::ck(2, offp, j.target()), j);
    Term z = Term::hkappa(j.source());
    return left ? Term::pair(j, z) : Term::pair(z, j);
  }();
  return std::pair{h2, jn};
}

Side_ source_side(const Formula& a, int x, bool refine) {
  OccPath px = path_of_occurrence(a, x);
  if (refine)
    if (auto r = refined_side(a, px, 0)) return {r->first, r->second, true};
  auto [h, j] = plain_side(a, px, 0);
  return {h, j, false};
}

Side_ dual_side(const Side_& s) { return {dual(s.h), dual(s.j), s.refined}; }

}  // namespace

CollapseWitness collapse_witness_L(const Term& f1, const Term& f2) {
  CollapseWitness w = start(f1, f2);
  const Formula& a = w.source;
  const Formula& b = w.target;
  if (a.contains_top() || a.contains_bot() || b.contains_top() || b.contains_bot())
    throw PreconditionError("collapse_witness_L: the type mentions a constant");
  auto names = letter_names(a);
  for (const std::string& n : letter_names(b)) names.push_back(n);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  if (names.size() != 1) throw PreconditionError("collapse_witness_L: the type must mention exactly one letter");
  const Formula p = Formula::letter(names.front());
  auto [x, y] = w.chosen;

  Term pre = reduce_source(a, x);
  check_step(w, "source reduction", Term::comp(f1, pre), Term::comp(f2, pre), {1, y});
  Term post = dual(reduce_source(dual(b), y));
  auto at = [&](const Term& f) { return Term::comp(post, Term::comp(f, pre)); };
  check_step(w, "target reduction", at(f1), at(f2), {1, 1});

  const Formula s = pre.source();
  const Formula t = post.target();
  if (s.is_conj()) pre = Term::comp(pre, Term::conj(Term::id(p), diagonal(s.right())));
  if (t.is_disj()) post = Term::comp(Term::disj(Term::id(p), codiagonal(t.right())), post);
  check_step(w, "diagonals", at(f1), at(f2), {1, 1});

  if (s.is_conj() && t.is_disj()) {
    const Term& other = w.swapped ? f1 : f2;
    Relation g = g_of(at(other));
    if (contains(g, {2, 1}) || contains(g, {2, 2})) {
      post = Term::comp(Term::cw(p), post);
      w.equation = CollapseEquation::HatHat;
    } else {
      pre = Term::comp(pre, Term::hw(p));
      w.equation = CollapseEquation::CheckCheck;
    }
  } else if (s.is_conj()) {
    w.equation = CollapseEquation::HatHat;
  } else if (t.is_disj()) {
    w.equation = CollapseEquation::CheckCheck;
  } else if (w.valid) {
    w.valid = false;
    w.note = "contexts reached p |- p";
  }
  finish(w, f1, f2, pre, post);

  Relation one = make_relation(w.composite1.source(), w.composite1.target(), {{1, 1}});
  OccPair off = w.equation == CollapseEquation::HatHat ? OccPair{2, 1} : OccPair{1, 2};
  Relation two = make_relation(w.composite1.source(), w.composite1.target(), {off});
  const Relation& holder = w.swapped ? w.image2 : w.image1;
  const Relation& other = w.swapped ? w.image1 : w.image2;
  if (w.valid && (holder != one || other != two)) {
    w.valid = false;
    w.note = "final images";
  }
  return w;
}

CollapseWitness collapse_witness_dicart(const Term& f1, const Term& f2, bool refine) {
  CollapseWitness w = start(f1, f2);
  auto [x, y] = w.chosen;
  Side_ src = source_side(w.source, x, refine);
  Side_ tgt = dual_side(source_side(dual(w.target), y, refine && !src.refined));
  w.h_a = output(src.h);
  w.j_a = output(src.j);
  w.h_b = output(tgt.h);
  w.j_b = output(tgt.j);
  w.equation = src.refined   ? CollapseEquation::CheckKappaHat
               : tgt.refined ? CollapseEquation::HatKappaCheck
                             : CollapseEquation::HatCheck;
  finish(w, f1, f2, Term::comp(src.h, src.j), Term::comp(tgt.j, tgt.h));
  Relation one = make_relation(w.composite1.source(), w.composite1.target(), {{1, 1}});
  Relation none = make_relation(w.composite1.source(), w.composite1.target(), {});
  const Relation& holder = w.swapped ? w.image2 : w.image1;
  const Relation& other = w.swapped ? w.image1 : w.image2;
  if (holder != one || other != none) {
    w.valid = false;
    w.note = "final images";
  }
  return w;
}

std::vector<std::string> derived_consequences(const CollapseWitness& w) {
  if (w.equation == CollapseEquation::HatHat || w.equation == CollapseEquation::CheckCheck) return {"preorder collapse"};
  const Formula top = Formula::top(), bot = Formula::bot();
  std::string ck = Term::ck(1, w.target, top).str();
  std::string hk = Term::hk(1, w.source, bot).str();
  std::string schema = "(k̂ǩfg) " + ck + " . f . " + hk + " = " + ck + " . g . " + hk + " for all f, g : " +
                       w.source.str() + " |- " + w.target.str();
  std::vector<std::string> out;
  if (w.equation != CollapseEquation::HatCheck) out.push_back("(k̂ǩ)");
  out.push_back(schema);
  return out;
}

std::string witness_json(const CollapseWitness& w) {
  using nlohmann::json;
  auto pairs = [](const Relation& r) {
    json a = json::array();
    for (const OccPair& q : r.pairs) a.push_back({q.first, q.second});
    return a;
  };
  json j;
  j["equation"] = equation_name(w.equation);
  j["source"] = w.source.str();
  j["target"] = w.target.str();
  j["chosen"] = {w.chosen.first, w.chosen.second};
  j["swapped"] = w.swapped;
  j["pre_context"] = w.pre_context.str();
  j["post_context"] = w.post_context.str();
  j["composite1"] = w.composite1.str();
  j["composite2"] = w.composite2.str();
  j["image1"] = pairs(w.image1);
  j["image2"] = pairs(w.image2);
  if (w.h_a) j["h_a"] = w.h_a->str();
  if (w.h_b) j["h_b"] = w.h_b->str();
  if (w.j_a) j["j_a"] = w.j_a->str();
  if (w.j_b) j["j_b"] = w.j_b->str();
  j["valid"] = w.valid;
  if (!w.note.empty()) j["note"] = w.note;
  j["consequences"] = derived_consequences(w);
  return j.dump();
}

}  // namespace bicoh
