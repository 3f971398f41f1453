#include "bicoh/normalize.hpp"

#include <sstream>

#include "bicoh/relation.hpp"

namespace bicoh {

using K = Term::Kind;

std::string RewriteTrace::render() const {
  std::ostringstream os;
  for (const auto& s : steps) os << s.rule << " @ " << s.path << ": " << s.before.str() << " => " << s.after.str() << "\n";
  return os.str();
}

namespace {

std::string child(const std::string& path, int k) {
  return path == "root" ? std::to_string(k) : path + "." + std::to_string(k);
}

class Eliminator {
 public:
  Eliminator(RewriteTrace& trace, std::size_t max_steps) : trace_(trace), max_(max_steps) {}

  Term elim(const Term& t, const std::string& path) {
    switch (t.kind()) {
      case K::Comp: return cut(elim(t.arg(0), child(path, 0)), elim(t.arg(1), child(path, 1)), path);
      case K::HPair: return Term::pair(elim(t.arg(0), child(path, 0)), elim(t.arg(1), child(path, 1)));
      case K::CPair: return Term::copair(elim(t.arg(0), child(path, 0)), elim(t.arg(1), child(path, 1)));
      case K::HProj: return Term::hproj(t.index(), t.formula(), elim(t.arg(0), child(path, 0)));
      case K::CInj: return Term::cinj(t.index(), t.formula(), elim(t.arg(0), child(path, 0)));
      default: return t;
    }
  }

 private:
  void step(const char* rule, const std::string& path, const Term& before, const Term& after) {
    trace_.steps.push_back({rule, path, before, after});
    if (max_ && trace_.steps.size() > max_)
      throw BudgetExceeded("composition elimination exceeded " + std::to_string(max_) + " steps");
  }

  // g . f for composition-free g and f.
  Term cut(const Term& g, const Term& f, const std::string& path) {
    Term before = Term::comp(g, f);
    if (f.is(K::Id)) {
      step("(cat 1)", path, before, g);
      return g;
    }
    if (g.is(K::Id)) {
      step("(cat 1)", path, before, f);
      return f;
    }
    if (f.is(K::HProj)) {
      step("(K̂1)", path, before, Term::hproj(f.index(), f.formula(), Term::comp(g, f.arg(0))));
      return Term::hproj(f.index(), f.formula(), cut(g, f.arg(0), child(path, 0)));
    }
    if (g.is(K::HPair)) {
      step("(K̂3)", path, before, Term::pair(Term::comp(g.arg(0), f), Term::comp(g.arg(1), f)));
      return Term::pair(cut(g.arg(0), f, child(path, 0)), cut(g.arg(1), f, child(path, 1)));
    }
    if (g.is(K::CInj)) {
      step("(Ǩ1)", path, before, Term::cinj(g.index(), g.formula(), Term::comp(g.arg(0), f)));
      return Term::cinj(g.index(), g.formula(), cut(g.arg(0), f, child(path, 0)));
    }
    if (f.is(K::CPair)) {
      step("(Ǩ3)", path, before, Term::copair(Term::comp(g, f.arg(0)), Term::comp(g, f.arg(1))));
      return Term::copair(cut(g, f.arg(0), child(path, 0)), cut(g, f.arg(1), child(path, 1)));
    }
    if (g.is(K::Hkappa)) {
      Term r = Term::hkappa(f.source());
      step("(κ̂)", path, before, r);
      return r;
    }
    if (f.is(K::Ckappa)) {
      Term r = Term::ckappa(g.target());
      step("(κ̌)", path, before, r);
      return r;
    }
    if (f.is(K::HPair) && g.is(K::HProj)) {
      const Term& fi = f.arg(g.index() - 1);
      step("(K̂2)", path, before, Term::comp(g.arg(0), fi));
      return cut(g.arg(0), fi, path);
    }
    if (f.is(K::CInj) && g.is(K::CPair)) {
      const Term& gi = g.arg(f.index() - 1);
      step("(Ǩ2)", path, before, Term::comp(gi, f.arg(0)));
      return cut(gi, f.arg(0), path);
    }
    throw Error("no cut reduction applies to " + before.str());
  }

  RewriteTrace& trace_;
  std::size_t max_;
};

Term require_gentzen(const Term& f, const char* op) {
  Term g = to_gentzen(f, Functorial::Expand);
  if (g.has_comp()) throw PreconditionError(std::string(op) + ": term must be composition-free: " + f.str());
  return g;
}

}  // namespace

Eliminated eliminate_composition(const Term& t, System sys, std::size_t max_steps) {
  typecheck(t, sys);
  RewriteTrace trace;
  Term g = to_gentzen(t, Functorial::Expand);
  if (!(g == t)) trace.steps.push_back({"(=dn)", "root", t, g});
  Eliminator e(trace, max_steps);
  Term out = e.elim(g, "root");
  return {out, std::move(trace)};
}

namespace {

Term invert_conj_rec(const Term& f, int i) {
  const Formula& s = f.source();
  switch (f.kind()) {
    case K::HProj:
      if (f.index() == i) return f.arg(0);
      if (f.target().is_top()) return Term::hkappa(i == 1 ? s.left() : s.right());
      throw PreconditionError("invert_conj: term uses the other conjunct: " + f.str());
    case K::HPair: return Term::pair(invert_conj_rec(f.arg(0), i), invert_conj_rec(f.arg(1), i));
    case K::CInj: return Term::cinj(f.index(), f.formula(), invert_conj_rec(f.arg(0), i));
    case K::Hkappa: return Term::hkappa(i == 1 ? s.left() : s.right());
    case K::Id:
      return invert_conj_rec(
          Term::pair(Term::hproj(1, s.right(), Term::id(s.left())), Term::hproj(2, s.left(), Term::id(s.right()))), i);
    default: throw PreconditionError("invert_conj: no inversion for " + f.str());
  }
}

Term invert_disj_rec(const Term& f, int i) {
  const Formula& t = f.target();
  switch (f.kind()) {
    case K::CInj:
      if (f.index() == i) return f.arg(0);
      if (f.source().is_bot()) return Term::ckappa(i == 1 ? t.left() : t.right());
      throw PreconditionError("invert_disj: term uses the other disjunct: " + f.str());
    case K::CPair: return Term::copair(invert_disj_rec(f.arg(0), i), invert_disj_rec(f.arg(1), i));
    case K::HProj: return Term::hproj(f.index(), f.formula(), invert_disj_rec(f.arg(0), i));
    case K::Ckappa: return Term::ckappa(i == 1 ? t.left() : t.right());
    case K::Id:
      return invert_disj_rec(
          Term::copair(Term::cinj(1, t.right(), Term::id(t.left())), Term::cinj(2, t.left(), Term::id(t.right()))), i);
    default: throw PreconditionError("invert_disj: no inversion for " + f.str());
  }
}

}  // namespace

Term invert_conj(const Term& f, int i) {
  if (i != 1 && i != 2) throw PreconditionError("invert_conj: side must be 1 or 2");
  if (!f.source().is_conj()) throw PreconditionError("invert_conj: source is not a conjunction: " + f.str());
  Term g = require_gentzen(f, "invert_conj");
  int split = static_cast<int>(f.source().left().letters());
  for (auto [x, y] : g_of(g).pairs)
    if ((i == 1) != (x <= split))
      throw PreconditionError("invert_conj: occurrence " + std::to_string(x) + " lies outside the chosen conjunct");
  return invert_conj_rec(g, i);
}

Term invert_disj(const Term& f, int i) {
  if (i != 1 && i != 2) throw PreconditionError("invert_disj: side must be 1 or 2");
  if (!f.target().is_disj()) throw PreconditionError("invert_disj: target is not a disjunction: " + f.str());
  Term g = require_gentzen(f, "invert_disj");
  int split = static_cast<int>(f.target().left().letters());
  for (auto [x, y] : g_of(g).pairs)
    if ((i == 1) != (y <= split))
      throw PreconditionError("invert_disj: occurrence " + std::to_string(y) + " lies outside the chosen disjunct");
  return invert_disj_rec(g, i);
}

namespace {

Term lemma3_rec(const Term& f) {
  switch (f.kind()) {
    case K::CInj:
      if (f.index() == 1) return f.arg(0);
      break;
    case K::HProj: return Term::hproj(f.index(), f.formula(), lemma3_rec(f.arg(0)));
    default: break;
  }
  throw PreconditionError("lemma3_factor: unexpected subterm " + f.str());
}

}  // namespace

Term lemma3_factor(const Term& f) {
  if (!f.target().is_disj()) throw PreconditionError("lemma3_factor: target is not a disjunction: " + f.str());
  if (f.source().contains_disj()) throw PreconditionError("lemma3_factor: source contains \\/: " + f.source().str());
  Relation r = g_of(f);
  if (r.empty()) throw PreconditionError("lemma3_factor: Gf is empty");
  int split = static_cast<int>(f.target().left().letters());
  for (auto [x, y] : r.pairs)
    if (y > split) throw PreconditionError("lemma3_factor: target occurrence " + std::to_string(y) + " outside B1");
  return lemma3_rec(eliminate_composition(f, System::Ltopbot).term);
}

// ---------------------------------------------------------------------------
// Standard form.

namespace {

struct Factor {
  Formula src;
  OccPath path;
  Term prim;
};

bool is_hat_prim(const Term& t) { return t.is(K::Hw) || t.is(K::Hk) || t.is(K::Hkappa); }

Formula factor_target(const Factor& f) { return replace_at(f.src, f.path, f.prim.target()); }

Term embed(const Formula& src, const OccPath& path, std::size_t i, const Term& prim) {
  if (i == path.size()) return prim;
  if (path[i] == Side::Left)
    return Term::binary(src.conn(), embed(src.left(), path, i + 1, prim), Term::id(src.right()));
  return Term::binary(src.conn(), Term::id(src.left()), embed(src.right(), path, i + 1, prim));
}

Term factor_term(const Factor& f) { return embed(f.src, f.path, 0, f.prim); }

Term chain_term(const std::vector<Factor>& fs, const Formula& source) {
  Term acc = Term::id(source);
  for (const Factor& f : fs) acc = acc.is(K::Id) ? factor_term(f) : Term::comp(factor_term(f), acc);
  return acc;
}

Factor lift(Factor f, Side side, Conn c, const Formula& other) {
  f.src = side == Side::Left ? Formula::binary(c, f.src, other) : Formula::binary(c, other, f.src);
  f.path.insert(f.path.begin(), side);
  return f;
}

void factorize(const Term& t, std::vector<Factor>& out) {
  switch (t.kind()) {
    case K::Id: return;
    case K::Hw:
    case K::Cw:
    case K::Hk:
    case K::Ck:
    case K::Hkappa:
    case K::Ckappa: out.push_back({t.source(), {}, t}); return;
    case K::Comp:
      factorize(t.arg(1), out);
      factorize(t.arg(0), out);
      return;
    case K::Conj:
    case K::Disj: {
      Conn c = t.is(K::Conj) ? Conn::And : Conn::Or;
      std::vector<Factor> right, left;
      factorize(t.arg(1), right);
      factorize(t.arg(0), left);
      for (auto& f : right) out.push_back(lift(f, Side::Right, c, t.arg(0).source()));
      for (auto& f : left) out.push_back(lift(f, Side::Left, c, t.arg(1).target()));
      return;
    }
    default: throw Error("standard_form: unexpected constructor in arrow term " + t.str());
  }
}

bool is_prefix(const OccPath& a, const OccPath& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

OccPath concat(const OccPath& a, std::initializer_list<Side> mid, const OccPath& b, std::size_t from = 0) {
  OccPath r = a;
  r.insert(r.end(), mid.begin(), mid.end());
  r.insert(r.end(), b.begin() + static_cast<long>(from), b.end());
  return r;
}

int side_index(Side s) { return s == Side::Left ? 1 : 2; }

struct Swapped {
  std::vector<Factor> hats;
  std::vector<Factor> checks;
  const char* rule;
};

// h . c with c a check factor applied first; returns the hat factors and
// check factors of an equal composite in standard order.
Swapped swap(const Factor& h, const Factor& c) {
  const Formula& a = c.src;
  const Term& c0 = c.prim;
  const Term& h0 = h.prim;
  const OccPath& pc = c.path;
  const OccPath& ph = h.path;
  Swapped s{{}, {}, ""};

  if (!is_prefix(pc, ph) && !is_prefix(ph, pc)) {
    Factor h2{a, ph, h0};
    s.hats.push_back(h2);
    s.checks.push_back({factor_target(h2), pc, c0});
    s.rule = "(ξ2)";
    return s;
  }

  if (pc == ph) {
    const Formula& x0 = c0.source();
    if (h0.is(K::Hkappa)) {
      s.hats.push_back({a, pc, Term::hkappa(x0)});
      s.rule = "(κ̂)";
    } else if (c0.is(K::Ckappa)) {
      s.checks.push_back({a, pc, Term::ckappa(h0.target())});
      s.rule = "(κ̌)";
    } else if (h0.is(K::Hw)) {
      Factor w{a, pc, Term::hw(x0)};
      Formula a1 = factor_target(w);
      Factor c1{a1, concat(pc, {Side::Left}, {}), c0};
      Factor c2{factor_target(c1), concat(pc, {Side::Right}, {}), c0};
      s.hats = {w};
      s.checks = {c1, c2};
      s.rule = "(ŵ nat)";
    } else if (c0.is(K::Cw)) {
      Factor h1{a, concat(pc, {Side::Left}, {}), h0};
      Factor h2{factor_target(h1), concat(pc, {Side::Right}, {}), h0};
      s.hats = {h1, h2};
      s.checks = {{factor_target(h2), pc, Term::cw(h0.target())}};
      s.rule = "(w̌ nat)";
    } else {
      throw Error("standard_form: incompatible primitives " + h0.str() + " and " + c0.str());
    }
    return s;
  }

  if (is_prefix(ph, pc)) {
    // c acts strictly inside the source of h0.
    const Formula& y0 = subformula_at(a, ph);
    std::size_t depth = ph.size();
    if (h0.is(K::Hkappa)) {
      s.hats.push_back({a, ph, Term::hkappa(y0)});
      s.rule = "(κ̂)";
    } else if (h0.is(K::Hw)) {
      Factor w{a, ph, Term::hw(y0)};
      Factor c1{factor_target(w), concat(ph, {Side::Left}, pc, depth), c0};
      Factor c2{factor_target(c1), concat(ph, {Side::Right}, pc, depth), c0};
      s.hats = {w};
      s.checks = {c1, c2};
      s.rule = "(ŵ nat)";
    } else if (h0.is(K::Hk)) {
      Factor k{a, ph, Term::hk(h0.index(), y0.left(), y0.right())};
      s.hats = {k};
      if (side_index(pc[depth]) == h0.index()) s.checks = {{factor_target(k), concat(ph, {}, pc, depth + 1), c0}};
      s.rule = "(k̂ nat)";
    } else {
      throw Error("standard_form: unexpected hat primitive " + h0.str());
    }
    return s;
  }

  // h acts strictly inside the target of c0.
  std::size_t depth = pc.size();
  const Formula& x = c0.target();
  OccPath rest(ph.begin() + static_cast<long>(depth), ph.end());
  Formula x2 = replace_at(x, rest, h0.target());
  if (c0.is(K::Ckappa)) {
    s.checks.push_back({a, pc, Term::ckappa(x2)});
    s.rule = "(κ̌)";
  } else if (c0.is(K::Cw)) {
    Factor h1{a, concat(pc, {Side::Left}, ph, depth), h0};
    Factor h2{factor_target(h1), concat(pc, {Side::Right}, ph, depth), h0};
    s.hats = {h1, h2};
    s.checks = {{factor_target(h2), pc, Term::cw(x2)}};
    s.rule = "(w̌ nat)";
  } else if (c0.is(K::Ck)) {
    Term k = Term::ck(c0.index(), x2.left(), x2.right());
    if (side_index(ph[depth]) == c0.index()) {
      Factor h1{a, concat(pc, {}, ph, depth + 1), h0};
      s.hats = {h1};
      s.checks = {{factor_target(h1), pc, k}};
    } else {
      s.checks = {{a, pc, k}};
    }
    s.rule = "(ǩ nat)";
  } else {
    throw Error("standard_form: unexpected check primitive " + c0.str());
  }
  return s;
}

}  // namespace

StandardForm standard_form(const Term& t) {
  typecheck(t, System::Ltopbot);
  Term arrow = to_arrow(t);
  RewriteTrace trace;
  if (!(arrow == t)) trace.steps.push_back({"(=dn)", "root", t, arrow});
  std::vector<Factor> seq;
  factorize(arrow, seq);

  constexpr std::size_t kMaxSwaps = 200000;
  std::size_t swaps = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (is_hat_prim(seq[i].prim) || !is_hat_prim(seq[i + 1].prim)) continue;
      const Factor c = seq[i];
      const Factor h = seq[i + 1];
      Swapped s = swap(h, c);
      std::vector<Factor> repl = s.hats;
      repl.insert(repl.end(), s.checks.begin(), s.checks.end());
      Term before = Term::comp(factor_term(h), factor_term(c));
      trace.steps.push_back({s.rule, path_str(h.path), before, chain_term(repl, c.src)});
      seq.erase(seq.begin() + static_cast<long>(i), seq.begin() + static_cast<long>(i) + 2);
      seq.insert(seq.begin() + static_cast<long>(i), repl.begin(), repl.end());
      if (++swaps > kMaxSwaps) throw BudgetExceeded("standard_form: too many exchange steps");
      changed = true;
      break;
    }
  }

  std::vector<Factor> hats, checks;
  for (const Factor& f : seq) (is_hat_prim(f.prim) ? hats : checks).push_back(f);
  Term f = simplify(chain_term(hats, t.source()));
  Formula mid = hats.empty() ? t.source() : factor_target(hats.back());
  Term g = simplify(chain_term(checks, mid));
  return {f, g, std::move(trace)};
}

}  // namespace bicoh
