#include "bicoh/term.hpp"

#include <vector>

#include "bicoh/errors.hpp"

namespace bicoh {

namespace {

enum Flag : unsigned {
  kComp = 1u << 0,
  kArrowPrim = 1u << 1,
  kGentzen = 1u << 2,
  kFunctorial = 1u << 3,
  kCheck = 1u << 4,
  kHat = 1u << 5,
  kHkappa = 1u << 6,
  kCkappa = 1u << 7,
  kTop = 1u << 8,
  kBot = 1u << 9,
};

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

unsigned formula_flags(const Formula& f) {
  return (f.contains_top() ? kTop : 0u) | (f.contains_bot() ? kBot : 0u);
}

}  // namespace

struct Term::Node {
  Kind kind{};
  int index = 0;
  Formula a = Formula::top();
  Formula b = Formula::top();
  std::optional<Term> args[2];
  Formula src = Formula::top();
  Formula tgt = Formula::top();
  std::size_t nodes = 1;
  std::size_t hash = 0;
  unsigned flags = 0;
};

std::string system_name(System s) {
  switch (s) {
    case System::L: return "L";
    case System::Lbot: return "Lbot";
    case System::Ltop: return "Ltop";
    case System::Ltopbot: return "Ltopbot";
    case System::Bicart: return "Bicart";
  }
  return "?";
}

std::optional<System> parse_system(const std::string& s) {
  for (System x : {System::L, System::Lbot, System::Ltop, System::Ltopbot, System::Bicart})
    if (system_name(x) == s) return x;
  return std::nullopt;
}

System dual_system(System s) {
  if (s == System::Lbot) return System::Ltop;
  if (s == System::Ltop) return System::Lbot;
  return s;
}

bool system_has_top(System s) { return s == System::Ltop || s == System::Ltopbot || s == System::Bicart; }
bool system_has_bot(System s) { return s == System::Lbot || s == System::Ltopbot || s == System::Bicart; }

Term Term::make(std::shared_ptr<Node> n) {
  std::size_t h = mix(static_cast<std::size_t>(n->kind) + 17, static_cast<std::size_t>(n->index));
  unsigned flags = 0;
  switch (n->kind) {
    case Kind::Hw:
    case Kind::Hk: flags |= kArrowPrim | kHat; break;
    case Kind::Cw:
    case Kind::Ck: flags |= kArrowPrim | kCheck; break;
    case Kind::Hkappa: flags |= kHat | kHkappa; break;
    case Kind::Ckappa: flags |= kCheck | kCkappa; break;
    case Kind::Comp: flags |= kComp; break;
    case Kind::Conj:
    case Kind::Disj: flags |= kFunctorial; break;
    case Kind::HPair:
    case Kind::HProj: flags |= kGentzen | kHat; break;
    case Kind::CPair:
    case Kind::CInj: flags |= kGentzen | kCheck; break;
    case Kind::Id: break;
  }
  bool has_a = n->kind != Kind::Comp && n->kind != Kind::Conj && n->kind != Kind::Disj &&
               n->kind != Kind::HPair && n->kind != Kind::CPair;
  bool has_b = n->kind == Kind::Hk || n->kind == Kind::Ck;
  if (has_a) {
    h = mix(h, n->a.hash());
    flags |= formula_flags(n->a);
  }
  if (has_b) {
    h = mix(h, n->b.hash());
    flags |= formula_flags(n->b);
  }
  for (const auto& c : n->args) {
    if (!c) continue;
    h = mix(h, c->hash());
    flags |= c->n_->flags;
    n->nodes += c->nodes();
  }
  n->hash = h;
  n->flags = flags;
  return Term(std::move(n));
}

namespace {


void check_index(int i) {
  if (i != 1 && i != 2)
    throw TypeError(TypeError::Kind::MalformedTerm, "index must be 1 or 2, got " + std::to_string(i));
}

}  // namespace

Term Term::id(Formula a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Id;
  n->src = a;
  n->tgt = a;
  n->a = std::move(a);
  return make(std::move(n));
}

Term Term::hw(Formula a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Hw;
  n->src = a;
  n->tgt = Formula::conj(a, a);
  n->a = std::move(a);
  return make(std::move(n));
}

Term Term::cw(Formula a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Cw;
  n->src = Formula::disj(a, a);
  n->tgt = a;
  n->a = std::move(a);
  return make(std::move(n));
}

Term Term::hk(int i, Formula a1, Formula a2) {
  check_index(i);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Hk;
  n->index = i;
  n->src = Formula::conj(a1, a2);
  n->tgt = i == 1 ? a1 : a2;
  n->a = std::move(a1);
  n->b = std::move(a2);
  return make(std::move(n));
}

Term Term::ck(int i, Formula a1, Formula a2) {
  check_index(i);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Ck;
  n->index = i;
  n->src = i == 1 ? a1 : a2;
  n->tgt = Formula::disj(a1, a2);
  n->a = std::move(a1);
  n->b = std::move(a2);
  return make(std::move(n));
}

Term Term::hkappa(Formula a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Hkappa;
  n->src = a;
  n->tgt = Formula::top();
  n->a = std::move(a);
  return make(std::move(n));
}

Term Term::ckappa(Formula a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Ckappa;
  n->src = Formula::bot();
  n->tgt = a;
  n->a = std::move(a);
  return make(std::move(n));
}

Term Term::comp(Term g, Term f) {
  if (!(f.target() == g.source()))
    throw TypeError(TypeError::Kind::CompositionMismatch,
                    "composition mismatch: expected " + g.source().str() + ", found " + f.target().str(),
                    g.source().str(), f.target().str());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Comp;
  n->src = f.source();
  n->tgt = g.target();
  n->args[0] = g;
  n->args[1] = f;
  return make(std::move(n));
}

Term Term::binary(Conn c, Term f1, Term f2) {
  auto n = std::make_shared<Node>();
  n->kind = c == Conn::And ? Kind::Conj : Kind::Disj;
  n->src = Formula::binary(c, f1.source(), f2.source());
  n->tgt = Formula::binary(c, f1.target(), f2.target());
  n->args[0] = f1;
  n->args[1] = f2;
  return make(std::move(n));
}

Term Term::conj(Term f1, Term f2) { return binary(Conn::And, std::move(f1), std::move(f2)); }
Term Term::disj(Term f1, Term f2) { return binary(Conn::Or, std::move(f1), std::move(f2)); }

Term Term::pair(Term f1, Term f2) {
  if (!(f1.source() == f2.source()))
    throw TypeError(TypeError::Kind::CompositionMismatch,
                    "pair components disagree on source: expected " + f1.source().str() + ", found " +
                        f2.source().str(),
                    f1.source().str(), f2.source().str());
  auto n = std::make_shared<Node>();
  n->kind = Kind::HPair;
  n->src = f1.source();
  n->tgt = Formula::conj(f1.target(), f2.target());
  n->args[0] = f1;
  n->args[1] = f2;
  return make(std::move(n));
}

Term Term::copair(Term g1, Term g2) {
  if (!(g1.target() == g2.target()))
    throw TypeError(TypeError::Kind::CompositionMismatch,
                    "copair components disagree on target: expected " + g1.target().str() + ", found " +
                        g2.target().str(),
                    g1.target().str(), g2.target().str());
  auto n = std::make_shared<Node>();
  n->kind = Kind::CPair;
  n->src = Formula::disj(g1.source(), g2.source());
  n->tgt = g1.target();
  n->args[0] = g1;
  n->args[1] = g2;
  return make(std::move(n));
}

Term Term::hproj(int i, Formula other, Term g) {
  check_index(i);
  auto n = std::make_shared<Node>();
  n->kind = Kind::HProj;
  n->index = i;
  n->src = i == 1 ? Formula::conj(g.source(), other) : Formula::conj(other, g.source());
  n->tgt = g.target();
  n->a = std::move(other);
  n->args[0] = g;
  return make(std::move(n));
}

Term Term::cinj(int i, Formula other, Term f) {
  check_index(i);
  auto n = std::make_shared<Node>();
  n->kind = Kind::CInj;
  n->index = i;
  n->src = f.source();
  n->tgt = i == 1 ? Formula::disj(f.target(), other) : Formula::disj(other, f.target());
  n->a = std::move(other);
  n->args[0] = f;
  return make(std::move(n));
}

Term::Kind Term::kind() const { return n_->kind; }
int Term::index() const { return n_->index; }
const Formula& Term::formula() const { return n_->a; }
const Formula& Term::formula2() const { return n_->b; }

const Term& Term::arg(int k) const {
  return *n_->args[k];
}

int Term::arity() const { return n_->args[0] ? (n_->args[1] ? 2 : 1) : 0; }
const Formula& Term::source() const { return n_->src; }
const Formula& Term::target() const { return n_->tgt; }
std::size_t Term::nodes() const { return n_->nodes; }
std::size_t Term::hash() const { return n_->hash; }
bool Term::has_comp() const { return n_->flags & kComp; }
bool Term::has_arrow_primitive() const { return n_->flags & kArrowPrim; }
bool Term::has_gentzen_constructor() const { return n_->flags & kGentzen; }
bool Term::has_functorial() const { return n_->flags & kFunctorial; }
bool Term::has_check() const { return n_->flags & kCheck; }
bool Term::has_hat() const { return n_->flags & kHat; }
bool Term::has_hkappa() const { return n_->flags & kHkappa; }
bool Term::has_ckappa() const { return n_->flags & kCkappa; }
bool Term::mentions_top() const { return n_->flags & kTop; }
bool Term::mentions_bot() const { return n_->flags & kBot; }

std::string Term::str() const {
  auto f = [](const Formula& x) { return x.str(); };
  switch (kind()) {
    case Kind::Id: return "id<" + f(formula()) + ">";
    case Kind::Hw: return "hw<" + f(formula()) + ">";
    case Kind::Cw: return "cw<" + f(formula()) + ">";
    case Kind::Hk: return "hk" + std::to_string(index()) + "<" + f(formula()) + "," + f(formula2()) + ">";
    case Kind::Ck: return "ck" + std::to_string(index()) + "<" + f(formula()) + "," + f(formula2()) + ">";
    case Kind::Hkappa: return "hkap<" + f(formula()) + ">";
    case Kind::Ckappa: return "ckap<" + f(formula()) + ">";
    case Kind::Comp: {
      std::string g = arg(0).str();
      if (arg(0).is(Kind::Comp)) g = "(" + g + ")";
      return g + " . " + arg(1).str();
    }
    case Kind::Conj: return "(" + arg(0).str() + " /\\ " + arg(1).str() + ")";
    case Kind::Disj: return "(" + arg(0).str() + " \\/ " + arg(1).str() + ")";
    case Kind::HPair: return "pair(" + arg(0).str() + ", " + arg(1).str() + ")";
    case Kind::CPair: return "copair(" + arg(0).str() + ", " + arg(1).str() + ")";
    case Kind::HProj: return "HK" + std::to_string(index()) + "<" + f(formula()) + ">(" + arg(0).str() + ")";
    case Kind::CInj: return "CK" + std::to_string(index()) + "<" + f(formula()) + ">(" + arg(0).str() + ")";
  }
  return {};
}

namespace {

bool uses_a(Term::Kind k) {
  return k != Term::Kind::Comp && k != Term::Kind::Conj && k != Term::Kind::Disj && k != Term::Kind::HPair &&
         k != Term::Kind::CPair;
}

bool uses_b(Term::Kind k) { return k == Term::Kind::Hk || k == Term::Kind::Ck; }

}  // namespace

bool operator==(const Term& a, const Term& b) {
  if (a.n_ == b.n_) return true;
  if (a.hash() != b.hash() || a.nodes() != b.nodes() || a.kind() != b.kind() || a.index() != b.index())
    return false;
  if (uses_a(a.kind()) && !(a.formula() == b.formula())) return false;
  if (uses_b(a.kind()) && !(a.formula2() == b.formula2())) return false;
  for (int k = 0; k < a.arity(); ++k)
    if (!(a.arg(k) == b.arg(k))) return false;
  return true;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.n_ == b.n_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.index() <=> b.index(); c != 0) return c;
  if (uses_a(a.kind()))
    if (auto c = a.formula() <=> b.formula(); c != 0) return c;
  if (uses_b(a.kind()))
    if (auto c = a.formula2() <=> b.formula2(); c != 0) return c;
  for (int k = 0; k < a.arity(); ++k)
    if (auto c = a.arg(k) <=> b.arg(k); c != 0) return c;
  return std::strong_ordering::equal;
}

bool in_system(const Term& t, System sys) {
  bool top_ok = system_has_top(sys);
  bool bot_ok = system_has_bot(sys);
  if (!top_ok && (t.mentions_top() || t.has_hkappa())) return false;
  if (!bot_ok && (t.mentions_bot() || t.has_ckappa())) return false;
  return true;
}

std::pair<Formula, Formula> typecheck(const Term& t, System sys) {
  if (!in_system(t, sys)) {
    std::string what;
    if (!system_has_top(sys) && t.has_hkappa()) what = "hkap";
    else if (!system_has_bot(sys) && t.has_ckappa()) what = "ckap";
    else if (!system_has_top(sys) && t.mentions_top()) what = "top";
    else what = "bot";
    throw TypeError(TypeError::Kind::ConstantNotInSystem, "constant " + what + " is not in system " + system_name(sys));
  }
  return {t.source(), t.target()};
}

bool is_arrow_term(const Term& t) { return !t.has_gentzen_constructor(); }
bool is_gentzen_term(const Term& t) { return !t.has_arrow_primitive(); }

namespace {

Term gentzen_rec(const Term& t, bool keep_conj, bool keep_disj) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Id:
    case K::Hkappa:
    case K::Ckappa: return t;
    case K::Hw: return Term::pair(Term::id(t.formula()), Term::id(t.formula()));
    case K::Cw: return Term::copair(Term::id(t.formula()), Term::id(t.formula()));
    case K::Hk:
      return t.index() == 1 ? Term::hproj(1, t.formula2(), Term::id(t.formula()))
                            : Term::hproj(2, t.formula(), Term::id(t.formula2()));
    case K::Ck:
      return t.index() == 1 ? Term::cinj(1, t.formula2(), Term::id(t.formula()))
                            : Term::cinj(2, t.formula(), Term::id(t.formula2()));
    case K::Comp: return Term::comp(gentzen_rec(t.arg(0), keep_conj, keep_disj), gentzen_rec(t.arg(1), keep_conj, keep_disj));
    case K::Conj: {
      Term f1 = gentzen_rec(t.arg(0), keep_conj, keep_disj);
      Term f2 = gentzen_rec(t.arg(1), keep_conj, keep_disj);
      if (keep_conj) return Term::conj(f1, f2);
      Formula a1 = f1.source(), a2 = f2.source();
      return Term::pair(Term::hproj(1, a2, f1), Term::hproj(2, a1, f2));
    }
    case K::Disj: {
      Term f1 = gentzen_rec(t.arg(0), keep_conj, keep_disj);
      Term f2 = gentzen_rec(t.arg(1), keep_conj, keep_disj);
      if (keep_disj) return Term::disj(f1, f2);
      Formula b1 = f1.target(), b2 = f2.target();
      return Term::copair(Term::cinj(1, b2, f1), Term::cinj(2, b1, f2));
    }
    case K::HPair: return Term::pair(gentzen_rec(t.arg(0), keep_conj, keep_disj), gentzen_rec(t.arg(1), keep_conj, keep_disj));
    case K::CPair: return Term::copair(gentzen_rec(t.arg(0), keep_conj, keep_disj), gentzen_rec(t.arg(1), keep_conj, keep_disj));
    case K::HProj: return Term::hproj(t.index(), t.formula(), gentzen_rec(t.arg(0), keep_conj, keep_disj));
    case K::CInj: return Term::cinj(t.index(), t.formula(), gentzen_rec(t.arg(0), keep_conj, keep_disj));
  }
  return t;
}

}  // namespace

Term to_gentzen(const Term& t, Functorial mode) {
  switch (mode) {
    case Functorial::Expand: return gentzen_rec(t, false, false);
    case Functorial::Keep: return gentzen_rec(t, true, true);
    case Functorial::Fragment: break;
  }
  // The hat fragment keeps \/ functorial, the check fragment keeps /\.
  return gentzen_rec(t, !t.has_hat(), !t.has_check());
}

Term to_arrow(const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Id:
    case K::Hw:
    case K::Cw:
    case K::Hk:
    case K::Ck:
    case K::Hkappa:
    case K::Ckappa: return t;
    case K::Comp: return Term::comp(to_arrow(t.arg(0)), to_arrow(t.arg(1)));
    case K::Conj: return Term::conj(to_arrow(t.arg(0)), to_arrow(t.arg(1)));
    case K::Disj: return Term::disj(to_arrow(t.arg(0)), to_arrow(t.arg(1)));
    case K::HPair: return Term::comp(Term::conj(to_arrow(t.arg(0)), to_arrow(t.arg(1))), Term::hw(t.source()));
    case K::CPair: return Term::comp(Term::cw(t.target()), Term::disj(to_arrow(t.arg(0)), to_arrow(t.arg(1))));
    case K::HProj: {
      const Formula& s = t.source();
      return Term::comp(to_arrow(t.arg(0)), Term::hk(t.index(), s.left(), s.right()));
    }
    case K::CInj: {
      const Formula& g = t.target();
      return Term::comp(Term::ck(t.index(), g.left(), g.right()), to_arrow(t.arg(0)));
    }
  }
  return t;
}

Term dual(const Term& t) {
  using K = Term::Kind;
  auto d = [](const Formula& f) { return bicoh::dual(f); };
  switch (t.kind()) {
    case K::Id: return Term::id(d(t.formula()));
    case K::Hw: return Term::cw(d(t.formula()));
    case K::Cw: return Term::hw(d(t.formula()));
    case K::Hk: return Term::ck(t.index(), d(t.formula()), d(t.formula2()));
    case K::Ck: return Term::hk(t.index(), d(t.formula()), d(t.formula2()));
    case K::Hkappa: return Term::ckappa(d(t.formula()));
    case K::Ckappa: return Term::hkappa(d(t.formula()));
    case K::Comp: return Term::comp(dual(t.arg(1)), dual(t.arg(0)));
    case K::Conj: return Term::disj(dual(t.arg(0)), dual(t.arg(1)));
    case K::Disj: return Term::conj(dual(t.arg(0)), dual(t.arg(1)));
    case K::HPair: return Term::copair(dual(t.arg(0)), dual(t.arg(1)));
    case K::CPair: return Term::pair(dual(t.arg(0)), dual(t.arg(1)));
    case K::HProj: return Term::cinj(t.index(), d(t.formula()), dual(t.arg(0)));
    case K::CInj: return Term::hproj(t.index(), d(t.formula()), dual(t.arg(0)));
  }
  return t;
}

std::pair<Term, System> dualize(const Term& t, System sys) {
  typecheck(t, sys);
  return {dual(t), dual_system(sys)};
}

std::string fragment_name(Fragment f) {
  switch (f) {
    case Fragment::Hat: return "hat";
    case Fragment::Check: return "check";
    case Fragment::Both: return "both";
    case Fragment::Neither: return "neither";
  }
  return "?";
}

Fragment fragment_of(const Term& t) {
  bool hat = t.has_hat(), check = t.has_check();
  if (!hat && !check) return Fragment::Both;
  if (!check) return Fragment::Hat;
  if (!hat) return Fragment::Check;
  return Fragment::Neither;
}

Term map_formulas(const Term& t, const std::function<Formula(const Formula&)>& f) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Id: return Term::id(f(t.formula()));
    case K::Hw: return Term::hw(f(t.formula()));
    case K::Cw: return Term::cw(f(t.formula()));
    case K::Hk: return Term::hk(t.index(), f(t.formula()), f(t.formula2()));
    case K::Ck: return Term::ck(t.index(), f(t.formula()), f(t.formula2()));
    case K::Hkappa: return Term::hkappa(f(t.formula()));
    case K::Ckappa: return Term::ckappa(f(t.formula()));
    case K::Comp: return Term::comp(map_formulas(t.arg(0), f), map_formulas(t.arg(1), f));
    case K::Conj: return Term::conj(map_formulas(t.arg(0), f), map_formulas(t.arg(1), f));
    case K::Disj: return Term::disj(map_formulas(t.arg(0), f), map_formulas(t.arg(1), f));
    case K::HPair: return Term::pair(map_formulas(t.arg(0), f), map_formulas(t.arg(1), f));
    case K::CPair: return Term::copair(map_formulas(t.arg(0), f), map_formulas(t.arg(1), f));
    case K::HProj: return Term::hproj(t.index(), f(t.formula()), map_formulas(t.arg(0), f));
    case K::CInj: return Term::cinj(t.index(), f(t.formula()), map_formulas(t.arg(0), f));
  }
  return t;
}

namespace {

void flatten_chain(const Term& t, std::vector<Term>& out) {
  if (t.is(Term::Kind::Comp)) {
    flatten_chain(t.arg(0), out);
    flatten_chain(t.arg(1), out);
  } else {
    out.push_back(t);
  }
}

Term build_chain(const std::vector<Term>& chain, const Formula& source) {
  if (chain.empty()) return Term::id(source);
  Term acc = chain.back();
  for (std::size_t i = chain.size() - 1; i-- > 0;) acc = Term::comp(chain[i], acc);
  return acc;
}

}  // namespace

Term simplify(const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Comp: {
      std::vector<Term> raw;
      flatten_chain(t, raw);
      std::vector<Term> chain;
      for (const Term& x : raw) {
        Term s = simplify(x);
        if (!s.is(K::Id)) chain.push_back(s);
      }
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
          const Term& a = chain[i];
          const Term& b = chain[i + 1];
          if ((a.is(K::Conj) && b.is(K::Conj)) || (a.is(K::Disj) && b.is(K::Disj))) {
            Conn c = a.is(K::Conj) ? Conn::And : Conn::Or;
            Term m = simplify(Term::binary(c, Term::comp(a.arg(0), b.arg(0)), Term::comp(a.arg(1), b.arg(1))));
            chain.erase(chain.begin() + static_cast<long>(i), chain.begin() + static_cast<long>(i) + 2);
            if (!m.is(K::Id)) chain.insert(chain.begin() + static_cast<long>(i), m);
            changed = true;
            break;
          }
        }
      }
      return build_chain(chain, t.source());
    }
    case K::Conj:
    case K::Disj: {
      Term a = simplify(t.arg(0)), b = simplify(t.arg(1));
      Conn c = t.is(K::Conj) ? Conn::And : Conn::Or;
      if (a.is(K::Id) && b.is(K::Id)) return Term::id(t.source());
      return Term::binary(c, a, b);
    }
    case K::HPair: return Term::pair(simplify(t.arg(0)), simplify(t.arg(1)));
    case K::CPair: return Term::copair(simplify(t.arg(0)), simplify(t.arg(1)));
    case K::HProj: return Term::hproj(t.index(), t.formula(), simplify(t.arg(0)));
    case K::CInj: return Term::cinj(t.index(), t.formula(), simplify(t.arg(0)));
    default: return t;
  }
}

}  // namespace bicoh
