#include "bicoh/generate.hpp"

#include <functional>
#include <map>
#include <utility>

namespace bicoh {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

using Key = std::pair<Formula, Formula>;

class Prover {
 public:
  explicit Prover(System sys) : sys_(sys) {}

  bool operator()(const Formula& a, const Formula& b) {
    Key k{a, b};
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    bool r = search(a, b);
    memo_.emplace(std::move(k), r);
    return r;
  }

 private:
  bool search(const Formula& a, const Formula& b) {
    if (a == b) return true;
    if (b.is_top() && system_has_top(sys_)) return true;
    if (a.is_bot() && system_has_bot(sys_)) return true;
    if (b.is_conj() && (*this)(a, b.left()) && (*this)(a, b.right())) return true;
    if (a.is_disj() && (*this)(a.left(), b) && (*this)(a.right(), b)) return true;
    if (a.is_conj() && ((*this)(a.left(), b) || (*this)(a.right(), b))) return true;
    if (b.is_disj() && ((*this)(a, b.left()) || (*this)(a, b.right()))) return true;
    return false;
  }

  System sys_;
  std::map<Key, bool> memo_;
};

enum class Rule { Id, Hkappa, Ckappa, Pair, Copair, Proj1, Proj2, Inj1, Inj2 };

std::vector<Rule> cutfree_rules(Prover& prov, const Formula& a, const Formula& b, System sys) {
  std::vector<Rule> rs;
  if (a == b) rs.push_back(Rule::Id);
  if (b.is_top() && system_has_top(sys)) rs.push_back(Rule::Hkappa);
  if (a.is_bot() && system_has_bot(sys)) rs.push_back(Rule::Ckappa);
  if (b.is_conj() && prov(a, b.left()) && prov(a, b.right())) rs.push_back(Rule::Pair);
  if (a.is_disj() && prov(a.left(), b) && prov(a.right(), b)) rs.push_back(Rule::Copair);
  if (a.is_conj() && prov(a.left(), b)) rs.push_back(Rule::Proj1);
  if (a.is_conj() && prov(a.right(), b)) rs.push_back(Rule::Proj2);
  if (b.is_disj() && prov(a, b.left())) rs.push_back(Rule::Inj1);
  if (b.is_disj() && prov(a, b.right())) rs.push_back(Rule::Inj2);
  return rs;
}

Term random_cutfree_rec(Rng& rng, Prover& prov, const Formula& a, const Formula& b, System sys) {
  auto rs = cutfree_rules(prov, a, b, sys);
  switch (rs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(rs.size()) - 1))]) {
    case Rule::Id: return Term::id(a);
    case Rule::Hkappa: return Term::hkappa(a);
    case Rule::Ckappa: return Term::ckappa(b);
    case Rule::Pair:
      return Term::pair(random_cutfree_rec(rng, prov, a, b.left(), sys), random_cutfree_rec(rng, prov, a, b.right(), sys));
    case Rule::Copair:
      return Term::copair(random_cutfree_rec(rng, prov, a.left(), b, sys), random_cutfree_rec(rng, prov, a.right(), b, sys));
    case Rule::Proj1: return Term::hproj(1, a.right(), random_cutfree_rec(rng, prov, a.left(), b, sys));
    case Rule::Proj2: return Term::hproj(2, a.left(), random_cutfree_rec(rng, prov, a.right(), b, sys));
    case Rule::Inj1: return Term::cinj(1, b.right(), random_cutfree_rec(rng, prov, a, b.left(), sys));
    case Rule::Inj2: return Term::cinj(2, b.left(), random_cutfree_rec(rng, prov, a, b.right(), sys));
  }
  return Term::id(a);
}

class Enumerator {
 public:
  explicit Enumerator(System sys) : sys_(sys), prov_(sys) {}

  const std::vector<Term>& operator()(const Formula& a, const Formula& b) {
    Key k{a, b};
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    std::vector<Term> out;
    for (Rule r : cutfree_rules(prov_, a, b, sys_)) {
      switch (r) {
        case Rule::Id: out.push_back(Term::id(a)); break;
        case Rule::Hkappa: out.push_back(Term::hkappa(a)); break;
        case Rule::Ckappa: out.push_back(Term::ckappa(b)); break;
        case Rule::Pair: {
          auto l = (*this)(a, b.left());
          auto r2 = (*this)(a, b.right());
          for (const Term& x : l)
            for (const Term& y : r2) out.push_back(Term::pair(x, y));
          break;
        }
        case Rule::Copair: {
          auto l = (*this)(a.left(), b);
          auto r2 = (*this)(a.right(), b);
          for (const Term& x : l)
            for (const Term& y : r2) out.push_back(Term::copair(x, y));
          break;
        }
        case Rule::Proj1:
          for (const Term& x : (*this)(a.left(), b)) out.push_back(Term::hproj(1, a.right(), x));
          break;
        case Rule::Proj2:
          for (const Term& x : (*this)(a.right(), b)) out.push_back(Term::hproj(2, a.left(), x));
          break;
        case Rule::Inj1:
          for (const Term& x : (*this)(a, b.left())) out.push_back(Term::cinj(1, b.right(), x));
          break;
        case Rule::Inj2:
          for (const Term& x : (*this)(a, b.right())) out.push_back(Term::cinj(2, b.left(), x));
          break;
      }
    }
    return memo_.emplace(std::move(k), std::move(out)).first->second;
  }

 private:
  System sys_;
  Prover prov_;
  std::map<Key, std::vector<Term>> memo_;
};

bool arrows(TermStyle s) { return s != TermStyle::Gentzen; }
bool gentzen(TermStyle s) { return s != TermStyle::Arrow; }

Formula small_formula(Rng& rng, const GenOptions& opt) { return random_formula(rng, opt, uniform(rng, 1, 2)); }

Term leaf_from(Rng& rng, const Formula& a, const GenOptions& opt) {
  // Formula growth stops once the source is already large.
  bool grow = a.nodes() <= 11;
  std::vector<int> choice{0};
  if (arrows(opt.style)) {
    if (grow) choice.insert(choice.end(), {1, 1, 4});
    if (a.is_conj()) choice.insert(choice.end(), {2, 2});
    if (a.is_disj() && a.left() == a.right()) choice.insert(choice.end(), {3, 3});
  } else {
    if (a.is_conj()) choice.insert(choice.end(), {7, 7});
    if (grow) choice.push_back(8);
  }
  if (system_has_top(opt.sys)) choice.push_back(5);
  if (a.is_bot() && system_has_bot(opt.sys)) choice.insert(choice.end(), {6, 6});
  switch (choice[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(choice.size()) - 1))]) {
    case 1: return Term::hw(a);
    case 2: return Term::hk(uniform(rng, 1, 2), a.left(), a.right());
    case 3: return Term::cw(a.left());
    case 4: {
      Formula c = small_formula(rng, opt);
      return chance(rng, 0.5) ? Term::ck(1, a, c) : Term::ck(2, c, a);
    }
    case 5: return Term::hkappa(a);
    case 6: return Term::ckappa(small_formula(rng, opt));
    case 7: {
      int i = uniform(rng, 1, 2);
      return i == 1 ? Term::hproj(1, a.right(), Term::id(a.left())) : Term::hproj(2, a.left(), Term::id(a.right()));
    }
    case 8: return Term::cinj(uniform(rng, 1, 2), small_formula(rng, opt), Term::id(a));
    default: return Term::id(a);
  }
}

}  // namespace

Formula random_formula(Rng& rng, const GenOptions& opt, int leaves) {
  if (leaves <= 1) {
    std::vector<Formula> consts;
    if (system_has_top(opt.sys)) consts.push_back(Formula::top());
    if (system_has_bot(opt.sys)) consts.push_back(Formula::bot());
    if (!consts.empty() && chance(rng, 0.2)) return consts[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(consts.size()) - 1))];
    return Formula::letter(opt.letters[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(opt.letters.size()) - 1))]);
  }
  int k = uniform(rng, 1, leaves - 1);
  Formula l = random_formula(rng, opt, k);
  Formula r = random_formula(rng, opt, leaves - k);
  return chance(rng, 0.5) ? Formula::conj(l, r) : Formula::disj(l, r);
}

Formula random_formula(Rng& rng, const GenOptions& opt) {
  return random_formula(rng, opt, uniform(rng, 1, opt.max_leaves));
}

bool provable(const Formula& a, const Formula& b, System sys) {
  Prover p(sys);
  return p(a, b);
}

std::optional<Term> random_cutfree(Rng& rng, const Formula& a, const Formula& b, System sys) {
  Prover p(sys);
  if (!p(a, b)) return std::nullopt;
  return random_cutfree_rec(rng, p, a, b, sys);
}

std::optional<Term> find_cutfree(const Formula& a, const Formula& b, System sys) {
  Prover p(sys);
  if (!p(a, b)) return std::nullopt;
  std::function<Term(const Formula&, const Formula&)> go = [&](const Formula& x, const Formula& y) -> Term {
    switch (cutfree_rules(p, x, y, sys).front()) {
      case Rule::Id: return Term::id(x);
      case Rule::Hkappa: return Term::hkappa(x);
      case Rule::Ckappa: return Term::ckappa(y);
      case Rule::Pair: return Term::pair(go(x, y.left()), go(x, y.right()));
      case Rule::Copair: return Term::copair(go(x.left(), y), go(x.right(), y));
      case Rule::Proj1: return Term::hproj(1, x.right(), go(x.left(), y));
      case Rule::Proj2: return Term::hproj(2, x.left(), go(x.right(), y));
      case Rule::Inj1: return Term::cinj(1, y.right(), go(x, y.left()));
      case Rule::Inj2: return Term::cinj(2, y.left(), go(x, y.right()));
    }
    return Term::id(x);
  };
  return go(a, b);
}

std::vector<Term> enumerate_cutfree(const Formula& a, const Formula& b, System sys) {
  Enumerator e(sys);
  return e(a, b);
}

Term random_from(Rng& rng, const Formula& a, const GenOptions& opt, int budget) {
  if (budget <= 1) return leaf_from(rng, a, opt);
  std::vector<int> choice{0, 1, 1, 1};
  if (arrows(opt.style)) {
    if (a.is_conj()) choice.insert(choice.end(), {2, 2});
    if (a.is_disj()) choice.insert(choice.end(), {3, 3});
  }
  if (gentzen(opt.style)) {
    choice.push_back(4);
    if (a.is_conj()) choice.insert(choice.end(), {5, 5});
    if (a.nodes() <= 11) choice.push_back(6);
    if (a.is_disj()) choice.insert(choice.end(), {7, 7});
  }
  int rest = budget - 1;
  switch (choice[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(choice.size()) - 1))]) {
    case 1: {
      int k = uniform(rng, 1, std::max(1, rest - 1));
      Term f = random_from(rng, a, opt, k);
      Term g = random_from(rng, f.target(), opt, std::max(1, rest - k));
      return Term::comp(g, f);
    }
    case 2:
    case 3: {
      Term f1 = random_from(rng, a.left(), opt, std::max(1, rest / 2));
      Term f2 = random_from(rng, a.right(), opt, std::max(1, rest / 2));
      return a.is_conj() ? Term::conj(f1, f2) : Term::disj(f1, f2);
    }
    case 4: return Term::pair(random_from(rng, a, opt, std::max(1, rest / 2)), random_from(rng, a, opt, std::max(1, rest / 2)));
    case 5: {
      int i = uniform(rng, 1, 2);
      Term g = random_from(rng, i == 1 ? a.left() : a.right(), opt, rest);
      return Term::hproj(i, i == 1 ? a.right() : a.left(), g);
    }
    case 6: return Term::cinj(uniform(rng, 1, 2), small_formula(rng, opt), random_from(rng, a, opt, rest));
    case 7: {
      Term g1 = random_from(rng, a.left(), opt, std::max(1, rest / 2));
      if (auto g2 = random_cutfree(rng, a.right(), g1.target(), opt.sys)) return Term::copair(g1, *g2);
      Term g2 = random_from(rng, a.right(), opt, std::max(1, rest / 2));
      return Term::copair(Term::cinj(1, g2.target(), g1), Term::cinj(2, g1.target(), g2));
    }
    default: return leaf_from(rng, a, opt);
  }
}

Term random_to(Rng& rng, const Formula& b, const GenOptions& opt, int budget) {
  GenOptions d = opt;
  d.sys = dual_system(opt.sys);
  return dual(random_from(rng, dual(b), d, budget));
}

Term random_term(Rng& rng, const GenOptions& opt) {
  for (;;) {
    Formula a = random_formula(rng, opt);
    Term t = random_from(rng, a, opt, uniform(rng, 1, opt.max_nodes));
    if (t.nodes() <= static_cast<std::size_t>(opt.max_nodes)) return t;
  }
}

}  // namespace bicoh
