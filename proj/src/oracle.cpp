#include "bicoh/oracle.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "bicoh/errors.hpp"

namespace bicoh {

using K = Term::Kind;

std::string oracle_status_name(OracleStatus s) {
  switch (s) {
    case OracleStatus::ConnectedWithin: return "connected_within";
    case OracleStatus::NotConnectedWithin: return "not_connected_within";
    case OracleStatus::CapExceeded: return "cap_exceeded";
  }
  return "?";
}

namespace {

bool has_kbot(System s) { return s == System::Lbot || s == System::Ltopbot; }
bool has_ktop(System s) { return s == System::Ltop || s == System::Ltopbot; }

using Chain = std::vector<Term>;  // outermost first: c1 . c2 . ... . cn

void flatten(const Term& t, Chain& out) {
  if (t.is(K::Comp)) {
    flatten(t.arg(0), out);
    flatten(t.arg(1), out);
  } else {
    out.push_back(t);
  }
}

Chain chain_of(const Term& t) {
  Chain c;
  flatten(t, c);
  return c;
}

// c[from, to) as a right-associated composite; `to > from`.
Term build(const Chain& c, std::size_t from, std::size_t to) {
  Term t = c[to - 1];
  for (std::size_t k = to - 1; k-- > from;) t = Term::comp(c[k], t);
  return t;
}

Term build_or_id(const Chain& c, std::size_t from, std::size_t to, const Formula& at) {
  return from == to ? Term::id(at) : build(c, from, to);
}

Term k4_hat(const Formula& a) {
  return Term::pair(Term::hproj(1, a.right(), Term::id(a.left())), Term::hproj(2, a.left(), Term::id(a.right())));
}

Term k4_check(const Formula& a) {
  return Term::copair(Term::cinj(1, a.right(), Term::id(a.left())), Term::cinj(2, a.left(), Term::id(a.right())));
}

class Canon {
 public:
  explicit Canon(System sys) : sys_(sys), top_(system_has_top(sys)), bot_(system_has_bot(sys)) {}

  Term operator()(const Term& t) const {
    switch (t.kind()) {
      case K::Id:
      case K::Hkappa:
      case K::Ckappa: return collapse(t);
      case K::HPair: return collapse(Term::pair((*this)(t.arg(0)), (*this)(t.arg(1))));
      case K::CPair: return collapse(Term::copair((*this)(t.arg(0)), (*this)(t.arg(1))));
      case K::HProj: {
        Term c = (*this)(t.arg(0));
        int i = t.index();
        if (has_kbot(sys_) && i == 2 && t.formula().is_bot() && c.source().is_bot()) i = 1;
        return collapse(Term::hproj(i, t.formula(), c));
      }
      case K::CInj: {
        Term c = (*this)(t.arg(0));
        int i = t.index();
        if (has_ktop(sys_) && i == 2 && t.formula().is_top() && c.target().is_top()) i = 1;
        return collapse(Term::cinj(i, t.formula(), c));
      }
      case K::Comp: return comp(t);
      default: return (*this)(to_gentzen(t, Functorial::Expand));
    }
  }

 private:
  Term collapse(const Term& t) const {
    if (top_ && t.target().is_top() && !t.is(K::Hkappa)) return Term::hkappa(t.source());
    if (bot_ && t.source().is_bot() && !t.is(K::Ckappa) && !t.is(K::Hkappa)) return Term::ckappa(t.target());
    return t;
  }

  Term comp(const Term& t) const {
    const Formula src = t.source();
    Chain raw;
    flatten((*this)(t.arg(0)), raw);
    flatten((*this)(t.arg(1)), raw);
    Chain c;
    for (Term& x : raw)
      if (!x.is(K::Id)) c.push_back(std::move(x));
    if (top_) {
      for (std::size_t m = 0; m < c.size(); ++m) {
        if (c[m].target().is_top()) {
          c.erase(c.begin() + static_cast<std::ptrdiff_t>(m), c.end());
          c.push_back(Term::hkappa(src));
          break;
        }
      }
    }
    if (bot_) {
      for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].source().is_bot()) {
          Term kap = collapse(Term::ckappa(c.front().target()));
          c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k) + 1);
          c.insert(c.begin(), kap);
          break;
        }
      }
    }
    if (c.empty()) return Term::id(src);
    return collapse(build(c, 0, c.size()));
  }

  System sys_;
  bool top_, bot_;
};

class Rewriter {
 public:
  using Emit = std::function<void(const Term&)>;

  // Every single-step rewrite of `t`, emitted as whole replacement terms.
  void at(const Term& t, const Emit& emit) const {
    if (t.is(K::Comp)) {
      chain_rules(t, emit);
      return;
    }
    local_rules(t, emit);
    // (cat 1) with (K4): an expanded identity after or before a lone term.
    if (!t.is(K::Id)) {
      if (t.target().is_conj()) emit(Term::comp(k4_hat(t.target()), t));
      if (t.source().is_disj()) emit(Term::comp(t, k4_check(t.source())));
    }
    switch (t.kind()) {
      case K::HPair:
        at(t.arg(0), [&](const Term& s) { emit(Term::pair(s, t.arg(1))); });
        at(t.arg(1), [&](const Term& s) { emit(Term::pair(t.arg(0), s)); });
        break;
      case K::CPair:
        at(t.arg(0), [&](const Term& s) { emit(Term::copair(s, t.arg(1))); });
        at(t.arg(1), [&](const Term& s) { emit(Term::copair(t.arg(0), s)); });
        break;
      case K::HProj: at(t.arg(0), [&](const Term& s) { emit(Term::hproj(t.index(), t.formula(), s)); }); break;
      case K::CInj: at(t.arg(0), [&](const Term& s) { emit(Term::cinj(t.index(), t.formula(), s)); }); break;
      default: break;
    }
  }

 private:
  static void local_rules(const Term& t, const Emit& emit) {
    switch (t.kind()) {
      case K::Id:
        if (t.source().is_conj()) emit(k4_hat(t.source()));
        if (t.source().is_disj()) emit(k4_check(t.source()));
        break;
      case K::HPair: {
        const Term& a = t.arg(0);
        const Term& b = t.arg(1);
        if (t == k4_hat(t.target())) emit(Term::id(t.target()));
        if (a.is(K::HProj) && b.is(K::HProj) && a.index() == b.index() && a.formula() == b.formula())
          emit(Term::hproj(a.index(), a.formula(), Term::pair(a.arg(0), b.arg(0))));
        // (K3) backwards: pair(g1 . f, g2 . f) = pair(g1, g2) . f
        Chain ca = chain_of(a), cb = chain_of(b);
        for (std::size_t l = 1; l <= std::min(ca.size(), cb.size()); ++l) {
          if (!(ca[ca.size() - l] == cb[cb.size() - l])) break;
          const Term& f0 = ca[ca.size() - l];
          Term f = build(ca, ca.size() - l, ca.size());
          Term g1 = build_or_id(ca, 0, ca.size() - l, f0.target());
          Term g2 = build_or_id(cb, 0, cb.size() - l, f0.target());
          emit(Term::comp(Term::pair(g1, g2), f));
        }
        break;
      }
      case K::CPair: {
        const Term& a = t.arg(0);
        const Term& b = t.arg(1);
        if (t == k4_check(t.source())) emit(Term::id(t.source()));
        if (a.is(K::CInj) && b.is(K::CInj) && a.index() == b.index() && a.formula() == b.formula())
          emit(Term::cinj(a.index(), a.formula(), Term::copair(a.arg(0), b.arg(0))));
        // (K3) backwards, check side: copair(g . f1, g . f2) = g . copair(f1, f2)
        Chain ca = chain_of(a), cb = chain_of(b);
        for (std::size_t l = 1; l <= std::min(ca.size(), cb.size()); ++l) {
          if (!(ca[l - 1] == cb[l - 1])) break;
          Term g = build(ca, 0, l);
          const Term& gl = ca[l - 1];
          Term f1 = build_or_id(ca, l, ca.size(), gl.source());
          Term f2 = build_or_id(cb, l, cb.size(), gl.source());
          emit(Term::comp(g, Term::copair(f1, f2)));
        }
        break;
      }
      case K::HProj: {
        const Term& h = t.arg(0);
        if (h.is(K::HPair))
          emit(Term::pair(Term::hproj(t.index(), t.formula(), h.arg(0)), Term::hproj(t.index(), t.formula(), h.arg(1))));
        if (h.is(K::CInj)) emit(Term::cinj(h.index(), h.formula(), Term::hproj(t.index(), t.formula(), h.arg(0))));
        // (K1) backwards: HK(g . f) = g . HK(f)
        Chain c = chain_of(h);
        for (std::size_t j = 1; j < c.size(); ++j)
          emit(Term::comp(build(c, 0, j), Term::hproj(t.index(), t.formula(), build(c, j, c.size()))));
        if (!h.is(K::Id)) emit(Term::comp(h, Term::hproj(t.index(), t.formula(), Term::id(h.source()))));
        break;
      }
      case K::CInj: {
        const Term& h = t.arg(0);
        if (h.is(K::CPair))
          emit(Term::copair(Term::cinj(t.index(), t.formula(), h.arg(0)), Term::cinj(t.index(), t.formula(), h.arg(1))));
        if (h.is(K::HProj)) emit(Term::hproj(h.index(), h.formula(), Term::cinj(t.index(), t.formula(), h.arg(0))));
        // (K1) backwards, check side: CK(g . f) = CK(g) . f
        Chain c = chain_of(h);
        for (std::size_t j = 1; j < c.size(); ++j)
          emit(Term::comp(Term::cinj(t.index(), t.formula(), build(c, 0, j)), build(c, j, c.size())));
        if (!h.is(K::Id)) emit(Term::comp(Term::cinj(t.index(), t.formula(), Term::id(h.target())), h));
        break;
      }
      default: break;
    }
  }

  void chain_rules(const Term& t, const Emit& emit) const {
    Chain c = chain_of(t);
    const std::size_t n = c.size();
    // Replaces c[from, to) by `mid`.
    auto splice = [&](std::size_t from, std::size_t to, const Term& mid) {
      Chain d(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(from));
      d.push_back(mid);
      d.insert(d.end(), c.begin() + static_cast<std::ptrdiff_t>(to), c.end());
      emit(build(d, 0, d.size()));
    };
    for (std::size_t k = 0; k < n; ++k) {
      const Term& ck = c[k];
      if (ck.is(K::HProj)) {
        for (std::size_t j = 0; j < k; ++j)
          splice(j, k + 1, Term::hproj(ck.index(), ck.formula(), Term::comp(build(c, j, k), ck.arg(0))));
        if (k + 1 < n && c[k + 1].is(K::HPair))
          splice(k, k + 2, Term::comp(ck.arg(0), c[k + 1].arg(ck.index() - 1)));
      }
      if (ck.is(K::HPair))
        for (std::size_t j = k + 1; j < n; ++j) {
          Term f = build(c, k + 1, j + 1);
          splice(k, j + 1, Term::pair(Term::comp(ck.arg(0), f), Term::comp(ck.arg(1), f)));
        }
      if (ck.is(K::CInj))
        for (std::size_t j = k + 1; j < n; ++j)
          splice(k, j + 1, Term::cinj(ck.index(), ck.formula(), Term::comp(ck.arg(0), build(c, k + 1, j + 1))));
      if (ck.is(K::CPair)) {
        if (k + 1 < n && c[k + 1].is(K::CInj))
          splice(k, k + 2, Term::comp(ck.arg(c[k + 1].index() - 1), c[k + 1].arg(0)));
        for (std::size_t j = 0; j < k; ++j) {
          Term g = build(c, j, k);
          splice(j, k + 1, Term::copair(Term::comp(g, ck.arg(0)), Term::comp(g, ck.arg(1))));
        }
      }
      if (k + 1 < n) {
        const Formula& x = c[k + 1].target();
        if (x.is_conj()) splice(k + 1, k + 1, k4_hat(x));
        if (x.is_disj()) splice(k + 1, k + 1, k4_check(x));
      }
      at(ck, [&](const Term& s) { splice(k, k + 1, s); });
    }
    if (c.front().target().is_conj()) splice(0, 0, k4_hat(c.front().target()));
    if (c.back().source().is_disj()) splice(n, n, k4_check(c.back().source()));
  }
};

}  // namespace

Term oracle_canonical(const Term& t, System sys) { return Canon(sys)(to_gentzen(t, Functorial::Expand)); }

std::vector<Term> oracle_neighbours(const Term& t, System sys) {
  Canon canon(sys);
  std::unordered_set<Term> seen;
  std::vector<Term> out;
  Rewriter().at(t, [&](const Term& s) {
    Term c = canon(s);
    if (c == t) return;
    if (seen.insert(c).second) out.push_back(std::move(c));
  });
  return out;
}

const Oracle::Ball& Oracle::ball(const Term& canon, int radius, std::size_t cap) {
  auto key = std::make_tuple(canon, radius, cap);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  Ball b;
  b.dist.emplace(canon, 0);
  std::vector<Term> frontier{canon};
  for (int d = 1; d <= radius && !frontier.empty() && !b.capped; ++d) {
    std::vector<Term> next;
    for (const Term& s : frontier) {
      for (Term& n : oracle_neighbours(s, sys_)) {
        if (n.nodes() > cap) continue;
        if (b.dist.emplace(n, d).second) next.push_back(std::move(n));
      }
      if (b.dist.size() > opt_.max_states) {
        b.capped = true;
        break;
      }
    }
    frontier = std::move(next);
  }
  return cache_.emplace(std::move(key), std::move(b)).first->second;
}

OracleResult Oracle::equal(const Term& f, const Term& g, int depth) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw TypeError(TypeError::Kind::TypeMismatch, "oracle: terms have different types");
  if (depth < 0) throw PreconditionError("oracle: depth must be nonnegative");
  Term cf = oracle_canonical(f, sys_);
  Term cg = oracle_canonical(g, sys_);
  if (cf == cg) return {OracleStatus::ConnectedWithin, depth, 0, 1};
  std::size_t cap = opt_.size_cap ? opt_.size_cap : 3 * std::max(cf.nodes(), cg.nodes());
  const Ball& bf = ball(cf, (depth + 1) / 2, cap);
  const Ball& bg = ball(cg, depth / 2, cap);
  const Ball& small = bf.dist.size() <= bg.dist.size() ? bf : bg;
  const Ball& large = &small == &bf ? bg : bf;
  int best = -1;
  for (const auto& [t, d] : small.dist) {
    auto it = large.dist.find(t);
    if (it != large.dist.end() && (best < 0 || d + it->second < best)) best = d + it->second;
  }
  std::size_t states = bf.dist.size() + bg.dist.size();
  if (best >= 0) return {OracleStatus::ConnectedWithin, depth, best, states};
  if (bf.capped || bg.capped) return {OracleStatus::CapExceeded, depth, -1, states};
  return {OracleStatus::NotConnectedWithin, depth, -1, states};
}

OracleResult oracle_equal(const Term& f, const Term& g, System sys, int depth, const OracleOptions& opt) {
  Oracle o(sys, opt);
  return o.equal(f, g, depth);
}

}  // namespace bicoh
