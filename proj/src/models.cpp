#include "bicoh/models.hpp"

#include <unordered_map>

#include <json.hpp>

#include "bicoh/errors.hpp"

namespace bicoh {

using K = Term::Kind;

std::string variant_name(Variant v) { return v == Variant::Star ? "star" : "star-empty"; }

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.atom <=> b.atom; c != 0) return c;
  return std::lexicographical_compare_three_way(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end());
}

std::string Element::str() const {
  switch (kind) {
    case Kind::Star: return "*";
    case Kind::Atom: return atom;
    case Kind::Pair: return "(" + parts[0].str() + "," + parts[1].str() + ")";
  }
  return "?";
}

PointedSet pointed_set(int size) {
  if (size < 1) throw PreconditionError("pointed_set: size must be at least 1");
  PointedSet s{Element::star()};
  for (int k = 1; k < size; ++k) s.insert(Element::make_atom(std::string(1, static_cast<char>('a' + k - 1))));
  return s;
}

Assignment uniform_assignment(const std::vector<Formula>& formulas, int size) {
  Assignment asg;
  for (const Formula& f : formulas)
    for (const std::string& n : letter_names(f)) asg[n] = pointed_set(size);
  return asg;
}

namespace {

class Model {
 public:
  Model(const Assignment& asg, Variant v) : asg_(asg), v_(v) {}

  const PointedSet& obj(const Formula& a) {
    if (auto it = objs_.find(a); it != objs_.end()) return it->second;
    return objs_.emplace(a, build(a)).first->second;
  }

  bool empty(const Formula& a) { return obj(a).empty(); }

  Element apply(const Term& t, const Element& x) {
    switch (t.kind()) {
      case K::Id: return x;
      case K::Hw: return pairing(x, x);
      case K::Cw: return cases(t.source(), x, [](const Element& y) { return y; }, [](const Element& y) { return y; });
      case K::Hk: return proj(t.index(), x);
      case K::Ck: return inj(t.index(), t.target(), x);
      case K::Hkappa:
      case K::Ckappa: return Element::star();
      case K::Comp: return apply(t.arg(0), apply(t.arg(1), x));
      case K::Conj: return pairing(apply(t.arg(0), proj(1, x)), apply(t.arg(1), proj(2, x)));
      case K::Disj:
        return cases(
            t.source(), x, [&](const Element& y) { return inj(1, t.target(), apply(t.arg(0), y)); },
            [&](const Element& y) { return inj(2, t.target(), apply(t.arg(1), y)); });
      case K::HPair: return pairing(apply(t.arg(0), x), apply(t.arg(1), x));
      case K::CPair:
        return cases(
            t.source(), x, [&](const Element& y) { return apply(t.arg(0), y); },
            [&](const Element& y) { return apply(t.arg(1), y); });
      case K::HProj: return apply(t.arg(0), proj(t.index(), x));
      case K::CInj: return inj(t.index(), t.target(), apply(t.arg(0), x));
    }
    return x;
  }

 private:
  PointedSet build(const Formula& a) {
    switch (a.kind()) {
      case Formula::Kind::Letter: {
        auto it = asg_.find(a.name());
        if (it == asg_.end()) throw PreconditionError("no set assigned to letter " + a.name());
        return it->second;
      }
      case Formula::Kind::Top: return {Element::star()};
      case Formula::Kind::Bot: return v_ == Variant::Star ? PointedSet{Element::star()} : PointedSet{};
      case Formula::Kind::And:
      case Formula::Kind::Or: {
        const PointedSet& l = obj(a.left());
        const PointedSet& r = obj(a.right());
        if (a.is_conj() && (l.empty() || r.empty())) return {};
        if (a.is_disj() && l.empty()) return r;
        if (a.is_disj() && r.empty()) return l;
        PointedSet s{Element::star()};
        for (const Element& x : l)
          if (!x.is_star()) s.insert(Element::make_pair(x, Element::star()));
        for (const Element& y : r)
          if (!y.is_star()) s.insert(Element::make_pair(Element::star(), y));
        if (a.is_conj())
          for (const Element& x : l)
            for (const Element& y : r)
              if (!x.is_star() && !y.is_star()) s.insert(Element::make_pair(x, y));
        return s;
      }
    }
    return {};
  }

  static Element pairing(Element a, Element b) {
    if (a.is_star() && b.is_star()) return Element::star();
    return Element::make_pair(std::move(a), std::move(b));
  }

  static Element proj(int i, const Element& x) { return x.is_star() ? x : x.parts[static_cast<std::size_t>(i - 1)]; }

  // Injection into b = b1 \/ b2.
  Element inj(int i, const Formula& b, const Element& y) {
    if (empty(i == 1 ? b.right() : b.left()) || y.is_star()) return y;
    return i == 1 ? Element::make_pair(y, Element::star()) : Element::make_pair(Element::star(), y);
  }

  // Case split on x in a = a1 \/ a2.
  template <class G1, class G2>
  Element cases(const Formula& a, const Element& x, G1 g1, G2 g2) {
    if (empty(a.right())) return g1(x);
    if (empty(a.left())) return g2(x);
    if (x.is_star()) return x;
    return x.parts[0].is_star() ? g2(x.parts[1]) : g1(x.parts[0]);
  }

  const Assignment& asg_;
  Variant v_;
  std::unordered_map<Formula, PointedSet> objs_;
};

}  // namespace

PointedSet interp_formula(const Formula& a, const Assignment& asg, Variant v) {
  Model m(asg, v);
  return m.obj(a);
}

PointedFn interp_term(const Term& t, const Assignment& asg, Variant v) {
  Model m(asg, v);
  PointedFn f{m.obj(t.source()), m.obj(t.target()), {}};
  for (const Element& x : f.domain) {
    Element y = m.apply(t, x);
    if (!f.codomain.count(y))
      throw Error("model: " + t.str() + " maps " + x.str() + " outside its codomain to " + y.str());
    f.table.emplace(x, std::move(y));
  }
  return f;
}

bool model_equal(const Term& f, const Term& g, const Assignment& asg, Variant v) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw TypeError(TypeError::Kind::TypeMismatch, "model_equal: terms have different types");
  return interp_term(f, asg, v) == interp_term(g, asg, v);
}

std::string set_str(const PointedSet& s) {
  std::string out = "{";
  bool first = true;
  for (const Element& x : s) {
    if (!first) out += ",";
    first = false;
    out += x.str();
  }
  return out + "}";
}

std::string fn_json(const PointedFn& f) {
  nlohmann::json j;
  j["domain"] = nlohmann::json::array();
  j["codomain"] = nlohmann::json::array();
  j["table"] = nlohmann::json::object();
  for (const Element& x : f.domain) j["domain"].push_back(x.str());
  for (const Element& y : f.codomain) j["codomain"].push_back(y.str());
  for (const auto& [x, y] : f.table) j["table"][x.str()] = y.str();
  return j.dump();
}

Formula bot_tower(const Formula& x, int n) {
  Formula f = Formula::conj(x, Formula::bot());
  for (int k = 0; k < n; ++k) f = Formula::conj(Formula::disj(f, Formula::top()), Formula::bot());
  return f;
}

Formula top_tower(const Formula& x, int n) {
  Formula f = Formula::disj(x, Formula::top());
  for (int k = 0; k < n; ++k) f = Formula::disj(Formula::conj(f, Formula::bot()), Formula::top());
  return f;
}

Term bot_tower(const Term& f, int n) {
  Term bot = Term::id(Formula::bot()), top = Term::id(Formula::top());
  Term t = Term::conj(f, bot);
  for (int k = 0; k < n; ++k) t = Term::conj(Term::disj(t, top), bot);
  return t;
}

Term top_tower(const Term& f, int n) {
  Term bot = Term::id(Formula::bot()), top = Term::id(Formula::top());
  Term t = Term::disj(f, top);
  for (int k = 0; k < n; ++k) t = Term::disj(Term::conj(t, bot), top);
  return t;
}

std::pair<Term, Term> counterexample_pair(int n, const Formula& a) {
  if (n < 0) throw PreconditionError("counterexample_pair: n must be nonnegative");
  const Formula top = Formula::top(), bot = Formula::bot();
  Term f = Term::comp(top_tower(Term::conj(Term::ck(1, a, top), Term::id(bot)), n),
                      Term::hk(1, top_tower(Formula::conj(a, bot), n), bot));
  Term g = Term::comp(Term::ck(1, bot_tower(Formula::disj(a, top), n), top),
                      bot_tower(Term::disj(Term::hk(1, a, bot), Term::id(top)), n));
  return {f, g};
}

}  // namespace bicoh
