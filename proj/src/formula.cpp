#include "bicoh/formula.hpp"

#include <functional>
#include <set>

#include "bicoh/errors.hpp"

namespace bicoh {

struct Formula::Node {
  Kind kind;
  std::string name;
  Formula l{nullptr};
  Formula r{nullptr};
  std::size_t letters = 0;
  std::size_t nodes = 1;
  std::size_t hash = 0;
  bool has_top = false;
  bool has_bot = false;
  bool has_and = false;
  bool has_or = false;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Formula Formula::letter(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Letter;
  n->hash = mix(1, std::hash<std::string>{}(name));
  n->name = std::move(name);
  n->letters = 1;
  return Formula(std::move(n));
}

Formula Formula::top() {
  static const Formula t = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Top;
    n->hash = 2;
    n->has_top = true;
    return Formula(std::move(n));
  }();
  return t;
}

Formula Formula::bot() {
  static const Formula b = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bot;
    n->hash = 3;
    n->has_bot = true;
    return Formula(std::move(n));
  }();
  return b;
}

Formula Formula::binary(Conn c, Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = c == Conn::And ? Kind::And : Kind::Or;
  n->letters = a.letters() + b.letters();
  n->nodes = 1 + a.nodes() + b.nodes();
  n->hash = mix(mix(c == Conn::And ? 4 : 5, a.hash()), b.hash());
  n->has_top = a.contains_top() || b.contains_top();
  n->has_bot = a.contains_bot() || b.contains_bot();
  n->has_and = c == Conn::And || a.contains_conj() || b.contains_conj();
  n->has_or = c == Conn::Or || a.contains_disj() || b.contains_disj();
  n->l = std::move(a);
  n->r = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) { return binary(Conn::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return binary(Conn::Or, std::move(a), std::move(b)); }

Formula::Kind Formula::kind() const { return n_->kind; }
Conn Formula::conn() const { return n_->kind == Kind::And ? Conn::And : Conn::Or; }
const std::string& Formula::name() const { return n_->name; }
const Formula& Formula::left() const { return n_->l; }
const Formula& Formula::right() const { return n_->r; }
std::size_t Formula::letters() const { return n_->letters; }
std::size_t Formula::nodes() const { return n_->nodes; }
std::size_t Formula::hash() const { return n_->hash; }
bool Formula::contains_top() const { return n_->has_top; }
bool Formula::contains_bot() const { return n_->has_bot; }
bool Formula::contains_conj() const { return n_->has_and; }
bool Formula::contains_disj() const { return n_->has_or; }

std::string Formula::str() const {
  switch (kind()) {
    case Kind::Letter: return name();
    case Kind::Top: return "top";
    case Kind::Bot: return "bot";
    case Kind::And: return "(" + left().str() + " /\\ " + right().str() + ")";
    case Kind::Or: return "(" + left().str() + " \\/ " + right().str() + ")";
  }
  return {};
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.n_ == b.n_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.nodes() != b.nodes()) return false;
  switch (a.kind()) {
    case Formula::Kind::Letter: return a.name() == b.name();
    case Formula::Kind::Top:
    case Formula::Kind::Bot: return true;
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.n_ == b.n_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Formula::Kind::Letter: return a.name() <=> b.name();
    case Formula::Kind::Top:
    case Formula::Kind::Bot: return std::strong_ordering::equal;
    default:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
}

std::string path_str(const OccPath& p) {
  if (p.empty()) return "root";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '.';
    s += p[i] == Side::Left ? "left" : "right";
  }
  return s;
}

std::vector<std::pair<int, std::string>> occurrences(const Formula& a) {
  std::vector<std::pair<int, std::string>> out;
  std::function<void(const Formula&)> go = [&](const Formula& f) {
    if (f.is_letter()) {
      out.emplace_back(static_cast<int>(out.size()) + 1, f.name());
    } else if (f.is_binary()) {
      go(f.left());
      go(f.right());
    }
  };
  go(a);
  return out;
}

const Formula& subformula_at(const Formula& a, const OccPath& at) {
  const Formula* cur = &a;
  for (Side s : at) {
    if (!cur->is_binary()) throw PathError("path " + path_str(at) + " does not resolve in " + a.str());
    cur = s == Side::Left ? &cur->left() : &cur->right();
  }
  return *cur;
}

namespace {

Formula replace_from(const Formula& a, const OccPath& at, std::size_t i, const Formula& d,
                     const OccPath& full, const Formula& root) {
  if (i == at.size()) return d;
  if (!a.is_binary()) throw PathError("path " + path_str(full) + " does not resolve in " + root.str());
  if (at[i] == Side::Left) return Formula::binary(a.conn(), replace_from(a.left(), at, i + 1, d, full, root), a.right());
  return Formula::binary(a.conn(), a.left(), replace_from(a.right(), at, i + 1, d, full, root));
}

}  // namespace

Formula replace_at(const Formula& a, const OccPath& at, const Formula& d) {
  return replace_from(a, at, 0, d, at, a);
}

std::size_t offset_of(const Formula& a, const OccPath& at) {
  const Formula* cur = &a;
  std::size_t off = 0;
  for (Side s : at) {
    if (!cur->is_binary()) throw PathError("path " + path_str(at) + " does not resolve in " + a.str());
    if (s == Side::Right) {
      off += cur->left().letters();
      cur = &cur->right();
    } else {
      cur = &cur->left();
    }
  }
  return off;
}

OccPath path_of_occurrence(const Formula& a, int j) {
  if (j < 1 || static_cast<std::size_t>(j) > a.letters())
    throw PathError("occurrence " + std::to_string(j) + " out of range in " + a.str());
  OccPath p;
  const Formula* cur = &a;
  std::size_t k = static_cast<std::size_t>(j);
  while (cur->is_binary()) {
    if (k <= cur->left().letters()) {
      p.push_back(Side::Left);
      cur = &cur->left();
    } else {
      k -= cur->left().letters();
      p.push_back(Side::Right);
      cur = &cur->right();
    }
  }
  return p;
}

Formula substitute(const Formula& a, const std::map<std::string, Formula>& sigma) {
  switch (a.kind()) {
    case Formula::Kind::Letter: {
      auto it = sigma.find(a.name());
      return it == sigma.end() ? a : it->second;
    }
    case Formula::Kind::Top:
    case Formula::Kind::Bot: return a;
    default: return Formula::binary(a.conn(), substitute(a.left(), sigma), substitute(a.right(), sigma));
  }
}

Formula substitute_all(const Formula& a, const Formula& d) {
  if (a.is_letter()) return d;
  if (!a.is_binary()) return a;
  return Formula::binary(a.conn(), substitute_all(a.left(), d), substitute_all(a.right(), d));
}

std::vector<std::string> letter_names(const Formula& a) {
  std::set<std::string> s;
  for (auto& [j, n] : occurrences(a)) s.insert(n);
  return {s.begin(), s.end()};
}

Truth eval_letterless(const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Letter: throw PreconditionError("eval_letterless: formula contains letter " + a.name());
    case Formula::Kind::Top: return Truth::Top;
    case Formula::Kind::Bot: return Truth::Bot;
    case Formula::Kind::And: {
      Truth l = eval_letterless(a.left());
      Truth r = eval_letterless(a.right());
      return l == Truth::Top && r == Truth::Top ? Truth::Top : Truth::Bot;
    }
    case Formula::Kind::Or: {
      Truth l = eval_letterless(a.left());
      Truth r = eval_letterless(a.right());
      return l == Truth::Top || r == Truth::Top ? Truth::Top : Truth::Bot;
    }
  }
  return Truth::Bot;
}

bool is_contradiction(const Formula& a) { return eval_letterless(substitute_all(a, Formula::top())) == Truth::Bot; }
bool is_tautology(const Formula& a) { return eval_letterless(substitute_all(a, Formula::bot())) == Truth::Top; }

bool is_dnf(const Formula& a) {
  if (!a.contains_disj()) return true;
  return a.is_disj() && is_dnf(a.left()) && is_dnf(a.right());
}

bool is_cnf(const Formula& a) {
  if (!a.contains_conj()) return true;
  return a.is_conj() && is_cnf(a.left()) && is_cnf(a.right());
}

bool is_bot_normal(const Formula& a) {
  if (!a.is_binary()) return true;
  if (a.is_conj()) {
    if (is_contradiction(a.right()) && a.left().contains_disj()) return false;
    if (is_contradiction(a.left()) && a.right().contains_disj()) return false;
  }
  return is_bot_normal(a.left()) && is_bot_normal(a.right());
}

bool is_top_normal(const Formula& a) {
  if (!a.is_binary()) return true;
  if (a.is_disj()) {
    if (is_tautology(a.right()) && a.left().contains_conj()) return false;
    if (is_tautology(a.left()) && a.right().contains_conj()) return false;
  }
  return is_top_normal(a.left()) && is_top_normal(a.right());
}

Formula dual(const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Letter: return a;
    case Formula::Kind::Top: return Formula::bot();
    case Formula::Kind::Bot: return Formula::top();
    case Formula::Kind::And: return Formula::disj(dual(a.left()), dual(a.right()));
    case Formula::Kind::Or: return Formula::conj(dual(a.left()), dual(a.right()));
  }
  return a;
}

}  // namespace bicoh
