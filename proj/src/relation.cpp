#include "bicoh/relation.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "bicoh/errors.hpp"

namespace bicoh {

namespace {

using Pairs = std::vector<OccPair>;

void normalize_pairs(Pairs& p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
}

Pairs compose_pairs(const Pairs& r1, const Pairs& r2, std::size_t mid) {
  std::vector<std::vector<int>> out_of(mid + 1);
  for (auto [j, k] : r2) out_of[static_cast<std::size_t>(j)].push_back(k);
  Pairs res;
  for (auto [i, j] : r1)
    for (int k : out_of[static_cast<std::size_t>(j)]) res.emplace_back(i, k);
  normalize_pairs(res);
  return res;
}

Pairs shifted(const Pairs& p, int ds, int dt) {
  Pairs res;
  res.reserve(p.size());
  for (auto [j, k] : p) res.emplace_back(j + ds, k + dt);
  return res;
}

void append(Pairs& a, const Pairs& b) { a.insert(a.end(), b.begin(), b.end()); }

int n_of(const Formula& f) { return static_cast<int>(f.letters()); }

Pairs gpairs(const Term& t) {
  using K = Term::Kind;
  Pairs p;
  switch (t.kind()) {
    case K::Id:
      for (int j = 1; j <= n_of(t.formula()); ++j) p.emplace_back(j, j);
      return p;
    case K::Hw: {
      int n = n_of(t.formula());
      for (int j = 1; j <= n; ++j) {
        p.emplace_back(j, j);
        p.emplace_back(j, j + n);
      }
      normalize_pairs(p);
      return p;
    }
    case K::Cw: {
      int n = n_of(t.formula());
      for (int j = 1; j <= n; ++j) {
        p.emplace_back(j, j);
        p.emplace_back(j + n, j);
      }
      normalize_pairs(p);
      return p;
    }
    case K::Hk: {
      int off = t.index() == 1 ? 0 : n_of(t.formula());
      int n = n_of(t.index() == 1 ? t.formula() : t.formula2());
      for (int j = 1; j <= n; ++j) p.emplace_back(j + off, j);
      return p;
    }
    case K::Ck: {
      int off = t.index() == 1 ? 0 : n_of(t.formula());
      int n = n_of(t.index() == 1 ? t.formula() : t.formula2());
      for (int j = 1; j <= n; ++j) p.emplace_back(j, j + off);
      return p;
    }
    case K::Hkappa:
    case K::Ckappa: return p;
    case K::Comp: return compose_pairs(gpairs(t.arg(1)), gpairs(t.arg(0)), t.arg(1).target().letters());
    case K::Conj:
    case K::Disj: {
      p = gpairs(t.arg(0));
      append(p, shifted(gpairs(t.arg(1)), n_of(t.arg(0).source()), n_of(t.arg(0).target())));
      normalize_pairs(p);
      return p;
    }
    case K::HPair:
      p = gpairs(t.arg(0));
      append(p, shifted(gpairs(t.arg(1)), 0, n_of(t.arg(0).target())));
      normalize_pairs(p);
      return p;
    case K::CPair:
      p = gpairs(t.arg(0));
      append(p, shifted(gpairs(t.arg(1)), n_of(t.arg(0).source()), 0));
      normalize_pairs(p);
      return p;
    case K::HProj: return shifted(gpairs(t.arg(0)), t.index() == 1 ? 0 : n_of(t.formula()), 0);
    case K::CInj: return shifted(gpairs(t.arg(0)), 0, t.index() == 1 ? 0 : n_of(t.formula()));
  }
  return p;
}

}  // namespace

bool Relation::contains(OccPair p) const { return std::binary_search(pairs.begin(), pairs.end(), p); }

Relation make_relation(Formula source, Formula target, std::vector<OccPair> pairs) {
  int ns = n_of(source), nt = n_of(target);
  for (auto [j, k] : pairs)
    if (j < 1 || j > ns || k < 1 || k > nt)
      throw PreconditionError("pair (" + std::to_string(j) + "," + std::to_string(k) + ") out of range for " +
                              source.str() + " |- " + target.str());
  normalize_pairs(pairs);
  return {std::move(source), std::move(target), std::move(pairs)};
}

Relation rel_identity(const Formula& a) {
  Pairs p;
  for (int j = 1; j <= n_of(a); ++j) p.emplace_back(j, j);
  return {a, a, std::move(p)};
}

Relation rel_compose(const Relation& r1, const Relation& r2) {
  if (!(r1.target == r2.source))
    throw TypeError(TypeError::Kind::CompositionMismatch,
                    "relation composition mismatch: expected " + r2.source.str() + ", found " + r1.target.str(),
                    r2.source.str(), r1.target.str());
  return {r1.source, r2.target, compose_pairs(r1.pairs, r2.pairs, r1.target.letters())};
}

Relation rel_xi(const Relation& r1, const Relation& r2, Conn c) {
  Pairs p = r1.pairs;
  append(p, shifted(r2.pairs, n_of(r1.source), n_of(r1.target)));
  normalize_pairs(p);
  return {Formula::binary(c, r1.source, r2.source), Formula::binary(c, r1.target, r2.target), std::move(p)};
}

Relation rel_converse(const Relation& r) {
  Pairs p;
  for (auto [j, k] : r.pairs) p.emplace_back(k, j);
  normalize_pairs(p);
  return {r.target, r.source, std::move(p)};
}

Relation g_of(const Term& t) { return {t.source(), t.target(), gpairs(t)}; }

bool letter_consistent(const Relation& r) {
  auto s = occurrences(r.source);
  auto t = occurrences(r.target);
  for (auto [j, k] : r.pairs)
    if (s[static_cast<std::size_t>(j - 1)].second != t[static_cast<std::size_t>(k - 1)].second) return false;
  return true;
}

std::string relation_text(const Relation& r) {
  std::ostringstream os;
  os << r.source.str() << " |- " << r.target.str() << " : {";
  for (std::size_t i = 0; i < r.pairs.size(); ++i)
    os << (i ? ", " : "") << "(" << r.pairs[i].first << "," << r.pairs[i].second << ")";
  os << "}";
  return os.str();
}

std::string relation_json(const Relation& r) {
  nlohmann::json j;
  j["source"] = r.source.str();
  j["target"] = r.target.str();
  j["pairs"] = nlohmann::json::array();
  for (auto [a, b] : r.pairs) j["pairs"].push_back({a, b});
  return j.dump();
}

std::string relation_dot(const Relation& r) {
  auto src = occurrences(r.source);
  auto tgt = occurrences(r.target);
  std::ostringstream os;
  os << "digraph relation {\n";
  os << "  label=\"" << r.source.str() << " |- " << r.target.str() << "\";\n";
  os << "  rankdir=TB;\n  node [shape=plaintext];\n";
  os << "  { rank=min;";
  for (auto& [j, name] : src) os << " s" << j << " [label=\"" << name << "\"];";
  os << " }\n";
  os << "  { rank=max;";
  for (auto& [k, name] : tgt) os << " t" << k << " [label=\"" << name << "\"];";
  os << " }\n";
  for (std::size_t i = 1; i < src.size(); ++i) os << "  s" << i << " -> s" << i + 1 << " [style=invis];\n";
  for (std::size_t i = 1; i < tgt.size(); ++i) os << "  t" << i << " -> t" << i + 1 << " [style=invis];\n";
  for (auto [j, k] : r.pairs) os << "  s" << j << " -> t" << k << " [arrowhead=none];\n";
  os << "}\n";
  return os.str();
}

}  // namespace bicoh
