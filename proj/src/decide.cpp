#include "bicoh/decide.hpp"

#include <algorithm>
#include <iterator>
#include <vector>

#include <json.hpp>

#include "bicoh/errors.hpp"

namespace bicoh {

std::string verdict_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Equal: return "equal";
    case Verdict::Kind::NotEqual: return "not_equal";
    case Verdict::Kind::Unknown: return "unknown";
  }
  return "?";
}

std::string verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["verdict"] = verdict_name(v.kind);
  j["system"] = system_name(v.sys);
  if (v.witness) j["witness"] = {v.witness->first, v.witness->second};
  j["reason"] = v.reason;
  return j.dump();
}

std::optional<OccPair> image_difference(const Relation& a, const Relation& b) {
  std::vector<OccPair> d;
  std::set_symmetric_difference(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end(), std::back_inserter(d));
  if (d.empty()) return std::nullopt;
  return d.front();
}

Verdict decide(const Term& f, const Term& g, System sys) {
  typecheck(f, sys);
  typecheck(g, sys);
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw TypeError(TypeError::Kind::TypeMismatch, "terms have different types",
                    f.source().str() + " |- " + f.target().str(), g.source().str() + " |- " + g.target().str());
  Relation gf = g_of(f), gg = g_of(g);
  if (auto w = image_difference(gf, gg))
    return {Verdict::Kind::NotEqual, sys, w, "G-images differ at (" + std::to_string(w->first) + "," + std::to_string(w->second) + ")"};
  const Formula& a = f.source();
  const Formula& b = f.target();
  switch (sys) {
    case System::L: return {Verdict::Kind::Equal, sys, std::nullopt, "lattice coherence"};
    case System::Lbot: return {Verdict::Kind::Equal, sys, std::nullopt, "sesquicartesian coherence"};
    case System::Ltop: {
      Verdict d = decide(dual(f), dual(g), System::Lbot);
      return {d.kind, sys, std::nullopt, d.reason + " in the dual system"};
    }
    case System::Ltopbot:
      if (gf.empty()) return {Verdict::Kind::Equal, sys, std::nullopt, "empty G-images"};
      if (is_dnf(a) && is_cnf(b)) return {Verdict::Kind::Equal, sys, std::nullopt, "restricted dicartesian coherence: dnf source, cnf target"};
      if (is_bot_normal(a)) return {Verdict::Kind::Equal, sys, std::nullopt, "restricted dicartesian coherence: bot-normal source"};
      if (is_top_normal(b)) return {Verdict::Kind::Equal, sys, std::nullopt, "restricted dicartesian coherence: top-normal target"};
      return {Verdict::Kind::Unknown, sys, std::nullopt,
              "equal G-images, but the source is neither dnf nor bot-normal and the target is neither cnf nor top-normal"};
    case System::Bicart:
      return {Verdict::Kind::Unknown, sys, std::nullopt, "equal G-images; no coherence result for free bicartesian categories"};
  }
  return {Verdict::Kind::Unknown, sys, std::nullopt, "unsupported system"};
}

}  // namespace bicoh
