#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicoh/decide.hpp"
#include "bicoh/errors.hpp"
#include "bicoh/maximality.hpp"
#include "bicoh/models.hpp"
#include "bicoh/normalize.hpp"
#include "bicoh/oracle.hpp"
#include "bicoh/parse.hpp"
#include "bicoh/relation.hpp"

namespace {

using namespace bicoh;
using nlohmann::json;

enum class Format { Text, Json, Dot };

// Exit codes: 0 success or Equal, 1 NotEqual, 2 bad input, 3 Unknown.
constexpr int kOk = 0, kNotEqual = 1, kBadInput = 2, kUnknown = 3;

struct Options {
  System sys = System::L;
  Format format = Format::Text;
  int n = 0;
  std::string letter = "p";
  int depth = 0;
  Variant variant = Variant::Star;
  int size = 2;
  bool trace = false;
  bool refine = false;
  std::vector<std::string> inputs;
};

// An argument naming a readable file stands for the file's contents.
std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

Term load(const Options& o, std::size_t k) {
  Term t = parse_term(read_input(o.inputs.at(k)));
  typecheck(t, o.sys);
  return t;
}

json steps_json(const RewriteTrace& tr) {
  json a = json::array();
  for (const RewriteStep& s : tr.steps)
    a.push_back({{"rule", s.rule}, {"path", s.path}, {"before", s.before.str()}, {"after", s.after.str()}});
  return a;
}

json pairs_json(const Relation& r) {
  json a = json::array();
  for (const OccPair& p : r.pairs) a.push_back({p.first, p.second});
  return a;
}

int cmd_check(const Options& o) {
  Term t = load(o, 0);
  if (o.format == Format::Json)
    std::cout << json{{"term", t.str()}, {"source", t.source().str()}, {"target", t.target().str()},
                      {"fragment", fragment_name(fragment_of(t))}}
                     .dump()
              << "\n";
  else
    std::cout << t.source().str() << " |- " << t.target().str() << "\n";
  return kOk;
}

int cmd_rel(const Options& o) {
  Relation r = g_of(load(o, 0));
  switch (o.format) {
    case Format::Text: std::cout << relation_text(r) << "\n"; break;
    case Format::Json: std::cout << relation_json(r) << "\n"; break;
    case Format::Dot: std::cout << relation_dot(r); break;
  }
  return kOk;
}

int cmd_normalize(const Options& o) {
  Eliminated e = eliminate_composition(load(o, 0), o.sys);
  if (o.format == Format::Json) {
    std::cout << json{{"term", e.term.str()}, {"steps", steps_json(e.trace)}}.dump() << "\n";
    return kOk;
  }
  std::cout << e.term.str() << "\n";
  if (o.trace) std::cout << e.trace.render();
  return kOk;
}

int cmd_standard_form(const Options& o) {
  StandardForm s = standard_form(load(o, 0));
  if (o.format == Format::Json) {
    std::cout << json{{"f", s.f.str()}, {"g", s.g.str()}, {"steps", steps_json(s.trace)}}.dump() << "\n";
    return kOk;
  }
  std::cout << "f = " << s.f.str() << "\n" << "g = " << s.g.str() << "\n";
  if (o.trace) std::cout << s.trace.render();
  return kOk;
}

int verdict_exit(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Equal: return kOk;
    case Verdict::Kind::NotEqual: return kNotEqual;
    case Verdict::Kind::Unknown: return kUnknown;
  }
  return kUnknown;
}

int cmd_decide(const Options& o) {
  Term f = load(o, 0), g = load(o, 1);
  Verdict v = decide(f, g, o.sys);
  std::optional<OracleResult> r;
  if (o.depth > 0) r = oracle_equal(f, g, o.sys, o.depth);
  if (o.format == Format::Json) {
    json j = json::parse(verdict_json(v));
    if (r)
      j["oracle"] = {{"status", oracle_status_name(r->status)}, {"depth", r->depth}, {"steps", r->steps},
                     {"states", r->states}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << verdict_name(v.kind);
    if (v.witness) std::cout << " (" << v.witness->first << "," << v.witness->second << ")";
    std::cout << ": " << v.reason << "\n";
    if (r) {
      std::cout << "oracle: " << oracle_status_name(r->status) << " at depth " << r->depth;
      if (r->steps >= 0) std::cout << " in " << r->steps << " steps";
      std::cout << ", " << r->states << " states\n";
    }
  }
  return verdict_exit(v.kind);
}

int cmd_counterexample(const Options& o) {
  auto [f, g] = counterexample_pair(o.n, Formula::letter(o.letter));
  Relation gf = g_of(f), gg = g_of(g);
  if (!(gf == gg)) throw Error("counterexample: images differ");
  if (o.format == Format::Json) {
    std::cout << json{{"n", o.n},
                      {"f", f.str()},
                      {"g", g.str()},
                      {"source", f.source().str()},
                      {"target", f.target().str()},
                      {"image", pairs_json(gf)}}
                     .dump()
              << "\n";
    return kOk;
  }
  std::cout << "f = " << f.str() << "\n"
            << "g = " << g.str() << "\n"
            << "type: " << f.source().str() << " |- " << f.target().str() << "\n"
            << "G: " << relation_text(gf) << "\n";
  return kOk;
}

int cmd_witness(const Options& o) {
  Term f1 = load(o, 0), f2 = load(o, 1);
  CollapseWitness w = o.sys == System::L ? collapse_witness_L(monoletter(f1, o.letter), monoletter(f2, o.letter))
                                         : collapse_witness_dicart(f1, f2, o.refine);
  if (o.format == Format::Json) {
    std::cout << witness_json(w) << "\n";
    return w.valid ? kOk : kUnknown;
  }
  std::cout << "equation: " << equation_name(w.equation) << "\n"
            << "chosen: (" << w.chosen.first << "," << w.chosen.second << ")" << (w.swapped ? " in the second image" : "")
            << "\n"
            << "pre: " << w.pre_context.str() << "\n"
            << "post: " << w.post_context.str() << "\n";
  if (w.h_a) std::cout << "h_a: " << w.h_a->str() << "\nj_a: " << w.j_a->str() << "\n";
  if (w.h_b) std::cout << "h_b: " << w.h_b->str() << "\nj_b: " << w.j_b->str() << "\n";
  std::cout << "image1: " << relation_text(w.image1) << "\n"
            << "image2: " << relation_text(w.image2) << "\n";
  for (const std::string& c : derived_consequences(w)) std::cout << "yields: " << c << "\n";
  if (!w.valid) std::cout << "invalid at: " << w.note << "\n";
  return w.valid ? kOk : kUnknown;
}

int cmd_model(const Options& o) {
  std::vector<Term> ts;
  for (std::size_t k = 0; k < o.inputs.size(); ++k) ts.push_back(load(o, k));
  if (ts.size() > 2) throw PreconditionError("model: at most two terms");
  std::vector<Formula> fs;
  for (const Term& t : ts) map_formulas(t, [&](const Formula& a) {
      fs.push_back(a);
      return a;
    });
  Assignment asg = uniform_assignment(fs, o.size);
  std::vector<PointedFn> fns;
  for (const Term& t : ts) fns.push_back(interp_term(t, asg, o.variant));
  bool same = fns.size() == 2 && model_equal(ts[0], ts[1], asg, o.variant);
  if (o.format == Format::Json) {
    json j{{"variant", variant_name(o.variant)}, {"size", o.size}, {"functions", json::array()}};
    for (const PointedFn& f : fns) j["functions"].push_back(json::parse(fn_json(f)));
    if (fns.size() == 2) j["equal"] = same;
    std::cout << j.dump() << "\n";
  } else {
    for (std::size_t k = 0; k < fns.size(); ++k) {
      std::cout << ts[k].str() << " : " << set_str(fns[k].domain) << " -> " << set_str(fns[k].codomain) << "\n";
      for (const auto& [x, y] : fns[k].table) std::cout << "  " << x.str() << " -> " << y.str() << "\n";
    }
    if (fns.size() == 2) std::cout << (same ? "equal" : "different") << "\n";
  }
  return fns.size() == 2 && !same ? kNotEqual : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof equality in lattice and bicartesian categories"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  std::map<std::string, System> systems{{"L", System::L},
                                        {"Lbot", System::Lbot},
                                        {"Ltop", System::Ltop},
                                        {"Ltopbot", System::Ltopbot},
                                        {"Bicart", System::Bicart}};
  std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"dot", Format::Dot}};
  std::map<std::string, Variant> variants{{"star", Variant::Star}, {"star-empty", Variant::StarEmpty}};
  app.add_option("--system", o.sys, "L, Lbot, Ltop, Ltopbot or Bicart")
      ->transform(CLI::CheckedTransformer(systems))
      ->default_str("L");
  app.add_option("--format", o.format, "text, json or dot")
      ->transform(CLI::CheckedTransformer(formats))
      ->default_str("text");
  app.add_option("--n", o.n, "counterexample index")->check(CLI::NonNegativeNumber);
  app.add_option("--letter", o.letter, "letter for counterexamples and monoletter witnesses");
  app.add_option("--depth", o.depth, "bounded oracle depth for decide (0: off)")->check(CLI::NonNegativeNumber);
  app.add_option("--variant", o.variant, "star or star-empty")
      ->transform(CLI::CheckedTransformer(variants))
      ->default_str("star");
  app.add_option("--size", o.size, "elements per letter in model sets")->check(CLI::Range(1, 4));
  app.add_flag("--trace", o.trace, "print rewrite steps");
  app.add_flag("--refine", o.refine, "try the refined dicartesian witness");

  struct Sub {
    const char* name;
    const char* help;
    std::size_t args;  // 0: one or two terms
    int (*run)(const Options&);
  };
  const Sub subs[] = {
      {"check", "typecheck a term and print its type", 1, cmd_check},
      {"rel", "print the G-image of a term", 1, cmd_rel},
      {"normalize", "eliminate composition", 1, cmd_normalize},
      {"standard-form", "factor into a hat part followed by a check part", 1, cmd_standard_form},
      {"decide", "decide equality of two terms", 2, cmd_decide},
      {"counterexample", "print the pair f^n, g^n", static_cast<std::size_t>(-1), cmd_counterexample},
      {"witness", "build a collapse witness from two terms with different images", 2, cmd_witness},
      {"model", "evaluate one or two terms in a pointed-set model", 0, cmd_model},
  };
  int (*chosen)(const Options&) = nullptr;
  for (const Sub& s : subs) {
    CLI::App* sc = app.add_subcommand(s.name, s.help);
    if (s.args == static_cast<std::size_t>(-1)) {
      sc->callback([&chosen, run = s.run] { chosen = run; });
      continue;
    }
    auto* opt = sc->add_option("terms", o.inputs, "term text or a file holding it")->required();
    if (s.args == 0)
      opt->expected(1, 2);
    else
      opt->expected(static_cast<int>(s.args));
    sc->callback([&chosen, run = s.run] { chosen = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }
  try {
    return chosen(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
}
