#include "bicoh/axioms.hpp"

#include <map>

#include "bicoh/errors.hpp"

namespace bicoh {

namespace {

// Check-side schema -> hat-side schema it is the dual of.
const std::map<std::string, std::string>& dual_schema() {
  static const std::map<std::string, std::string> m{
      {"(∨1)", "(∧1)"},   {"(∨2)", "(∧2)"},   {"(w̌ nat)", "(ŵ nat)"}, {"(ǩ nat)", "(k̂ nat)"},
      {"(w̌ǩ)", "(ŵk̂)"},   {"(w̌ǩǩ)", "(ŵk̂k̂)"}, {"(Ǩ1)", "(K̂1)"},       {"(Ǩ2)", "(K̂2)"},
      {"(Ǩ3)", "(K̂3)"},   {"(Ǩ4)", "(K̂4)"},   {"(Ǩ5)", "(K̂5)"},       {"(κ̌)", "(κ̂)"},
      {"(ǩ⊤)", "(k̂⊥)"},   {"(Ǩ⊤)", "(K̂⊥)"},
  };
  return m;
}

class Sampler {
 public:
  Sampler(Rng& rng, const std::vector<Formula>& pool, const GenOptions& opt) : rng_(rng), pool_(pool), opt_(opt) {}

  const Formula& at() const { return pool_.front(); }
  const Formula& any() { return pool_[std::uniform_int_distribution<std::size_t>(0, pool_.size() - 1)(rng_)]; }
  int index() { return std::uniform_int_distribution<int>(1, 2)(rng_); }
  int budget() { return std::uniform_int_distribution<int>(1, 5)(rng_); }
  Term from(const Formula& a) { return random_from(rng_, a, opt_, budget()); }
  Term to(const Formula& b) { return random_to(rng_, b, opt_, budget()); }

 private:
  Rng& rng_;
  const std::vector<Formula>& pool_;
  const GenOptions& opt_;
};

AxiomInstance hat_instance(const std::string& s, Sampler& x) {
  const Formula a = x.at();
  if (s == "(cat 1)") {
    Term f = x.from(a);
    if (x.index() == 1) return {s, Term::comp(f, Term::id(a)), f};
    return {s, Term::comp(Term::id(f.target()), f), f};
  }
  if (s == "(cat 2)") {
    Term f = x.from(a);
    Term g = x.from(f.target());
    Term h = x.from(g.target());
    return {s, Term::comp(h, Term::comp(g, f)), Term::comp(Term::comp(h, g), f)};
  }
  if (s == "(∧1)") {
    Formula b = x.any();
    return {s, Term::conj(Term::id(a), Term::id(b)), Term::id(Formula::conj(a, b))};
  }
  if (s == "(∧2)") {
    Term f1 = x.from(a), f2 = x.from(x.any());
    Term g1 = x.from(f1.target()), g2 = x.from(f2.target());
    return {s, Term::conj(Term::comp(g1, f1), Term::comp(g2, f2)), Term::comp(Term::conj(g1, g2), Term::conj(f1, f2))};
  }
  if (s == "(ŵ nat)") {
    Term f = x.from(a);
    return {s, Term::comp(Term::conj(f, f), Term::hw(a)), Term::comp(Term::hw(f.target()), f)};
  }
  if (s == "(k̂ nat)") {
    Term f1 = x.from(a), f2 = x.from(x.any());
    int i = x.index();
    Term fi = i == 1 ? f1 : f2;
    return {s, Term::comp(fi, Term::hk(i, f1.source(), f2.source())),
            Term::comp(Term::hk(i, f1.target(), f2.target()), Term::conj(f1, f2))};
  }
  if (s == "(ŵk̂)") return {s, Term::comp(Term::hk(x.index(), a, a), Term::hw(a)), Term::id(a)};
  if (s == "(ŵk̂k̂)") {
    Formula b = x.any();
    return {s, Term::comp(Term::conj(Term::hk(1, a, b), Term::hk(2, a, b)), Term::hw(Formula::conj(a, b))),
            Term::id(Formula::conj(a, b))};
  }
  if (s == "(K̂1)") {
    int i = x.index();
    Formula d = x.any();
    Term f = x.from(a);
    Term g = x.from(f.target());
    return {s, Term::comp(g, Term::hproj(i, d, f)), Term::hproj(i, d, Term::comp(g, f))};
  }
  if (s == "(K̂2)") {
    int i = x.index();
    Term f1 = x.from(a), f2 = x.from(a);
    Term fi = i == 1 ? f1 : f2;
    Term other = i == 1 ? f2 : f1;
    Term g = x.from(fi.target());
    return {s, Term::comp(Term::hproj(i, other.target(), g), Term::pair(f1, f2)), Term::comp(g, fi)};
  }
  if (s == "(K̂3)") {
    Term f = x.from(a);
    Term g1 = x.from(f.target()), g2 = x.from(f.target());
    return {s, Term::comp(Term::pair(g1, g2), f), Term::pair(Term::comp(g1, f), Term::comp(g2, f))};
  }
  if (s == "(K̂4)") {
    Formula b = x.any();
    return {s, Term::id(Formula::conj(a, b)), Term::pair(Term::hproj(1, b, Term::id(a)), Term::hproj(2, a, Term::id(b)))};
  }
  if (s == "(K̂5)") {
    int i = x.index();
    Formula d = x.any();
    Term f1 = x.from(a), f2 = x.from(a);
    return {s, Term::hproj(i, d, Term::pair(f1, f2)), Term::pair(Term::hproj(i, d, f1), Term::hproj(i, d, f2))};
  }
  if (s == "(K̂Ǩ)") {
    int i = x.index(), j = x.index();
    Formula c = x.any(), d = x.any();
    Term h = x.from(a);
    return {s, Term::hproj(i, c, Term::cinj(j, d, h)), Term::cinj(j, d, Term::hproj(i, c, h))};
  }
  if (s == "(κ̂)") {
    Term g = x.to(Formula::top());
    Term f = Term::comp(g, x.to(g.source()));
    return {s, f, Term::hkappa(f.source())};
  }
  const Formula bot = Formula::bot();
  if (s == "(k̂⊥)") return {s, Term::hk(1, bot, bot), Term::hk(2, bot, bot)};
  if (s == "(K̂⊥)") return {s, Term::hproj(1, bot, Term::id(bot)), Term::hproj(2, bot, Term::id(bot))};
  throw PreconditionError("unknown axiom schema " + s);
}

}  // namespace

std::vector<std::string> axiom_schemas(System sys) {
  std::vector<std::string> out{
      "(cat 1)", "(cat 2)", "(∧1)",  "(∨1)",   "(∧2)",  "(∨2)",   "(ŵ nat)", "(w̌ nat)", "(k̂ nat)",
      "(ǩ nat)", "(ŵk̂)",    "(w̌ǩ)",  "(ŵk̂k̂)", "(w̌ǩǩ)", "(K̂1)",   "(K̂2)",    "(K̂3)",    "(K̂4)",
      "(K̂5)",    "(Ǩ1)",    "(Ǩ2)",  "(Ǩ3)",   "(Ǩ4)",  "(Ǩ5)",   "(K̂Ǩ)",
  };
  if (system_has_top(sys)) out.push_back("(κ̂)");
  if (system_has_bot(sys)) out.push_back("(κ̌)");
  if (sys == System::Lbot || sys == System::Ltopbot) out.insert(out.end(), {"(k̂⊥)", "(K̂⊥)"});
  if (sys == System::Ltop || sys == System::Ltopbot) out.insert(out.end(), {"(ǩ⊤)", "(Ǩ⊤)"});
  return out;
}

AxiomInstance instantiate_axiom(const std::string& schema, Rng& rng, const std::vector<Formula>& pool,
                                const GenOptions& opt) {
  if (pool.empty()) throw PreconditionError("instantiate_axiom: empty formula pool");
  auto it = dual_schema().find(schema);
  if (it == dual_schema().end()) {
    Sampler x(rng, pool, opt);
    return hat_instance(schema, x);
  }
  std::vector<Formula> dpool;
  for (const Formula& f : pool) dpool.push_back(dual(f));
  GenOptions dopt = opt;
  dopt.sys = dual_system(opt.sys);
  Sampler x(rng, dpool, dopt);
  AxiomInstance d = hat_instance(it->second, x);
  return {schema, dual(d.lhs), dual(d.rhs)};
}

std::vector<AxiomInstance> axiom_instances(System sys, const std::vector<Formula>& pool, Rng& rng) {
  GenOptions opt;
  opt.sys = sys;
  std::vector<AxiomInstance> out;
  for (const std::string& s : axiom_schemas(sys)) {
    for (std::size_t k = 0; k < pool.size(); ++k) {
      std::vector<Formula> rotated(pool.begin() + static_cast<std::ptrdiff_t>(k), pool.end());
      rotated.insert(rotated.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
      out.push_back(instantiate_axiom(s, rng, rotated, opt));
    }
  }
  return out;
}

}  // namespace bicoh
