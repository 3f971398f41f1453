#include <doctest.h>

#include <json.hpp>

#include "bicoh/decide.hpp"
#include "bicoh/errors.hpp"
#include "bicoh/generate.hpp"
#include "bicoh/maximality.hpp"
#include "helpers.hpp"

using namespace bicoh;
using namespace bicoh::test;
using E = CollapseEquation;

namespace {

void check_images(const CollapseWitness& w, const std::vector<OccPair>& holder, const std::vector<OccPair>& other) {
  CHECK(w.valid);
  CHECK(w.composite1.source() == w.composite2.source());
  CHECK(w.composite1.target() == w.composite2.target());
  CHECK(g_of(w.composite1) == w.image1);
  CHECK(g_of(w.composite2) == w.image2);
  const Relation& h = w.swapped ? w.image2 : w.image1;
  const Relation& o = w.swapped ? w.image1 : w.image2;
  CHECK(h.pairs == holder);
  CHECK(o.pairs == other);
}

}  // namespace

TEST_CASE("monoletter") {
  CHECK(monoletter(T("hk1<q,r>")) == T("hk1<p,p>"));
  CHECK(monoletter(T("id<p>")) == T("id<p>"));
  CHECK(g_of(monoletter(T("hw<q\\/r>"))).pairs == g_of(T("hw<q\\/r>")).pairs);
}

TEST_CASE("diagonals link every occurrence") {
  Formula a = F("(p /\\ p) /\\ (p /\\ (p /\\ p))");
  Term d = diagonal(a);
  CHECK(d.source() == F("p"));
  CHECK(d.target() == a);
  CHECK(g_of(d).pairs == P({{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}}));
  Term c = codiagonal(dual(a));
  CHECK(g_of(c).pairs == P({{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}));
}

TEST_CASE("collapse_witness_L examples") {
  auto a = collapse_witness_L(T("hk1<p,p>"), T("hk2<p,p>"));
  CHECK(a.equation == E::HatHat);
  CHECK(a.pre_context == T("id<p/\\p>"));
  CHECK(a.post_context == T("id<p>"));
  check_images(a, {{1, 1}}, {{2, 1}});

  auto t = collapse_witness_L(T("pair(hk2<p,p>, hk1<p,p>)"), T("id<p/\\p>"));
  CHECK(t.equation == E::HatHat);
  CHECK(t.post_context == T("hk2<p,p>"));
  CHECK(t.pre_context == T("id<p/\\p>"));
  check_images(t, {{1, 1}}, {{2, 1}});

  auto c = collapse_witness_L(T("ck1<p,p>"), T("ck2<p,p>"));
  CHECK(c.equation == E::CheckCheck);
  check_images(c, {{1, 1}}, {{1, 2}});
  CHECK(derived_consequences(c) == std::vector<std::string>{"preorder collapse"});

  CHECK_THROWS_AS(collapse_witness_L(T("id<p>"), T("id<p>")), PreconditionError);
  CHECK_THROWS_AS(collapse_witness_L(T("hk1<p,q>"), T("hk1<p,q>")), PreconditionError);
  CHECK_THROWS_AS(collapse_witness_L(T("hk1<p,p>"), T("hk1<p,p> . id<p/\\p>")), PreconditionError);
}

TEST_CASE("collapse_witness_L on generated pairs") {
  Rng rng(31);
  GenOptions opt{System::L};
  opt.letters = {"p"};
  int built = 0;
  for (int k = 0; k < 400 && built < 80; ++k) {
    Formula a = random_formula(rng, opt, 1 + k % 4), b = random_formula(rng, opt, 1 + (k / 4) % 4);
    auto f1 = random_cutfree(rng, a, b, System::L);
    auto f2 = random_cutfree(rng, a, b, System::L);
    if (!f1 || g_of(*f1) == g_of(*f2)) continue;
    CAPTURE(f1->str());
    CAPTURE(f2->str());
    auto w = collapse_witness_L(*f1, *f2);
    CAPTURE(w.note);
    if (w.equation == E::HatHat) {
      CHECK(w.composite1.source() == F("p /\\ p"));
      check_images(w, {{1, 1}}, {{2, 1}});
    } else {
      CHECK(w.composite1.target() == F("p \\/ p"));
      check_images(w, {{1, 1}}, {{1, 2}});
    }
    ++built;
  }
  CHECK(built >= 50);
}

TEST_CASE("collapse_witness_dicart example") {
  auto w = collapse_witness_dicart(T("hk1<p,bot>"), T("ckap<p> . hk2<p,bot>"));
  CHECK(w.equation == E::HatCheck);
  REQUIRE(w.h_a);
  REQUIRE(w.h_b);
  CHECK(*w.h_a == T("(hk1<p,bot> /\\ id<bot>)"));
  CHECK(*w.h_b == T("ck1<p,top>"));
  CHECK(w.composite1.source() == F("p /\\ bot"));
  CHECK(w.composite1.target() == F("p \\/ top"));
  check_images(w, {{1, 1}}, {});
  auto cs = derived_consequences(w);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].find("ck1<p,top> . f . hk1<(p /\\ bot),bot>") != std::string::npos);
  CHECK_THROWS_AS(collapse_witness_dicart(T("id<p>"), T("id<p> . id<p>")), PreconditionError);
}

TEST_CASE("refined dicartesian witnesses") {
  auto w = collapse_witness_dicart(T("hk1<p,p>"), T("hk2<p,p>"), true);
  CHECK(w.equation == E::HatKappaCheck);
  CHECK(w.composite1.source() == F("p /\\ bot"));
  CHECK(w.composite1.target() == F("p"));
  check_images(w, {{1, 1}}, {});
  auto d = collapse_witness_dicart(T("ck1<p,p>"), T("ck2<p,p>"), true);
  CHECK(d.equation == E::CheckKappaHat);
  CHECK(d.composite1.source() == F("p"));
  CHECK(d.composite1.target() == F("p \\/ top"));
  check_images(d, {{1, 1}}, {});
}

TEST_CASE("collapse_witness_dicart on generated pairs") {
  Rng rng(37);
  GenOptions opt{System::Ltopbot};
  opt.letters = {"p", "q"};
  int built = 0;
  for (int k = 0; k < 600 && built < 40; ++k) {
    Formula a = random_formula(rng, opt, 1 + k % 4), b = random_formula(rng, opt, 1 + (k / 4) % 4);
    auto f1 = random_cutfree(rng, a, b, System::Ltopbot);
    auto f2 = random_cutfree(rng, a, b, System::Ltopbot);
    if (!f1 || g_of(*f1) == g_of(*f2)) continue;
    CAPTURE(f1->str());
    CAPTURE(f2->str());
    for (bool refine : {false, true}) {
      auto w = collapse_witness_dicart(*f1, *f2, refine);
      CAPTURE(w.note);
      CHECK(in_system(w.composite1, System::Ltopbot));
      check_images(w, {{1, 1}}, {});
      if (!refine) {
        CHECK(w.equation == E::HatCheck);
        Formula p = w.composite1.source().left();
        CHECK(w.composite1.source() == Formula::conj(p, Formula::bot()));
        CHECK(w.composite1.target() == Formula::disj(p, Formula::top()));
        // j^A is invertible: some cut-free arrow back links the one letter
        // occurrence, and composes to the identity on p /\ bot.
        Term j = *w.j_a;
        std::optional<Term> inv;
        for (const Term& t : enumerate_cutfree(j.target(), j.source(), System::Ltopbot))
          if (g_of(t).pairs == P({{1, 1}})) inv = t;
        REQUIRE(inv);
        CHECK(decide(Term::comp(*inv, j), Term::id(j.source()), System::Ltopbot).kind == Verdict::Kind::Equal);
        CHECK(decide(Term::comp(j, *inv), Term::id(j.target()), System::Ltopbot).kind != Verdict::Kind::NotEqual);
      }
    }
    ++built;
  }
  CHECK(built >= 20);
}

TEST_CASE("L pairs also give dicartesian witnesses") {
  auto w = collapse_witness_dicart(T("pair(hk2<p,p>, hk1<p,p>)"), T("id<p/\\p>"));
  check_images(w, {{1, 1}}, {});
  auto j = nlohmann::json::parse(witness_json(w));
  CHECK(j["equation"] == "(k̂ǩ)");
  CHECK(j["image1"].is_array());
  CHECK(j.contains("h_a"));
}
