#include <doctest.h>

#include <json.hpp>

#include "bicoh/decide.hpp"
#include "bicoh/errors.hpp"
#include "bicoh/generate.hpp"
#include "bicoh/models.hpp"
#include "helpers.hpp"

using namespace bicoh;
using namespace bicoh::test;
using K = Verdict::Kind;

TEST_CASE("decide examples") {
  Verdict v = decide(T("hk1<p,p>"), T("hk2<p,p>"), System::L);
  CHECK(v.kind == K::NotEqual);
  REQUIRE(v.witness);
  CHECK(*v.witness == OccPair{1, 1});
  CHECK(decide(T("(hk1<p,q> /\\ hk2<p,q>) . hw<p/\\q>"), T("id<p/\\q>"), System::L).kind == K::Equal);
  CHECK(decide(T("hk1<p,bot>"), T("ckap<p> . hk2<p,bot>"), System::Ltopbot).kind == K::NotEqual);
  auto [f0, g0] = counterexample_pair(0, F("p"));
  CHECK(decide(f0, g0, System::Ltopbot).kind == K::Unknown);
}

TEST_CASE("decide per system") {
  CHECK(decide(T("pair(ckap<p>, ckap<p>)"), T("ckap<p/\\p>"), System::Lbot).kind == K::Equal);
  CHECK(decide(T("hkap<p \\/ p> . ck1<p,p>"), T("hkap<p>"), System::Ltop).kind == K::Equal);
  // Empty images in Ltopbot.
  CHECK(decide(T("ck1<top,top>"), T("ck2<top,top>"), System::Ltopbot).kind == K::Equal);
  // Bicart never claims equality.
  CHECK(decide(T("id<p>"), T("id<p>"), System::Bicart).kind == K::Unknown);
  CHECK(decide(T("hk1<p,p>"), T("hk2<p,p>"), System::Bicart).kind == K::NotEqual);
  CHECK_THROWS_AS(decide(T("id<p>"), T("id<q>"), System::L), TypeError);
}

TEST_CASE("verdict json") {
  auto j = nlohmann::json::parse(verdict_json(decide(T("hk1<p,p>"), T("hk2<p,p>"), System::L)));
  CHECK(j["verdict"] == "not_equal");
  CHECK(j["system"] == "L");
  CHECK(j["witness"] == nlohmann::json::array({1, 1}));
  auto e = nlohmann::json::parse(verdict_json(decide(T("id<p>"), T("id<p>"), System::L)));
  CHECK(e["verdict"] == "equal");
  CHECK_FALSE(e.contains("witness"));
}

TEST_CASE("decide properties on random pairs") {
  Rng rng(19);
  for (System sys : {System::L, System::Lbot, System::Ltop, System::Ltopbot, System::Bicart}) {
    GenOptions opt{sys};
    opt.letters = {"p"};
    for (int k = 0; k < 150; ++k) {
      Formula a = random_formula(rng, opt, 2), b = random_formula(rng, opt, 2);
      auto f = random_cutfree(rng, a, b, sys == System::Bicart ? System::Ltopbot : sys);
      auto g = random_cutfree(rng, a, b, sys == System::Bicart ? System::Ltopbot : sys);
      if (!f || !g) continue;
      Verdict v = decide(*f, *g, sys);
      Verdict w = decide(*g, *f, sys);
      CHECK(v.kind == w.kind);
      CHECK(decide(*f, *f, sys).kind != K::NotEqual);
      bool same = g_of(*f) == g_of(*g);
      CHECK((v.kind == K::NotEqual) == !same);
      if (v.kind == K::NotEqual) {
        REQUIRE(v.witness);
        CHECK(g_of(*f).contains(*v.witness) != g_of(*g).contains(*v.witness));
      }
      if (v.kind == K::Unknown) CHECK((sys == System::Ltopbot || sys == System::Bicart));
      if (v.kind == K::Equal) {
        for (Variant var : {Variant::Star, Variant::StarEmpty}) {
          auto asg = uniform_assignment({a, b}, 3);
          CHECK(model_equal(*f, *g, asg, var));
        }
      }
    }
  }
}
