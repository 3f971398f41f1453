#include <doctest.h>

#include "bicoh/decide.hpp"
#include "bicoh/generate.hpp"
#include "bicoh/models.hpp"
#include "bicoh/oracle.hpp"
#include "helpers.hpp"

using namespace bicoh;
using namespace bicoh::test;
using S = OracleStatus;

TEST_CASE("oracle examples") {
  auto a = oracle_equal(T("hk1<p,p> . hw<p>"), T("id<p>"), System::L, 1);
  CHECK(a.status == S::ConnectedWithin);
  CHECK(a.steps <= 1);
  auto b = oracle_equal(T("hk1<p,p>"), T("hk2<p,p>"), System::L, 6);
  CHECK(b.status == S::NotConnectedWithin);
  CHECK(b.depth == 6);
}

TEST_CASE("oracle connects identical and canonically equal terms at depth zero") {
  CHECK(oracle_equal(T("id<p> . hk1<p,q>"), T("hk1<p,q>"), System::L, 0).status == S::ConnectedWithin);
  CHECK(oracle_equal(T("hkap<p>"), T("hkap<top> . hkap<p>"), System::Ltop, 0).status == S::ConnectedWithin);
}

TEST_CASE("oracle neighbours keep the type") {
  for (const char* s : {"pair(hk1<p,q>, hk2<p,q>)", "copair(ck1<p,q>, ck2<p,q>)", "hk1<p,p> . hw<p>"}) {
    Term c = oracle_canonical(T(s), System::Ltopbot);
    for (const Term& n : oracle_neighbours(c, System::Ltopbot)) {
      CHECK(n.source() == c.source());
      CHECK(n.target() == c.target());
      CHECK(g_of(n) == g_of(c));
    }
  }
}

TEST_CASE("state cap yields cap-exceeded") {
  OracleOptions opt;
  opt.max_states = 3;
  auto r = oracle_equal(T("pair(hk1<p,q>, hk2<p,q>)"), T("id<p/\\q>"), System::L, 8, opt);
  CHECK(r.status != S::NotConnectedWithin);
}

TEST_CASE("oracle soundness against G and models") {
  Rng rng(5);
  GenOptions opt{System::Ltopbot};
  opt.letters = {"p"};
  Oracle oracle(System::Ltopbot);
  int connected = 0;
  for (int k = 0; k < 60; ++k) {
    Formula a = random_formula(rng, opt, 2), b = random_formula(rng, opt, 2);
    auto f = random_cutfree(rng, a, b, System::Ltopbot);
    if (!f) continue;
    Term g = Term::comp(Term::id(b), *f);
    auto r = oracle.equal(*f, g, 2);
    CHECK(r.status == S::ConnectedWithin);
    auto h = random_cutfree(rng, a, b, System::Ltopbot);
    auto s = oracle.equal(*f, *h, 3);
    if (s.status != S::ConnectedWithin) continue;
    ++connected;
    CHECK(g_of(*f) == g_of(*h));
    auto asg = uniform_assignment({a, b}, 3);
    CHECK(model_equal(*f, *h, asg, Variant::Star));
    CHECK(model_equal(*f, *h, asg, Variant::StarEmpty));
  }
  CHECK(connected > 0);
}
