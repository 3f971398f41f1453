#include <doctest.h>

#include "bicoh/generate.hpp"
#include "bicoh/relation.hpp"
#include "helpers.hpp"

using namespace bicoh;
using namespace bicoh::test;

TEST_CASE("random formulas respect the system and leaf bound") {
  Rng rng(7);
  for (System sys : {System::L, System::Lbot, System::Ltop, System::Ltopbot}) {
    GenOptions opt{sys};
    for (int k = 0; k < 200; ++k) {
      Formula a = random_formula(rng, opt);
      CHECK((a.nodes() + 1) / 2 <= static_cast<std::size_t>(opt.max_leaves));
      if (!system_has_top(sys)) CHECK_FALSE(a.contains_top());
      if (!system_has_bot(sys)) CHECK_FALSE(a.contains_bot());
    }
  }
}

TEST_CASE("provability") {
  CHECK(provable(F("p /\\ q"), F("q \\/ r"), System::L));
  CHECK_FALSE(provable(F("p \\/ q"), F("p"), System::L));
  CHECK_FALSE(provable(F("p"), F("top"), System::L));
  CHECK(provable(F("p"), F("top"), System::Ltop));
  CHECK(provable(F("bot"), F("p /\\ q"), System::Lbot));
  CHECK(provable(F("(p \\/ q) /\\ r"), F("(p /\\ r) \\/ (q /\\ r)"), System::L) == false);
  CHECK(provable(F("(p /\\ r) \\/ (q /\\ r)"), F("(p \\/ q) /\\ r"), System::L));
}

TEST_CASE("cut-free terms have the requested type") {
  Rng rng(11);
  GenOptions opt{System::Ltopbot};
  int found = 0;
  for (int k = 0; k < 200; ++k) {
    Formula a = random_formula(rng, opt), b = random_formula(rng, opt);
    auto t = random_cutfree(rng, a, b, System::Ltopbot);
    auto d = find_cutfree(a, b, System::Ltopbot);
    CHECK(t.has_value() == provable(a, b, System::Ltopbot));
    CHECK(d.has_value() == t.has_value());
    if (!t) continue;
    ++found;
    for (const Term& u : {*t, *d}) {
      CHECK(u.source() == a);
      CHECK(u.target() == b);
      CHECK_FALSE(u.has_comp());
      CHECK(in_system(u, System::Ltopbot));
    }
  }
  CHECK(found > 20);
}

TEST_CASE("enumeration of cut-free terms") {
  auto ts = enumerate_cutfree(F("p /\\ p"), F("p \\/ p"), System::L);
  std::set<std::vector<OccPair>> images;
  for (const Term& t : ts) {
    CHECK(t.source() == F("p /\\ p"));
    CHECK(t.target() == F("p \\/ p"));
    images.insert(g_of(t).pairs);
  }
  CHECK(images.size() == 4);
  // The only cut-free arrow p |- p is the identity.
  auto ids = enumerate_cutfree(F("p"), F("p"), System::Ltopbot);
  REQUIRE(ids.size() == 1);
  CHECK(ids.front() == T("id<p>"));
}

TEST_CASE("random terms typecheck in their system") {
  Rng rng(3);
  for (System sys : {System::L, System::Lbot, System::Ltop, System::Ltopbot}) {
    for (TermStyle st : {TermStyle::Arrow, TermStyle::Gentzen, TermStyle::Mixed}) {
      GenOptions opt{sys};
      opt.style = st;
      for (int k = 0; k < 50; ++k) {
        Term t = random_term(rng, opt);
        CHECK(in_system(t, sys));
        if (st == TermStyle::Arrow) CHECK(is_arrow_term(t));
        Formula a = random_formula(rng, opt);
        CHECK(random_from(rng, a, opt, 8).source() == a);
        CHECK(random_to(rng, a, opt, 8).target() == a);
      }
    }
  }
}
