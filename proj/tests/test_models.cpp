#include <doctest.h>

#include <json.hpp>

#include "bicoh/errors.hpp"
#include "bicoh/generate.hpp"
#include "bicoh/models.hpp"
#include "helpers.hpp"

using namespace bicoh;
using namespace bicoh::test;

namespace {

Element A(const std::string& n) { return Element::make_atom(n); }
Element Pr(Element x, Element y) { return Element::make_pair(std::move(x), std::move(y)); }
const Element star = Element::star();

// Cardinality by counting: |a/\b| = |a||b|, |a\/b| = |a|+|b|-1, with the
// empty object absorbing under /\ and neutral under \/.
std::size_t count(const Formula& a, std::size_t letter, bool bot_empty) {
  if (a.is_letter()) return letter;
  if (a.is_top()) return 1;
  if (a.is_bot()) return bot_empty ? 0 : 1;
  std::size_t l = count(a.left(), letter, bot_empty), r = count(a.right(), letter, bot_empty);
  if (a.is_conj()) return l * r;
  if (l == 0 || r == 0) return l + r;
  return l + r - 1;
}

}  // namespace

TEST_CASE("formula interpretations") {
  Assignment asg{{"p", {star, A("a")}}, {"q", {star, A("b")}}};
  CHECK(interp_formula(F("p /\\ bot"), asg, Variant::StarEmpty).empty());
  CHECK(interp_formula(F("p \\/ q"), asg, Variant::Star) == PointedSet{Pr(A("a"), star), Pr(star, A("b")), star});
  CHECK(interp_formula(F("p /\\ q"), asg, Variant::Star) ==
        PointedSet{Pr(A("a"), A("b")), Pr(A("a"), star), Pr(star, A("b")), star});
  CHECK(interp_formula(F("top"), {}, Variant::Star) == PointedSet{star});
  CHECK(interp_formula(F("bot"), {}, Variant::Star) == PointedSet{star});
  CHECK(interp_formula(F("p \\/ bot"), asg, Variant::StarEmpty) == asg["p"]);
  CHECK_THROWS_AS(interp_formula(F("r"), asg, Variant::Star), PreconditionError);
}

TEST_CASE("term interpretations") {
  Assignment asg{{"p", {star, A("a")}}};
  PointedFn k = interp_term(T("hk1<p,bot>"), asg, Variant::StarEmpty);
  CHECK(k.domain.empty());
  CHECK(k.table.empty());
  CHECK(interp_term(T("ckap<p> . hk2<p,bot>"), asg, Variant::StarEmpty) == k);
  PointedFn w = interp_term(T("hw<p>"), asg, Variant::Star);
  CHECK(w.table == std::map<Element, Element>{{star, star}, {A("a"), Pr(A("a"), A("a"))}});
  auto j = nlohmann::json::parse(fn_json(w));
  CHECK(j["table"]["a"] == "(a,a)");
}

TEST_CASE("model_equal examples") {
  CHECK(model_equal(T("hk1<p,bot>"), T("ckap<p> . hk2<p,bot>"), uniform_assignment({F("p")}, 2), Variant::StarEmpty));
  CHECK_FALSE(model_equal(T("hk1<p,bot>"), T("ckap<p> . hk2<p,bot>"), uniform_assignment({F("p")}, 2), Variant::Star));
  CHECK_FALSE(model_equal(T("hk1<p,p>"), T("hk2<p,p>"), uniform_assignment({F("p")}, 3), Variant::StarEmpty));
  CHECK(model_equal(T("hk1<p,p> . hw<p>"), T("id<p>"), uniform_assignment({F("p")}, 2), Variant::Star));
  CHECK_THROWS_AS(model_equal(T("id<p>"), T("id<q>"), uniform_assignment({F("p/\\q")}), Variant::Star), TypeError);
}

TEST_CASE("interpretation sizes match counting") {
  Rng rng(23);
  GenOptions opt{System::Ltopbot};
  for (int k = 0; k < 200; ++k) {
    Formula a = random_formula(rng, opt);
    for (int size : {1, 2, 3}) {
      auto asg = uniform_assignment({a, F("(p /\\ q) /\\ (r /\\ s)")}, size);
      CHECK(interp_formula(a, asg, Variant::Star).size() == count(a, static_cast<std::size_t>(size), false));
      CHECK(interp_formula(a, asg, Variant::StarEmpty).size() == count(a, static_cast<std::size_t>(size), true));
    }
  }
}

TEST_CASE("interpreted terms preserve the basepoint") {
  Rng rng(29);
  GenOptions opt{System::Ltopbot};
  for (int k = 0; k < 200; ++k) {
    Term t = random_term(rng, opt);
    if (max_letters(t) > 7) continue;
    auto asg = uniform_assignment({F("(p /\\ q) /\\ (r /\\ s)")}, 3);
    for (Variant v : {Variant::Star, Variant::StarEmpty}) {
      PointedFn f = interp_term(t, asg, v);
      CHECK(f.table.size() == f.domain.size());
      if (!f.domain.empty() && !f.codomain.empty()) CHECK(f.table.at(star) == star);
    }
  }
}

TEST_CASE("counterexample family") {
  auto [f0, g0] = counterexample_pair(0, F("p"));
  CHECK(f0.source() == F("((p /\\ bot) \\/ top) /\\ bot"));
  CHECK(f0.target() == F("((p \\/ top) /\\ bot) \\/ top"));
  CHECK(f0 == T("((ck1<p,top> /\\ id<bot>) \\/ id<top>) . hk1<(p/\\bot)\\/top,bot>"));
  CHECK(T(f0.str()) == f0);
  for (int n = 0; n <= 4; ++n) {
    auto [f, g] = counterexample_pair(n, F("p"));
    CHECK(f.source() == g.source());
    CHECK(f.target() == g.target());
    CHECK(f.source() == bot_tower(F("p"), n + 1));
    CHECK(f.target() == top_tower(F("p"), n + 1));
    CHECK(in_system(f, System::Ltopbot));
    CHECK(g_of(f) == g_of(g));
    CHECK(g_of(f).pairs == P({{1, 1}}));
    CHECK_FALSE(is_bot_normal(f.source()));
    CHECK_FALSE(is_top_normal(f.target()));
  }
  CHECK_THROWS_AS(counterexample_pair(-1, F("p")), PreconditionError);
}
