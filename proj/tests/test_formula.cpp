#include <doctest.h>

#include "bicoh/errors.hpp"
#include "helpers.hpp"

using namespace bicoh;
using namespace bicoh::test;

TEST_CASE("occurrences count letters left to right") {
  using V = std::vector<std::pair<int, std::string>>;
  CHECK(occurrences(F("p")) == V{{1, "p"}});
  CHECK(occurrences(F("(p/\\q)\\/p")) == V{{1, "p"}, {2, "q"}, {3, "p"}});
  CHECK(occurrences(F("(p/\\bot)\\/top")) == V{{1, "p"}});
}

TEST_CASE("replace_at") {
  CHECK(replace_at(F("p/\\q"), {Side::Right}, F("r")) == F("p/\\r"));
  CHECK(replace_at(F("p"), {}, F("p/\\bot")) == F("p/\\bot"));
  Formula a = F("(p\\/q)/\\r");
  Formula b = replace_at(a, {Side::Left}, F("q"));
  CHECK(b == F("q/\\r"));
  CHECK(b.letters() == a.letters() - F("p\\/q").letters() + 1);
  CHECK_THROWS_AS(replace_at(F("p"), {Side::Left}, F("q")), PathError);
}

TEST_CASE("substitute") {
  CHECK(substitute(F("p/\\q"), {{"p", Formula::top()}, {"q", Formula::top()}}) == F("top/\\top"));
  CHECK(substitute(F("p\\/bot"), {{"p", Formula::top()}}) == F("top\\/bot"));
  CHECK(substitute(F("p/\\(q\\/p)"), {{"p", F("r")}}) == F("r/\\(q\\/r)"));
}

TEST_CASE("substitution multiplies occurrence counts") {
  Formula a = F("(p/\\(q\\/p))\\/r");
  std::map<std::string, Formula> s{{"p", F("q/\\r")}, {"q", Formula::bot()}, {"r", F("p\\/(p/\\top)")}};
  std::size_t expect = 0;
  for (auto& [j, l] : occurrences(a)) expect += s.at(l).letters();
  CHECK(substitute(a, s).letters() == expect);
}

TEST_CASE("eval_letterless") {
  CHECK(eval_letterless(F("bot/\\bot")) == Truth::Bot);
  CHECK(eval_letterless(F("top\\/top")) == Truth::Top);
  CHECK(eval_letterless(F("(top/\\bot)\\/top")) == Truth::Top);
  CHECK_THROWS_AS(eval_letterless(F("p/\\top")), PreconditionError);
}

TEST_CASE("contradictions and tautologies") {
  CHECK(is_contradiction(F("p/\\bot")));
  CHECK_FALSE(is_contradiction(F("p\\/bot")));
  CHECK(is_tautology(F("p\\/top")));
  CHECK_FALSE(is_tautology(F("p")));
  CHECK_FALSE(is_contradiction(F("p")));
}

TEST_CASE("dnf and cnf") {
  CHECK(is_dnf(F("(p/\\q)\\/p")));
  CHECK_FALSE(is_dnf(F("p/\\(q\\/r)")));
  CHECK(is_cnf(F("(p\\/bot)/\\top")));
  CHECK(is_dnf(F("p")));
  CHECK(is_cnf(F("p")));
}

TEST_CASE("bot-normal and top-normal") {
  CHECK(is_bot_normal(F("p/\\bot")));
  CHECK_FALSE(is_bot_normal(F("((p/\\bot)\\/top)/\\bot")));
  CHECK_FALSE(is_top_normal(F("((p\\/top)/\\bot)\\/top")));
  CHECK(is_bot_normal(F("(p/\\q)/\\bot")));
}

TEST_CASE("formula printing round-trips") {
  for (const char* s : {"p", "top", "(p /\\ (q \\/ bot))", "((p \\/ q) /\\ (r \\/ top))"}) {
    Formula f = F(s);
    CHECK(F(f.str()) == f);
  }
  CHECK(F("p /\\ q").str() == "(p /\\ q)");
  CHECK_THROWS_AS(F("p /\\ q /\\ r"), ParseError);
  CHECK_THROWS_AS(F("p /\\"), ParseError);
}
