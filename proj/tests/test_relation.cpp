#include <doctest.h>

#include "bicoh/errors.hpp"
#include "helpers.hpp"

using namespace bicoh;
using namespace bicoh::test;

TEST_CASE("rel_identity") {
  CHECK(rel_identity(F("p/\\q")).pairs == P({{1, 1}, {2, 2}}));
  CHECK(rel_identity(F("bot")).pairs.empty());
  CHECK(rel_identity(F("(p/\\q)\\/p")).pairs == P({{1, 1}, {2, 2}, {3, 3}}));
}

TEST_CASE("rel_compose") {
  Relation w = g_of(T("hw<p>"));
  CHECK(w.pairs == P({{1, 1}, {1, 2}}));
  Relation r = rel_compose(w, g_of(T("hk1<p,p>")));
  CHECK(r.pairs == P({{1, 1}}));
  CHECK(r == rel_identity(F("p")));
  Relation x = g_of(T("hk2<p/\\q,q>"));
  CHECK(rel_compose(x, rel_identity(x.target)) == x);
  CHECK(rel_compose(rel_identity(F("p")), g_of(T("hkap<p>"))).pairs.empty());
  CHECK_THROWS_AS(rel_compose(rel_identity(F("p")), rel_identity(F("q"))), TypeError);
}

TEST_CASE("rel_xi") {
  Relation a = rel_xi(rel_identity(F("p")), rel_identity(F("q")), Conn::And);
  CHECK(a == rel_identity(F("p/\\q")));
  Relation b = rel_xi(make_relation(F("p"), F("p"), {{1, 1}}), make_relation(F("bot"), F("q"), {}), Conn::Or);
  CHECK(b.pairs == P({{1, 1}}));
  CHECK(b.source == F("p\\/bot"));
  CHECK(b.target == F("p\\/q"));
  Relation c = rel_xi(make_relation(F("q"), F("top"), {}), make_relation(F("p"), F("p"), {{1, 1}}), Conn::And);
  CHECK(c.pairs == P({{2, 1}}));
  CHECK(c.target == F("top/\\p"));
}

TEST_CASE("g_of on primitives") {
  CHECK(g_of(T("hw<(p/\\q)\\/p>")).pairs == P({{1, 1}, {1, 4}, {2, 2}, {2, 5}, {3, 3}, {3, 6}}));
  Relation ck = g_of(T("ck2<(q\\/r)/\\p, p/\\(q\\/p)>"));
  CHECK(ck.pairs == P({{1, 4}, {2, 5}, {3, 6}}));
  CHECK(ck.source == F("p/\\(q\\/p)"));
  CHECK(g_of(T("hk1<p\\/q,(q/\\p)/\\r>")).pairs == P({{1, 1}, {2, 2}}));
  Relation k = g_of(T("hkap<p/\\q>"));
  CHECK(k.pairs.empty());
  CHECK(k.target == F("top"));
}

TEST_CASE("g_of agrees across presentations") {
  for (const char* s : {"(hw<p> /\\ id<q>)", "cw<p/\\q> . (hk1<p/\\q,r> \\/ hk1<p/\\q,r>) . ck1<(p/\\q)/\\r,(p/\\q)/\\r>",
                        "pair(HK2<q>(id<p>), HK1<p>(id<q>)) . hk1<q/\\p,p>"}) {
    Term t = T(s);
    Relation r = g_of(t);
    CHECK(g_of(to_gentzen(t)) == r);
    CHECK(g_of(to_arrow(to_gentzen(t))) == r);
    CHECK(g_of(dual(t)).pairs == rel_converse(r).pairs);
    CHECK(letter_consistent(r));
  }
}

TEST_CASE("relation output formats") {
  Relation r = g_of(T("hw<p>"));
  CHECK(relation_json(r) == R"j({"pairs":[[1,1],[1,2]],"source":"p","target":"(p /\\ p)"})j");
  std::string dot = relation_dot(g_of(T("id<p>")));
  CHECK(dot.find("s1 -> t1 [arrowhead=none]") != std::string::npos);
  CHECK(dot.find("rank=min") != std::string::npos);
}
