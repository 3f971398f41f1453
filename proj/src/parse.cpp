#include "bicoh/parse.hpp"

#include <cctype>
#include <vector>

#include "bicoh/errors.hpp"

namespace bicoh {

namespace {

enum class Tok { Ident, LParen, RParen, Less, Greater, Comma, Dot, And, Or, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (s.compare(i, 2, "/\\") == 0) {
      out.push_back({Tok::And, "/\\", i});
      i += 2;
      continue;
    }
    if (s.compare(i, 2, "\\/") == 0) {
      out.push_back({Tok::Or, "\\/", i});
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '<': k = Tok::Less; break;
      case '>': k = Tok::Greater; break;
      case ',': k = Tok::Comma; break;
      case '.': k = Tok::Dot; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : toks_(lex(s)) {}

  Formula formula_top() {
    Formula f = formula_expr();
    expect(Tok::End, "end of input");
    return f;
  }

  Term term_top() {
    Term t = term();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& next() { return toks_[i_++]; }

  const Token& expect(Tok k, const char* what) {
    if (!at(k)) throw ParseError(std::string("expected ") + what + " but found '" + peek().text + "'", peek().pos);
    return next();
  }

  // F or F op F, no chaining.
  Formula formula_expr() {
    Formula a = formula_primary();
    if (at(Tok::And) || at(Tok::Or)) {
      Conn c = next().kind == Tok::And ? Conn::And : Conn::Or;
      Formula b = formula_primary();
      if (at(Tok::And) || at(Tok::Or))
        throw ParseError("ambiguous connective chain; add parentheses", peek().pos);
      return Formula::binary(c, a, b);
    }
    return a;
  }

  Formula formula_primary() {
    if (at(Tok::LParen)) {
      next();
      Formula f = formula_expr();
      expect(Tok::RParen, "')'");
      return f;
    }
    const Token& t = expect(Tok::Ident, "formula");
    if (t.text == "top") return Formula::top();
    if (t.text == "bot") return Formula::bot();
    if (!std::islower(static_cast<unsigned char>(t.text[0])))
      throw ParseError("letters must start with a lowercase character: '" + t.text + "'", t.pos);
    return Formula::letter(t.text);
  }

  Term term() {
    Term g = term_unit();
    if (at(Tok::Dot)) {
      std::size_t pos = next().pos;
      Term f = term();
      try {
        return Term::comp(g, f);
      } catch (const TypeError& e) {
        throw TypeError(e.kind(), std::string(e.what()) + " (composition at offset " + std::to_string(pos) + ")",
                        e.expected(), e.found());
      }
    }
    return g;
  }

  Term term_unit() {
    if (at(Tok::LParen)) {
      next();
      Term a = term();
      if (at(Tok::And) || at(Tok::Or)) {
        Conn c = next().kind == Tok::And ? Conn::And : Conn::Or;
        Term b = term();
        expect(Tok::RParen, "')'");
        return Term::binary(c, a, b);
      }
      expect(Tok::RParen, "')'");
      return a;
    }
    const Token& t = expect(Tok::Ident, "term");
    const std::string& w = t.text;
    if (w == "pair" || w == "copair") {
      expect(Tok::LParen, "'('");
      Term a = term();
      expect(Tok::Comma, "','");
      Term b = term();
      expect(Tok::RParen, "')'");
      return w == "pair" ? Term::pair(a, b) : Term::copair(a, b);
    }
    if (w == "HK1" || w == "HK2" || w == "CK1" || w == "CK2") {
      expect(Tok::Less, "'<'");
      Formula other = formula_expr();
      expect(Tok::Greater, "'>'");
      expect(Tok::LParen, "'('");
      Term a = term();
      expect(Tok::RParen, "')'");
      int i = w[2] - '0';
      return w[0] == 'H' ? Term::hproj(i, other, a) : Term::cinj(i, other, a);
    }
    bool two = w == "hk1" || w == "hk2" || w == "ck1" || w == "ck2";
    bool one = w == "id" || w == "hw" || w == "cw" || w == "hkap" || w == "ckap";
    if (!one && !two) throw ParseError("unknown term constructor '" + w + "'", t.pos);
    expect(Tok::Less, "'<'");
    Formula a = formula_expr();
    if (two) {
      expect(Tok::Comma, "','");
      Formula b = formula_expr();
      expect(Tok::Greater, "'>'");
      int i = w[2] - '0';
      return w[0] == 'h' ? Term::hk(i, a, b) : Term::ck(i, a, b);
    }
    expect(Tok::Greater, "'>'");
    if (w == "id") return Term::id(a);
    if (w == "hw") return Term::hw(a);
    if (w == "cw") return Term::cw(a);
    if (w == "hkap") return Term::hkappa(a);
    return Term::ckappa(a);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).formula_top(); }
Term parse_term(const std::string& text) { return Parser(text).term_top(); }

}  // namespace bicoh
