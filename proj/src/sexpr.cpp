#include "magma/sexpr.hpp"

#include <cctype>

#include "magma/errors.hpp"

namespace magma {

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  explicit Lexer(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at " + std::to_string(line) + ":" + std::to_string(col));
  }

  void advance() {
    if (text[pos] == '\n') { ++line; col = 1; } else { ++col; }
    ++pos;
  }

  void skip_space() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == ';') {
        while (pos < text.size() && text[pos] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  bool done() {
    skip_space();
    return pos >= text.size();
  }

  SExpr parse() {
    skip_space();
    if (pos >= text.size()) fail("unexpected end of input");
    SExpr e;
    e.line = line;
    e.col = col;
    char c = text[pos];
    if (c == '(') {
      advance();
      e.type = SExpr::Type::List;
      while (true) {
        skip_space();
        if (pos >= text.size()) fail("unclosed '('");
        if (text[pos] == ')') { advance(); return e; }
        e.items.push_back(parse());
      }
    }
    if (c == ')') fail("unexpected ')'");
    std::string tok;
    while (pos < text.size()) {
      char t = text[pos];
      if (t == '(' || t == ')' || t == ';' || std::isspace(static_cast<unsigned char>(t)))
        break;
      tok += t;
      advance();
    }
    return classify(tok, e.line, e.col);
  }

  static bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  }

  static SExpr classify(const std::string& tok, int line, int col) {
    SExpr e;
    e.line = line;
    e.col = col;
    std::size_t start = (tok[0] == '-' && tok.size() > 1) ? 1 : 0;
    auto slash = tok.find('/');
    if (slash != std::string::npos && all_digits(tok, start, slash) &&
        all_digits(tok, slash + 1, tok.size())) {
      e.type = SExpr::Type::Rat;
      e.rat = Rational(std::stoll(tok.substr(0, slash)), std::stoll(tok.substr(slash + 1)));
      return e;
    }
    if (all_digits(tok, start, tok.size())) {
      e.type = SExpr::Type::Int;
      e.num = std::stoll(tok);
      return e;
    }
    e.type = SExpr::Type::Symbol;
    e.sym = tok;
    return e;
  }
};

}  // namespace

SExpr parse_sexpr(const std::string& text) {
  Lexer lx(text);
  SExpr e = lx.parse();
  if (!lx.done()) lx.fail("trailing input after expression");
  return e;
}

std::vector<SExpr> parse_all(const std::string& text) {
  Lexer lx(text);
  std::vector<SExpr> out;
  while (!lx.done()) out.push_back(lx.parse());
  return out;
}

std::string render(const SExpr& e) {
  switch (e.type) {
    case SExpr::Type::Symbol: return e.sym;
    case SExpr::Type::Int: return std::to_string(e.num);
    case SExpr::Type::Rat: return to_string(e.rat);
    case SExpr::Type::List: {
      std::string s = "(";
      for (std::size_t i = 0; i < e.items.size(); ++i) {
        if (i) s += ' ';
        s += render(e.items[i]);
      }
      s += ')';
      return s;
    }
  }
  return "?";
}

}  // namespace magma
