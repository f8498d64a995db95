#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "magma/rational.hpp"

namespace magma {

// Parsed S-expression. Parse errors carry line and column.
struct SExpr {
  enum class Type { Symbol, Int, Rat, List };

  Type type = Type::List;
  std::string sym;
  std::int64_t num = 0;
  Rational rat;
  std::vector<SExpr> items;
  int line = 0;
  int col = 0;

  bool is_list() const { return type == Type::List; }
  bool is_symbol(const char* s) const { return type == Type::Symbol && sym == s; }
  // Head symbol of a list, or "" when not a symbol-headed list.
  std::string head() const {
    if (type != Type::List || items.empty() || items[0].type != Type::Symbol) return "";
    return items[0].sym;
  }
};

// One expression; trailing garbage is an error.
SExpr parse_sexpr(const std::string& text);

// Every expression in the text. ';' comments to end of line.
std::vector<SExpr> parse_all(const std::string& text);

// Re-render (round-trips through parse_sexpr).
std::string render(const SExpr& e);

}  // namespace magma
