#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "magma/magma.hpp"
#include "magma/ordinal.hpp"
#include "magma/pair.hpp"
#include "magma/relation.hpp"
#include "magma/separation.hpp"
#include "magma/session.hpp"
#include "magma/sexpr.hpp"

namespace magma {

struct EmptyVal {};
struct TupleVal { std::vector<Magma> items; };
struct TextVal { std::string text; };

using Value = std::variant<bool, std::int64_t, Level, Atom, Magma, EmptyVal, Relation,
                           ClassDescriptor, CountGenFun, UnionCase, TupleVal, TextVal>;

std::string print_value(const Value& v);

// Expression evaluator over one session. `let` adds a binding and there is
// no mutation; evaluation is total on well-formed input and wraps module
// errors into EvalError tagged with the offending sub-expression.
class Evaluator {
 public:
  explicit Evaluator(Session s) : session_(std::move(s)) {}

  Value eval(const SExpr& e);
  Value eval_text(const std::string& text);  // single expression

  const Session& session() const { return session_; }

 private:
  struct Predicate {
    std::function<bool(const Magma&)> fn;
    std::vector<Magma> hints;  // parameters worth sampling at
  };

  Magma eval_magma(const SExpr& e);
  Atom eval_atom(const SExpr& e);
  Ordinal eval_ordinal(const SExpr& e);
  Relation eval_relation(const SExpr& e);
  ClassDescriptor eval_class(const SExpr& e);
  std::int64_t eval_int(const SExpr& e);
  Predicate eval_predicate(const SExpr& e);
  Value eval_head(const SExpr& e);

  Session session_;
  std::map<std::string, Value> env_;
};

}  // namespace magma
