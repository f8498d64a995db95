#include "doctest.h"
#include "magma/errors.hpp"
#include "magma/eval.hpp"
#include "magma/sexpr.hpp"

using namespace magma;

TEST_CASE("parser handles atoms, lists, rationals and comments") {
  SExpr e = parse_sexpr("(at qdup 1/2 0) ; trailing comment");
  REQUIRE(e.is_list());
  REQUIRE(e.items.size() == 4);
  CHECK(e.items[0].sym == "at");
  CHECK(e.items[2].type == SExpr::Type::Rat);
  CHECK(e.items[2].rat == Rational(1, 2));
  CHECK(render(e) == "(at qdup 1/2 0)");
  auto all = parse_all("(pr (at tag 0 0))\n; comment line\n(nat 3)");
  CHECK(all.size() == 2);
  CHECK(parse_sexpr("-12").num == -12);
  CHECK(parse_sexpr("-1/2").rat == Rational(-1, 2));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_sexpr("(union (pr x)");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(std::string(err.what()).find(":") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_sexpr(")"), ParseError);
  CHECK_THROWS_AS(parse_sexpr("(a) (b)"), ParseError);
  CHECK_THROWS_AS(parse_sexpr(""), ParseError);
}

TEST_CASE("evaluator output parses back to an equal value") {
  Evaluator ev(Session::make(Domain::Tag));
  for (const char* src : {
           "(pr (at tag 0 0))",
           "(union (pr (at tag 0 0)) (pr (at tag 1 0)))",
           "(pair (pr (at tag 0 0)) (pr (at tag 1 0)))",
           "(nat 2)",
           "(nat* 3)",
           "(inter (pr (at plane 0 3)) (pr (at plane 2 1)))",
       }) {
    Evaluator fresh(src[1] == 'i' && std::string(src).find("plane") != std::string::npos
                        ? Session::make(Domain::Plane)
                        : Session::make(Domain::Tag));
    Value v = fresh.eval_text(src);
    auto* m = std::get_if<Magma>(&v);
    REQUIRE(m);
    Value back = fresh.eval_text(print_value(v));
    auto* m2 = std::get_if<Magma>(&back);
    REQUIRE(m2);
    CHECK(equal(*m, *m2));
    CHECK(to_string(*m) == to_string(*m2));
  }
}

TEST_CASE("let binds names") {
  Evaluator ev(Session::make(Domain::Tag));
  ev.eval_text("(let x (pr (at tag 0 0)))");
  Value v = ev.eval_text("(eq? x x)");
  CHECK(std::get<bool>(v));
  CHECK_THROWS_AS(ev.eval_text("(eq? x unbound-name)"), EvalError);
}

TEST_CASE("eval wraps module errors with the offending expression") {
  Evaluator ev(Session::make(Domain::Tag));
  try {
    ev.eval_text("(union (pr (at tag 0 0)) (pr (pr (at tag 0 0))))");
    FAIL("expected EvalError");
  } catch (const EvalError& err) {
    std::string msg = err.what();
    CHECK(msg.find("union") != std::string::npos);
    CHECK(msg.find("not a magma") != std::string::npos);
  }
  CHECK_THROWS_AS(ev.eval_text("(subset? 3 4)"), EvalError);
  CHECK_THROWS_AS(ev.eval_text("(no-such-form 1)"), EvalError);
}
