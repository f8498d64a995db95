#include <fstream>
#include <sstream>

#include "doctest.h"
#include "magma/errors.hpp"
#include "magma/eval.hpp"

using namespace magma;

// Golden lines have the form "expr => expected". "error" as the expected
// value means any engine error; everything else is compared verbatim
// against the printed result. The file shares one evaluator so let
// bindings persist, which is exactly how a scripted session behaves.
TEST_CASE("golden evaluation transcript") {
  std::ifstream in("golden/eval_basic.txt");
  REQUIRE_MESSAGE(in.good(), "golden/eval_basic.txt must sit next to the test binary");
  Evaluator ev(Session::make(Domain::Tag));
  std::string line;
  int line_no = 0;
  int checked = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto sep = line.find(" => ");
    REQUIRE_MESSAGE(sep != std::string::npos, "malformed golden line " << line_no);
    std::string expr = line.substr(0, sep);
    std::string expected = line.substr(sep + 4);
    std::string got;
    try {
      got = print_value(ev.eval_text(expr));
    } catch (const MagmaError& err) {
      got = "error";
    }
    INFO("line " << line_no << ": " << expr);
    CHECK(got == expected);
    ++checked;
  }
  CHECK(checked > 30);
}
