#include "doctest.h"
#include "magma/errors.hpp"
#include "magma/oracle.hpp"
#include "magma/pair.hpp"

using namespace magma;

TEST_CASE("level-1 families of tiny windows") {
  // Two incomparable atoms: {a}, {b}, {a,b}.
  FiniteUniverse anti = FiniteUniverse::build(window_from_spec("antichain:2"), 1);
  CHECK(anti.family_size(1) == 3);
  // Two-element chain: only the predecessor-closed sets {a}, {a,b}.
  FiniteUniverse chain = FiniteUniverse::build(window_from_spec("chain:2"), 1);
  CHECK(chain.family_size(1) == 2);
  // The 2x2 plane grid has the 5 down-sets minus the empty one.
  FiniteUniverse plane = FiniteUniverse::build(window_from_spec("plane:2x2"), 1);
  CHECK(plane.family_size(1) == 5);
}

TEST_CASE("window construction bounds") {
  CHECK_THROWS_AS(FiniteUniverse::build(window_from_spec("tag:3x3"), 2), BoundExceeded);
  CHECK_THROWS_AS(FiniteUniverse::build(window_from_spec("antichain:2"), 4), BoundExceeded);
  CHECK_THROWS_AS(window_from_spec("bogus:2"), ParseError);
}

TEST_CASE("extensional sets match hand computation") {
  FiniteUniverse u = FiniteUniverse::build(window_from_spec("chain:3"), 2);
  // chain:3 is tag values {0,-1,-2}: down-sets {-2}, {-2,-1}, {-2,-1,0}.
  CHECK(u.family_size(1) == 3);
  Magma bottom = atom_ideal({tag_atom(0, -2)});
  Magma top = atom_ideal({tag_atom(0, 0)});
  CHECK(u.ext_set(bottom).size() == 1);
  CHECK(u.ext_set(top).size() == 3);
  CHECK(u.ext_leq(bottom, top));
  CHECK_FALSE(u.ext_leq(top, bottom));
  CHECK(u.ext_member(tag_atom(0, -1), top));
  CHECK_FALSE(u.ext_member(tag_atom(0, 0), bottom));
  CHECK(u.ext_member(bottom, pr(top)));
  // pr(top) denotes every level-1 element: the whole family.
  CHECK(u.ext_set(pr(top)).size() == 3);
  CHECK_THROWS_AS(u.ext_set(atom_ideal({tag_atom(0, 7)})), OutOfRange);
  CHECK_THROWS_AS(u.ext_set(atom_ideal({plane_atom(0, 0)})), OutOfRange);
}

TEST_CASE("oracle suites find no mismatch on the stock windows") {
  FiniteUniverse tag = FiniteUniverse::build(window_from_spec("tag:2x2"), 2);
  CHECK(oracle_gate(tag).mismatches == 0);
  CHECK(oracle_levels(tag).mismatches == 0);
  CHECK(oracle_pair(tag, Session::make(Domain::Tag)).mismatches == 0);
  FiniteUniverse plane = FiniteUniverse::build(window_from_spec("plane:2x2"), 2);
  CHECK(oracle_functions(plane, Session::make(Domain::Plane)).mismatches == 0);
}

TEST_CASE("a deliberately wrong claim is caught extensionally") {
  FiniteUniverse u = FiniteUniverse::build(window_from_spec("tag:2x2"), 2);
  // The symbolic engine proves these unequal; the extensional side agrees.
  Magma x = atom_ideal({tag_atom(0, 0)});
  Magma y = atom_ideal({tag_atom(0, -1)});
  CHECK_FALSE(u.ext_equal(x, y));
  CHECK(u.ext_equal(x, x));
  CHECK(u.ext_leq(y, x));
  // Sets of different kinds never compare.
  CHECK_FALSE(u.ext_leq(x, pr(x)));
  CHECK_FALSE(u.ext_leq(pr(x), x));
}
