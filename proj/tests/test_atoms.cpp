#include "doctest.h"
#include "magma/atom.hpp"
#include "magma/errors.hpp"

using namespace magma;

TEST_CASE("tag order is per-tag linear") {
  CHECK(atom_leq(tag_atom(0, 3), tag_atom(0, 5)));
  CHECK_FALSE(atom_leq(tag_atom(0, 5), tag_atom(0, 3)));
  CHECK_FALSE(atom_leq(tag_atom(0, 0), tag_atom(1, 0)));
  CHECK_FALSE(atom_leq(tag_atom(1, 0), tag_atom(0, 0)));
}

TEST_CASE("plane order is componentwise") {
  CHECK(atom_leq(plane_atom(0, 0), plane_atom(1, 1)));
  CHECK_FALSE(atom_leq(plane_atom(0, 1), plane_atom(1, 0)));
  CHECK_FALSE(atom_leq(plane_atom(1, 0), plane_atom(0, 1)));
}

TEST_CASE("qdup order ignores the copy bit") {
  Atom a = qdup_atom(Rational(1, 2), 0);
  Atom b = qdup_atom(Rational(1, 2), 1);
  CHECK(atom_leq(a, b));
  CHECK(atom_leq(b, a));
  CHECK(atom_equiv(a, b));
  CHECK(compare(canonical_rep(a), canonical_rep(b)) == 0);
}

TEST_CASE("cross-domain leq is an error") {
  CHECK_THROWS_AS(atom_leq(tag_atom(0, 0), plane_atom(0, 0)), DomainMismatch);
  CHECK_FALSE(atom_below(tag_atom(0, 0), plane_atom(0, 0)));
}

TEST_CASE("strictly_below descends") {
  CHECK(compare(strictly_below(tag_atom(0, 0)), tag_atom(0, -1)) == 0);
  CHECK(compare(strictly_below(plane_atom(0, 0)), plane_atom(-1, -1)) == 0);
  Atom q = strictly_below(qdup_atom(Rational(1, 2), 0));
  CHECK(q.q == Rational(0, 1));
  for (Domain d : {Domain::Tag, Domain::Plane, Domain::QDup}) {
    Rng rng(7 + static_cast<std::uint64_t>(d));
    Atom cur = random_atom(d, rng);
    for (int i = 0; i < 10; ++i) {
      Atom next = strictly_below(cur);
      CHECK(atom_leq(next, cur));
      CHECK_FALSE(atom_leq(cur, next));
      cur = next;
    }
  }
}

TEST_CASE("common lower bounds") {
  auto lb = common_lower_bounds(tag_atom(0, 3), tag_atom(0, 5));
  REQUIRE(lb.size() == 1);
  CHECK(compare(lb[0], tag_atom(0, 3)) == 0);
  CHECK(common_lower_bounds(tag_atom(0, 0), tag_atom(1, 0)).empty());
  auto meet = common_lower_bounds(plane_atom(0, 3), plane_atom(2, 1));
  REQUIRE(meet.size() == 1);
  CHECK(compare(meet[0], plane_atom(0, 1)) == 0);
  CHECK_THROWS_AS(common_lower_bounds(tag_atom(0, 0), plane_atom(0, 0)), DomainMismatch);
}

TEST_CASE("seeds are incomparable; qdup has none") {
  for (Domain d : {Domain::Tag, Domain::Plane}) {
    auto [a0, a1] = domain_seeds(d);
    CHECK_FALSE(atom_leq(a0, a1));
    CHECK_FALSE(atom_leq(a1, a0));
  }
  CHECK_THROWS_AS(domain_seeds(Domain::QDup), SeedsUnavailable);
}

TEST_CASE("atom literal syntax") {
  CHECK(to_string(tag_atom(0, 3)) == "(at tag 0 3)");
  CHECK(to_string(plane_atom(1, -2)) == "(at plane 1 -2)");
  CHECK(to_string(qdup_atom(Rational(2, 4), 1)) == "(at qdup 1/2 1)");
}
