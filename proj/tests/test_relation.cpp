#include "doctest.h"
#include "magma/errors.hpp"
#include "magma/relation.hpp"

using namespace magma;

namespace {

Session tag_session() { return Session::make(Domain::Tag); }

Magma ai(int tag, int value) { return atom_ideal({tag_atom(tag, value)}); }

}  // namespace

TEST_CASE("product needs magma-ideals and matches the pair ideal") {
  Session s = tag_session();
  Magma u = ai(0, 2);
  Magma v = ai(1, 2);
  CHECK_THROWS_AS(product(s, u, v), KindError);
  Relation r = product(s, pr(u), pr(v));
  CHECK(equal(r.whole(), pr(mk_pair(s, u, v).whole)));
  CHECK(r.intended().size() == 1);
  Magma x = unite(pr(u), pr(ai(2, 0)));
  Magma y = unite(pr(v), pr(ai(3, 0)));
  CHECK(product(s, x, y).intended().size() == 4);
}

TEST_CASE("weak product membership") {
  Session s = tag_session();
  Magma x = unite(pr(ai(0, 2)), pr(ai(2, 0)));
  Magma y = pr(ai(1, 2));
  WeakProduct wp = weak_product(x, y);
  CHECK_THROWS_AS(weak_product(ai(0, 0), y), KindError);
  Magma in_pair = mk_pair(s, ai(0, 1), ai(1, 0)).whole;
  CHECK(weak_member(s, in_pair, wp));
  Magma out_pair = mk_pair(s, ai(5, 0), ai(1, 0)).whole;
  CHECK_FALSE(weak_member(s, out_pair, wp));
  CHECK_FALSE(weak_member(s, pr(ai(0, 0)), wp));  // not a pair
  // Pairs in the product magma are exactly the weak product members.
  Relation r = product(s, x, y);
  CHECK(member(in_pair, r.whole()));
  CHECK_FALSE(member(out_pair, r.whole()));
}

TEST_CASE("duplicate intended pairs collapse in the whole, not the presentation") {
  Session s = tag_session();
  Relation r = mk_relation(s, {{ai(0, 0), ai(1, 0)}, {ai(0, 0), ai(1, 0)}});
  CHECK(r.intended().size() == 2);
  CHECK(r.whole().gen_count() == 1);
  CHECK(equal(r.whole(), pr(mk_pair(s, ai(0, 0), ai(1, 0)).whole)));
}

TEST_CASE("dom and ran collapse to the intended columns") {
  Session s = tag_session();
  Magma z = ai(0, 3);
  Magma w = ai(1, 3);
  Relation r = mk_relation(s, {{z, w}});
  CHECK(equal(dom(r), pr(z)));
  CHECK(equal(ran(r), pr(w)));
  CHECK(member(ai(0, -2), dom(r)));
  CHECK_FALSE(member(ai(7, 0), dom(r)));
  CHECK_THROWS_AS(mk_relation(s, {}), EmptyPresentation);
}

TEST_CASE("classification of elements") {
  Session s = tag_session();
  Magma z = ai(0, 3);
  Magma w = ai(1, 3);
  Relation r = mk_relation(s, {{z, w}});
  CHECK(classify(r, mk_pair(s, z, w).whole) == ElementClass::Intended);
  CHECK(classify(r, mk_pair(s, ai(0, 0), ai(1, -4)).whole) == ElementClass::CollateralPair);
  Magma block = pr(unite(pr_iter(2, ai(0, 1)), s.pr2_a0));
  CHECK(classify(r, block) == ElementClass::CollateralNonPair);
  CHECK(classify(r, pr(ai(9, 0))) == ElementClass::NotElement);
}

TEST_CASE("slice collects triggered images") {
  Session s = tag_session();
  Relation r = mk_relation(s, {{ai(0, 3), ai(2, 0)}, {ai(1, 3), ai(2, 5)}});
  auto sl = slice(r, ai(0, 0));
  REQUIRE(sl.has_value());
  CHECK(equal(*sl, pr(ai(2, 0))));
  CHECK_FALSE(slice(r, ai(9, 0)).has_value());
}

TEST_CASE("semifunction is presentation-relative") {
  Session s = tag_session();
  Magma z = ai(0, 0);
  CHECK(is_semifunction(mk_relation(s, {{z, ai(1, 0)}})));
  CHECK(is_semifunction(mk_relation(s, {{z, ai(1, 0)}, {ai(0, -1), ai(1, 5)}})));
  CHECK_FALSE(is_semifunction(mk_relation(s, {{z, ai(1, 0)}, {z, ai(2, 0)}})));
  // Same inputs with comparable distinct images: still not a semifunction,
  // hence not a function, even though every image family has a greatest.
  Relation comparable = mk_relation(s, {{z, ai(1, 0)}, {z, ai(1, 5)}});
  CHECK_FALSE(is_semifunction(comparable));
  CHECK_FALSE(is_function(comparable));
}

TEST_CASE("function verdicts on the pinned shapes") {
  Session s = tag_session();
  // Single pair.
  Relation single = mk_relation(s, {{ai(0, 3), ai(1, 3)}});
  CHECK(is_function(single));
  CHECK(equal(apply(single, ai(0, -1)), ai(1, 3)));
  // One input, incomparable images.
  Relation clash = mk_relation(s, {{ai(0, 3), pr(ai(1, 0))}, {ai(0, 3), pr(ai(2, 0))}});
  CHECK_FALSE(is_function(clash));
  // Incomparable inputs with a nonempty meet and incomparable images.
  Magma z1 = atom_ideal({tag_atom(0, 0), tag_atom(1, -1)});
  Magma z2 = atom_ideal({tag_atom(0, -1), tag_atom(1, 0)});
  Relation meet_clash = mk_relation(s, {{z1, pr(ai(2, 0))}, {z2, pr(ai(3, 0))}});
  FunctionCheck fc = check_function(meet_clash);
  CHECK_FALSE(fc.function);
  REQUIRE(fc.clash_input.has_value());
  auto sl = slice(meet_clash, *fc.clash_input);
  REQUIRE(sl.has_value());
  CHECK(sl->gen_count() >= 2);
  // Same inputs, nested images: a function.
  Relation nested = mk_relation(s, {{z1, ai(2, 0)}, {z2, ai(2, 5)}});
  CHECK(is_function(nested));
  auto meet = intersect(z1, z2);
  REQUIRE(meet.has_value());
  CHECK(equal(apply(nested, *meet), ai(2, 5)));
}

TEST_CASE("apply errors") {
  Session s = tag_session();
  Relation r = mk_relation(s, {{ai(0, 0), ai(1, 0)}});
  CHECK_THROWS_AS(apply(r, ai(9, 0)), NotInDomain);
  Relation clash = mk_relation(s, {{ai(0, 3), pr(ai(1, 0))}, {ai(0, 3), pr(ai(2, 0))}});
  CHECK_THROWS_AS(apply(clash, ai(0, 0)), NoGreatestImage);
}

TEST_CASE("presentation cap") {
  Session s = tag_session();
  std::vector<std::pair<Magma, Magma>> ps;
  for (int i = 0; i < 13; ++i) ps.emplace_back(ai(i, 0), ai(20 + i, 0));
  CHECK_THROWS_AS(check_function(mk_relation(s, ps)), PresentationTooLarge);
  CHECK(is_function(mk_relation(s, ps), 16));
}

TEST_CASE("collaterals break antisymmetry of order-like relations") {
  Session s = tag_session();
  Magma z = pr(atom_ideal({tag_atom(0, 0), tag_atom(1, 0)}));
  Relation r = mk_relation(s, {{z, z}});
  Magma u1 = pr(ai(0, 0));
  Magma u2 = pr(ai(1, 0));
  CHECK(member(mk_pair(s, u1, u2).whole, r.whole()));
  CHECK(member(mk_pair(s, u2, u1).whole, r.whole()));
  CHECK_FALSE(equal(u1, u2));
}
