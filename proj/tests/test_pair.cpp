#include "doctest.h"
#include "magma/errors.hpp"
#include "magma/pair.hpp"

using namespace magma;

namespace {
Session tag_session() { return Session::make(Domain::Tag); }
}  // namespace

TEST_CASE("pair construction has the two-block shape") {
  Session s = tag_session();
  Magma x = pr(tag_atom(0, 2));
  Magma y = pr(tag_atom(1, -1));
  PairView p = mk_pair(s, x, y);
  REQUIRE(p.whole.kind() == Kind::MagmaIdeal);
  REQUIRE(p.whole.magma_gens().size() == 2);
  for (const Magma& block : p.whole.magma_gens()) {
    REQUIRE(block.kind() == Kind::MagmaIdeal);
    CHECK(block.magma_gens().size() == 2);
  }
  CHECK(is_pair(s, p.whole));
  auto [ex, ey] = extract_pair(s, p.whole);
  CHECK(equal(ex, x));
  CHECK(equal(ey, y));
}

TEST_CASE("pair equality iff componentwise") {
  Session s = tag_session();
  Magma x = pr(tag_atom(0, 2));
  Magma y = pr(tag_atom(1, -1));
  Magma x2 = pr(tag_atom(0, 1));
  CHECK(equal(mk_pair(s, x, y).whole, mk_pair(s, x, y).whole));
  CHECK_FALSE(equal(mk_pair(s, x, y).whole, mk_pair(s, x2, y).whole));
  CHECK_FALSE(equal(mk_pair(s, x, y).whole, mk_pair(s, y, x).whole));
  // Equal components still give two distinct maximal generators.
  Magma same = mk_pair(s, x, x).whole;
  REQUIRE(same.magma_gens().size() == 2);
  CHECK_FALSE(equal(same.magma_gens()[0], same.magma_gens()[1]));
}

TEST_CASE("non-pairs are recognized") {
  Session s = tag_session();
  Magma x = pr(tag_atom(0, 0));
  CHECK_FALSE(is_pair(s, pr(x)));
  CHECK_FALSE(is_pair(s, x));
  Magma block = pr(unite(pr_iter(2, x), s.pr2_a0));
  CHECK_FALSE(is_pair(s, block));
  CHECK_THROWS_AS(extract_pair(s, pr(x)), NotAPair);
  CHECK_THROWS_AS(extract_pair(s, pr_iter(5, atom_ideal({s.a0}))), NotAPair);
  // Both blocks tagged with the same seed: not a pair.
  Magma b0 = unite(pr_iter(2, x), s.pr2_a0);
  Magma b0x = unite(pr_iter(2, pr(x)), s.pr2_a0);
  CHECK_FALSE(is_pair(s, unite(pr(b0), pr(b0x))));
}

TEST_CASE("sub-pair law") {
  Session s = tag_session();
  Magma x = atom_ideal({tag_atom(0, 3), tag_atom(1, 3)});
  Magma y = atom_ideal({tag_atom(2, 3)});
  Magma xs = atom_ideal({tag_atom(0, 1)});
  Magma ys = atom_ideal({tag_atom(2, -2)});
  CHECK(subset(mk_pair(s, xs, ys).whole, mk_pair(s, x, y).whole));
  CHECK_FALSE(subset(mk_pair(s, x, y).whole, mk_pair(s, xs, ys).whole));
  // Extraction on the sub-pair returns the sub-components.
  auto [ex, ey] = extract_pair(s, mk_pair(s, xs, ys).whole);
  CHECK(equal(ex, xs));
  CHECK(equal(ey, ys));
  // A swap breaks inclusion when the components are tag-incomparable.
  CHECK_FALSE(subset(mk_pair(s, ys, xs).whole, mk_pair(s, x, y).whole));
}

TEST_CASE("tuples fold and unfold") {
  Session s = tag_session();
  Magma x = pr(tag_atom(0, 0));
  Magma y = pr(tag_atom(1, 0));
  Magma z = pr(tag_atom(2, 0));
  CHECK(equal(mk_tuple(s, {x, y}), mk_pair(s, x, y).whole));
  auto back = extract_tuple(s, mk_tuple(s, {x, y, z}), 3);
  REQUIRE(back.size() == 3);
  CHECK(equal(back[0], x));
  CHECK(equal(back[1], y));
  CHECK(equal(back[2], z));
  CHECK_THROWS_AS(mk_tuple(s, {x}), ArityTooSmall);
  CHECK_THROWS_AS(extract_tuple(s, x, 1), ArityTooSmall);
}

TEST_CASE("union equality cases") {
  Magma x = pr(tag_atom(0, 0));
  Magma y = pr(tag_atom(1, 0));
  CHECK(union2_equality_case(x, y, x, y).tag == UnionCaseTag::I);
  CHECK(union2_equality_case(x, y, y, x).tag == UnionCaseTag::II);
  Magma big = atom_ideal({tag_atom(0, 5)});
  Magma s1 = atom_ideal({tag_atom(0, 1)});
  Magma s2 = atom_ideal({tag_atom(0, 2)});
  UnionCase third = union2_equality_case(big, s1, big, s2);
  CHECK(third.tag == UnionCaseTag::III);
  CHECK(third.left_index == 0);
  CHECK(third.right_index == 0);
  CHECK(union2_equality_case(x, y, x, pr(tag_atom(2, 0))).tag == UnionCaseTag::Unequal);
}

TEST_CASE("the shipped encoding always admits proper sub-pairs") {
  Session s = tag_session();
  PairEncoding shipped = [](const Session& ses, const Magma& x, const Magma& y) {
    return mk_pair(ses, x, y).whole;
  };
  auto cex = fuzz_sub_pairs(s, shipped, 200, 5);
  REQUIRE(cex.has_value());
  CHECK(subset(mk_pair(s, cex->xs, cex->ys).whole, mk_pair(s, cex->x, cex->y).whole));
  bool same_components = equal(cex->xs, cex->x) && equal(cex->ys, cex->y);
  CHECK_FALSE(same_components);
}

TEST_CASE("sessions pin the seeds") {
  CHECK_THROWS_AS(Session::make(Domain::QDup), SeedsUnavailable);
  CHECK_THROWS_AS(Session::make(Domain::Tag, tag_atom(0, 0), tag_atom(0, 5)),
                  SeedsUnavailable);
  CHECK_THROWS_AS(Session::make(Domain::Tag, tag_atom(0, 0), plane_atom(1, 0)),
                  DomainMismatch);
  Session alt = Session::make(Domain::Tag, tag_atom(5, 0), tag_atom(6, 0));
  Session dflt = Session::make(Domain::Tag);
  CHECK_FALSE(same_seeds(alt, dflt));
  // A pair built under other seeds does not match this session's shape.
  Magma p = mk_pair(alt, pr(tag_atom(0, 0)), pr(tag_atom(1, 0))).whole;
  CHECK(is_pair(alt, p));
  CHECK_FALSE(is_pair(dflt, p));
}
