#include "doctest.h"
#include "magma/errors.hpp"
#include "magma/magma.hpp"

using namespace magma;

TEST_CASE("atom_ideal canonicalizes") {
  Magma a = atom_ideal({tag_atom(0, 3), tag_atom(0, 5)});
  REQUIRE(a.atom_gens().size() == 1);
  CHECK(compare(a.atom_gens()[0], tag_atom(0, 5)) == 0);

  Magma b = atom_ideal({tag_atom(0, 0), tag_atom(1, 0)});
  CHECK(b.atom_gens().size() == 2);

  Magma q = atom_ideal({qdup_atom(Rational(1, 2), 0), qdup_atom(Rational(1, 2), 1)});
  CHECK(q.atom_gens().size() == 1);
  CHECK(q.atom_gens()[0].copy == 0);

  CHECK_THROWS_AS(atom_ideal({}), EmptyGenerators);
  CHECK_THROWS_AS(atom_ideal({tag_atom(0, 0), plane_atom(0, 0)}), DomainMismatch);
}

TEST_CASE("pr lifts one level") {
  Magma base = pr(tag_atom(0, 0));
  CHECK(base.kind() == Kind::AtomIdeal);
  Magma lifted = pr(base);
  CHECK(lifted.kind() == Kind::MagmaIdeal);
  REQUIRE(lifted.magma_gens().size() == 1);
  CHECK(equal(lifted.magma_gens()[0], base));
  CHECK(to_string(pr_iter(2, tag_atom(0, 0))) == "(mi (ai (at tag 0 0)))");
  CHECK_THROWS_AS(pr_iter(0, tag_atom(0, 0)), OutOfRange);
}

TEST_CASE("subset on examples") {
  CHECK(subset(atom_ideal({tag_atom(0, 3)}), atom_ideal({tag_atom(0, 5)})));
  CHECK_FALSE(subset(pr_iter(2, tag_atom(0, 0)), pr(tag_atom(0, 0))));  // kind mismatch
  CHECK(subset(atom_ideal({tag_atom(0, 3), tag_atom(0, 5)}), atom_ideal({tag_atom(0, 5)})));
}

TEST_CASE("equal is mutual inclusion and canonical identity") {
  Magma x = atom_ideal({tag_atom(0, 3), tag_atom(0, 5)});
  Magma y = atom_ideal({tag_atom(0, 5)});
  CHECK(equal(x, y));
  CHECK(to_string(x) == to_string(y));
  CHECK(equal(x, x));
}

TEST_CASE("member dispatches on kind") {
  CHECK(member(tag_atom(0, -5), atom_ideal({tag_atom(0, 0)})));
  CHECK_FALSE(member(tag_atom(1, 0), atom_ideal({tag_atom(0, 0)})));
  Magma x = random_magma(Domain::Tag, 2, 2, 11);
  CHECK(member(x, pr(x)));
  CHECK_FALSE(member(x, atom_ideal({tag_atom(0, 0)})));
  CHECK_FALSE(member(tag_atom(0, 0), pr(pr(tag_atom(0, 0)))));
}

TEST_CASE("union keeps kinds and rejects mixtures") {
  Magma u = unite(atom_ideal({tag_atom(0, 0)}), atom_ideal({tag_atom(1, 0)}));
  CHECK(u.atom_gens().size() == 2);
  CHECK_THROWS_AS(unite(atom_ideal({tag_atom(0, 0)}), pr_iter(2, tag_atom(0, 0))),
                  KindMismatch);
  Magma m = pr_iter(2, tag_atom(0, 0));
  CHECK(equal(unite(m, m), m));
}

TEST_CASE("intersect computes the greatest common submagma") {
  CHECK_FALSE(intersect(pr(tag_atom(0, 0)), pr(tag_atom(1, 0))).has_value());
  for (unsigned n = 1; n <= 4; ++n)
    CHECK_FALSE(intersect(pr_iter(n, tag_atom(0, 0)), pr_iter(n, tag_atom(1, 0))).has_value());
  auto meet = intersect(pr(plane_atom(0, 3)), pr(plane_atom(2, 1)));
  REQUIRE(meet.has_value());
  CHECK(equal(*meet, pr(plane_atom(0, 1))));
  // Cross-kind and cross-domain meets are empty.
  CHECK_FALSE(intersect(pr(tag_atom(0, 0)), pr_iter(2, tag_atom(0, 0))).has_value());
  CHECK_FALSE(intersect(pr(tag_atom(0, 0)), pr(plane_atom(0, 0))).has_value());
}

TEST_CASE("levels") {
  CHECK(to_string(atom_ideal({tag_atom(0, 0)}).level()) == "1");
  for (unsigned n = 0; n <= 4; ++n) {
    Level l = pr_iter(n + 2, tag_atom(0, 0)).level();
    CHECK(l.q == 0);
    CHECK(l.r == n + 2);
  }
  // Mixed generator levels land just above the next limit.
  Magma level1 = atom_ideal({tag_atom(0, 0)});
  Magma level2 = pr_iter(2, tag_atom(0, 0));
  Magma mixed = magma_ideal({level1, level2});
  CHECK(mixed.level().q == 1);
  CHECK(mixed.level().r == 1);
  CHECK(to_string(mixed.level()) == "w+1");
}

TEST_CASE("canonical order is total and serialization round-stable") {
  Magma a = atom_ideal({tag_atom(0, 0)});
  Magma b = pr(a);
  CHECK(compare(a, b) < 0);  // atom-ideals sort before magma-ideals
  CHECK(compare(a, a) == 0);
  CHECK(compare(b, b) == 0);
  Magma c = magma_ideal({b, pr(atom_ideal({tag_atom(1, 0)}))});
  validate_canonical(c);
}

TEST_CASE("random generation is deterministic and canonical") {
  Magma x1 = random_magma(Domain::Plane, 3, 3, 42);
  Magma x2 = random_magma(Domain::Plane, 3, 3, 42);
  CHECK(to_string(x1) == to_string(x2));
  validate_canonical(x1);
  CHECK(random_magma(Domain::Tag, 1, 2, 5).kind() == Kind::AtomIdeal);
  CHECK_THROWS_AS(random_magma(Domain::Tag, 0, 2, 5), OutOfRange);
  for (std::uint64_t s = 0; s < 50; ++s) {
    Magma x = random_magma(Domain::Tag, 1 + s % 3, 3, s);
    Magma y = random_submagma(x, s * 31 + 1);
    CHECK(subset(y, x));
    CHECK_FALSE(equal(y, x));
    validate_canonical(y);
  }
}

TEST_CASE("dominated magma generators are removed") {
  Magma small = pr_iter(2, tag_atom(0, -3));
  Magma big = pr_iter(2, tag_atom(0, 0));
  Magma joined = unite(small, big);
  REQUIRE(joined.magma_gens().size() == 1);
  CHECK(equal(joined, big));
}
