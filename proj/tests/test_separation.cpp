#include "doctest.h"
#include "magma/errors.hpp"
#include "magma/pair.hpp"
#include "magma/separation.hpp"

using namespace magma;

namespace {
Magma ai(int tag, int value) { return atom_ideal({tag_atom(tag, value)}); }
}  // namespace

TEST_CASE("class membership is root coverage") {
  Magma r = pr_iter(2, atom_ideal({tag_atom(0, 0), tag_atom(1, 0)}));
  ClassDescriptor c = mk_class({r});
  CHECK(class_contains(c, r));
  CHECK(class_contains(c, random_submagma(r, 3)));
  CHECK_FALSE(class_contains(c, pr_iter(2, ai(7, 0))));
  CHECK_THROWS_AS(mk_class({}), EmptyGenerators);
  // Atom membership goes through atom-ideal roots.
  ClassDescriptor flat = mk_class({atom_ideal({tag_atom(0, 0)})});
  CHECK(class_contains(flat, tag_atom(0, -4)));
  CHECK_FALSE(class_contains(flat, tag_atom(1, 0)));
}

TEST_CASE("separation instances") {
  // Premise failure: roots and instance in different tags.
  ClassDescriptor tag0 = mk_class({ai(0, 0)});
  CHECK_FALSE(separate(tag0, ai(1, 0)).has_value());
  // A root separated from its own principal ideal is everything.
  Magma r = random_magma(Domain::Tag, 2, 2, 17);
  auto self = separate(mk_class({r}), pr(r));
  REQUIRE(self.has_value());
  CHECK(equal(*self, pr(r)));
  // Atom-level separation intersects atom-ideal roots with the instance.
  ClassDescriptor c = mk_class({atom_ideal({tag_atom(0, 2)}), pr(ai(3, 3))});
  auto v = separate(c, atom_ideal({tag_atom(0, 5), tag_atom(1, 5)}));
  REQUIRE(v.has_value());
  CHECK(equal(*v, atom_ideal({tag_atom(0, 2)})));
  for (int value = -3; value <= 5; ++value) {
    Atom a = tag_atom(0, value);
    CHECK(member(a, *v) == (class_contains(c, a) && member(a, atom_ideal({tag_atom(0, 5)}))));
  }
  // Magma-level separation keeps exactly the covered elements. The root
  // must live at the level of u's generators: class members are submagmas
  // of the root, elements of u are submagmas of u's generators.
  Magma root = atom_ideal({tag_atom(0, 0), tag_atom(1, 0)});
  ClassDescriptor cm = mk_class({root});
  Magma u = magma_ideal({ai(0, 0), ai(5, 5)});
  auto vm = separate(cm, u);
  REQUIRE(vm.has_value());
  CHECK(subset(*vm, u));
  CHECK(member(ai(0, -2), *vm));
  CHECK_FALSE(member(ai(5, 4), *vm));
  // A kind mismatch between the root and u's generators separates nothing.
  CHECK_FALSE(separate(mk_class({pr(root)}), u).has_value());
}

TEST_CASE("closure refutation sampling") {
  // Descriptor classes are closed downward: no refutation.
  ClassDescriptor c = mk_class({random_magma(Domain::Tag, 3, 2, 23)});
  auto closed = refute_closure(
      Domain::Tag, [&](const Magma& m) { return class_contains(c, m); }, 300, 7);
  CHECK_FALSE(closed.refuted);
  // Equality with a fixed magma is refuted by any strict submagma. The
  // holder itself rides along as a sampling hint.
  Magma y0 = pr(ai(0, 0));
  auto singleton = refute_closure(
      Domain::Tag, [&](const Magma& m) { return equal(m, y0); }, 2000, 7, {y0});
  CHECK(singleton.refuted);
  REQUIRE(singleton.holder.has_value());
  CHECK(equal(*singleton.holder, y0));
  // Being a pair is refuted: pairs contain non-pair submagmas.
  Session s = Session::make(Domain::Tag);
  auto pairs = refute_closure(
      Domain::Tag, [&](const Magma& m) { return is_pair(s, m); }, 2000, 7);
  CHECK(pairs.refuted);
  REQUIRE(pairs.holder.has_value());
  CHECK(is_pair(s, *pairs.holder));
  CHECK(subset(*pairs.violator, *pairs.holder));
}

TEST_CASE("replacement failure witnesses") {
  ReplacementWitness w = replacement_pr_witness(pr(atom_ideal({tag_atom(0, 0), tag_atom(1, 0)})));
  CHECK(verify(w));
  CHECK(equal(w.offending, unite(pr(ai(0, 0)), pr(ai(1, 0)))));
  CHECK_THROWS_AS(replacement_pr_witness(pr(ai(0, 0))), NoIncomparableSubmagmas);
  CHECK(verify(replacement_pr_witness(pr(atom_ideal({plane_atom(0, 0)})))));
  CHECK(verify(replacement_pr_witness(atom_ideal({plane_atom(4, 4)}))));
  CHECK_THROWS_AS(replacement_pr_witness(atom_ideal({tag_atom(0, 0)})),
                  NoIncomparableSubmagmas);
}

TEST_CASE("completed graph of pr is not functional") {
  Session s = Session::make(Domain::Tag);
  CompletionWitness w = completion_not_functional_demo(s);
  CHECK(verify(s, w));
  CHECK(subset(w.pair_sub, w.pair_full));
  CHECK_FALSE(equal(w.image, w.sub_image));
  // Replays through the sub-pair law.
  CHECK(subset(mk_pair(s, w.input, w.sub_image).whole, mk_pair(s, w.input, w.image).whole));
}
