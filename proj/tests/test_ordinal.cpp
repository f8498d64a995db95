#include "doctest.h"
#include "magma/errors.hpp"
#include "magma/ordinal.hpp"

using namespace magma;

namespace {
Session tag_session() { return Session::make(Domain::Tag); }
}  // namespace

TEST_CASE("the two encodings agree at zero and diverge after") {
  Session s = tag_session();
  Magma zero_p = nat(s, 0, NatVariant::Primary).value;
  Magma zero_a = nat(s, 0, NatVariant::Alt).value;
  CHECK(equal(zero_p, zero_a));
  CHECK(equal(zero_p, pr_iter(2, s.a0)));
  Magma one_p = nat(s, 1, NatVariant::Primary).value;
  Magma one_a = nat(s, 1, NatVariant::Alt).value;
  CHECK_FALSE(equal(one_p, one_a));
  CHECK(equal(one_a, pr_iter(3, s.a0)));
  CHECK(equal(one_p, unite(zero_p, pr(zero_p))));
}

TEST_CASE("alt values are towers with level n+2") {
  Session s = tag_session();
  for (unsigned n = 0; n <= 8; ++n) {
    Magma v = nat(s, n, NatVariant::Alt).value;
    CHECK(equal(v, pr_iter(n + 2, s.a0)));
    CHECK(v.level().q == 0);
    CHECK(v.level().r == n + 2);
  }
  CHECK_THROWS_AS(nat(tag_session(), 9, NatVariant::Alt), DepthCap);
}

TEST_CASE("primary naturals live just above the limit levels") {
  // 0 = pr2(a0) is finite-level; every successor unions a level-1 piece
  // with the previous value, so n >= 1 lands at w*n+1 under the committed
  // mixed-level rule.
  Session s = tag_session();
  CHECK(nat(s, 0, NatVariant::Primary).value.level() == Level{0, 2});
  for (unsigned n = 1; n <= 4; ++n)
    CHECK(nat(s, n, NatVariant::Primary).value.level() == Level{n, 1});
}

TEST_CASE("primary order is strict inclusion") {
  Session s = tag_session();
  CHECK(ord_less(nat(s, 1, NatVariant::Primary), nat(s, 2, NatVariant::Primary)));
  CHECK_FALSE(ord_less(nat(s, 2, NatVariant::Primary), nat(s, 2, NatVariant::Primary)));
  CHECK_FALSE(ord_less(nat(s, 3, NatVariant::Primary), nat(s, 1, NatVariant::Primary)));
  CHECK_THROWS_AS(ord_less(nat(s, 1, NatVariant::Alt), nat(s, 2, NatVariant::Alt)),
                  VariantMismatch);
  CHECK_THROWS_AS(ord_less(nat(s, 1, NatVariant::Primary), nat(s, 2, NatVariant::Alt)),
                  VariantMismatch);
}

TEST_CASE("alt encodings are pairwise disjoint") {
  Session s = tag_session();
  CHECK(alt_disjoint(s, 1, 2));
  CHECK(alt_disjoint(s, 0, 4));
  CHECK_FALSE(alt_disjoint(s, 3, 3));
}

TEST_CASE("ordinal addition on notations") {
  CHECK(ord_add(Ordinal{0, 2}, Ordinal{0, 3}).r == 5);
  Ordinal a{2, 3};
  Ordinal same = ord_add(a, Ordinal{0, 0});
  CHECK(same.q == 2);
  CHECK(same.r == 3);
  Ordinal absorbed = ord_add(Ordinal{0, 1}, Ordinal{1, 0});
  CHECK(absorbed.q == 1);
  CHECK(absorbed.r == 0);
  CHECK(to_string(absorbed) == "w");
  CHECK(to_string(ord_add(Ordinal{1, 0}, Ordinal{1, 2})) == "w*2+2");
  CHECK_THROWS_AS(ord_add(Ordinal{0x7fffffffu, 0}, Ordinal{1, 0}), NotRepresentable);
}

TEST_CASE("countably generated functions dispatch on level") {
  Session s = tag_session();
  Magma w = pr(atom_ideal({tag_atom(2, 0)}));
  CountGenFun constant(s, {}, TailRule::Constant, w);
  CHECK(equal(constant.apply(nat(s, 3, NatVariant::Alt).value), w));
  CHECK(equal(constant.apply(random_submagma(nat(s, 2, NatVariant::Alt).value, 5)), w));
  CHECK_THROWS_AS(constant.apply(pr_iter(2, s.a0)), NotInDomain);  // that is 0
  CHECK_THROWS_AS(constant.apply(pr(atom_ideal({tag_atom(3, 0)}))), NotInDomain);

  std::vector<Magma> prefix{pr(atom_ideal({tag_atom(2, 0)})), pr(atom_ideal({tag_atom(3, 0)}))};
  CountGenFun tower(s, prefix, TailRule::PrTower);
  CHECK(equal(tower.generator(2), prefix[1]));
  CHECK(equal(tower.generator(4), pr_iter(2, prefix[1])));
  CHECK(equal(tower.apply(nat(s, 4, NatVariant::Alt).value), pr_iter(2, prefix[1])));

  CountGenFun cyc(s, prefix, TailRule::Shift);
  CHECK(equal(cyc.generator(3), prefix[0]));
  CHECK(equal(cyc.generator(4), prefix[1]));
  CHECK_THROWS_AS(cyc.generator(0), NotInDomain);
  CHECK_THROWS_AS(CountGenFun(s, {}, TailRule::PrTower), MagmaError);
  CHECK_THROWS_AS(CountGenFun(s, {}, TailRule::Constant), MagmaError);
}
