#pragma once

#include <optional>
#include <vector>

#include "magma/magma.hpp"
#include "magma/session.hpp"

namespace magma {

// Two concrete encodings of the naturals over the seed a0:
//   Primary: 0 = pr2(a0), n+1 = n u pr(n)        (ordered by strict inclusion)
//   Alt:     n = pr^{n+2}(a0)                    (pairwise disjoint)
enum class NatVariant { Primary, Alt };

struct MagNat {
  unsigned n = 0;
  NatVariant variant = NatVariant::Primary;
  Magma value;
};

constexpr unsigned kDefaultNatCap = 8;

MagNat nat(const Session& s, unsigned n, NatVariant v, unsigned cap = kDefaultNatCap);

// Order on Primary naturals, decided on the magmas themselves: strict
// inclusion of values. Throws VariantMismatch off the Primary variant.
bool ord_less(const MagNat& a, const MagNat& b);

// Whether the Alt encodings of m and n have disjoint denotations; true
// exactly for m != n.
bool alt_disjoint(const Session& s, unsigned m, unsigned n, unsigned cap = kDefaultNatCap);

// Symbolic ordinal notation below w^2 (reuses Level: w*q + r).
using Ordinal = Level;

// Ordinal addition on notations; agrees with the concrete successor
// recursion on finite values. Throws NotRepresentable on overflow.
Ordinal ord_add(Ordinal a, Ordinal b);

// Countably generated magma given as a total stream n -> y_n (n >= 1):
// an explicit prefix plus one closed tail rule.
enum class TailRule {
  Constant,  // y_n = tail value beyond the prefix
  PrTower,   // y_n = pr(y_{n-1}) beyond the prefix
  Shift,     // the prefix repeats cyclically
};

// Represents F = union of pr(<<n, y_n>>) over n >= 1, with n the Alt
// naturals. The Alt encodings are pairwise disjoint, so F is a function;
// application dispatches on the level of the argument.
class CountGenFun {
 public:
  CountGenFun(Session s, std::vector<Magma> prefix, TailRule tail,
              std::optional<Magma> tail_value = std::nullopt,
              unsigned cap = kDefaultNatCap);

  const Session& session() const { return session_; }
  TailRule tail() const { return tail_; }
  unsigned cap() const { return cap_; }

  // y_n for n >= 1.
  Magma generator(unsigned n) const;

  // The greatest image of z under F. The only candidate input containing z
  // is the Alt natural at z's level; NotInDomain when that fails (that
  // covers 0, whose level is below every domain element's).
  Magma apply(const Magma& z) const;

 private:
  Session session_;
  std::vector<Magma> prefix_;
  TailRule tail_;
  std::optional<Magma> tail_value_;
  unsigned cap_;
};

}  // namespace magma
