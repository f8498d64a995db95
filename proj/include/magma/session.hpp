#pragma once

#include "magma/atom.hpp"
#include "magma/magma.hpp"

namespace magma {

// Pair-dependent constructions are relative to a fixed incomparable atom
// pair (a0, a1), chosen once per session. Pairs built under different seeds
// are not comparable; same_seeds() guards the few places that mix sessions.
struct Session {
  Domain domain;
  Atom a0;
  Atom a1;

  // pr(a0), pr(a1) and their second iterates; every pair construction uses
  // these, so they are built once.
  Magma pr_a0;
  Magma pr_a1;
  Magma pr2_a0;
  Magma pr2_a1;

  static Session make(Domain d);                       // SeedsUnavailable for QDup
  static Session make(Domain d, Atom a0, Atom a1);     // custom seeds, must be incomparable
};

bool same_seeds(const Session& s, const Session& t);

}  // namespace magma
