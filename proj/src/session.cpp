#include "magma/session.hpp"

#include "magma/errors.hpp"

namespace magma {

Session Session::make(Domain d) {
  auto [a0, a1] = domain_seeds(d);
  return make(d, a0, a1);
}

Session Session::make(Domain d, Atom a0, Atom a1) {
  if (a0.domain != d || a1.domain != d)
    throw DomainMismatch("session seeds must come from the session domain");
  if (atom_below(a0, a1) || atom_below(a1, a0))
    throw SeedsUnavailable("session seeds must be incomparable");
  Session s{d, canonical_rep(a0), canonical_rep(a1), pr(a0), pr(a1),
            pr_iter(2, a0), pr_iter(2, a1)};
  return s;
}

bool same_seeds(const Session& s, const Session& t) {
  return s.domain == t.domain && atom_identical(s.a0, t.a0) && atom_identical(s.a1, t.a1);
}

}  // namespace magma
