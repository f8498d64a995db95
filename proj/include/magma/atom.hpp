#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "magma/rational.hpp"
#include "magma/rng.hpp"

namespace magma {

// The three shipped atom preorders. Each is decidable, has no minimal
// elements, and covers a distinct corner of behavior:
//   Tag    - tags x integers, per-tag linear order; distinct tags are
//            incomparable, so principal ideals over them are disjoint.
//   Plane  - Z^2 under componentwise order; a lattice, every pair of atoms
//            has a meet.
//   QDup   - rationals x {0,1} ordered by the rational alone; (q,0) ~ (q,1)
//            gives nontrivial equivalence classes. Totally preordered, so
//            it has no incomparable seed pair.
enum class Domain : std::uint8_t { Tag = 0, Plane = 1, QDup = 2 };

const char* domain_name(Domain d);
Domain domain_from_name(const std::string& name);

struct Atom {
  Domain domain = Domain::Tag;
  // Tag:   a = tag, b = value
  // Plane: a = x,   b = y
  std::int64_t a = 0;
  std::int64_t b = 0;
  // QDup only:
  Rational q;
  std::uint8_t copy = 0;
};

Atom tag_atom(std::int64_t tag, std::int64_t value);
Atom plane_atom(std::int64_t x, std::int64_t y);
Atom qdup_atom(Rational q, std::uint8_t copy);

// The preorder. Throws DomainMismatch across domains.
bool atom_leq(const Atom& x, const Atom& y);

// Same-domain preorder test that treats cross-domain atoms as incomparable
// instead of failing; the kernel compares generators with this.
bool atom_below(const Atom& x, const Atom& y);

bool atom_equiv(const Atom& x, const Atom& y);

// Some atom strictly below the argument; iterating it descends forever.
Atom strictly_below(const Atom& x);

// Finite cover of the common lower bounds: c <= x and c <= y iff c <= l for
// some l in the result. May be empty (Tag atoms with distinct tags).
std::vector<Atom> common_lower_bounds(const Atom& x, const Atom& y);

Atom canonical_rep(const Atom& x);

// The distinguished incomparable pair (a0, a1). Throws SeedsUnavailable for
// QDup, whose preorder is total.
std::pair<Atom, Atom> domain_seeds(Domain d);

// Bounded-window sample used by generators and property suites.
Atom random_atom(Domain d, Rng& rng);

// Total order: (domain, payload lexicographic). Canonical generator order.
int compare(const Atom& x, const Atom& y);
bool atom_identical(const Atom& x, const Atom& y);

// Literal syntax, e.g. "(at tag 0 3)", "(at plane 1 2)", "(at qdup 1/2 0)".
std::string to_string(const Atom& x);

}  // namespace magma
