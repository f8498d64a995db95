#include "magma/atom.hpp"

#include <algorithm>

#include "magma/errors.hpp"

namespace magma {

const char* domain_name(Domain d) {
  switch (d) {
    case Domain::Tag: return "tag";
    case Domain::Plane: return "plane";
    case Domain::QDup: return "qdup";
  }
  return "?";
}

Domain domain_from_name(const std::string& name) {
  if (name == "tag") return Domain::Tag;
  if (name == "plane") return Domain::Plane;
  if (name == "qdup") return Domain::QDup;
  throw DomainMismatch("unknown domain: " + name);
}

Atom tag_atom(std::int64_t tag, std::int64_t value) {
  Atom a;
  a.domain = Domain::Tag;
  a.a = tag;
  a.b = value;
  return a;
}

Atom plane_atom(std::int64_t x, std::int64_t y) {
  Atom a;
  a.domain = Domain::Plane;
  a.a = x;
  a.b = y;
  return a;
}

Atom qdup_atom(Rational q, std::uint8_t copy) {
  Atom a;
  a.domain = Domain::QDup;
  a.q = q;
  a.copy = copy;
  return a;
}

bool atom_leq(const Atom& x, const Atom& y) {
  if (x.domain != y.domain)
    throw DomainMismatch(std::string("leq across domains: ") + domain_name(x.domain) +
                         " vs " + domain_name(y.domain));
  switch (x.domain) {
    case Domain::Tag: return x.a == y.a && x.b <= y.b;
    case Domain::Plane: return x.a <= y.a && x.b <= y.b;
    case Domain::QDup: return x.q <= y.q;
  }
  return false;
}

bool atom_below(const Atom& x, const Atom& y) {
  return x.domain == y.domain && atom_leq(x, y);
}

bool atom_equiv(const Atom& x, const Atom& y) {
  return atom_below(x, y) && atom_below(y, x);
}

Atom strictly_below(const Atom& x) {
  switch (x.domain) {
    case Domain::Tag: return tag_atom(x.a, x.b - 1);
    case Domain::Plane: return plane_atom(x.a - 1, x.b - 1);
    case Domain::QDup: return qdup_atom(x.q - Rational(1, 2), 0);
  }
  return x;
}

std::vector<Atom> common_lower_bounds(const Atom& x, const Atom& y) {
  if (x.domain != y.domain)
    throw DomainMismatch("common_lower_bounds across domains");
  switch (x.domain) {
    case Domain::Tag:
      if (x.a != y.a) return {};
      return {tag_atom(x.a, std::min(x.b, y.b))};
    case Domain::Plane:
      // Componentwise min is the lattice meet.
      return {plane_atom(std::min(x.a, y.a), std::min(x.b, y.b))};
    case Domain::QDup:
      return {canonical_rep(x.q <= y.q ? x : y)};
  }
  return {};
}

Atom canonical_rep(const Atom& x) {
  if (x.domain == Domain::QDup) return qdup_atom(x.q, 0);
  return x;
}

std::pair<Atom, Atom> domain_seeds(Domain d) {
  switch (d) {
    case Domain::Tag: return {tag_atom(0, 0), tag_atom(1, 0)};
    case Domain::Plane: return {plane_atom(0, 1), plane_atom(1, 0)};
    case Domain::QDup:
      throw SeedsUnavailable("qdup is totally preordered: no incomparable seed pair");
  }
  throw SeedsUnavailable("unknown domain");
}

Atom random_atom(Domain d, Rng& rng) {
  switch (d) {
    case Domain::Tag: return tag_atom(rng.range(0, 2), rng.range(-8, 8));
    case Domain::Plane: return plane_atom(rng.range(-6, 6), rng.range(-6, 6));
    case Domain::QDup:
      return qdup_atom(Rational(rng.range(-8, 8), rng.range(1, 4)),
                       static_cast<std::uint8_t>(rng.below(2)));
  }
  return tag_atom(0, 0);
}

namespace {
int cmp64(std::int64_t l, std::int64_t r) { return l < r ? -1 : (l > r ? 1 : 0); }
}  // namespace

int compare(const Atom& x, const Atom& y) {
  if (x.domain != y.domain)
    return static_cast<int>(x.domain) < static_cast<int>(y.domain) ? -1 : 1;
  switch (x.domain) {
    case Domain::Tag:
    case Domain::Plane: {
      if (int c = cmp64(x.a, y.a)) return c;
      return cmp64(x.b, y.b);
    }
    case Domain::QDup: {
      if (int c = compare(x.q, y.q)) return c;
      return cmp64(x.copy, y.copy);
    }
  }
  return 0;
}

bool atom_identical(const Atom& x, const Atom& y) { return compare(x, y) == 0; }

std::string to_string(const Atom& x) {
  switch (x.domain) {
    case Domain::Tag:
      return "(at tag " + std::to_string(x.a) + " " + std::to_string(x.b) + ")";
    case Domain::Plane:
      return "(at plane " + std::to_string(x.a) + " " + std::to_string(x.b) + ")";
    case Domain::QDup:
      return "(at qdup " + to_string(x.q) + " " + std::to_string(x.copy) + ")";
  }
  return "(at ?)";
}

}  // namespace magma
