#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "magma/atom.hpp"

namespace magma {

// Position in the level hierarchy, written w*q + r. Finite levels have
// q = 0. Comparison is lexicographic on (q, r).
struct Level {
  std::uint32_t q = 0;
  std::uint32_t r = 0;
};

int compare(Level x, Level y);
bool operator==(Level x, Level y);
std::string to_string(Level l);

enum class Kind : std::uint8_t { AtomIdeal = 0, MagmaIdeal = 1 };

// A finitely generated magma in canonical form: a nonempty antichain of
// generators (atoms of one domain, or magmas), sorted by the canonical
// order. The value denotes the union of the generators' down-sets; the
// canonical form is the unique presentation of that denotation by maximal
// generators. Immutable and cheap to copy (shared node).
class Magma {
 public:
  Kind kind() const;
  const std::vector<Atom>& atom_gens() const;
  const std::vector<Magma>& magma_gens() const;
  std::size_t gen_count() const;
  Level level() const;
  // Node identity; stable key for memo tables. Identical pointers imply
  // equal magmas, never the converse.
  const void* id() const;

 private:
  struct Node;
  explicit Magma(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend Magma atom_ideal(std::vector<Atom> atoms);
  friend Magma magma_ideal(std::vector<Magma> gens);
};

// Canonical ideal of a nonempty atom set (one domain). Dominated and
// equivalent atoms are removed.
Magma atom_ideal(std::vector<Atom> atoms);

// Canonical ideal of a nonempty magma set. Dominated generators are removed.
Magma magma_ideal(std::vector<Magma> gens);

// Least magma containing the argument: the principal ideal.
Magma pr(const Atom& a);
Magma pr(const Magma& x);
// pr applied n times to an atom (n >= 1) or a magma (n >= 0).
Magma pr_iter(unsigned n, const Atom& a);
Magma pr_iter(unsigned n, const Magma& x);

// Denotation inclusion. Kinds must match and every generator of x must sit
// below some generator of y.
bool subset(const Magma& x, const Magma& y);

// Mutual inclusion; coincides with identity of canonical forms.
bool equal(const Magma& x, const Magma& y);

// Element-of. An atom can only be an element of an AtomIdeal, a magma only
// of a MagmaIdeal.
bool member(const Atom& z, const Magma& x);
bool member(const Magma& z, const Magma& x);

// Union of two magmas of the same kind. A union across kinds is not a
// magma; throws KindMismatch.
Magma unite(const Magma& x, const Magma& y);

// Greatest common submagma, or nullopt when the denotations are disjoint
// (the empty set is not a magma).
std::optional<Magma> intersect(const Magma& x, const Magma& y);

// Total structural order: (kind, level, generator list lexicographic).
// Zero iff the canonical forms are identical.
int compare(const Magma& x, const Magma& y);

// Canonical serialization: "(ai <atom>...)" / "(mi <magma>...)".
std::string to_string(const Magma& x);

// Deterministic generator-tree sample: depth <= depth, at most width
// generators per node.
Magma random_magma(Domain d, unsigned depth, unsigned width, std::uint64_t seed);
Magma random_magma(Domain d, unsigned depth, unsigned width, Rng& rng);

// Strict random submagma: subset(result, x) and !equal(result, x).
Magma random_submagma(const Magma& x, std::uint64_t seed);
Magma random_submagma(const Magma& x, Rng& rng);

// Structural audit used by tests: sortedness, antichain property, kind and
// domain purity, canonical atom payloads, level consistency. Throws
// MagmaError on any violation.
void validate_canonical(const Magma& x);

}  // namespace magma
