#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "magma/magma.hpp"
#include "magma/session.hpp"

namespace magma {

// A root-generated definable class: the down-closure of finitely many
// magmas. Closed under submagmas by construction, so separation with any
// magma stays inside the universe.
struct ClassDescriptor {
  std::vector<Magma> roots;  // nonempty
};

ClassDescriptor mk_class(std::vector<Magma> roots);  // EmptyGenerators

bool class_contains(const ClassDescriptor& c, const Magma& x);
// Atom membership: an atom lies in the class closure iff it is an element
// of some atom-ideal root.
bool class_contains(const ClassDescriptor& c, const Atom& x);

// The separation instance X n u: the magma generated by the pairwise
// intersections of roots with u's generators, or nullopt when every
// intersection is empty (the separation premise fails). For an atom-ideal
// u the class meets it in atoms, so the result is the atom-level
// intersection with the atom-ideal roots.
std::optional<Magma> separate(const ClassDescriptor& c, const Magma& u);

// Refutation sampling for the closure condition "P(x) and y below x imply
// P(y)". Never claims closure holds; either finds a witness or runs out of
// budget. Hints are extra sample candidates, typically the predicate's own
// parameters: a predicate like "equals y0" is only ever refuted at a holder,
// and blind sampling may never land on one.
struct SamplerVerdict {
  bool refuted = false;
  std::optional<Magma> holder;      // x with P(x)
  std::optional<Magma> violator;    // y below x with !P(y)
  unsigned budget_used = 0;
};

SamplerVerdict refute_closure(Domain d, const std::function<bool(const Magma&)>& pred,
                              unsigned budget, std::uint64_t seed,
                              const std::vector<Magma>& hints = {});

// Constructive failure of replacement for the image map x -> pr(x): inside
// pr(pr(x)) sits the union of two incomparable principal ideals, which is
// not principal, so the image of u cannot be a magma.
struct ReplacementWitness {
  Magma base;        // pr of the chosen generator of u
  Magma part1;       // principal ideal of the first strict sub-element
  Magma part2;       // principal ideal of the second, incomparable to part1
  Magma offending;   // part1 u part2: below base, two maximal generators
  std::string description;
};

ReplacementWitness replacement_pr_witness(const Magma& u);  // NoIncomparableSubmagmas

// Verifies the witness facts through the kernel only; false means the
// construction is broken.
bool verify(const ReplacementWitness& w);

// The completion of the graph of x -> pr(x) relates x to pr(x) and to
// every submagma of pr(x): two distinct verified images.
struct CompletionWitness {
  Magma input;        // x
  Magma image;        // y = pr(x)
  Magma sub_image;    // y1, a strict submagma of y
  Magma pair_full;    // <<x, y>>
  Magma pair_sub;     // <<x, y1>>, a submagma of pair_full
  std::string description;
};

CompletionWitness completion_not_functional_demo(const Session& s);
bool verify(const Session& s, const CompletionWitness& w);

}  // namespace magma
