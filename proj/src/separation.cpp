#include "magma/separation.hpp"

#include "magma/errors.hpp"
#include "magma/pair.hpp"
#include "magma/rng.hpp"

namespace magma {

ClassDescriptor mk_class(std::vector<Magma> roots) {
  if (roots.empty()) throw EmptyGenerators("mk_class: no roots");
  return ClassDescriptor{std::move(roots)};
}

bool class_contains(const ClassDescriptor& c, const Magma& x) {
  for (const Magma& r : c.roots)
    if (subset(x, r)) return true;
  return false;
}

bool class_contains(const ClassDescriptor& c, const Atom& x) {
  for (const Magma& r : c.roots)
    if (member(x, r)) return true;
  return false;
}

std::optional<Magma> separate(const ClassDescriptor& c, const Magma& u) {
  std::vector<Magma> parts;
  if (u.kind() == Kind::AtomIdeal) {
    for (const Magma& r : c.roots)
      if (r.kind() == Kind::AtomIdeal)
        if (auto m = intersect(r, u)) parts.push_back(std::move(*m));
    if (parts.empty()) return std::nullopt;
    Magma acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = unite(acc, parts[i]);
    return acc;
  }
  for (const Magma& r : c.roots)
    for (const Magma& g : u.magma_gens())
      if (auto m = intersect(r, g)) parts.push_back(std::move(*m));
  if (parts.empty()) return std::nullopt;
  return magma_ideal(std::move(parts));
}

SamplerVerdict refute_closure(Domain d, const std::function<bool(const Magma&)>& pred,
                              unsigned budget, std::uint64_t seed,
                              const std::vector<Magma>& hints) {
  Rng rng(seed);
  bool pairable = d != Domain::QDup;
  Session s = pairable ? Session::make(d) : Session::make(Domain::Tag);
  SamplerVerdict verdict;
  for (unsigned k = 0; k < budget; ++k) {
    verdict.budget_used = k + 1;
    Magma x = [&]() -> Magma {
      if (!hints.empty() && rng.chance(20)) return hints[rng.below(hints.size())];
      switch (rng.below(pairable ? 3 : 2)) {
        case 0: return random_magma(d, 1 + static_cast<unsigned>(rng.below(3)), 3, rng);
        case 1: return pr_iter(1 + static_cast<unsigned>(rng.below(3)),
                               random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng));
        default:
          return mk_pair(s, random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng),
                         random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng))
              .whole;
      }
    }();
    if (!pred(x)) continue;
    for (int t = 0; t < 3; ++t) {
      Magma y = random_submagma(x, rng);
      if (!pred(y)) {
        verdict.refuted = true;
        verdict.holder = x;
        verdict.violator = y;
        return verdict;
      }
    }
  }
  return verdict;
}

namespace {

// Two incomparable strict sub-elements of an atom, where the domain has
// them. Tag values under one tag form a chain; QDup is total.
std::optional<std::pair<Atom, Atom>> incomparable_below(const Atom& a) {
  if (a.domain == Domain::Plane)
    return std::make_pair(plane_atom(a.a - 1, a.b), plane_atom(a.a, a.b - 1));
  return std::nullopt;
}

// Two incomparable strict submagmas of x, or nothing when every pair of
// submagmas of this shape is comparable.
std::optional<std::pair<Magma, Magma>> incomparable_strict_subs(const Magma& x) {
  if (x.kind() == Kind::AtomIdeal) {
    const auto& atoms = x.atom_gens();
    if (atoms.size() >= 2)
      return std::make_pair(atom_ideal({atoms[0]}), atom_ideal({atoms[1]}));
    if (auto below = incomparable_below(atoms.front()))
      return std::make_pair(atom_ideal({below->first}), atom_ideal({below->second}));
    return std::nullopt;
  }
  const auto& gens = x.magma_gens();
  if (gens.size() >= 2)
    return std::make_pair(magma_ideal({gens[0]}), magma_ideal({gens[1]}));
  if (auto sub = incomparable_strict_subs(gens.front()))
    return std::make_pair(magma_ideal({sub->first}), magma_ideal({sub->second}));
  return std::nullopt;
}

ReplacementWitness witness_from(const Magma& base, const Magma& p1, const Magma& p2) {
  Magma offending = unite(p1, p2);
  ReplacementWitness w{base, p1, p2, offending,
                       "the image of a magma under x -> pr(x) would have to contain " +
                           to_string(offending) +
                           ", which has two maximal generators and is no principal ideal"};
  return w;
}

}  // namespace

ReplacementWitness replacement_pr_witness(const Magma& u) {
  if (u.kind() == Kind::AtomIdeal) {
    // Elements of u are atoms, so the offending submagma must split below a
    // single generator atom.
    for (const Atom& a : u.atom_gens())
      if (auto below = incomparable_below(a))
        return witness_from(pr(a), pr(below->first), pr(below->second));
    throw NoIncomparableSubmagmas(
        "replacement_pr_witness: no generator atom has incomparable strict sub-atoms");
  }
  for (const Magma& g : u.magma_gens()) {
    if (auto sub = incomparable_strict_subs(g))
      return witness_from(pr(g), pr(sub->first), pr(sub->second));
  }
  throw NoIncomparableSubmagmas(
      "replacement_pr_witness: no generator has incomparable strict submagmas");
}

bool verify(const ReplacementWitness& w) {
  if (!subset(w.part1, w.base) || !subset(w.part2, w.base)) return false;
  if (subset(w.part1, w.part2) || subset(w.part2, w.part1)) return false;
  if (!subset(w.offending, w.base)) return false;
  if (w.offending.gen_count() != 2) return false;
  if (equal(w.offending, w.part1) || equal(w.offending, w.part2)) return false;
  return true;
}

CompletionWitness completion_not_functional_demo(const Session& s) {
  Magma x = s.pr_a0;
  Magma y = pr(x);
  Magma y1 = pr(atom_ideal({strictly_below(s.a0)}));
  Magma pair_full = mk_pair(s, x, y).whole;
  Magma pair_sub = mk_pair(s, x, y1).whole;
  return CompletionWitness{
      x, y, y1, pair_full, pair_sub,
      "the completed graph of x -> pr(x) relates " + to_string(x) + " to both " +
          to_string(y) + " and " + to_string(y1)};
}

bool verify(const Session& s, const CompletionWitness& w) {
  (void)s;
  if (!subset(w.sub_image, w.image) || equal(w.sub_image, w.image)) return false;
  if (!subset(w.pair_sub, w.pair_full)) return false;
  if (equal(w.pair_sub, w.pair_full)) return false;
  return true;
}

}  // namespace magma
