#include "magma/suites.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "magma/errors.hpp"
#include "magma/magma.hpp"
#include "magma/oracle.hpp"
#include "magma/ordinal.hpp"
#include "magma/pair.hpp"
#include "magma/relation.hpp"
#include "magma/rng.hpp"
#include "magma/separation.hpp"
#include "magma/session.hpp"

namespace magma {

namespace {

constexpr Domain kAllDomains[] = {Domain::Tag, Domain::Plane, Domain::QDup};
constexpr Domain kPairDomains[] = {Domain::Tag, Domain::Plane};

struct Prop {
  explicit Prop(std::string n) : res{std::move(n), true, 0, {}, {}} {}
  PropertyResult res;

  void expect(bool ok, const std::function<std::string()>& witness) {
    ++res.checked;
    if (ok) return;
    res.pass = false;
    if (res.counterexamples.size() < 3) res.counterexamples.push_back(witness());
  }
  void expect(bool ok, const std::string& witness) {
    expect(ok, [&] { return witness; });
  }
  void note(const std::string& text) { res.notes.push_back(text); }
};

struct SuiteBuilder {
  std::vector<PropertyResult> props;
  Prop* begin(const std::string& name) {
    store.emplace_back(name);
    return &store.back();
  }
  std::vector<PropertyResult> finish() {
    for (const Prop& p : store) props.push_back(p.res);
    return props;
  }
  std::deque<Prop> store;
};

unsigned pick_cases(const SuiteContext& ctx, unsigned fallback) {
  return ctx.cases ? ctx.cases : fallback;
}

std::vector<Domain> domains_for(const SuiteContext& ctx, bool pair_capable_only) {
  if (ctx.domain_set) {
    if (pair_capable_only && ctx.domain == Domain::QDup) return {};
    return {ctx.domain};
  }
  if (pair_capable_only) return {std::begin(kPairDomains), std::end(kPairDomains)};
  return {std::begin(kAllDomains), std::end(kAllDomains)};
}

// A magma of the same kind as base, for union-building.
Magma fresh_same_kind(const Magma& base, Domain d, Rng& rng) {
  if (base.kind() == Kind::AtomIdeal) return random_magma(d, 1, 3, rng);
  std::vector<Magma> gens;
  unsigned k = 1 + static_cast<unsigned>(rng.below(2));
  for (unsigned i = 0; i < k; ++i)
    gens.push_back(random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng));
  return magma_ideal(std::move(gens));
}

// Sample related to base often enough for inclusion laws to fire both ways.
Magma related_magma(const Magma& base, Domain d, Rng& rng) {
  switch (rng.below(4)) {
    case 0: return base;
    case 1: return random_submagma(base, rng);
    case 2: return unite(base, fresh_same_kind(base, d, rng));
    default: return random_magma(d, 1 + static_cast<unsigned>(rng.below(3)), 3, rng);
  }
}

std::string quad_witness(const Magma& a, const Magma& b, const Magma& c, const Magma& d) {
  return "(case= " + to_string(a) + " " + to_string(b) + " " + to_string(c) + " " +
         to_string(d) + ")";
}

std::string print_relation_witness(const Relation& r) {
  std::string s = "(rel (";
  for (std::size_t i = 0; i < r.intended().size(); ++i) {
    if (i) s += ' ';
    s += "(" + to_string(r.intended()[i].first) + " " + to_string(r.intended()[i].second) + ")";
  }
  return s + "))";
}

// ---------------------------------------------------------------------------
// atom-domains

std::vector<PropertyResult> suite_atom_preorder(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 1000);
  for (Domain d : domains_for(ctx, false)) {
    Rng rng(ctx.seed ^ static_cast<std::uint64_t>(d));
    Prop* refl = sb.begin(std::string(domain_name(d)) + "/reflexive");
    Prop* trans = sb.begin(std::string(domain_name(d)) + "/transitive");
    for (unsigned i = 0; i < n; ++i) {
      Atom a = random_atom(d, rng);
      refl->expect(atom_leq(a, a), to_string(a));
      // Random triples plus constructed chains; random triples alone rarely
      // line up.
      Atom b = rng.chance(50) ? strictly_below(a) : random_atom(d, rng);
      Atom c = rng.chance(50) ? strictly_below(b) : random_atom(d, rng);
      if (atom_leq(a, b) && atom_leq(b, c))
        trans->expect(atom_leq(a, c), to_string(a) + " " + to_string(b) + " " + to_string(c));
    }
    Prop* desc = sb.begin(std::string(domain_name(d)) + "/descending-chain");
    for (unsigned i = 0; i < std::min(n, 200u); ++i) {
      Atom a = random_atom(d, rng);
      Atom cur = a;
      bool ok = true;
      for (int step = 0; step < 10; ++step) {
        Atom next = strictly_below(cur);
        if (!(atom_leq(next, cur) && !atom_leq(cur, next))) { ok = false; break; }
        cur = next;
      }
      desc->expect(ok, to_string(a));
    }
  }
  return sb.finish();
}

std::vector<PropertyResult> suite_atom_meets(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 300);
  for (Domain d : domains_for(ctx, false)) {
    Rng rng(ctx.seed ^ (0x11u + static_cast<std::uint64_t>(d)));
    Prop* cover = sb.begin(std::string(domain_name(d)) + "/meet-cover");
    std::vector<Atom> grid;
    switch (d) {
      case Domain::Tag:
        for (int t = 0; t <= 2; ++t)
          for (int v = -8; v <= 8; ++v) grid.push_back(tag_atom(t, v));
        break;
      case Domain::Plane:
        for (int x = -6; x <= 6; ++x)
          for (int y = -6; y <= 6; ++y) grid.push_back(plane_atom(x, y));
        break;
      case Domain::QDup:
        for (int num = -8; num <= 8; ++num)
          for (int den = 1; den <= 4; ++den) grid.push_back(qdup_atom(Rational(num, den), 0));
        break;
    }
    for (unsigned i = 0; i < n; ++i) {
      Atom a = random_atom(d, rng);
      Atom b = random_atom(d, rng);
      std::vector<Atom> lb = common_lower_bounds(a, b);
      bool ok = true;
      for (const Atom& l : lb)
        if (compare(l, canonical_rep(l)) != 0) ok = false;
      for (const Atom& c : grid) {
        bool direct = atom_leq(c, a) && atom_leq(c, b);
        bool via = false;
        for (const Atom& l : lb)
          if (atom_leq(c, l)) { via = true; break; }
        if (direct != via) { ok = false; break; }
      }
      cover->expect(ok, to_string(a) + " " + to_string(b));
    }
  }
  Rng rng(ctx.seed ^ 0x22);
  Prop* disjoint = sb.begin("tag/cross-tag-empty");
  for (unsigned i = 0; i < n; ++i) {
    Atom a = tag_atom(0, rng.range(-8, 8));
    Atom b = tag_atom(1, rng.range(-8, 8));
    disjoint->expect(common_lower_bounds(a, b).empty(), to_string(a) + " " + to_string(b));
  }
  return sb.finish();
}

std::vector<PropertyResult> suite_atom_equivalence(const SuiteContext& ctx) {
  SuiteBuilder sb;
  Rng rng(ctx.seed ^ 0x33);
  unsigned n = pick_cases(ctx, 100);
  Prop* rep = sb.begin("qdup/canonical-rep-collapses-copies");
  Prop* ideals = sb.begin("qdup/pr-equal-iff-equiv");
  for (unsigned i = 0; i < n; ++i) {
    Rational q(rng.range(-8, 8), rng.range(1, 4));
    Atom a0 = qdup_atom(q, 0);
    Atom a1 = qdup_atom(q, 1);
    rep->expect(compare(canonical_rep(a0), canonical_rep(a1)) == 0,
                to_string(a0) + " " + to_string(a1));
    ideals->expect(equal(pr(a0), pr(a1)), to_string(a0) + " " + to_string(a1));
    ideals->expect(equal(atom_ideal({a0, a1}), atom_ideal({a0})), to_string(a1));
    Atom other = random_atom(Domain::QDup, rng);
    if (!atom_equiv(a0, other))
      ideals->expect(!equal(pr(a0), pr(other)), to_string(a0) + " " + to_string(other));
  }
  return sb.finish();
}

// ---------------------------------------------------------------------------
// magma-kernel

std::vector<PropertyResult> suite_canonical_form(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 2000);
  for (Domain d : domains_for(ctx, false)) {
    Rng rng(ctx.seed ^ (0x44u + static_cast<std::uint64_t>(d)));
    Prop* iff = sb.begin(std::string(domain_name(d)) + "/equal-iff-identical-serialization");
    Prop* valid = sb.begin(std::string(domain_name(d)) + "/constructions-canonical");
    for (unsigned i = 0; i < n; ++i) {
      Magma x = random_magma(d, 1 + static_cast<unsigned>(rng.below(3)), 3, rng);
      Magma y = [&] {
        switch (rng.below(3)) {
          case 0: return unite(x, random_submagma(x, rng));  // canonicalizes back to x
          case 1: {
            if (x.kind() == Kind::AtomIdeal) return atom_ideal(x.atom_gens());
            return magma_ideal(x.magma_gens());
          }
          default: return random_magma(d, 1 + static_cast<unsigned>(rng.below(3)), 3, rng);
        }
      }();
      iff->expect(equal(x, y) == (to_string(x) == to_string(y)),
                  to_string(x) + " vs " + to_string(y));
      try {
        validate_canonical(x);
        validate_canonical(y);
        valid->expect(true, "");
      } catch (const MagmaError& err) {
        valid->expect(false, std::string(err.what()) + ": " + to_string(x));
      }
    }
  }
  // All universe-enumerable magmas, pairwise.
  Prop* enumerated = sb.begin("universe/equal-iff-identical-serialization");
  FiniteUniverse u = FiniteUniverse::build(window_from_spec("tag:2x2"), 2);
  std::vector<Magma> pool;
  for (unsigned level = 1; level <= 2; ++level)
    for (std::uint32_t id : u.family(level)) pool.push_back(u.symbolic_of(id));
  for (const Magma& x : pool)
    for (const Magma& y : pool)
      enumerated->expect(equal(x, y) == (to_string(x) == to_string(y)),
                         to_string(x) + " vs " + to_string(y));
  return sb.finish();
}

std::vector<PropertyResult> suite_subset_laws(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 1000);
  for (Domain d : domains_for(ctx, false)) {
    Rng rng(ctx.seed ^ (0x55u + static_cast<std::uint64_t>(d)));
    Prop* refl = sb.begin(std::string(domain_name(d)) + "/reflexive");
    Prop* trans = sb.begin(std::string(domain_name(d)) + "/transitive");
    Prop* antisym = sb.begin(std::string(domain_name(d)) + "/antisymmetric-up-to-equal");
    for (unsigned i = 0; i < n; ++i) {
      Magma x = random_magma(d, 1 + static_cast<unsigned>(rng.below(3)), 3, rng);
      refl->expect(subset(x, x), to_string(x));
      Magma y = random_submagma(x, rng);
      Magma z = random_submagma(y, rng);
      trans->expect(subset(z, x), to_string(z) + " <= " + to_string(x));
      Magma w = related_magma(x, d, rng);
      if (subset(x, w) && subset(w, x))
        antisym->expect(equal(x, w) && to_string(x) == to_string(w),
                        to_string(x) + " vs " + to_string(w));
    }
  }
  return sb.finish();
}

std::vector<PropertyResult> suite_pr_embedding(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 500);
  for (Domain d : domains_for(ctx, false)) {
    Rng rng(ctx.seed ^ (0x66u + static_cast<std::uint64_t>(d)));
    Prop* inj = sb.begin(std::string(domain_name(d)) + "/pr-injective");
    Prop* emb = sb.begin(std::string(domain_name(d)) + "/pr-subset-embedding");
    Prop* self = sb.begin(std::string(domain_name(d)) + "/x-in-pr-x");
    Prop* atom_vs = sb.begin(std::string(domain_name(d)) + "/pr-atom-never-pr-magma");
    Prop* elem = sb.begin(std::string(domain_name(d)) + "/member-implies-pr-subset");
    for (unsigned i = 0; i < n; ++i) {
      Magma x = random_magma(d, 1 + static_cast<unsigned>(rng.below(3)), 3, rng);
      Magma y = related_magma(x, d, rng);
      inj->expect(equal(pr(x), pr(y)) == equal(x, y), to_string(x) + " vs " + to_string(y));
      emb->expect(subset(x, y) == subset(pr(x), pr(y)), to_string(x) + " vs " + to_string(y));
      self->expect(member(x, pr(x)), to_string(x));
      Atom a = random_atom(d, rng);
      atom_vs->expect(!equal(pr(a), pr(x)), to_string(a) + " vs " + to_string(x));
      // z in x implies pr(z) below x: pick z inside x.
      Magma z = random_submagma(x.kind() == Kind::AtomIdeal
                                    ? x
                                    : x.magma_gens()[rng.below(x.magma_gens().size())],
                                rng);
      if (x.kind() == Kind::MagmaIdeal) {
        elem->expect(member(z, x) && subset(pr(z), x), to_string(z) + " in " + to_string(x));
      }
    }
  }
  return sb.finish();
}

std::vector<PropertyResult> suite_union_legality(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 500);
  for (Domain d : domains_for(ctx, false)) {
    Rng rng(ctx.seed ^ (0x77u + static_cast<std::uint64_t>(d)));
    Prop* low = sb.begin(std::string(domain_name(d)) + "/atom-ideals-close-under-union");
    Prop* high = sb.begin(std::string(domain_name(d)) + "/magma-ideals-close-under-union");
    Prop* cross = sb.begin(std::string(domain_name(d)) + "/cross-kind-union-rejected");
    Prop* idem = sb.begin(std::string(domain_name(d)) + "/union-idempotent");
    for (unsigned i = 0; i < n; ++i) {
      Magma a1 = random_magma(d, 1, 3, rng);
      Magma a2 = random_magma(d, 1, 3, rng);
      Magma u = unite(a1, a2);
      low->expect(u.kind() == Kind::AtomIdeal && u.level() == Level{0, 1}, to_string(u));
      Magma m1 = pr_iter(1 + static_cast<unsigned>(rng.below(2)), a1);
      Magma m2 = pr_iter(1 + static_cast<unsigned>(rng.below(2)), a2);
      Magma v = unite(m1, m2);
      high->expect(v.kind() == Kind::MagmaIdeal && compare(v.level(), Level{0, 1}) > 0,
                   to_string(v));
      bool threw = false;
      try {
        unite(a1, m1);
      } catch (const KindMismatch&) {
        threw = true;
      }
      cross->expect(threw, to_string(a1) + " u " + to_string(m1));
      idem->expect(equal(unite(m1, m1), m1), to_string(m1));
    }
  }
  return sb.finish();
}

std::vector<PropertyResult> suite_two_one_laws(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 500);
  for (Domain d : domains_for(ctx, false)) {
    Rng rng(ctx.seed ^ (0x88u + static_cast<std::uint64_t>(d)));
    Prop* up = sb.begin(std::string(domain_name(d)) + "/union-below-principal");
    Prop* down = sb.begin(std::string(domain_name(d)) + "/principal-below-union");
    Prop* eq = sb.begin(std::string(domain_name(d)) + "/union-equals-principal");
    Prop* four = sb.begin(std::string(domain_name(d)) + "/union-below-union-four-cases");
    for (unsigned i = 0; i < n; ++i) {
      Magma x = random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 3, rng);
      Magma y = related_magma(x, d, rng);
      Magma z = related_magma(x, d, rng);
      up->expect(subset(unite(pr(x), pr(y)), pr(z)) == (subset(x, z) && subset(y, z)),
                 quad_witness(x, y, z, z));
      down->expect(subset(pr(z), unite(pr(x), pr(y))) == (subset(z, x) || subset(z, y)),
                   quad_witness(x, y, z, z));
      bool lhs = equal(unite(pr(x), pr(y)), pr(z));
      bool rhs = (subset(x, y) && equal(y, z)) || (subset(y, x) && equal(x, z));
      eq->expect(lhs == rhs, quad_witness(x, y, z, z));
      Magma x2 = related_magma(x, d, rng);
      Magma y2 = related_magma(y, d, rng);
      bool incl = subset(unite(pr(x), pr(y)), unite(pr(x2), pr(y2)));
      bool cases = (subset(x, x2) && subset(y, x2)) || (subset(x, y2) && subset(y, y2)) ||
                   (subset(x, x2) && subset(y, y2)) || (subset(x, y2) && subset(y, x2));
      four->expect(incl == cases, quad_witness(x, y, x2, y2));
    }
  }
  return sb.finish();
}

std::vector<PropertyResult> suite_union_equality_cases(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 500);
  for (Domain d : domains_for(ctx, false)) {
    Rng rng(ctx.seed ^ (0x99u + static_cast<std::uint64_t>(d)));
    Prop* fixed = sb.begin(std::string(domain_name(d)) + "/fixed-cases");
    Prop* sound = sb.begin(std::string(domain_name(d)) + "/classifier-sound");
    for (unsigned i = 0; i < std::min(n, 50u); ++i) {
      Magma x = random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 3, rng);
      Magma y = unite(x, fresh_same_kind(x, d, rng));  // so x and y are comparable-free? no: x <= y
      // (x, y, x, y) -> I
      fixed->expect(union2_equality_case(x, y, x, y).tag == UnionCaseTag::I,
                    quad_witness(x, y, x, y));
      // Incomparable pair -> II when swapped. Towers over the two seeds are
      // incomparable at every height; qdup has no incomparable magmas at all.
      if (d != Domain::QDup) {
        auto [s0, s1] = domain_seeds(d);
        unsigned lift = 1 + static_cast<unsigned>(rng.below(2));
        Magma p = unite(pr_iter(lift, s0), pr_iter(lift, random_atom(d, rng)));
        Magma q = pr_iter(lift, s1);
        if (!subset(p, q) && !subset(q, p)) {
          fixed->expect(union2_equality_case(p, q, q, p).tag == UnionCaseTag::II,
                        quad_witness(p, q, q, p));
        }
      }
      // (x, y', x, y'') with y', y'' strict submagmas -> III (both unions are pr(x)).
      Magma s1 = random_submagma(x, rng);
      Magma s2 = random_submagma(x, rng);
      if (!equal(s1, s2)) {
        UnionCase c = union2_equality_case(x, s1, x, s2);
        fixed->expect(c.tag == UnionCaseTag::III, quad_witness(x, s1, x, s2));
      }
    }
    for (unsigned i = 0; i < n; ++i) {
      Magma x = random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
      Magma y = related_magma(x, d, rng);
      Magma x2 = related_magma(x, d, rng);
      Magma y2 = related_magma(y, d, rng);
      UnionCase c = union2_equality_case(x, y, x2, y2);
      bool unions_equal = equal(unite(pr(x), pr(y)), unite(pr(x2), pr(y2)));
      bool ok = true;
      switch (c.tag) {
        case UnionCaseTag::Unequal: ok = !unions_equal; break;
        case UnionCaseTag::I: ok = unions_equal && equal(x, x2) && equal(y, y2); break;
        case UnionCaseTag::II: ok = unions_equal && equal(x, y2) && equal(y, x2); break;
        case UnionCaseTag::III: {
          const Magma& e = c.left_index == 0 ? x : y;
          const Magma& e2 = c.right_index == 0 ? x2 : y2;
          const Magma& o = c.left_index == 0 ? y : x;
          const Magma& o2 = c.right_index == 0 ? y2 : x2;
          ok = unions_equal && equal(e, e2) && subset(o, e) && subset(o2, e);
          break;
        }
      }
      sound->expect(ok, quad_witness(x, y, x2, y2));
    }
  }
  return sb.finish();
}

std::vector<PropertyResult> suite_intersect_glb(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 500);
  for (Domain d : domains_for(ctx, false)) {
    Rng rng(ctx.seed ^ (0xaau + static_cast<std::uint64_t>(d)));
    Prop* lower = sb.begin(std::string(domain_name(d)) + "/meet-is-lower-bound");
    Prop* greatest = sb.begin(std::string(domain_name(d)) + "/meet-is-greatest");
    Prop* laws = sb.begin(std::string(domain_name(d)) + "/idempotent-commutative");
    for (unsigned i = 0; i < n; ++i) {
      Magma x = random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 3, rng);
      Magma y = related_magma(x, d, rng);
      auto meet = intersect(x, y);
      if (meet) {
        lower->expect(subset(*meet, x) && subset(*meet, y),
                      to_string(x) + " ^ " + to_string(y));
      }
      Magma z = random_submagma(x, rng);
      if (subset(z, y)) {
        bool ok = meet.has_value() && subset(z, *meet);
        greatest->expect(ok, to_string(z) + " <= " + to_string(x) + "," + to_string(y));
      }
      laws->expect(intersect(x, x) && equal(*intersect(x, x), x), to_string(x));
      auto ab = intersect(x, y);
      auto ba = intersect(y, x);
      bool comm = ab.has_value() == ba.has_value() && (!ab || equal(*ab, *ba));
      laws->expect(comm, to_string(x) + " ^ " + to_string(y));
    }
  }
  // Seed towers stay disjoint at every depth.
  Prop* towers = sb.begin("tag/seed-towers-disjoint");
  Session s = Session::make(Domain::Tag);
  for (unsigned k = 1; k <= 4; ++k) {
    auto meet = intersect(pr_iter(k, s.a0), pr_iter(k, s.a1));
    towers->expect(!meet.has_value(), "pr^" + std::to_string(k));
  }
  Prop* plane = sb.begin("plane/principal-meet");
  auto pm = intersect(pr(plane_atom(0, 3)), pr(plane_atom(2, 1)));
  plane->expect(pm.has_value() && equal(*pm, pr(plane_atom(0, 1))),
                "(inter (pr (at plane 0 3)) (pr (at plane 2 1)))");
  return sb.finish();
}

std::vector<PropertyResult> suite_no_minimal(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 1000);
  for (Domain d : domains_for(ctx, false)) {
    Rng rng(ctx.seed ^ (0xbbu + static_cast<std::uint64_t>(d)));
    Prop* strict = sb.begin(std::string(domain_name(d)) + "/strict-submagma-always-exists");
    for (unsigned i = 0; i < n; ++i) {
      Magma x = random_magma(d, 1 + static_cast<unsigned>(rng.below(3)), 3, rng);
      Magma y = random_submagma(x, rng);
      strict->expect(subset(y, x) && !equal(y, x), to_string(y) + " < " + to_string(x));
    }
  }
  Rng rng(ctx.seed ^ 0xcc);
  Prop* dist = sb.begin("generator/depth-3-produces-both-kinds");
  unsigned atoms = 0, magmas = 0;
  for (unsigned i = 0; i < 1000; ++i) {
    Magma x = random_magma(Domain::Tag, 3, 3, rng);
    (x.kind() == Kind::AtomIdeal ? atoms : magmas) += 1;
  }
  dist->expect(atoms > 100 && magmas > 100,
               "atom-ideals " + std::to_string(atoms) + ", magma-ideals " + std::to_string(magmas));
  return sb.finish();
}

// ---------------------------------------------------------------------------
// pair-algebra

std::vector<PropertyResult> suite_pair_theorem(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 2000);
  for (Domain d : domains_for(ctx, true)) {
    Session s = Session::make(d);
    Rng rng(ctx.seed ^ (0xddu + static_cast<std::uint64_t>(d)));
    Prop* thm = sb.begin(std::string(domain_name(d)) + "/pair-equality-iff-componentwise");
    Prop* shape = sb.begin(std::string(domain_name(d)) + "/pair-has-two-maximal-generators");
    Prop* round = sb.begin(std::string(domain_name(d)) + "/extract-round-trip");
    for (unsigned i = 0; i < n; ++i) {
      Magma x = random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
      Magma y = related_magma(x, d, rng);
      Magma x2 = rng.chance(40) ? x : related_magma(x, d, rng);
      Magma y2 = rng.chance(40) ? y : related_magma(y, d, rng);
      Magma p = mk_pair(s, x, y).whole;
      Magma q = mk_pair(s, x2, y2).whole;
      thm->expect(equal(p, q) == (equal(x, x2) && equal(y, y2)), quad_witness(x, y, x2, y2));
      shape->expect(p.kind() == Kind::MagmaIdeal && p.magma_gens().size() == 2, to_string(p));
      auto [ex, ey] = extract_pair(s, p);
      round->expect(is_pair(s, p) && equal(ex, x) && equal(ey, y),
                    "(pair " + to_string(x) + " " + to_string(y) + ")");
    }
    Prop* same = sb.begin(std::string(domain_name(d)) + "/pair-of-equal-components");
    Magma x = random_magma(d, 2, 2, ctx.seed ^ 7);
    Magma p = mk_pair(s, x, x).whole;
    same->expect(p.magma_gens().size() == 2 && !equal(p.magma_gens()[0], p.magma_gens()[1]),
                 to_string(p));
  }
  return sb.finish();
}

std::vector<PropertyResult> suite_sub_pair(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 1000);
  for (Domain d : domains_for(ctx, true)) {
    Session s = Session::make(d);
    Rng rng(ctx.seed ^ (0xeeu + static_cast<std::uint64_t>(d)));
    Prop* law = sb.begin(std::string(domain_name(d)) + "/sub-pair-iff-componentwise");
    Prop* sub_extract = sb.begin(std::string(domain_name(d)) + "/sub-pair-extracts-sub-components");
    for (unsigned i = 0; i < n; ++i) {
      Magma x = random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
      Magma y = random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
      Magma x2 = related_magma(x, d, rng);
      Magma y2 = related_magma(y, d, rng);
      bool incl = subset(mk_pair(s, x2, y2).whole, mk_pair(s, x, y).whole);
      law->expect(incl == (subset(x2, x) && subset(y2, y)), quad_witness(x2, y2, x, y));
    }
    Magma x = random_magma(d, 2, 2, ctx.seed ^ 0x101);
    Magma y = random_magma(d, 2, 2, ctx.seed ^ 0x102);
    Magma xs = random_submagma(x, ctx.seed ^ 0x103);
    Magma ys = random_submagma(y, ctx.seed ^ 0x104);
    Magma sub = mk_pair(s, xs, ys).whole;
    auto [ex, ey] = extract_pair(s, sub);
    sub_extract->expect(subset(sub, mk_pair(s, x, y).whole) && equal(ex, xs) && equal(ey, ys) &&
                            !equal(ex, x) && !equal(ey, y),
                        quad_witness(xs, ys, x, y));
  }
  return sb.finish();
}

std::vector<PropertyResult> suite_collateral_non_pairs(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 300);
  for (Domain d : domains_for(ctx, true)) {
    Session s = Session::make(d);
    Rng rng(ctx.seed ^ (0x1ffu + static_cast<std::uint64_t>(d)));
    Prop* blocks = sb.begin(std::string(domain_name(d)) + "/tagged-blocks-are-non-pair-elements");
    for (unsigned i = 0; i < n; ++i) {
      Magma z = random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
      Magma w = random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
      Magma p = mk_pair(s, z, w).whole;
      Magma zs = rng.chance(50) ? z : random_submagma(z, rng);
      Magma ws = rng.chance(50) ? w : random_submagma(w, rng);
      Magma block0 = pr(unite(pr_iter(2, zs), s.pr2_a0));
      Magma block1 = pr(unite(pr_iter(2, ws), s.pr2_a1));
      bool ok = member(block0, pr(p)) && !is_pair(s, block0) && member(block1, pr(p)) &&
                !is_pair(s, block1);
      blocks->expect(ok, quad_witness(zs, ws, z, w));
    }
    Prop* lifted = sb.begin(std::string(domain_name(d)) + "/lifted-block-not-a-pair");
    Magma z = random_magma(d, 2, 2, ctx.seed ^ 0x111);
    lifted->expect(!is_pair(s, pr(unite(pr_iter(2, z), s.pr2_a0))), to_string(z));
    lifted->expect(!is_pair(s, pr(z)), to_string(pr(z)));
  }
  return sb.finish();
}

std::vector<PropertyResult> suite_tuples(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 300);
  for (Domain d : domains_for(ctx, true)) {
    Session s = Session::make(d);
    Rng rng(ctx.seed ^ (0x2ffu + static_cast<std::uint64_t>(d)));
    Prop* base = sb.begin(std::string(domain_name(d)) + "/tuple-base-is-pair");
    Prop* round = sb.begin(std::string(domain_name(d)) + "/tuple-round-trip");
    Prop* compwise = sb.begin(std::string(domain_name(d)) + "/tuple-equality-componentwise");
    for (unsigned i = 0; i < n; ++i) {
      std::size_t arity = 2 + rng.below(3);
      std::vector<Magma> xs;
      for (std::size_t k = 0; k < arity; ++k)
        xs.push_back(random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng));
      Magma t = mk_tuple(s, xs);
      if (arity == 2)
        base->expect(equal(t, mk_pair(s, xs[0], xs[1]).whole), to_string(t));
      std::vector<Magma> back = extract_tuple(s, t, arity);
      bool ok = back.size() == arity;
      for (std::size_t k = 0; ok && k < arity; ++k) ok = equal(back[k], xs[k]);
      round->expect(ok, to_string(t));
      std::vector<Magma> ys = xs;
      bool expect_eq = true;
      if (rng.chance(60)) {
        std::size_t at = rng.below(arity);
        Magma repl = related_magma(xs[at], d, rng);
        expect_eq = equal(repl, xs[at]);
        ys[at] = repl;
      }
      compwise->expect(equal(mk_tuple(s, ys), t) == expect_eq, to_string(t));
    }
  }
  return sb.finish();
}

// ---------------------------------------------------------------------------
// relation-algebra

std::vector<PropertyResult> suite_product_pairs(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned products = pick_cases(ctx, 100);
  constexpr unsigned kSamplesPerProduct = 500;
  for (Domain d : domains_for(ctx, true)) {
    Session s = Session::make(d);
    Rng rng(ctx.seed ^ (0x3ffu + static_cast<std::uint64_t>(d)));
    Prop* principal = sb.begin(std::string(domain_name(d)) + "/product-of-principals-is-pair-ideal");
    Prop* agree = sb.begin(std::string(domain_name(d)) + "/product-weak-product-same-pairs");
    Prop* bound = sb.begin(std::string(domain_name(d)) + "/intended-bounded-by-generator-grid");
    for (unsigned i = 0; i < products; ++i) {
      Magma u = random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
      Magma v = random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
      principal->expect(
          equal(product(s, pr(u), pr(v)).whole(), pr(mk_pair(s, u, v).whole)),
          "(prod (pr " + to_string(u) + ") (pr " + to_string(v) + "))");
      Magma x = pr_iter(1, random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng));
      if (rng.chance(50)) x = unite(x, pr(random_magma(d, 1, 2, rng)));
      Magma y = pr_iter(1, random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng));
      if (rng.chance(50)) y = unite(y, pr(random_magma(d, 1, 2, rng)));
      Relation r = product(s, x, y);
      WeakProduct wp = weak_product(x, y);
      bound->expect(r.intended().size() <= x.magma_gens().size() * y.magma_gens().size(),
                    "(prod " + to_string(x) + " " + to_string(y) + ")");
      for (unsigned k = 0; k < kSamplesPerProduct; ++k) {
        const Magma& gx = x.magma_gens()[rng.below(x.magma_gens().size())];
        const Magma& gy = y.magma_gens()[rng.below(y.magma_gens().size())];
        Magma z = rng.chance(60) ? random_submagma(gx, rng)
                                 : random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
        Magma w = rng.chance(60) ? random_submagma(gy, rng)
                                 : random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
        Magma p = mk_pair(s, z, w).whole;
        agree->expect(member(p, r.whole()) == weak_member(s, p, wp),
                      "(pair " + to_string(z) + " " + to_string(w) + ") in (prod " +
                          to_string(x) + " " + to_string(y) + ")");
      }
    }
  }
  return sb.finish();
}

std::vector<PropertyResult> suite_dom_ran(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 300);
  for (Domain d : domains_for(ctx, true)) {
    Session s = Session::make(d);
    Rng rng(ctx.seed ^ (0x4ffu + static_cast<std::uint64_t>(d)));
    Prop* single = sb.begin(std::string(domain_name(d)) + "/single-pair-dom-ran");
    Prop* inside = sb.begin(std::string(domain_name(d)) + "/submagmas-of-inputs-in-dom");
    Prop* outside = sb.begin(std::string(domain_name(d)) + "/fresh-inputs-not-in-dom");
    for (unsigned i = 0; i < n; ++i) {
      Magma z = random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
      Magma w = random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
      Relation r = mk_relation(s, {{z, w}});
      single->expect(equal(dom(r), pr(z)) && equal(ran(r), pr(w)),
                     "(rel ((" + to_string(z) + " " + to_string(w) + ")))");
      inside->expect(member(random_submagma(z, rng), dom(r)), to_string(z));
    }
    // Fresh-tag inputs are incomparable to everything over other tags.
    if (d == Domain::Tag) {
      for (unsigned i = 0; i < 50; ++i) {
        Relation r = mk_relation(
            s, {{atom_ideal({tag_atom(0, rng.range(-4, 4))}), pr(atom_ideal({tag_atom(2, 0)}))}});
        Magma fresh = atom_ideal({tag_atom(7, rng.range(-4, 4))});
        outside->expect(!member(fresh, dom(r)), to_string(fresh));
      }
    }
  }
  return sb.finish();
}

std::vector<PropertyResult> suite_classify(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 200);
  for (Domain d : domains_for(ctx, true)) {
    Session s = Session::make(d);
    Rng rng(ctx.seed ^ (0x5ffu + static_cast<std::uint64_t>(d)));
    Prop* intended = sb.begin(std::string(domain_name(d)) + "/intended-pairs-classify-intended");
    Prop* cpair = sb.begin(std::string(domain_name(d)) + "/sub-pairs-classify-collateral-pair");
    Prop* cnon = sb.begin(std::string(domain_name(d)) + "/blocks-classify-collateral-non-pair");
    Prop* closed = sb.begin(std::string(domain_name(d)) + "/sampled-elements-always-classified");
    for (unsigned i = 0; i < n; ++i) {
      Magma z = random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
      Magma w = random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
      Magma z2 = random_magma(d, 1, 2, rng);
      Magma w2 = random_magma(d, 1, 2, rng);
      Relation r = mk_relation(s, {{z, w}, {z2, w2}});
      intended->expect(classify(r, mk_pair(s, z, w).whole) == ElementClass::Intended,
                       to_string(z));
      Magma zs = random_submagma(z, rng);
      Magma ws = random_submagma(w, rng);
      Magma subp = mk_pair(s, zs, ws).whole;
      ElementClass c = classify(r, subp);
      bool sub_ok = c == ElementClass::CollateralPair ||
                    (c == ElementClass::Intended && equal(subp, mk_pair(s, z2, w2).whole));
      cpair->expect(sub_ok && subset(zs, z) && subset(ws, w), quad_witness(zs, ws, z, w));
      Magma blk = pr(unite(pr_iter(2, zs), s.pr2_a0));
      cnon->expect(classify(r, blk) == ElementClass::CollateralNonPair, to_string(zs));
      Magma elem = random_submagma(r.whole().magma_gens()[rng.below(r.whole().magma_gens().size())], rng);
      closed->expect(classify(r, elem) != ElementClass::NotElement, to_string(elem));
      if (d == Domain::Tag) {
        Magma fresh = pr(atom_ideal({tag_atom(9, 0)}));
        closed->expect(classify(r, fresh) == ElementClass::NotElement, to_string(fresh));
      }
    }
  }
  return sb.finish();
}

// Semifunction presentation with mixed overlap structure.
Relation random_semifunction(const Session& s, Domain d, Rng& rng, unsigned max_pairs) {
  unsigned n = 1 + static_cast<unsigned>(rng.below(max_pairs));
  Magma base_in = random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 3, rng);
  Magma base_out = random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 3, rng);
  std::vector<std::pair<Magma, Magma>> ps;
  for (unsigned i = 0; i < n; ++i) {
    Magma z = related_magma(base_in, d, rng);
    Magma w = related_magma(base_out, d, rng);
    bool clash = false;
    for (auto& [zi, wi] : ps)
      if (equal(zi, z)) { w = wi; clash = true; break; }
    (void)clash;
    ps.emplace_back(std::move(z), std::move(w));
  }
  return mk_relation(s, std::move(ps));
}

std::vector<Magma> domain_samples(const Relation& r, Rng& rng, unsigned count) {
  std::vector<Magma> zs;
  const auto& ps = r.intended();
  for (unsigned k = 0; k < count; ++k) {
    std::size_t i = rng.below(ps.size());
    switch (rng.below(4)) {
      case 0: zs.push_back(ps[i].first); break;
      case 1: zs.push_back(random_submagma(ps[i].first, rng)); break;
      default: {
        std::size_t j = rng.below(ps.size());
        auto meet = intersect(ps[i].first, ps[j].first);
        if (meet)
          zs.push_back(rng.chance(50) ? *meet : random_submagma(*meet, rng));
        else
          zs.push_back(random_submagma(ps[i].first, rng));
      }
    }
  }
  return zs;
}

std::vector<PropertyResult> suite_function_check(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned relations = pick_cases(ctx, 500);
  for (Domain d : domains_for(ctx, true)) {
    Session s = Session::make(d);
    Rng rng(ctx.seed ^ (0x6ffu + static_cast<std::uint64_t>(d)));
    Prop* agree = sb.begin(std::string(domain_name(d)) + "/verdict-vs-slice-sampling");
    Prop* witness = sb.begin(std::string(domain_name(d)) + "/false-verdicts-witnessed");
    for (unsigned i = 0; i < relations; ++i) {
      Relation r = random_semifunction(s, d, rng, 6);
      FunctionCheck fc = check_function(r);
      if (fc.function) {
        bool ok = true;
        for (const Magma& z : domain_samples(r, rng, 200)) {
          auto sl = slice(r, z);
          if (!sl || sl->gen_count() != 1) { ok = false; break; }
          // The greatest image is what apply returns.
          if (!equal(apply(r, z), sl->magma_gens()[0])) { ok = false; break; }
        }
        agree->expect(ok, print_relation_witness(r));
      } else {
        bool ok = fc.clash_input.has_value();
        if (ok) {
          auto sl = slice(r, *fc.clash_input);
          ok = sl.has_value() && sl->gen_count() >= 2;
        }
        witness->expect(ok, print_relation_witness(r));
        agree->expect(true, "");
      }
    }
    // The three pinned verdicts.
    Prop* pinned = sb.begin(std::string(domain_name(d)) + "/pinned-verdicts");
    Magma z = random_magma(d, 2, 2, ctx.seed ^ 0x601);
    Magma w = random_magma(d, 2, 2, ctx.seed ^ 0x602);
    Relation single = mk_relation(s, {{z, w}});
    bool single_ok = is_function(single);
    for (unsigned k = 0; k < 20 && single_ok; ++k)
      single_ok = equal(apply(single, random_submagma(z, ctx.seed ^ (0x700 + k))), w);
    pinned->expect(single_ok, "single-pair relation");
    // Same input, incomparable images.
    Magma w1 = d == Domain::Tag ? atom_ideal({tag_atom(0, 0)}) : atom_ideal({plane_atom(0, 1)});
    Magma w2 = d == Domain::Tag ? atom_ideal({tag_atom(1, 0)}) : atom_ideal({plane_atom(1, 0)});
    Relation clash = mk_relation(s, {{z, pr(w1)}, {z, pr(w2)}});
    pinned->expect(!is_function(clash), "incomparable images at one input");
    // Incomparable inputs with nonempty meet, nested images.
    Magma z1 = d == Domain::Tag ? atom_ideal({tag_atom(0, 0), tag_atom(1, -1)})
                                : atom_ideal({plane_atom(0, 3)});
    Magma z2 = d == Domain::Tag ? atom_ideal({tag_atom(0, -1), tag_atom(1, 0)})
                                : atom_ideal({plane_atom(3, 0)});
    Magma wsmall = d == Domain::Tag ? atom_ideal({tag_atom(2, 0)}) : atom_ideal({plane_atom(5, 5)});
    Magma wbig = d == Domain::Tag ? atom_ideal({tag_atom(2, 3)}) : atom_ideal({plane_atom(6, 6)});
    Relation example = mk_relation(s, {{z1, wsmall}, {z2, wbig}});
    auto meet = intersect(z1, z2);
    bool example_ok = !subset(z1, z2) && !subset(z2, z1) && meet.has_value() &&
                      subset(wsmall, wbig) && !equal(wsmall, wbig) && is_function(example) &&
                      equal(apply(example, *meet), wbig) &&
                      equal(apply(example, random_submagma(*meet, ctx.seed ^ 0x603)), wbig);
    pinned->expect(example_ok, "incomparable inputs, nested images");
  }
  return sb.finish();
}

std::vector<PropertyResult> suite_function_disjoint(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned relations = pick_cases(ctx, 500);
  Session s = Session::make(Domain::Tag);
  Rng rng(ctx.seed ^ 0x7ff);
  Prop* disj = sb.begin("tag/disjoint-inputs-always-function");
  Prop* applied = sb.begin("tag/apply-dispatches-to-the-covering-input");
  for (unsigned i = 0; i < relations; ++i) {
    unsigned n = 1 + static_cast<unsigned>(rng.below(5));
    std::vector<std::pair<Magma, Magma>> ps;
    for (unsigned k = 0; k < n; ++k) {
      Magma z = pr_iter(static_cast<unsigned>(rng.below(2)),
                        atom_ideal({tag_atom(10 + static_cast<int>(k), rng.range(-4, 4))}));
      Magma w = random_magma(Domain::Tag, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
      ps.emplace_back(std::move(z), std::move(w));
    }
    Relation r = mk_relation(s, ps);
    disj->expect(is_function(r), print_relation_witness(r));
    std::size_t at = rng.below(ps.size());
    Magma z = random_submagma(ps[at].first, rng);
    applied->expect(equal(apply(r, z), ps[at].second), to_string(z));
  }
  // Shared image: overlapping inputs never clash when the range is one magma.
  Prop* shared = sb.begin("tag/shared-image-function-despite-overlap");
  for (unsigned i = 0; i < 100; ++i) {
    Magma w = random_magma(Domain::Tag, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
    Magma z1 = random_magma(Domain::Tag, 1, 3, rng);
    Magma z2 = unite(z1, random_magma(Domain::Tag, 1, 2, rng));
    Relation r = mk_relation(s, {{z1, w}, {z2, w}});
    shared->expect(is_function(r), print_relation_witness(r));
  }
  // Overlapping inputs with incomparable images clash.
  Prop* clash = sb.begin("tag/overlap-with-incomparable-images-clashes");
  for (unsigned i = 0; i < 100; ++i) {
    Magma za = atom_ideal({tag_atom(0, rng.range(0, 4)), tag_atom(1, rng.range(-4, -1))});
    Magma zb = atom_ideal({tag_atom(0, rng.range(-4, -1)), tag_atom(1, rng.range(0, 4))});
    Magma w1 = pr(atom_ideal({tag_atom(2, 0)}));
    Magma w2 = pr(atom_ideal({tag_atom(3, 0)}));
    Relation r = mk_relation(s, {{za, w1}, {zb, w2}});
    clash->expect(!is_function(r) && intersect(za, zb).has_value(), print_relation_witness(r));
  }
  return sb.finish();
}

// ---------------------------------------------------------------------------
// ordinal-tower

std::vector<PropertyResult> suite_ordinal_order(const SuiteContext& ctx) {
  SuiteBuilder sb;
  (void)ctx;
  Session s = Session::make(Domain::Tag);
  Prop* law = sb.begin("primary/less-iff-strict-inclusion");
  for (unsigned m = 0; m <= 8; ++m)
    for (unsigned n = 0; n <= 8; ++n) {
      MagNat a = nat(s, m, NatVariant::Primary);
      MagNat b = nat(s, n, NatVariant::Primary);
      law->expect(ord_less(a, b) == (m < n),
                  "(ord< " + std::to_string(m) + " " + std::to_string(n) + ")");
    }
  Prop* zero = sb.begin("variants/agree-at-zero");
  zero->expect(equal(nat(s, 0, NatVariant::Primary).value, nat(s, 0, NatVariant::Alt).value),
               "(nat 0)");
  zero->expect(equal(nat(s, 0, NatVariant::Alt).value, pr_iter(2, s.a0)), "(nat* 0)");
  Prop* alt_level = sb.begin("alt/level-is-n-plus-2");
  for (unsigned n = 0; n <= 8; ++n) {
    Level l = nat(s, n, NatVariant::Alt).value.level();
    alt_level->expect(l.q == 0 && l.r == n + 2, "(level (nat* " + std::to_string(n) + "))");
  }
  Prop* one_level = sb.begin("primary/first-mixed-level-is-w-plus-1");
  Level l1 = nat(s, 1, NatVariant::Primary).value.level();
  one_level->expect(l1.q == 1 && l1.r == 1, "(level (nat 1))");
  Prop* mismatch = sb.begin("variants/comparison-rejected");
  bool threw = false;
  try {
    ord_less(nat(s, 1, NatVariant::Alt), nat(s, 2, NatVariant::Alt));
  } catch (const VariantMismatch&) {
    threw = true;
  }
  mismatch->expect(threw, "(ord< alt alt)");
  Prop* cap = sb.begin("nat/depth-cap-enforced");
  threw = false;
  try {
    nat(s, 9, NatVariant::Primary);
  } catch (const DepthCap&) {
    threw = true;
  }
  cap->expect(threw, "(nat 9)");
  return sb.finish();
}

std::vector<PropertyResult> suite_alt_disjoint(const SuiteContext& ctx) {
  SuiteBuilder sb;
  Session s = Session::make(ctx.domain_set && ctx.domain != Domain::QDup ? ctx.domain
                                                                         : Domain::Tag);
  Prop* law = sb.begin("alt/disjoint-iff-distinct");
  for (unsigned m = 0; m <= 8; ++m)
    for (unsigned n = 0; n <= 8; ++n)
      law->expect(alt_disjoint(s, m, n) == (m != n),
                  "(inter (nat* " + std::to_string(m) + ") (nat* " + std::to_string(n) + "))");
  return sb.finish();
}

std::vector<PropertyResult> suite_ordinal_add(const SuiteContext& ctx) {
  SuiteBuilder sb;
  Session s = Session::make(Domain::Tag);
  (void)ctx;
  Prop* concrete = sb.begin("finite/notation-add-matches-concrete-recursion");
  for (unsigned a = 0; a <= 5; ++a)
    for (unsigned b = 0; a + b <= 8 && b <= 5; ++b) {
      Ordinal sum = ord_add(Ordinal{0, a}, Ordinal{0, b});
      Magma v = nat(s, a, NatVariant::Primary).value;
      for (unsigned k = 0; k < b; ++k) v = unite(v, pr(v));
      bool ok = sum.q == 0 && sum.r == a + b && equal(v, nat(s, a + b, NatVariant::Primary).value);
      concrete->expect(ok, "(ord+ " + std::to_string(a) + " " + std::to_string(b) + ")");
    }
  Prop* unit = sb.begin("notation/right-zero-unit");
  unit->expect(ord_add(Ordinal{2, 3}, Ordinal{0, 0}).q == 2 &&
                   ord_add(Ordinal{2, 3}, Ordinal{0, 0}).r == 3,
               "(ord+ (omega 2 3) 0)");
  Prop* absorb = sb.begin("notation/limit-absorbs-finite-part");
  Ordinal r = ord_add(Ordinal{0, 1}, Ordinal{1, 0});
  absorb->expect(r.q == 1 && r.r == 0, "(ord+ 1 (omega 1 0))");
  Prop* overflow = sb.begin("notation/overflow-rejected");
  bool threw = false;
  try {
    ord_add(Ordinal{0x7fffffffu, 0}, Ordinal{1, 0});
  } catch (const NotRepresentable&) {
    threw = true;
  }
  overflow->expect(threw, "(ord+ (omega 2147483647 0) (omega 1 0))");
  return sb.finish();
}

std::vector<PropertyResult> suite_nat_expansion(const SuiteContext& ctx) {
  SuiteBuilder sb;
  (void)ctx;
  Session s = Session::make(Domain::Tag);
  Prop* chain = sb.begin("primary/value-equals-union-of-pr-chain");
  for (unsigned n = 0; n <= 8; ++n) {
    // x_0 = pr2(a0), x_{k+1} = pr(k as magma); n = x_0 u ... u x_n.
    Magma acc = pr_iter(2, s.a0);
    for (unsigned k = 1; k <= n; ++k)
      acc = unite(acc, pr(nat(s, k - 1, NatVariant::Primary).value));
    chain->expect(equal(acc, nat(s, n, NatVariant::Primary).value),
                  "(nat " + std::to_string(n) + ")");
  }
  Prop* gens = sb.begin("primary/canonical-generators-are-seed-and-predecessor");
  for (unsigned n = 1; n <= 8; ++n) {
    Magma v = nat(s, n, NatVariant::Primary).value;
    bool ok = v.magma_gens().size() == 2 &&
              equal(v.magma_gens()[0], s.pr_a0) &&
              equal(v.magma_gens()[1], nat(s, n - 1, NatVariant::Primary).value);
    gens->expect(ok, "(nat " + std::to_string(n) + ")");
  }
  return sb.finish();
}

std::vector<PropertyResult> suite_countgen(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned samples = pick_cases(ctx, 200);
  Session s = Session::make(Domain::Tag);
  Rng rng(ctx.seed ^ 0x8ff);

  Magma c = random_magma(Domain::Tag, 2, 2, rng);
  std::vector<Magma> prefix{random_magma(Domain::Tag, 1, 2, rng),
                            random_magma(Domain::Tag, 2, 2, rng)};
  CountGenFun fc(s, {}, TailRule::Constant, c);
  CountGenFun ft(s, prefix, TailRule::PrTower);
  CountGenFun fs(s, prefix, TailRule::Shift);
  const CountGenFun* funs[] = {&fc, &ft, &fs};
  const char* names[] = {"constant", "pr-tower", "shift"};
  for (int f = 0; f < 3; ++f) {
    Prop* p = sb.begin(std::string(names[f]) + "/apply-returns-the-indexed-generator");
    for (unsigned k = 0; k < samples; ++k) {
      unsigned n = 1 + static_cast<unsigned>(rng.below(8));
      Magma base = nat(s, n, NatVariant::Alt).value;
      Magma z = rng.chance(40) ? base : random_submagma(base, rng);
      p->expect(equal(funs[f]->apply(z), funs[f]->generator(n)),
                "(cg-apply f (rand-sub (nat* " + std::to_string(n) + ") ...))");
    }
  }
  Prop* zero = sb.begin("domain/zero-excluded");
  bool threw = false;
  try {
    fc.apply(pr_iter(2, s.a0));
  } catch (const NotInDomain&) {
    threw = true;
  }
  zero->expect(threw, "(cg-apply f (nat* 0))");
  Prop* trunc = sb.begin("truncation/agrees-with-relation-apply");
  std::vector<std::pair<Magma, Magma>> ps;
  for (unsigned n = 1; n <= 8; ++n)
    ps.emplace_back(nat(s, n, NatVariant::Alt).value, ft.generator(n));
  Relation r = mk_relation(s, ps);
  trunc->expect(is_function(r), "truncated stream relation");
  // ran of the truncation is the union of the generators' ideals.
  Magma gen_union = pr(ft.generator(1));
  for (unsigned n = 2; n <= 8; ++n) gen_union = unite(gen_union, pr(ft.generator(n)));
  trunc->expect(equal(ran(r), gen_union), "(ran r)");
  for (unsigned k = 0; k < samples; ++k) {
    unsigned n = 1 + static_cast<unsigned>(rng.below(8));
    Magma z = random_submagma(nat(s, n, NatVariant::Alt).value, rng);
    trunc->expect(equal(ft.apply(z), apply(r, z)), "(nat* " + std::to_string(n) + ")");
  }
  return sb.finish();
}

// ---------------------------------------------------------------------------
// separation-engine

std::vector<PropertyResult> suite_mss(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned instances = pick_cases(ctx, 300);
  for (Domain d : domains_for(ctx, false)) {
    Rng rng(ctx.seed ^ (0x9ffu + static_cast<std::uint64_t>(d)));
    Prop* shape = sb.begin(std::string(domain_name(d)) + "/result-canonical-and-below-u");
    Prop* bicond = sb.begin(std::string(domain_name(d)) + "/membership-biconditional");
    for (unsigned i = 0; i < instances; ++i) {
      // Sample until the separation premise holds; the overlap construction
      // makes failures rare.
      std::optional<ClassDescriptor> cls;
      std::optional<Magma> instance;
      std::optional<Magma> result;
      for (int attempt = 0; attempt < 16 && !result; ++attempt) {
        std::vector<Magma> roots;
        unsigned nroots = 1 + static_cast<unsigned>(rng.below(3));
        for (unsigned k = 0; k < nroots; ++k)
          roots.push_back(random_magma(d, 1 + static_cast<unsigned>(rng.below(3)), 2, rng));
        ClassDescriptor c = mk_class(roots);
        Magma seed_root = roots.front();
        Magma u = [&] {
          Magma overlap = random_submagma(seed_root, rng);
          if (overlap.kind() == Kind::AtomIdeal && rng.chance(50))
            return unite(overlap, random_magma(d, 1, 2, rng));
          // u's generators sit at the root's own level, so the class meets
          // u in the overlap's submagmas.
          return magma_ideal(
              {overlap, random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng)});
        }();
        auto v = separate(c, u);
        if (v) {
          cls = c;
          instance = u;
          result = v;
        }
      }
      if (!result) {
        shape->expect(false, "no nonempty separation instance found");
        continue;
      }
      const ClassDescriptor& c = *cls;
      const Magma& u = *instance;
      const std::optional<Magma>& v = result;
      bool ok = true;
      try {
        validate_canonical(*v);
      } catch (const MagmaError&) {
        ok = false;
      }
      shape->expect(ok && subset(*v, u), "(separate c " + to_string(u) + ")");
      for (unsigned k = 0; k < 100; ++k) {
        if (u.kind() == Kind::AtomIdeal) {
          Atom a = rng.chance(60)
                       ? [&] {
                           Atom base = u.atom_gens()[rng.below(u.atom_gens().size())];
                           for (unsigned t = static_cast<unsigned>(rng.below(3)); t > 0; --t)
                             base = strictly_below(base);
                           return base;
                         }()
                       : random_atom(d, rng);
          bool lhs = member(a, *v);
          bool rhs = class_contains(c, a) && member(a, u);
          bicond->expect(lhs == rhs, to_string(a) + " in (separate c " + to_string(u) + ")");
        } else {
          Magma z = rng.chance(50)
                        ? random_submagma(u.magma_gens()[rng.below(u.magma_gens().size())], rng)
                        : (rng.chance(50) ? random_submagma(*v, rng)
                                          : random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng));
          bool lhs = member(z, *v);
          bool rhs = class_contains(c, z) && member(z, u);
          bicond->expect(lhs == rhs, to_string(z) + " in (separate c " + to_string(u) + ")");
        }
      }
    }
  }
  Prop* fixed = sb.begin("fixed/premise-and-identity-cases");
  ClassDescriptor tag0 = mk_class({atom_ideal({tag_atom(0, 0)})});
  fixed->expect(!separate(tag0, atom_ideal({tag_atom(1, 0)})).has_value(),
                "(separate (class (roots (ai (at tag 0 0)))) (ai (at tag 1 0)))");
  Magma r0 = random_magma(Domain::Tag, 2, 2, ctx.seed ^ 0x901);
  auto self = separate(mk_class({r0}), pr(r0));
  fixed->expect(self.has_value() && equal(*self, pr(r0)), "(separate (class (roots r)) (pr r))");
  return sb.finish();
}

std::vector<PropertyResult> suite_magmatic_classes(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 500);
  for (Domain d : domains_for(ctx, false)) {
    Rng rng(ctx.seed ^ (0xaffu + static_cast<std::uint64_t>(d)));
    Prop* closed = sb.begin(std::string(domain_name(d)) + "/descriptor-classes-closed-downward");
    for (unsigned i = 0; i < n; ++i) {
      std::vector<Magma> roots{random_magma(d, 1 + static_cast<unsigned>(rng.below(3)), 2, rng)};
      if (rng.chance(50)) roots.push_back(random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng));
      ClassDescriptor c = mk_class(roots);
      Magma x = rng.chance(70) ? random_submagma(roots.front(), rng)
                               : random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
      if (!class_contains(c, x)) continue;
      Magma y = random_submagma(x, rng);
      closed->expect(class_contains(c, y), to_string(y) + " <= " + to_string(x));
    }
  }
  Prop* unref = sb.begin("sampler/descriptor-class-unrefuted");
  ClassDescriptor c = mk_class({random_magma(Domain::Tag, 3, 2, ctx.seed ^ 0xa01),
                                random_magma(Domain::Tag, 2, 2, ctx.seed ^ 0xa02)});
  SamplerVerdict v1 =
      refute_closure(Domain::Tag, [&](const Magma& m) { return class_contains(c, m); }, 400,
                     ctx.seed ^ 0xa03);
  unref->expect(!v1.refuted, "(magmatic? (in-class c))");
  Prop* refuted = sb.begin("sampler/singleton-and-pair-predicates-refuted");
  Magma y0 = pr(random_magma(Domain::Tag, 2, 2, ctx.seed ^ 0xa04));
  SamplerVerdict v2 = refute_closure(
      Domain::Tag, [&](const Magma& m) { return equal(m, y0); }, 2000, ctx.seed ^ 0xa05, {y0});
  refuted->expect(v2.refuted, "(magmatic? (eq-to y0))");
  Session s = Session::make(Domain::Tag);
  SamplerVerdict v3 = refute_closure(
      Domain::Tag, [&](const Magma& m) { return is_pair(s, m); }, 2000, ctx.seed ^ 0xa06);
  refuted->expect(v3.refuted, "(magmatic? (is-pair))");
  return sb.finish();
}

std::vector<PropertyResult> suite_completion(const SuiteContext& ctx) {
  SuiteBuilder sb;
  unsigned n = pick_cases(ctx, 500);
  for (Domain d : domains_for(ctx, false)) {
    Rng rng(ctx.seed ^ (0xbffu + static_cast<std::uint64_t>(d)));
    Prop* agree = sb.begin(std::string(domain_name(d)) + "/completion-descriptor-matches-existential");
    Prop* closed = sb.begin(std::string(domain_name(d)) + "/completion-closed-downward");
    for (unsigned i = 0; i < n; ++i) {
      // The base predicate holds on finitely many magmas; its completion is
      // their descriptor class.
      std::vector<Magma> finite_set;
      unsigned k = 1 + static_cast<unsigned>(rng.below(3));
      for (unsigned t = 0; t < k; ++t)
        finite_set.push_back(random_magma(d, 1 + static_cast<unsigned>(rng.below(3)), 2, rng));
      auto base_pred = [&](const Magma& m) {
        for (const Magma& y : finite_set)
          if (equal(m, y)) return true;
        return false;
      };
      auto completed = [&](const Magma& m) {
        for (const Magma& y : finite_set)
          if (base_pred(y) && subset(m, y)) return true;
        return false;
      };
      ClassDescriptor c = mk_class(finite_set);
      Magma x = rng.chance(60) ? random_submagma(finite_set[rng.below(k)], rng)
                               : random_magma(d, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
      agree->expect(class_contains(c, x) == completed(x), to_string(x));
      if (class_contains(c, x))
        closed->expect(class_contains(c, random_submagma(x, rng)), to_string(x));
    }
  }
  return sb.finish();
}

std::vector<PropertyResult> suite_replacement_pr(const SuiteContext& ctx) {
  SuiteBuilder sb;
  (void)ctx;
  Prop* tag = sb.begin("tag/two-tag-ideal-witness");
  ReplacementWitness w1 = replacement_pr_witness(pr(atom_ideal({tag_atom(0, 0), tag_atom(1, 0)})));
  tag->expect(verify(w1) && equal(w1.part1, pr(atom_ideal({tag_atom(0, 0)}))) &&
                  equal(w1.part2, pr(atom_ideal({tag_atom(1, 0)}))),
              w1.description);
  tag->note("witness: " + w1.description);
  Prop* plane = sb.begin("plane/split-below-one-atom");
  ReplacementWitness w2 = replacement_pr_witness(pr(atom_ideal({plane_atom(0, 0)})));
  plane->expect(verify(w2), w2.description);
  ReplacementWitness w3 = replacement_pr_witness(atom_ideal({plane_atom(2, 2)}));
  plane->expect(verify(w3), w3.description);
  Prop* nested = sb.begin("tag/nested-ideal-witness");
  ReplacementWitness w4 =
      replacement_pr_witness(pr_iter(2, atom_ideal({tag_atom(0, 0), tag_atom(1, 0)})));
  nested->expect(verify(w4), w4.description);
  Prop* chain = sb.begin("inadmissible/chains-rejected");
  bool threw = false;
  try {
    replacement_pr_witness(pr(atom_ideal({tag_atom(0, 0)})));
  } catch (const NoIncomparableSubmagmas&) {
    threw = true;
  }
  chain->expect(threw, "(demo replacement-pr (pr (ai (at tag 0 0))))");
  threw = false;
  try {
    replacement_pr_witness(atom_ideal({tag_atom(0, 0)}));
  } catch (const NoIncomparableSubmagmas&) {
    threw = true;
  }
  chain->expect(threw, "(demo replacement-pr (ai (at tag 0 0)))");
  threw = false;
  try {
    replacement_pr_witness(pr(atom_ideal({qdup_atom(Rational(1, 2), 0)})));
  } catch (const NoIncomparableSubmagmas&) {
    threw = true;
  }
  chain->expect(threw, "(demo replacement-pr (pr (ai (at qdup 1/2 0))))");
  return sb.finish();
}

std::vector<PropertyResult> suite_completion_not_functional(const SuiteContext& ctx) {
  SuiteBuilder sb;
  (void)ctx;
  for (Domain d : {Domain::Tag, Domain::Plane}) {
    Session s = Session::make(d);
    Prop* p = sb.begin(std::string(domain_name(d)) + "/two-distinct-verified-images");
    CompletionWitness w = completion_not_functional_demo(s);
    p->expect(verify(s, w), w.description);
    p->note("witness: " + w.description);
    p->expect(!equal(w.image, w.sub_image), "(eq? y y1)");
    p->expect(subset(w.pair_sub, w.pair_full) && !equal(w.pair_sub, w.pair_full),
              "(subset? p1 p)");
  }
  return sb.finish();
}

// ---------------------------------------------------------------------------
// finite-oracle

std::vector<PropertyResult> report_to_props(const OracleReport& rep, const std::string& name) {
  PropertyResult pr;
  pr.name = name;
  pr.pass = rep.mismatches == 0;
  pr.checked = rep.cases;
  for (const std::string& line : rep.lines)
    if (line.find("MISMATCH") != std::string::npos && pr.counterexamples.size() < 5)
      pr.counterexamples.push_back(line);
  return {pr};
}

std::vector<PropertyResult> suite_oracle_gate(const SuiteContext& ctx) {
  std::vector<PropertyResult> out;
  unsigned depth = ctx.depth ? ctx.depth : 2;
  for (const char* spec : {"tag:2x2", "plane:2x2"}) {
    FiniteUniverse u = FiniteUniverse::build(window_from_spec(spec), depth);
    auto props = report_to_props(oracle_gate(u), std::string("gate/") + spec);
    out.insert(out.end(), props.begin(), props.end());
  }
  // Depth-3 universes exist only over the smallest windows.
  for (const char* spec : {"antichain:2", "chain:3"}) {
    FiniteUniverse u = FiniteUniverse::build(window_from_spec(spec), 3);
    auto props = report_to_props(oracle_gate(u), std::string("gate3/") + spec);
    out.insert(out.end(), props.begin(), props.end());
  }
  return out;
}

std::vector<PropertyResult> suite_oracle_pair(const SuiteContext& ctx) {
  std::vector<PropertyResult> out;
  unsigned depth = ctx.depth ? ctx.depth : 2;
  {
    FiniteUniverse u = FiniteUniverse::build(window_from_spec("tag:2x2"), depth);
    auto props = report_to_props(oracle_pair(u, Session::make(Domain::Tag)), "pair/tag:2x2");
    out.insert(out.end(), props.begin(), props.end());
  }
  {
    FiniteUniverse u = FiniteUniverse::build(window_from_spec("plane:2x2"), depth);
    auto props = report_to_props(oracle_pair(u, Session::make(Domain::Plane)), "pair/plane:2x2");
    out.insert(out.end(), props.begin(), props.end());
  }
  return out;
}

std::vector<PropertyResult> suite_oracle_levels(const SuiteContext& ctx) {
  std::vector<PropertyResult> out;
  unsigned depth = ctx.depth ? ctx.depth : 2;
  for (const char* spec : {"tag:2x2", "plane:2x2", "chain:4", "antichain:3"}) {
    FiniteUniverse u = FiniteUniverse::build(window_from_spec(spec), depth);
    auto props = report_to_props(oracle_levels(u), std::string("levels/") + spec);
    out.insert(out.end(), props.begin(), props.end());
  }
  return out;
}

std::vector<PropertyResult> suite_oracle_functions(const SuiteContext& ctx) {
  std::vector<PropertyResult> out;
  unsigned depth = ctx.depth ? ctx.depth : 2;
  FiniteUniverse u = FiniteUniverse::build(window_from_spec("plane:2x2"), depth);
  return report_to_props(oracle_functions(u, Session::make(Domain::Plane)), "functions/plane:2x2");
}

using SuiteFn = std::vector<PropertyResult> (*)(const SuiteContext&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> reg = {
      {"atom-preorder", suite_atom_preorder},
      {"atom-meets", suite_atom_meets},
      {"atom-equivalence", suite_atom_equivalence},
      {"canonical-form", suite_canonical_form},
      {"subset-laws", suite_subset_laws},
      {"pr-embedding", suite_pr_embedding},
      {"union-legality", suite_union_legality},
      {"two-one-laws", suite_two_one_laws},
      {"union-equality-cases", suite_union_equality_cases},
      {"intersect-glb", suite_intersect_glb},
      {"no-minimal", suite_no_minimal},
      {"pair-theorem", suite_pair_theorem},
      {"sub-pair", suite_sub_pair},
      {"collateral-non-pairs", suite_collateral_non_pairs},
      {"tuples", suite_tuples},
      {"product-pairs", suite_product_pairs},
      {"dom-ran", suite_dom_ran},
      {"classify", suite_classify},
      {"function-check", suite_function_check},
      {"function-disjoint", suite_function_disjoint},
      {"ordinal-order", suite_ordinal_order},
      {"alt-disjoint", suite_alt_disjoint},
      {"ordinal-add", suite_ordinal_add},
      {"nat-expansion", suite_nat_expansion},
      {"countgen", suite_countgen},
      {"mss", suite_mss},
      {"magmatic-classes", suite_magmatic_classes},
      {"completion", suite_completion},
      {"replacement-pr", suite_replacement_pr},
      {"completion-not-functional", suite_completion_not_functional},
      {"oracle-gate", suite_oracle_gate},
      {"oracle-pair", suite_oracle_pair},
      {"oracle-levels", suite_oracle_levels},
      {"oracle-functions", suite_oracle_functions},
  };
  return reg;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

bool has_suite(const std::string& name) { return registry().count(name) > 0; }

SuiteResult run_suite(const std::string& name, const SuiteContext& ctx) {
  auto it = registry().find(name);
  if (it == registry().end()) throw UnknownSuite("unknown suite: " + name);
  SuiteResult r;
  r.suite = name;
  r.properties = it->second(ctx);
  if (r.properties.empty()) {
    PropertyResult skip;
    skip.name = "skipped (domain not pair-capable)";
    skip.pass = true;
    r.properties.push_back(std::move(skip));
  }
  r.pass = true;
  for (const PropertyResult& p : r.properties)
    if (!p.pass) r.pass = false;
  return r;
}

std::string format_report(const SuiteResult& r) {
  std::string out;
  for (const PropertyResult& p : r.properties) {
    out += (p.pass ? "[PASS] " : "[FAIL] ") + r.suite + "/" + p.name + " (" +
           std::to_string(p.checked) + " cases)\n";
    for (const std::string& note : p.notes) out += "    " + note + "\n";
    for (const std::string& cex : p.counterexamples) out += "    counterexample: " + cex + "\n";
  }
  return out;
}

}  // namespace magma
