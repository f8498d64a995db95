#include "magma/magma.hpp"

#include <algorithm>
#include <unordered_map>

#include "magma/errors.hpp"

namespace magma {

int compare(Level x, Level y) {
  if (x.q != y.q) return x.q < y.q ? -1 : 1;
  if (x.r != y.r) return x.r < y.r ? -1 : 1;
  return 0;
}

bool operator==(Level x, Level y) { return compare(x, y) == 0; }

std::string to_string(Level l) {
  if (l.q == 0) return std::to_string(l.r);
  std::string s = l.q == 1 ? "w" : "w*" + std::to_string(l.q);
  if (l.r != 0) s += "+" + std::to_string(l.r);
  return s;
}

struct Magma::Node {
  Kind kind;
  std::vector<Atom> atoms;   // AtomIdeal generators
  std::vector<Magma> gens;   // MagmaIdeal generators
  Level level;
};

Kind Magma::kind() const { return node_->kind; }
const std::vector<Atom>& Magma::atom_gens() const { return node_->atoms; }
const std::vector<Magma>& Magma::magma_gens() const { return node_->gens; }
std::size_t Magma::gen_count() const {
  return node_->kind == Kind::AtomIdeal ? node_->atoms.size() : node_->gens.size();
}
Level Magma::level() const { return node_->level; }
const void* Magma::id() const { return node_.get(); }

namespace {

constexpr std::uint32_t kLevelCap = 0x7fffffffu;

Level level_of_ideal(const std::vector<Magma>& gens) {
  Level first = gens.front().level();
  bool uniform = true;
  std::uint32_t qmax = first.q;
  for (const Magma& g : gens) {
    Level l = g.level();
    if (compare(l, first) != 0) uniform = false;
    qmax = std::max(qmax, l.q);
  }
  if (uniform) {
    if (first.r >= kLevelCap) throw NotRepresentable("level tower too deep");
    return Level{first.q, first.r + 1};
  }
  // Mixed generator levels: least limit strictly above the maximum, plus one.
  if (qmax >= kLevelCap) throw NotRepresentable("level tower too deep");
  return Level{qmax + 1, 1};
}

struct PtrPairHash {
  std::size_t operator()(const std::pair<const void*, const void*>& p) const {
    auto a = reinterpret_cast<std::uintptr_t>(p.first);
    auto b = reinterpret_cast<std::uintptr_t>(p.second);
    std::uint64_t h = (static_cast<std::uint64_t>(a) * 0x9e3779b97f4a7c15ULL) ^
                      (static_cast<std::uint64_t>(b) + 0xbf58476d1ce4e5b9ULL);
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

using SubsetMemo =
    std::unordered_map<std::pair<const void*, const void*>, bool, PtrPairHash>;

bool subset_rec(const Magma& x, const Magma& y, SubsetMemo& memo) {
  if (x.id() == y.id()) return true;
  if (x.kind() != y.kind()) return false;
  auto key = std::make_pair(x.id(), y.id());
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool ok = true;
  if (x.kind() == Kind::AtomIdeal) {
    for (const Atom& a : x.atom_gens()) {
      bool found = false;
      for (const Atom& b : y.atom_gens())
        if (atom_below(a, b)) { found = true; break; }
      if (!found) { ok = false; break; }
    }
  } else {
    for (const Magma& g : x.magma_gens()) {
      bool found = false;
      for (const Magma& h : y.magma_gens())
        if (subset_rec(g, h, memo)) { found = true; break; }
      if (!found) { ok = false; break; }
    }
  }
  memo.emplace(key, ok);
  return ok;
}

}  // namespace

bool subset(const Magma& x, const Magma& y) {
  SubsetMemo memo;
  return subset_rec(x, y, memo);
}

bool equal(const Magma& x, const Magma& y) {
  if (x.id() == y.id()) return true;
  SubsetMemo memo;
  return subset_rec(x, y, memo) && subset_rec(y, x, memo);
}

Magma atom_ideal(std::vector<Atom> atoms) {
  if (atoms.empty()) throw EmptyGenerators("atom_ideal: no generators");
  Domain d = atoms.front().domain;
  for (Atom& a : atoms) {
    if (a.domain != d) throw DomainMismatch("atom_ideal: generators from several domains");
    a = canonical_rep(a);
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return compare(a, b) < 0; });
  atoms.erase(std::unique(atoms.begin(), atoms.end(),
                          [](const Atom& a, const Atom& b) { return compare(a, b) == 0; }),
              atoms.end());
  // Keep the maximal atoms only.
  std::vector<Atom> kept;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < atoms.size() && !dominated; ++j)
      if (i != j && atom_below(atoms[i], atoms[j]) && !atom_below(atoms[j], atoms[i]))
        dominated = true;
    if (!dominated) kept.push_back(atoms[i]);
  }
  auto node = std::make_shared<Magma::Node>();
  node->kind = Kind::AtomIdeal;
  node->atoms = std::move(kept);
  node->level = Level{0, 1};
  return Magma(std::move(node));
}

Magma magma_ideal(std::vector<Magma> gens) {
  if (gens.empty()) throw EmptyGenerators("magma_ideal: no generators");
  std::sort(gens.begin(), gens.end(),
            [](const Magma& a, const Magma& b) { return compare(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end(),
                         [](const Magma& a, const Magma& b) { return compare(a, b) == 0; }),
             gens.end());
  std::vector<Magma> kept;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < gens.size() && !dominated; ++j)
      if (i != j && subset(gens[i], gens[j]) && !subset(gens[j], gens[i]))
        dominated = true;
    if (!dominated) kept.push_back(gens[i]);
  }
  auto node = std::make_shared<Magma::Node>();
  node->kind = Kind::MagmaIdeal;
  node->level = level_of_ideal(kept);
  node->gens = std::move(kept);
  return Magma(std::move(node));
}

Magma pr(const Atom& a) { return atom_ideal({canonical_rep(a)}); }
Magma pr(const Magma& x) { return magma_ideal({x}); }

Magma pr_iter(unsigned n, const Atom& a) {
  if (n == 0) throw OutOfRange("pr_iter: an atom needs n >= 1");
  Magma m = pr(a);
  for (unsigned i = 1; i < n; ++i) m = pr(m);
  return m;
}

Magma pr_iter(unsigned n, const Magma& x) {
  Magma m = x;
  for (unsigned i = 0; i < n; ++i) m = pr(m);
  return m;
}

bool member(const Atom& z, const Magma& x) {
  if (x.kind() != Kind::AtomIdeal) return false;
  for (const Atom& b : x.atom_gens())
    if (atom_below(z, b)) return true;
  return false;
}

bool member(const Magma& z, const Magma& x) {
  if (x.kind() != Kind::MagmaIdeal) return false;
  for (const Magma& h : x.magma_gens())
    if (subset(z, h)) return true;
  return false;
}

Magma unite(const Magma& x, const Magma& y) {
  if (x.kind() != y.kind())
    throw KindMismatch("union of an atom-ideal with a magma-ideal is not a magma");
  if (x.kind() == Kind::AtomIdeal) {
    std::vector<Atom> atoms = x.atom_gens();
    atoms.insert(atoms.end(), y.atom_gens().begin(), y.atom_gens().end());
    return atom_ideal(std::move(atoms));
  }
  std::vector<Magma> gens = x.magma_gens();
  gens.insert(gens.end(), y.magma_gens().begin(), y.magma_gens().end());
  return magma_ideal(std::move(gens));
}

std::optional<Magma> intersect(const Magma& x, const Magma& y) {
  if (x.kind() != y.kind()) return std::nullopt;
  if (x.kind() == Kind::AtomIdeal) {
    if (x.atom_gens().front().domain != y.atom_gens().front().domain) return std::nullopt;
    std::vector<Atom> cover;
    for (const Atom& a : x.atom_gens())
      for (const Atom& b : y.atom_gens()) {
        std::vector<Atom> lb = common_lower_bounds(a, b);
        cover.insert(cover.end(), lb.begin(), lb.end());
      }
    if (cover.empty()) return std::nullopt;
    return atom_ideal(std::move(cover));
  }
  std::vector<Magma> parts;
  for (const Magma& g : x.magma_gens())
    for (const Magma& h : y.magma_gens())
      if (auto m = intersect(g, h)) parts.push_back(std::move(*m));
  if (parts.empty()) return std::nullopt;
  return magma_ideal(std::move(parts));
}

int compare(const Magma& x, const Magma& y) {
  if (x.id() == y.id()) return 0;
  if (x.kind() != y.kind()) return x.kind() == Kind::AtomIdeal ? -1 : 1;
  if (int c = compare(x.level(), y.level())) return c;
  if (x.kind() == Kind::AtomIdeal) {
    const auto& ax = x.atom_gens();
    const auto& ay = y.atom_gens();
    std::size_t n = std::min(ax.size(), ay.size());
    for (std::size_t i = 0; i < n; ++i)
      if (int c = compare(ax[i], ay[i])) return c;
    return ax.size() < ay.size() ? -1 : (ax.size() > ay.size() ? 1 : 0);
  }
  const auto& gx = x.magma_gens();
  const auto& gy = y.magma_gens();
  std::size_t n = std::min(gx.size(), gy.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = compare(gx[i], gy[i])) return c;
  return gx.size() < gy.size() ? -1 : (gx.size() > gy.size() ? 1 : 0);
}

std::string to_string(const Magma& x) {
  std::string s;
  if (x.kind() == Kind::AtomIdeal) {
    s = "(ai";
    for (const Atom& a : x.atom_gens()) { s += ' '; s += to_string(a); }
  } else {
    s = "(mi";
    for (const Magma& g : x.magma_gens()) { s += ' '; s += to_string(g); }
  }
  s += ')';
  return s;
}

namespace {

Magma random_magma_rec(Domain d, unsigned depth, unsigned width, Rng& rng) {
  unsigned count = 1 + static_cast<unsigned>(rng.below(width));
  // At depth >= 2 both kinds must stay reachable.
  bool atoms = depth <= 1 || rng.chance(35);
  if (atoms) {
    std::vector<Atom> gen;
    for (unsigned i = 0; i < count; ++i) gen.push_back(random_atom(d, rng));
    return atom_ideal(std::move(gen));
  }
  std::vector<Magma> gen;
  for (unsigned i = 0; i < count; ++i)
    gen.push_back(random_magma_rec(d, depth - 1, width, rng));
  return magma_ideal(std::move(gen));
}

Magma shrink_atom_gen(const Atom& a, Rng& rng, bool strict) {
  Atom cur = a;
  unsigned steps = strict ? 1 + static_cast<unsigned>(rng.below(2))
                          : static_cast<unsigned>(rng.below(2));
  for (unsigned i = 0; i < steps; ++i) cur = strictly_below(cur);
  return atom_ideal({cur});
}

Magma shrink(const Magma& x, Rng& rng, bool strict);

Magma shrink_gen(const Magma& g, Rng& rng, bool strict) { return shrink(g, rng, strict); }

// Strict mode guarantees a proper submagma: either a generator is dropped
// (the antichain property makes that strict) or one generator is strictly
// shrunk while the others only ever shrink.
Magma shrink(const Magma& x, Rng& rng, bool strict) {
  std::size_t n = x.gen_count();
  bool drop = strict && n > 1 && rng.chance(50);
  std::vector<std::size_t> keep;
  if (drop) {
    std::size_t removed = rng.below(n);
    for (std::size_t i = 0; i < n; ++i)
      if (i != removed) keep.push_back(i);
  } else {
    for (std::size_t i = 0; i < n; ++i) keep.push_back(i);
  }
  std::size_t strict_at = keep[rng.below(keep.size())];
  if (x.kind() == Kind::AtomIdeal) {
    std::vector<Atom> out;
    for (std::size_t i : keep) {
      bool st = strict && !drop && i == strict_at;
      Magma piece = shrink_atom_gen(x.atom_gens()[i], rng, st);
      out.push_back(piece.atom_gens().front());
    }
    return atom_ideal(std::move(out));
  }
  std::vector<Magma> out;
  for (std::size_t i : keep) {
    bool st = strict && !drop && i == strict_at;
    if (st || rng.chance(40))
      out.push_back(shrink_gen(x.magma_gens()[i], rng, st));
    else
      out.push_back(x.magma_gens()[i]);
  }
  return magma_ideal(std::move(out));
}

}  // namespace

Magma random_magma(Domain d, unsigned depth, unsigned width, Rng& rng) {
  if (depth < 1 || width < 1) throw OutOfRange("random_magma: depth and width must be >= 1");
  return random_magma_rec(d, depth, width, rng);
}

Magma random_magma(Domain d, unsigned depth, unsigned width, std::uint64_t seed) {
  Rng rng(seed);
  return random_magma(d, depth, width, rng);
}

Magma random_submagma(const Magma& x, Rng& rng) { return shrink(x, rng, true); }

Magma random_submagma(const Magma& x, std::uint64_t seed) {
  Rng rng(seed);
  return random_submagma(x, rng);
}

void validate_canonical(const Magma& x) {
  if (x.gen_count() == 0) throw MagmaError("validate: empty generator list");
  if (x.kind() == Kind::AtomIdeal) {
    const auto& atoms = x.atom_gens();
    Domain d = atoms.front().domain;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (atoms[i].domain != d) throw MagmaError("validate: mixed atom domains");
      if (compare(atoms[i], canonical_rep(atoms[i])) != 0)
        throw MagmaError("validate: non-canonical atom payload");
      if (i + 1 < atoms.size() && compare(atoms[i], atoms[i + 1]) >= 0)
        throw MagmaError("validate: atom generators not strictly sorted");
      for (std::size_t j = 0; j < atoms.size(); ++j)
        if (i != j && atom_below(atoms[i], atoms[j]))
          throw MagmaError("validate: dominated atom generator");
    }
    if (!(x.level() == Level{0, 1})) throw MagmaError("validate: atom-ideal level");
    return;
  }
  const auto& gens = x.magma_gens();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    validate_canonical(gens[i]);
    if (i + 1 < gens.size() && compare(gens[i], gens[i + 1]) >= 0)
      throw MagmaError("validate: magma generators not strictly sorted");
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j && subset(gens[i], gens[j]))
        throw MagmaError("validate: dominated magma generator");
  }
  std::vector<Magma> copy(gens.begin(), gens.end());
  if (compare(x.level(), level_of_ideal(copy)) != 0)
    throw MagmaError("validate: cached level mismatch");
}

}  // namespace magma
