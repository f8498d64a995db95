#include "magma/pair.hpp"

#include "magma/errors.hpp"

namespace magma {

namespace {

// The a-tagged block pr2(x) u pr2(a): a magma-ideal with generators
// {pr(x), pr(a)}. pr(a) is an atom-ideal while pr(x) is not, so the two
// never collapse and the block always keeps both generators.
Magma block(const Magma& x, const Magma& pr2_seed) {
  return unite(pr_iter(2, x), pr2_seed);
}

// If m has the shape pr2(u) u pr2(seed) for some magma u, return u.
const Magma* block_payload(const Magma& m, const Magma& pr_seed) {
  if (m.kind() != Kind::MagmaIdeal || m.magma_gens().size() != 2) return nullptr;
  const Magma* seed_gen = nullptr;
  const Magma* other = nullptr;
  for (const Magma& g : m.magma_gens()) {
    if (compare(g, pr_seed) == 0) seed_gen = &g;
    else other = &g;
  }
  if (!seed_gen || !other) return nullptr;
  if (other->kind() != Kind::MagmaIdeal || other->magma_gens().size() != 1) return nullptr;
  return &other->magma_gens().front();
}

}  // namespace

PairView mk_pair(const Session& s, const Magma& x, const Magma& y) {
  Magma b0 = block(x, s.pr2_a0);
  Magma b1 = block(y, s.pr2_a1);
  Magma whole = unite(pr(b0), pr(b1));
  return PairView{x, y, whole};
}

bool is_pair(const Session& s, const Magma& m) {
  if (m.kind() != Kind::MagmaIdeal || m.magma_gens().size() != 2) return false;
  const Magma* u0 = nullptr;
  const Magma* u1 = nullptr;
  for (const Magma& g : m.magma_gens()) {
    if (const Magma* p = block_payload(g, s.pr_a0)) {
      if (u0) return false;
      u0 = p;
    } else if (const Magma* p2 = block_payload(g, s.pr_a1)) {
      if (u1) return false;
      u1 = p2;
    } else {
      return false;
    }
  }
  return u0 && u1;
}

std::pair<Magma, Magma> extract_pair(const Session& s, const Magma& m) {
  if (m.kind() != Kind::MagmaIdeal || m.magma_gens().size() != 2)
    throw NotAPair("extract_pair: not a pair shape");
  const Magma* u0 = nullptr;
  const Magma* u1 = nullptr;
  for (const Magma& g : m.magma_gens()) {
    if (const Magma* p = block_payload(g, s.pr_a0)) {
      if (u0) throw NotAPair("extract_pair: duplicate a0 block");
      u0 = p;
    } else if (const Magma* p2 = block_payload(g, s.pr_a1)) {
      if (u1) throw NotAPair("extract_pair: duplicate a1 block");
      u1 = p2;
    }
  }
  if (!u0 || !u1) throw NotAPair("extract_pair: not a pair shape");
  return {*u0, *u1};
}

Magma mk_tuple(const Session& s, const std::vector<Magma>& xs) {
  if (xs.size() < 2) throw ArityTooSmall("mk_tuple: arity must be >= 2");
  Magma acc = mk_pair(s, xs[0], xs[1]).whole;
  for (std::size_t i = 2; i < xs.size(); ++i)
    acc = mk_pair(s, acc, xs[i]).whole;
  return acc;
}

std::vector<Magma> extract_tuple(const Session& s, const Magma& m, std::size_t arity) {
  if (arity < 2) throw ArityTooSmall("extract_tuple: arity must be >= 2");
  std::vector<Magma> tail;
  Magma cur = m;
  for (std::size_t i = arity; i > 2; --i) {
    auto [head, last] = extract_pair(s, cur);
    tail.push_back(last);
    cur = head;
  }
  auto [first, second] = extract_pair(s, cur);
  std::vector<Magma> out{first, second};
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.push_back(*it);
  return out;
}

UnionCase union2_equality_case(const Magma& x, const Magma& y,
                               const Magma& x2, const Magma& y2) {
  Magma u = unite(pr(x), pr(y));
  Magma v = unite(pr(x2), pr(y2));
  if (!equal(u, v)) return UnionCase{UnionCaseTag::Unequal, -1, -1};
  if (equal(x, x2) && equal(y, y2)) return UnionCase{UnionCaseTag::I, -1, -1};
  if (equal(x, y2) && equal(y, x2)) return UnionCase{UnionCaseTag::II, -1, -1};
  const Magma* left[2] = {&x, &y};
  const Magma* right[2] = {&x2, &y2};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Magma& e = *left[i];
      if (!equal(e, *right[j])) continue;
      const Magma& other_left = *left[1 - i];
      const Magma& other_right = *right[1 - j];
      if (subset(other_left, e) && subset(other_right, e))
        return UnionCase{UnionCaseTag::III, i, j};
    }
  // The two-generator union law admits no further case.
  throw MagmaError("union2_equality_case: equal unions without a witnessing case");
}

std::string to_string(const UnionCase& c) {
  switch (c.tag) {
    case UnionCaseTag::I: return "I";
    case UnionCaseTag::II: return "II";
    case UnionCaseTag::III:
      return "(III " + std::to_string(c.left_index) + " " + std::to_string(c.right_index) + ")";
    case UnionCaseTag::Unequal: return "unequal";
  }
  return "?";
}

std::optional<SubPairCounterexample> fuzz_sub_pairs(const Session& s,
                                                    const PairEncoding& encode,
                                                    unsigned budget, std::uint64_t seed) {
  Rng rng(seed);
  for (unsigned k = 0; k < budget; ++k) {
    Magma x = random_magma(s.domain, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
    Magma y = random_magma(s.domain, 1 + static_cast<unsigned>(rng.below(2)), 2, rng);
    Magma whole = encode(s, x, y);
    Magma xs = rng.chance(50) ? random_submagma(x, rng) : x;
    Magma ys = xs.id() == x.id() ? random_submagma(y, rng)
                                 : (rng.chance(50) ? random_submagma(y, rng) : y);
    if (equal(xs, x) && equal(ys, y)) continue;
    if (subset(encode(s, xs, ys), whole))
      return SubPairCounterexample{x, y, xs, ys};
  }
  return std::nullopt;
}

}  // namespace magma
