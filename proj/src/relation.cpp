#include "magma/relation.hpp"

#include "magma/errors.hpp"

namespace magma {

Relation mk_relation(const Session& s, std::vector<std::pair<Magma, Magma>> pairs) {
  if (pairs.empty()) throw EmptyPresentation("mk_relation: no intended pairs");
  std::vector<Magma> pair_magmas;
  pair_magmas.reserve(pairs.size());
  for (const auto& [z, w] : pairs) pair_magmas.push_back(mk_pair(s, z, w).whole);
  Magma whole = magma_ideal(pair_magmas);
  return Relation(s, std::move(pairs), std::move(pair_magmas), std::move(whole));
}

Relation product(const Session& s, const Magma& x, const Magma& y) {
  if (x.kind() != Kind::MagmaIdeal || y.kind() != Kind::MagmaIdeal)
    throw KindError("product: both factors must be magma-ideals");
  std::vector<std::pair<Magma, Magma>> pairs;
  for (const Magma& g : x.magma_gens())
    for (const Magma& h : y.magma_gens()) pairs.emplace_back(g, h);
  return mk_relation(s, std::move(pairs));
}

WeakProduct weak_product(const Magma& x, const Magma& y) {
  if (x.kind() != Kind::MagmaIdeal || y.kind() != Kind::MagmaIdeal)
    throw KindError("weak_product: both factors must be magma-ideals");
  return WeakProduct{x, y};
}

bool weak_member(const Session& s, const Magma& p, const WeakProduct& wp) {
  if (!is_pair(s, p)) return false;
  auto [z, w] = extract_pair(s, p);
  return member(z, wp.left) && member(w, wp.right);
}

Magma dom(const Relation& r) {
  std::vector<Magma> gens;
  for (const auto& [z, w] : r.intended()) gens.push_back(z);
  return magma_ideal(std::move(gens));
}

Magma ran(const Relation& r) {
  std::vector<Magma> gens;
  for (const auto& [z, w] : r.intended()) gens.push_back(w);
  return magma_ideal(std::move(gens));
}

ElementClass classify(const Relation& r, const Magma& e) {
  for (const Magma& p : r.intended_pair_magmas())
    if (equal(e, p)) return ElementClass::Intended;
  if (!member(e, r.whole())) return ElementClass::NotElement;
  return is_pair(r.session(), e) ? ElementClass::CollateralPair
                                 : ElementClass::CollateralNonPair;
}

std::string to_string(ElementClass c) {
  switch (c) {
    case ElementClass::Intended: return "intended";
    case ElementClass::CollateralPair: return "collateral-pair";
    case ElementClass::CollateralNonPair: return "collateral-non-pair";
    case ElementClass::NotElement: return "not-element";
  }
  return "?";
}

std::optional<Magma> slice(const Relation& r, const Magma& z) {
  std::vector<Magma> images;
  for (const auto& [zi, wi] : r.intended())
    if (subset(z, zi)) images.push_back(wi);
  if (images.empty()) return std::nullopt;
  return magma_ideal(std::move(images));
}

bool is_semifunction(const Relation& r) {
  const auto& ps = r.intended();
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (equal(ps[i].first, ps[j].first) && !equal(ps[i].second, ps[j].second))
        return false;
  return true;
}

namespace {

// Greatest member of the family {w_i : i in S}, as an index, or -1.
int greatest_index(const std::vector<std::pair<Magma, Magma>>& ps,
                   const std::vector<std::size_t>& idx) {
  for (std::size_t j : idx) {
    bool top = true;
    for (std::size_t i : idx)
      if (!subset(ps[i].second, ps[j].second)) { top = false; break; }
    if (top) return static_cast<int>(j);
  }
  return -1;
}

}  // namespace

FunctionCheck check_function(const Relation& r, std::size_t cap) {
  const auto& ps = r.intended();
  std::size_t n = ps.size();
  if (n > cap) throw PresentationTooLarge("check_function: presentation above cap");

  FunctionCheck out;
  out.semifunction = is_semifunction(r);
  if (!out.semifunction) {
    out.function = false;
    return out;
  }

  // z over every nonempty subset, by mask dp: z[m] = z[m without low bit] ^ z[low bit].
  std::vector<std::optional<Magma>> meet(static_cast<std::size_t>(1) << n);
  std::vector<bool> seen_closure(static_cast<std::size_t>(1) << n, false);
  out.function = true;
  for (std::size_t m = 1; m < meet.size(); ++m) {
    std::size_t low = m & (~m + 1);
    std::size_t low_i = static_cast<std::size_t>(__builtin_ctzll(m));
    if (m == low) {
      meet[m] = ps[low_i].first;
    } else {
      const auto& rest = meet[m ^ low];
      meet[m] = rest ? intersect(*rest, ps[low_i].first) : std::nullopt;
    }
    if (!meet[m]) continue;
    const Magma& z = *meet[m];
    std::size_t closure = 0;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (subset(z, ps[i].first)) { closure |= static_cast<std::size_t>(1) << i; idx.push_back(i); }
    if (seen_closure[closure]) continue;
    seen_closure[closure] = true;
    if (greatest_index(ps, idx) < 0) {
      out.function = false;
      out.clash_input = z;
      for (std::size_t i : idx) {
        bool maximal = true;
        for (std::size_t j : idx)
          if (i != j && subset(ps[i].second, ps[j].second) &&
              !subset(ps[j].second, ps[i].second)) { maximal = false; break; }
        if (maximal) out.clash_images.push_back(ps[i].second);
      }
      return out;
    }
  }
  return out;
}

bool is_function(const Relation& r, std::size_t cap) {
  return check_function(r, cap).function;
}

Magma apply(const Relation& r, const Magma& z) {
  const auto& ps = r.intended();
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (subset(z, ps[i].first)) idx.push_back(i);
  if (idx.empty()) throw NotInDomain("apply: argument outside the domain");
  int j = greatest_index(ps, idx);
  if (j < 0) throw NoGreatestImage("apply: image family has no greatest element");
  return ps[static_cast<std::size_t>(j)].second;
}

}  // namespace magma
