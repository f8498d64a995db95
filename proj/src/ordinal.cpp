#include "magma/ordinal.hpp"

#include "magma/errors.hpp"

namespace magma {

MagNat nat(const Session& s, unsigned n, NatVariant v, unsigned cap) {
  if (n > cap) throw DepthCap("nat: index above the depth cap");
  if (v == NatVariant::Alt) return MagNat{n, v, pr_iter(n + 2, s.a0)};
  Magma value = pr_iter(2, s.a0);
  for (unsigned i = 0; i < n; ++i) value = unite(value, pr(value));
  return MagNat{n, v, value};
}

bool ord_less(const MagNat& a, const MagNat& b) {
  if (a.variant != NatVariant::Primary || b.variant != NatVariant::Primary)
    throw VariantMismatch("ord_less: defined on the Primary variant only");
  return subset(a.value, b.value) && !equal(a.value, b.value);
}

bool alt_disjoint(const Session& s, unsigned m, unsigned n, unsigned cap) {
  Magma vm = nat(s, m, NatVariant::Alt, cap).value;
  Magma vn = nat(s, n, NatVariant::Alt, cap).value;
  return !intersect(vm, vn).has_value();
}

Ordinal ord_add(Ordinal a, Ordinal b) {
  constexpr std::uint32_t cap = 0x7fffffffu;
  if (b.q > 0) {
    // Finite parts below a limit are absorbed.
    if (a.q > cap - b.q) throw NotRepresentable("ord_add: beyond w^2 scale");
    return Ordinal{a.q + b.q, b.r};
  }
  if (a.r > cap - b.r) throw NotRepresentable("ord_add: finite part overflow");
  return Ordinal{a.q, a.r + b.r};
}

CountGenFun::CountGenFun(Session s, std::vector<Magma> prefix, TailRule tail,
                         std::optional<Magma> tail_value, unsigned cap)
    : session_(std::move(s)),
      prefix_(std::move(prefix)),
      tail_(tail),
      tail_value_(std::move(tail_value)),
      cap_(cap) {
  if (tail_ == TailRule::Constant && !tail_value_)
    throw MagmaError("countgen: constant tail needs a value");
  if (tail_ != TailRule::Constant && prefix_.empty())
    throw MagmaError("countgen: pr-tower and shift tails need a nonempty prefix");
}

Magma CountGenFun::generator(unsigned n) const {
  if (n < 1) throw NotInDomain("countgen: generators are indexed from 1");
  if (n <= prefix_.size()) return prefix_[n - 1];
  switch (tail_) {
    case TailRule::Constant:
      return *tail_value_;
    case TailRule::PrTower: {
      Magma cur = prefix_.back();
      for (unsigned i = static_cast<unsigned>(prefix_.size()); i < n; ++i) cur = pr(cur);
      return cur;
    }
    case TailRule::Shift:
      return prefix_[(n - 1) % prefix_.size()];
  }
  throw MagmaError("countgen: unknown tail rule");
}

Magma CountGenFun::apply(const Magma& z) const {
  Level l = z.level();
  if (l.q != 0 || l.r < 3) throw NotInDomain("cg_apply: argument not below any positive natural");
  unsigned n = l.r - 2;
  Magma candidate = nat(session_, n, NatVariant::Alt, cap_).value;
  if (!subset(z, candidate)) throw NotInDomain("cg_apply: argument outside the domain");
  return generator(n);
}

}  // namespace magma
