#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magma/magma.hpp"
#include "magma/session.hpp"

namespace magma {

// The pair of x and y: pr(pr2(x) u pr2(a0)) u pr(pr2(y) u pr2(a1)).
// Its canonical form is a magma-ideal with exactly two maximal generators,
// the a0-tagged block carrying x and the a1-tagged block carrying y.
struct PairView {
  Magma first;
  Magma second;
  Magma whole;
};

PairView mk_pair(const Session& s, const Magma& x, const Magma& y);

// Shape recognition on the canonical form. Equivalent to the existential
// pair description with parameters a0, a1; the equivalence is checked
// against the finite oracle on small instances.
bool is_pair(const Session& s, const Magma& m);

// Inverse of mk_pair; unique by the pair equality law. Throws NotAPair.
std::pair<Magma, Magma> extract_pair(const Session& s, const Magma& m);

// Left-nested tuples: (x1,...,xn,y) = pair(tuple(x1..xn), y). Arity >= 2.
Magma mk_tuple(const Session& s, const std::vector<Magma>& xs);
std::vector<Magma> extract_tuple(const Session& s, const Magma& m, std::size_t arity);

// Which of the equality cases of the two-generator union law witnesses
// pr(x) u pr(y) = pr(x') u pr(y'); Unequal when the unions differ.
enum class UnionCaseTag { I, II, III, Unequal };

struct UnionCase {
  UnionCaseTag tag = UnionCaseTag::Unequal;
  // Case III detail: which component of {x, y} equals which of {x', y'}
  // (0 = first, 1 = second); the remaining two components are submagmas of
  // the equal ones.
  int left_index = -1;
  int right_index = -1;
};

UnionCase union2_equality_case(const Magma& x, const Magma& y,
                               const Magma& x2, const Magma& y2);

std::string to_string(const UnionCase& c);

// Candidate pair encoding plugged in for fuzzing only. No alternative
// encoding ships; the open question is whether any encoding avoids proper
// sub-pairs, and this hook searches for the counterexample that says it
// does not.
using PairEncoding = std::function<Magma(const Session&, const Magma&, const Magma&)>;

struct SubPairCounterexample {
  Magma x, y;    // outer components
  Magma xs, ys;  // distinct components whose encoding lands inside
};

// Random search for (x', y') != (x, y) with encode(x', y') below
// encode(x, y). The shipped encoding always yields one; an encoding that
// survives the budget is only unrefuted, never proven sub-pair-free.
std::optional<SubPairCounterexample> fuzz_sub_pairs(const Session& s,
                                                    const PairEncoding& encode,
                                                    unsigned budget, std::uint64_t seed);

}  // namespace magma
