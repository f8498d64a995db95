#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "magma/magma.hpp"
#include "magma/session.hpp"

namespace magma {

// Brute-force extensional semantics over a finite atom window: every level
// family is enumerated outright (level k+1 = nonempty lower-open subsets of
// level k), elements get global ids, and denotations become explicit id
// sets. Symbolic decisions are replayed against plain set algebra here; the
// suites demand zero disagreements.
//
// Finite preorders necessarily have minimal elements, so only algebraic
// identities are checked against this universe, never infinitude claims.
class FiniteUniverse {
 public:
  using IdSet = std::vector<std::uint32_t>;  // sorted, unique

  // Window atoms must be pairwise distinct and share one domain; families
  // are enumerated up to `depth`. Throws BoundExceeded when a family is too
  // large to enumerate (depth > 3, more than 8 atoms, or a family of more
  // than 22 elements to power-set over).
  static FiniteUniverse build(std::vector<Atom> atoms, unsigned depth);

  unsigned depth() const { return depth_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t family_size(unsigned level) const { return families_.at(level - 1).size(); }
  const std::vector<std::uint32_t>& family(unsigned level) const {
    return families_.at(level - 1);
  }

  unsigned level_of(std::uint32_t id) const;             // 0 = atom
  const IdSet& members_of(std::uint32_t id) const;       // set ids only
  const Magma& symbolic_of(std::uint32_t id) const;      // set ids only

  // Id of the window atom equal to a; OutOfRange when absent.
  std::uint32_t atom_id(const Atom& a) const;

  // Explicit denotation of a magma whose atoms all lie in the window and
  // whose generators are all level-uniform at materialized depth.
  IdSet ext_set(const Magma& m) const;
  bool materializable(const Magma& m) const;

  // Extensional inclusion / equality / membership of denotations. Set
  // comparison wherever both sides materialize; otherwise reduces by the
  // down-closure principle (every generator of x must denote a subset of
  // some generator of y), whose base cases are materialized comparisons.
  bool ext_leq(const Magma& x, const Magma& y) const;
  bool ext_equal(const Magma& x, const Magma& y) const;
  bool ext_member(const Magma& z, const Magma& x) const;
  bool ext_member(const Atom& z, const Magma& x) const;

  // Id whose member set equals s, or throws OutOfRange.
  std::uint32_t id_of_set(const IdSet& s) const;

 private:
  struct Elem {
    unsigned level = 0;
    IdSet members;
    Magma symbolic;
    Elem(unsigned lv, IdSet m, Magma sym)
        : level(lv), members(std::move(m)), symbolic(std::move(sym)) {}
  };

  FiniteUniverse() = default;

  bool uniform(const Magma& m) const;
  IdSet pr_ids(const Magma& g) const;  // all set ids denoting submagmas of g

  std::vector<Atom> atoms_;
  unsigned depth_ = 0;
  std::vector<Elem> elems_;                        // set elements, id = natoms + index
  std::vector<std::vector<std::uint32_t>> families_;  // per level, 1-based
};

// Window construction from a CLI spec: "tag:TxV", "plane:XxY", "chain:N",
// "antichain:N".
std::vector<Atom> window_from_spec(const std::string& spec);

struct OracleReport {
  std::vector<std::string> lines;
  unsigned cases = 0;
  unsigned mismatches = 0;
};

// Exhaustive agreement of subset/equal/member/union/intersect between the
// symbolic kernel and the extensional sets, over all magmas with at most
// two generators per node drawn from the window.
OracleReport oracle_gate(const FiniteUniverse& u);

// Pair equality law over every quadruple from the level-1 family, three
// ways: symbolic verdict, componentwise equality, extensional comparison.
OracleReport oracle_pair(const FiniteUniverse& u, const Session& s);

// Level-structure facts: every lower-open subset of a level-1 element is
// exactly its materialized down-set, submagmas never change level, and the
// symbolic reconstruction of every family member denotes its own id set.
OracleReport oracle_levels(const FiniteUniverse& u);

// Function verdicts on tiny relations versus an exhaustive extensional
// greatest-image check over the whole finite domain.
OracleReport oracle_functions(const FiniteUniverse& u, const Session& s);

}  // namespace magma
