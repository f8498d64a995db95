#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magma/pair.hpp"
#include "magma/session.hpp"

namespace magma {

// A binary relation: the union of the principal ideals of its intended
// pairs. The intended presentation is kept alongside the canonical whole;
// which elements count as intended is a property of the presentation, not
// of the magma (a pair dominated inside the whole stays listed).
class Relation {
 public:
  const Session& session() const { return session_; }
  const std::vector<std::pair<Magma, Magma>>& intended() const { return intended_; }
  const std::vector<Magma>& intended_pair_magmas() const { return pair_magmas_; }
  const Magma& whole() const { return whole_; }

 private:
  Relation(Session s, std::vector<std::pair<Magma, Magma>> intended,
           std::vector<Magma> pair_magmas, Magma whole)
      : session_(std::move(s)),
        intended_(std::move(intended)),
        pair_magmas_(std::move(pair_magmas)),
        whole_(std::move(whole)) {}

  Session session_;
  std::vector<std::pair<Magma, Magma>> intended_;
  std::vector<Magma> pair_magmas_;
  Magma whole_;

  friend Relation mk_relation(const Session&, std::vector<std::pair<Magma, Magma>>);
};

Relation mk_relation(const Session& s, std::vector<std::pair<Magma, Magma>> pairs);

// The product of two magma-ideals: intended pairs over the generator grid.
// Every pair over elements embeds in a generator pair, so the grid
// generates the whole product. Throws KindError on atom-ideal input.
Relation product(const Session& s, const Magma& x, const Magma& y);

// The bare set of pairs over two magma-ideals. Not a magma; never
// materialized, queried only through weak_member.
struct WeakProduct {
  Magma left;
  Magma right;
};

WeakProduct weak_product(const Magma& x, const Magma& y);  // KindError
bool weak_member(const Session& s, const Magma& p, const WeakProduct& wp);

Magma dom(const Relation& r);
Magma ran(const Relation& r);

enum class ElementClass { Intended, CollateralPair, CollateralNonPair, NotElement };
ElementClass classify(const Relation& r, const Magma& e);
std::string to_string(ElementClass c);

// Ideal of the images of z: generated by the w_i whose z_i lie above z.
// nullopt when z is outside the domain.
std::optional<Magma> slice(const Relation& r, const Magma& z);

// Equal intended inputs map to equal intended outputs.
bool is_semifunction(const Relation& r);

struct FunctionCheck {
  bool semifunction = false;
  bool function = false;
  // When function is false because some image family lacks a greatest
  // element: an input witnessing it, with the maximal images at that input.
  std::optional<Magma> clash_input;
  std::vector<Magma> clash_images;
};

// Function decision by closed trigger-set enumeration: for every nonempty
// subset S of the presentation whose inputs intersect to a magma z_S, the
// triggered family {w_i : z_S below z_i} must contain a greatest element.
// Closed sets enumerate exactly the realizable trigger sets, so the
// decision is exact; the suites cross-check it against slice sampling.
// Throws PresentationTooLarge above the cap.
FunctionCheck check_function(const Relation& r, std::size_t cap = 12);
bool is_function(const Relation& r, std::size_t cap = 12);

// The greatest image at z. Requires a function presentation and z in the
// domain; NoGreatestImage is unreachable when is_function holds.
Magma apply(const Relation& r, const Magma& z);

}  // namespace magma
