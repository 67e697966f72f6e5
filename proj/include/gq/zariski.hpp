#ifndef GQ_ZARISKI_HPP
#define GQ_ZARISKI_HPP

#include <optional>
#include <vector>

#include "gq/geometry.hpp"
#include "gq/subgeometry.hpp"

namespace gq {

enum class PrimalKind { Empty, OrdinaryPoint, FullLine, PerpInFullSub, FullGrid, ThickFullSubGQ };

struct PrimalElement {
  AnchoredSubgeometry sub;
  PrimalKind kind;
  int center = -1;  // perp centre, when applicable
};

// All primal points of Spec(X) within budget: ordinary points, full lines,
// ideal perps of full subquadrangles, full grids, and thick full subGQs with
// (s,t) != (2,2). The empty prime is implicit.
struct PrimalEnumeration {
  const Geometry* X = nullptr;
  std::vector<PrimalElement> elems;
  bool exhaustive = true;
};
PrimalEnumeration primal_subgeometries(const Geometry& x, long long budget = 2'000'000);

// Whether G, taken as a whole geometry, falls in one of the primal categories.
bool is_primal_geometry(const Geometry& g);
std::optional<AnchoredSubgeometry> generic_point(const Geometry& x);

// Ideal subgeometries: every included line full; point sets of any size count.
struct IdealSubgeometry {
  AnchoredSubgeometry sub;
};
IdealSubgeometry make_ideal(const AnchoredSubgeometry& s);  // NotIdeal

// C(S): the primal subgeometries contained in S.
struct ClosedSet {
  std::vector<int> members;  // indices into the enumeration
};
ClosedSet closed_set(const PrimalEnumeration& pe, const IdealSubgeometry& s);
bool closed_membership(const AnchoredSubgeometry& prime, const IdealSubgeometry& s);

struct Chain {
  std::vector<AnchoredSubgeometry> elements;  // strictly increasing; last is X itself
};

struct KrullResult {
  Chain chain;
  int dimension = 0;
  bool exact = false;
};

KrullResult krull_dimension(const Geometry& x, long long budget = 2'000'000);

enum class SpecKind { PROJ, AFF, QUAS };

// A spectrum with subspace semantics: PROJ is Spec(X) itself; AFF removes a
// geometric hyperplane; QUAS removes any closed (ideal) subgeometry.
class SpecView {
 public:
  static SpecView proj(const Geometry& x);
  static SpecView aff(const Geometry& x, const AnchoredSubgeometry& hyperplane);
  static SpecView quas(const Geometry& x, const AnchoredSubgeometry& closed);

  SpecKind kind() const { return kind_; }
  const PrimalEnumeration& primes() const { return prim_; }
  // primes surviving in the subspace (not contained in the removed set)
  std::vector<int> surviving_primes() const;
  bool has_generic_point() const;
  KrullResult dimension(long long budget = 2'000'000) const;
  // The remnant geometry X minus the removed set, viewed freshly: irreducible
  // iff its own spectrum has a generic point.
  Geometry remnant() const;
  bool remnant_irreducible() const;

 private:
  const Geometry* x_ = nullptr;
  SpecKind kind_ = SpecKind::PROJ;
  AnchoredSubgeometry removed_;
  bool has_removed_ = false;
  PrimalEnumeration prim_;
};

}  // namespace gq

#endif
