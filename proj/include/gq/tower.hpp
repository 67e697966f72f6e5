#ifndef GQ_TOWER_HPP
#define GQ_TOWER_HPP

#include <vector>

#include "gq/constructions.hpp"
#include "gq/subgeometry.hpp"

namespace gq {

// Finite levels of the oval tower: level h carries the oval over F_{2^h} and
// its T2 quadrangle. The infinite limit field is never materialized; every
// statement is checked at finite cofinal levels of the divisibility chain.
struct TowerLevel {
  int h = 0;
  Oval oval;
  T2Data t2;
};

struct Tower {
  int i = 0;          // Segre exponent; 0 marks the Brown family (1:t:t^6)
  std::vector<TowerLevel> levels;  // ordered along the divisibility chain

  const TowerLevel& level(int h) const;  // NotInTower
};

// exponents must form a divisibility chain, each coprime to i (Segre) or odd
// (Brown, i = 0). Oval embeddings along the chain are verified point-by-point.
Tower build_tower(int i, const std::vector<int>& exponents);

// element maps of the level embedding Gamma_h -> Gamma_H under the canonical
// subfield inclusion
struct ElementMaps {
  std::vector<int> point_map;
  std::vector<int> line_map;
};
ElementMaps tower_embedding(const Tower& t, int h, int top_h);

enum class ElementKind { AffinePoint, PlanarPoint, Symbol, AnyPoint, Line };

struct OrbitDecomposition {
  std::vector<std::vector<int>> orbits;  // level-H element ids, least-id labeled
  int fixed_count = 0;                   // singleton orbits
};

// Orbits of the h-power Frobenius acting on the level-H elements of one kind.
OrbitDecomposition frobenius_orbits(const Tower& t, int h, int top_h, ElementKind kind);

// The Frobenius permutation of the level-top geometry: points then lines.
std::vector<int> frobenius_permutation(const Tower& t, int h, int top_h);

struct RationalCheck {
  std::vector<int> fixed_points, fixed_lines;
  bool equals_embedded_image = false;
  Geometry fixed_geometry;  // induced on the fixed elements
};
RationalCheck rational_elements(const Tower& t, int h, int top_h);

// Base extension of an ideal subgeometry following C1 (full lines stay full),
// C2 (ideal perps stay ideal), C3 (full subquadrangles extend to the subGQ
// generated by their extended full lines); C2.B emerges from C1+C3 over the
// subGQs found, with a completeness flag from the search.
struct IdealExtension {
  AnchoredSubgeometry extended;  // subgeometry of the level-top geometry
  bool subgq_search_exhaustive = true;
};
IdealExtension extend_ideal(const Tower& t, int h, int top_h, const AnchoredSubgeometry& ideal);

// Enriched closed set at level h: Galois orbits of the level-H primes inside
// the extension of the ideal. Rational primes are the singleton orbits.
struct EnrichedPrime {
  AnchoredSubgeometry rep;  // least representative, in the level-top geometry
  int orbit_size = 1;
};
struct EnrichedClosedSet {
  std::vector<EnrichedPrime> primes;
  bool exhaustive = true;
};
EnrichedClosedSet descent_closed_set(const Tower& t, int h, int top_h,
                                     const AnchoredSubgeometry& ideal);

// Projective zero count of Y^(2^i) = Z X^(2^i - 1) over F_{2^H}: the scheme
// side of the oval comparison.
long long oval_curve_point_count(int i, int top_h);

}  // namespace gq

#endif
