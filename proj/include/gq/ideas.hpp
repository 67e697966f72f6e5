#ifndef GQ_IDEAS_HPP
#define GQ_IDEAS_HPP

#include "gq/iso.hpp"
#include "gq/subgeometry.hpp"

namespace gq {

// IDEA 1: an isomorphism of the parents carries S to S'; decided by the joint
// certificates of the colored pairs (S,X) and (S',X').
bool idea1_isomorphic(const AnchoredSubgeometry& a, const AnchoredSubgeometry& b);

// IDEA 1 for anchored lines with the paper's subGQ quantifier: there must be
// thick subGQs Y <= X and Y' <= X' and an isomorphism Y -> Y' mapping U to U'.
// Y ranges over the thick full subGQs (including the geometry itself).
bool idea1_isomorphic_lines(const Geometry& x, int line_x, const Geometry& y, int line_y,
                            long long budget = 2'000'000);

// IDEA 2: equal parameters and permutation-equivalent induced stabilizer
// actions on the subgeometry's elements.
bool idea2_isomorphic(const AnchoredSubgeometry& a, const PermGroup& aut_a,
                      const AnchoredSubgeometry& b, const PermGroup& aut_b);

// IDEA 3 / p-trace: type-preserving isomorphism of trace geometries.
bool p_trace_isomorphic(const AnchoredSubgeometry& a, const AnchoredSubgeometry& b);
// general trace isomorphism (line types ignored)
bool trace_isomorphic(const AnchoredSubgeometry& a, const AnchoredSubgeometry& b);

}  // namespace gq

#endif
