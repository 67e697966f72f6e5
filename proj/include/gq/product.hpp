#ifndef GQ_PRODUCT_HPP
#define GQ_PRODUCT_HPP

#include <optional>
#include <set>
#include <vector>

#include "gq/geometry.hpp"
#include "gq/subgeometry.hpp"

namespace gq {

// Cartesian product realized on points with lines as layer copies of factor
// lines; its collinearity graph is the Cartesian product of the factor graphs.
struct ProductGeometry {
  Geometry geom;
  int left_points = 0, right_points = 0;
  int point_id(int a, int b) const { return a * right_points + b; }
};

ProductGeometry cartesian_product(const Geometry& a, const Geometry& b);

std::set<int> line_spectrum(const Geometry& g);

// Prop prodwell(2): Y x (X \ C) = (Y x X) \ (Y x C), element-wise.
bool product_respects_closure(const Geometry& y, const Geometry& x, const AnchoredSubgeometry& c);

struct PrimeProductVerdict {
  bool product_satisfies_axiom3 = false;
  bool factors_are_point_sets = false;
  bool factors_are_lines = false;
  bool consistent_with_proposition = false;
  Axiom3Certificate certificate;
};
// Axiom (3) holds on a product of (3)~-geometries only when both factors are
// point sets or both are single lines.
PrimeProductVerdict product_is_prime_only_if(const Geometry& a, const Geometry& b);

// --- graphs ------------------------------------------------------------------

struct SimpleGraph {
  int n = 0;
  std::vector<Bitset> adj;  // loop-free
  bool adjacent(int u, int v) const { return adj[u].test(v); }
};

SimpleGraph strip_loops(const Graph& g);
SimpleGraph graph_cartesian_product(const SimpleGraph& a, const SimpleGraph& b);
unsigned long long graph_aut_order(const SimpleGraph& g);
bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// Exact primality w.r.t. the Cartesian product at desk scale: square-relation
// edge classes plus verified reconstruction of every class bipartition.
bool is_prime_cartesian(const SimpleGraph& g, long long budget = 4'000'000);

// |Aut(C(a) x C(b))| == |Aut C(a)| * |Aut C(b)| (times 2 when the factors are
// isomorphic). Pre: both collinearity graphs prime. NotPrimeFactor otherwise.
bool sabidussi_check(const Geometry& a, const Geometry& b);

// --- fiber products ----------------------------------------------------------

// Graph morphisms in the loops-included sense: u ~ v or u = v maps to the same.
bool is_graph_morphism(const SimpleGraph& from, const SimpleGraph& to,
                       const std::vector<int>& img);

// Verifies the psi-compatibility of a cone over (G, H) and returns the unique
// mediating morphism into G x H. DiagramDoesNotCommute on violation.
std::vector<int> verify_fiber_terminal(const SimpleGraph& apex, const std::vector<int>& phi1,
                                       const std::vector<int>& phi2, const SimpleGraph& g,
                                       const SimpleGraph& h);

}  // namespace gq

#endif
