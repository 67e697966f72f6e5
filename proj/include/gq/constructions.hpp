#ifndef GQ_CONSTRUCTIONS_HPP
#define GQ_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gq/geometry.hpp"
#include "gq/projective.hpp"

namespace gq {

Geometry empty_geometry();
Geometry point_set_geometry(int n);
Geometry line_geometry(int points_on_line);
// u*v points, u+v lines: regulus R1 of u lines (v points each), R2 of v lines.
Geometry grid_geometry(int u, int v);
Geometry dual_grid_geometry(int u, int v);
// One centre point on t+1 lines, each with pts_per_line points (centre included).
Geometry perp_geometry(int t, int pts_per_line);

// Defining forms of the orthogonal quadrangles, in m+1 variables.
QuadraticForm orthogonal_form(int m, const Fq& f);

struct QuadricGeometry {
  Geometry geom;
  QuadraticForm form;
  std::vector<int> quadric_point_ids;  // ids in the ambient space
};

// Points and lines of the quadric in PG(m,q), m in {3,4,5}; q = p^k given as a field.
QuadricGeometry quadric_gq_full(int m, const Fq& f);
Geometry quadric_gq(int m, int q);

Geometry wq(int q);  // dual of Q(4,q)
Geometry h3(int q);  // dual of Q(5,q), i.e. H(3,q^2)

struct Oval {
  int q = 0;
  std::vector<int> points;            // ids in PG(2,q)
  int nucleus = -1;                   // id in PG(2,q)
  std::vector<std::vector<int>> pg2;  // coords of the oval points
  std::vector<int> nucleus_coords;
};

// Verifies the oval axioms exhaustively over the lines of PG(2,q):
// every line meets the set in <= 2 points, each oval point has exactly one
// tangent, and the nucleus (when given) lies on every tangent.
bool verify_oval(const ProjSpace& plane, const std::vector<int>& pts, int nucleus);

// (1 : t : t^{2^i}) plus (0:0:1), nucleus (0:1:0); requires gcd(i,h)=1.
Oval segre_oval(int i, int h);
// (1 : t : t^6) plus (0:0:1), nucleus (0:1:0); requires h odd.
Oval brown_oval(int h);

// Internal structure of a T2(O) quadrangle, kept for Galois-descent work.
struct T2Data {
  Geometry geom;
  int q = 0;
  // point kinds
  enum PKind { Affine, Planar, Infty };
  std::vector<PKind> point_kind;
  std::vector<std::vector<int>> point_coords;  // Affine: PG(3) coords; Planar: dual coords
  // line kinds
  enum LKind { Ambient, OvalPoint };
  std::vector<LKind> line_kind;
  std::vector<std::vector<std::vector<int>>> line_coords;  // Ambient: coords of its PG(3) pts
  std::vector<std::vector<int>> line_oval_coords;          // OvalPoint: coords in PG(2)
};

T2Data t2_of_oval_full(const Oval& oval);
Geometry t2_of_oval(const Oval& oval);

// Number of projective zeros of F over F_{q^m}; coefficients of F live in
// F_q = GF(p^k) and are embedded canonically. Honors GQKIT_THREADS.
long long count_form_zeros(const QuadraticForm& F, const Fq& base, int m);

Geometry fano_plane();

}  // namespace gq

#endif
