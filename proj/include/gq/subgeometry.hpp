#ifndef GQ_SUBGEOMETRY_HPP
#define GQ_SUBGEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "gq/geometry.hpp"
#include "gq/perm.hpp"

namespace gq {

// A subgeometry anchored in its parent: the paper's "(S, X)" objects.
// Incidence is inherited; fullness and idealness are derived on demand.
struct AnchoredSubgeometry {
  const Geometry* parent = nullptr;
  Bitset points;
  Bitset lines;

  static AnchoredSubgeometry of(const Geometry& g, const std::vector<int>& pts,
                                const std::vector<int>& lns);
  static AnchoredSubgeometry empty(const Geometry& g);
  static AnchoredSubgeometry whole(const Geometry& g);

  bool line_full(int l) const { return parent->line_bits(l).subset_of(points); }
  bool point_ideal(int p) const;
  bool all_lines_full() const;
  int num_points() const { return points.count(); }
  int num_lines() const { return lines.count(); }

  bool contains(const AnchoredSubgeometry& o) const {
    return o.points.subset_of(points) && o.lines.subset_of(lines);
  }
  bool operator==(const AnchoredSubgeometry& o) const {
    return points == o.points && lines == o.lines;
  }
  bool operator<(const AnchoredSubgeometry& o) const {
    if (points == o.points) return lines < o.lines;
    return points < o.points;
  }

  // Induced geometry: included lines keep their included points.
  Geometry induced(std::vector<int>* point_of = nullptr, std::vector<int>* line_of = nullptr) const;
};

// --- perps, traces, spans -------------------------------------------------

Bitset perp(const Geometry& g, int x);                 // x-perp, includes x
Bitset trace_set(const Geometry& g, int x, int y);     // {x,y}-perp; SamePoint
Bitset span_set(const Geometry& g, int x, int y);      // {x,y}-perp-perp
bool lines_concurrent(const Geometry& g, int u, int v);
Bitset line_perp_pair(const Geometry& g, int u, int v);  // lines meeting both
Bitset line_span_pair(const Geometry& g, int u, int v);

// --- regularity and symmetry ----------------------------------------------

bool is_regular_pair(const Geometry& g, int u, int v);  // ConcurrentLines
bool is_regular_line(const Geometry& g, int u);
bool is_regular_point_pair(const Geometry& g, int x, int y);
bool is_regular_point(const Geometry& g, int x);

// Symmetries with axis U: automorphisms fixing every line concurrent with U.
PermGroup symmetries_about_line(const Geometry& g, const PermGroup& aut, int u);
bool is_axis_of_symmetry(const Geometry& g, const PermGroup& aut, int u);
bool is_translation_point(const Geometry& g, const PermGroup& aut, int x);  // NotThick

// --- grids and subquadrangles ----------------------------------------------

// The unique full grid containing a regular nonconcurrent line pair.
AnchoredSubgeometry grid_from_regular_pair(const Geometry& g, int u, int v);
std::vector<AnchoredSubgeometry> full_grids(const Geometry& g);

// Closure of a seed under axiom-(3) projections and line fullness.
AnchoredSubgeometry projection_closure(const Geometry& g, const AnchoredSubgeometry& seed);
AnchoredSubgeometry projection_closure_bounded(const Geometry& g, const AnchoredSubgeometry& seed,
                                               int pts_bound, int lines_bound, bool* exceeded);

struct SubGqSearch {
  std::vector<AnchoredSubgeometry> thick;  // proper full thick subGQs
  bool exhaustive = false;
  long long nodes = 0;
};
SubGqSearch thick_full_subgqs(const Geometry& g, int max_results = 1 << 20,
                              long long budget = 2'000'000);

// --- geometric hyperplanes ---------------------------------------------------

enum class HyperplaneKind { Ovoid, SubGQ, MaxPerp };
struct GeometricHyperplane {
  AnchoredSubgeometry sub;
  HyperplaneKind kind;
};
bool is_geometric_hyperplane(const Geometry& g, const AnchoredSubgeometry& s);
// Ovoids by exact-cover backtracking, lexicographic first branch.
std::vector<Bitset> ovoids(const Geometry& g, int limit = 1 << 20, long long budget = 50'000'000);
std::vector<GeometricHyperplane> geometric_hyperplanes(const Geometry& g,
                                                       long long budget = 2'000'000);

// --- remnants ----------------------------------------------------------------

// The A \ B geometry: induced on surviving points; fully-vanished lines leave
// empty-line marks, single-survivor lines leave hairy-point marks.
Geometry remove_closed(const Geometry& g, const AnchoredSubgeometry& s,
                       std::vector<int>* old_point_of = nullptr);

// --- decomposition -----------------------------------------------------------

struct DecompositionVerdict {
  bool decomposable = false;
  int case_tag = 0;  // (i)..(vii) as 1..7; 0 when primal
  AnchoredSubgeometry part1, part2;
  bool exhaustive = false;  // refutation searched the full shape space
};
DecompositionVerdict decomposition_verdict(const Geometry& g, bool blind_fallback = false,
                                           long long budget = 1'000'000);

// Union of two sub-pairs covering every point and line, both inherited
// geometries satisfying axiom (3), both proper.
bool is_valid_decomposition(const Geometry& g, const AnchoredSubgeometry& a,
                            const AnchoredSubgeometry& b);

// --- trace geometries ----------------------------------------------------------

enum class TraceBaseType { PartialOvoid, Perp, Grid };
struct TraceGeometry {
  Geometry geom;
  TraceBaseType base_type;
  std::vector<int> line_type;        // 0 = original line of T, 1 = subtended
  std::vector<int> parent_point_of;  // trace point -> parent point
};
TraceBaseType classify_trace_base(const AnchoredSubgeometry& t);  // WrongBaseType
TraceGeometry trace_geometry(const AnchoredSubgeometry& t);

// --- complete dual grids and arcs ----------------------------------------------

struct DualGridWitness {
  std::vector<int> small_side;  // s-1 mutually noncollinear points
  std::vector<int> big_side;    // s+1 mutually noncollinear points
};
std::vector<DualGridWitness> complete_dual_grids(const Geometry& g);  // WrongOrderShape
std::vector<int> arc_from_dual_grid(const Geometry& g, const DualGridWitness& w);
bool is_complete_arc(const Geometry& g, const std::vector<int>& arc);
std::vector<std::vector<int>> complete_arcs_of_size(const Geometry& g, int size,
                                                    long long budget = 20'000'000);

}  // namespace gq

#endif
