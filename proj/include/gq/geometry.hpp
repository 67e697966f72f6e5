#ifndef GQ_GEOMETRY_HPP
#define GQ_GEOMETRY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gq/bitset.hpp"
#include "gq/common.hpp"

namespace gq {

struct OrderPair {
  int s = 0;  // points per line minus one
  int t = 0;  // lines per point minus one
  bool operator==(const OrderPair& o) const { return s == o.s && t == o.t; }
};

// Remnant bookkeeping for A \ B semantics: a line whose points all vanished but
// which was not itself removed leaves an empty line; a line with a single
// survivor leaves a hairy point. Neither is a proper line of the geometry.
struct EmptyLineMark {
  std::string origin;
};
struct HairyPointMark {
  int point = -1;
  std::string origin;
};

// Finite point-line incidence structure with symmetric incidence. Points and
// lines are contiguous 0-based ids; coordinates and provenance live in labels.
class Geometry {
 public:
  Geometry() = default;

  // Throws OutOfRangeId / DuplicatePointOnLine. Lines may repeat and may have
  // fewer than 2 points (remnants need that); GQ checkers reject them later.
  static Geometry create(int n_points, std::vector<std::vector<int>> lines);

  int num_points() const { return n_points_; }
  int num_lines() const { return int(line_pts_.size()); }

  const std::vector<int>& line_points(int l) const { return line_pts_[l]; }
  const std::vector<int>& lines_through(int p) const { return point_lines_[p]; }
  const Bitset& line_bits(int l) const { return line_bits_[l]; }

  // Collinearity includes the point itself.
  const Bitset& collinear(int p) const { return collinear_[p]; }
  bool are_collinear(int p, int q) const { return collinear_[p].test(q); }
  bool incident(int p, int l) const { return line_bits_[l].test(p); }

  int line_size(int l) const { return int(line_pts_[l].size()); }
  int point_degree(int p) const { return int(point_lines_[p].size()); }

  // The line joining two distinct collinear points, or -1 if none / ambiguous
  // geometries return the least such line id.
  int joining_line(int p, int q) const;

  std::map<int, std::string> point_labels;
  std::map<int, std::string> line_labels;
  std::string note;
  std::vector<EmptyLineMark> empty_line_marks;
  std::vector<HairyPointMark> hairy_point_marks;

 private:
  int n_points_ = 0;
  std::vector<std::vector<int>> line_pts_;
  std::vector<std::vector<int>> point_lines_;
  std::vector<Bitset> line_bits_;
  std::vector<Bitset> collinear_;
};

struct Axiom3Certificate {
  bool pass = true;
  // On failure of (3): a non-incident pair (point, line) with its witness list
  // (empty or >= 2 entries). On failure of (3)~: the witness triangle.
  int witness_point = -1;
  int witness_line = -1;
  std::vector<int> witnesses;
};

struct Axiom3TypeTag {
  enum Kind {
    Empty,
    PointSet,
    LineSet,
    Grid,       // u x v, u != v, both >= 2
    DualGrid,   // dual of the above
    Perp,       // one centre point on all t+1 lines
    DualPerp,   // one spine line carrying all s+1 points
    ThickGQ,
    ThinGQ_S1,  // order (s,1), the square grid
    ThinGQ_1T,  // order (1,t), the square dual grid
  } kind = Empty;
  int a = 0, b = 0;  // Grid/DualGrid: (u,v); Perp: (t); DualPerp: (s); ThinGQ: (s,1)/(1,t)
  std::string name() const;
  bool operator==(const Axiom3TypeTag& o) const { return kind == o.kind && a == o.a && b == o.b; }
};

Geometry dualize(const Geometry& g);

std::optional<OrderPair> detect_order(const Geometry& g);

// Axiom (3): every non-incident (x, Y) has exactly one point z on Y collinear with x.
Axiom3Certificate check_axiom3(const Geometry& g);
// Axiom (3)~: at most one such z; equivalently no triangles.
Axiom3Certificate check_axiom3_tilde(const Geometry& g);

bool is_thick(const Geometry& g);

// Classifies a geometry satisfying axiom (3) into one of the listed types.
// Throws NotAxiom3 when the precondition fails.
Axiom3TypeTag classify_axiom3_type(const Geometry& g);

// Simple undirected graph on the points; every vertex adjacent to itself.
struct Graph {
  int n = 0;
  std::vector<Bitset> adj;  // includes the loop bit
  bool adjacent(int u, int v) const { return adj[u].test(v); }
  int degree_no_loop(int u) const { return adj[u].count() - 1; }
};

Graph collinearity_graph(const Geometry& g);

// Relabels points and lines; point_perm[p] = new id of old point p.
Geometry relabel(const Geometry& g, const std::vector<int>& point_perm,
                 const std::vector<int>& line_perm);

// Asserts |P| = (s+1)(st+1), |L| = (t+1)(st+1) for a GQ that detect_order accepts.
bool gq_count_identities(const Geometry& g);

}  // namespace gq

#endif
