#include "gq/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gq {

Geometry Geometry::create(int n_points, std::vector<std::vector<int>> lines) {
  require(n_points >= 0, Err::OutOfRangeId, "negative point count");
  Geometry g;
  g.n_points_ = n_points;
  g.point_lines_.assign(n_points, {});
  g.collinear_.assign(n_points, Bitset(n_points));
  for (auto& ln : lines) {
    std::sort(ln.begin(), ln.end());
    for (size_t i = 0; i < ln.size(); ++i) {
      require(ln[i] >= 0 && ln[i] < n_points, Err::OutOfRangeId,
              "line references point id " + std::to_string(ln[i]));
      require(i == 0 || ln[i] != ln[i - 1], Err::DuplicatePointOnLine,
              "line repeats point id " + std::to_string(ln[i]));
    }
    int lid = int(g.line_pts_.size());
    Bitset bits = Bitset::of(n_points, ln);
    for (int p : ln) {
      g.point_lines_[p].push_back(lid);
      g.collinear_[p] |= bits;
    }
    g.line_pts_.push_back(std::move(ln));
    g.line_bits_.push_back(std::move(bits));
  }
  for (int p = 0; p < n_points; ++p) g.collinear_[p].set(p);
  return g;
}

int Geometry::joining_line(int p, int q) const {
  for (int l : point_lines_[p])
    if (line_bits_[l].test(q)) return l;
  return -1;
}

Geometry dualize(const Geometry& g) {
  std::vector<std::vector<int>> dual_lines(g.num_points());
  for (int p = 0; p < g.num_points(); ++p) dual_lines[p] = g.lines_through(p);
  Geometry d = Geometry::create(g.num_lines(), dual_lines);
  for (auto& [l, s] : g.line_labels) d.point_labels[l] = s;
  for (auto& [p, s] : g.point_labels) d.line_labels[p] = s;
  if (!g.note.empty()) d.note = "dual of: " + g.note;
  return d;
}

std::optional<OrderPair> detect_order(const Geometry& g) {
  if (g.num_points() == 0 || g.num_lines() == 0) return std::nullopt;
  int s1 = g.line_size(0);
  for (int l = 1; l < g.num_lines(); ++l)
    if (g.line_size(l) != s1) return std::nullopt;
  int t1 = g.point_degree(0);
  for (int p = 1; p < g.num_points(); ++p)
    if (g.point_degree(p) != t1) return std::nullopt;
  if (s1 < 1 || t1 < 1) return std::nullopt;  // every element must carry an incidence
  return OrderPair{s1 - 1, t1 - 1};
}

Axiom3Certificate check_axiom3(const Geometry& g) {
  Axiom3Certificate c;
  for (int l = 0; l < g.num_lines(); ++l) {
    const Bitset& onl = g.line_bits(l);
    for (int p = 0; p < g.num_points(); ++p) {
      if (onl.test(p)) continue;
      int k = g.collinear(p).count_and(onl);
      if (k != 1) {
        c.pass = false;
        c.witness_point = p;
        c.witness_line = l;
        c.witnesses = (g.collinear(p) & onl).to_vector();
        return c;
      }
    }
  }
  return c;
}

Axiom3Certificate check_axiom3_tilde(const Geometry& g) {
  Axiom3Certificate c;
  for (int l = 0; l < g.num_lines(); ++l) {
    const Bitset& onl = g.line_bits(l);
    for (int p = 0; p < g.num_points(); ++p) {
      if (onl.test(p)) continue;
      if (g.collinear(p).count_and(onl) > 1) {
        c.pass = false;
        c.witness_point = p;
        c.witness_line = l;
        c.witnesses = (g.collinear(p) & onl).to_vector();
        return c;
      }
    }
  }
  // Two lines sharing two points also form a degenerate triangle.
  for (int a = 0; a < g.num_lines(); ++a)
    for (int b = a + 1; b < g.num_lines(); ++b)
      if (g.line_bits(a).count_and(g.line_bits(b)) > 1) {
        c.pass = false;
        c.witness_line = a;
        c.witnesses = (g.line_bits(a) & g.line_bits(b)).to_vector();
        return c;
      }
  return c;
}

bool is_thick(const Geometry& g) {
  auto ord = detect_order(g);
  return ord && ord->s >= 2 && ord->t >= 2;
}

std::string Axiom3TypeTag::name() const {
  switch (kind) {
    case Empty: return "Empty";
    case PointSet: return "PointSet";
    case LineSet: return "LineSet";
    case Grid: return "Grid(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case DualGrid: return "DualGrid(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Perp: return "Perp(t=" + std::to_string(a) + ")";
    case DualPerp: return "DualPerp(s=" + std::to_string(a) + ")";
    case ThickGQ: return "ThickGQ";
    case ThinGQ_S1: return "ThinGQ(" + std::to_string(a) + ",1)";
    case ThinGQ_1T: return "ThinGQ(1," + std::to_string(b) + ")";
  }
  return "?";
}

namespace {

// Two-reguli recognition: all point degrees 2, lines split into two classes of
// mutually nonconcurrent lines, each line of one class meeting each of the other.
std::optional<std::pair<int, int>> grid_reguli(const Geometry& g) {
  int nl = g.num_lines();
  if (nl < 4) return std::nullopt;
  for (int p = 0; p < g.num_points(); ++p)
    if (g.point_degree(p) != 2) return std::nullopt;
  std::vector<int> side(nl, -1);
  side[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int l = stack.back();
    stack.pop_back();
    for (int m = 0; m < nl; ++m) {
      if (m == l) continue;
      if (g.line_bits(l).intersects(g.line_bits(m))) {
        if (side[m] == -1) {
          side[m] = 1 - side[l];
          stack.push_back(m);
        } else if (side[m] == side[l]) {
          return std::nullopt;
        }
      }
    }
  }
  int u = 0, v = 0;
  for (int l = 0; l < nl; ++l) {
    if (side[l] == -1) return std::nullopt;  // disconnected line set
    (side[l] == 0 ? u : v)++;
  }
  if (u < 2 || v < 2) return std::nullopt;
  // each cross pair concurrent, each same-side pair not
  for (int l = 0; l < nl; ++l)
    for (int m = l + 1; m < nl; ++m) {
      bool meet = g.line_bits(l).intersects(g.line_bits(m));
      if ((side[l] == side[m]) == meet) return std::nullopt;
    }
  if (g.num_points() != u * v) return std::nullopt;
  if (u > v) std::swap(u, v);
  return std::make_pair(u, v);
}

}  // namespace

Axiom3TypeTag classify_axiom3_type(const Geometry& g) {
  require(check_axiom3(g).pass, Err::NotAxiom3, "geometry does not satisfy axiom (3)");
  Axiom3TypeTag tag;
  int np = g.num_points(), nl = g.num_lines();
  if (np == 0 && nl == 0) return tag;  // Empty
  if (nl == 0) {
    tag.kind = Axiom3TypeTag::PointSet;
    tag.a = np;
    return tag;
  }
  if (np == 0) {
    tag.kind = Axiom3TypeTag::LineSet;
    tag.a = nl;
    return tag;
  }
  if (auto ord = detect_order(g)) {
    if (ord->s >= 2 && ord->t >= 2) {
      tag.kind = Axiom3TypeTag::ThickGQ;
      tag.a = ord->s;
      tag.b = ord->t;
      return tag;
    }
    if (ord->t == 1 && ord->s >= 1) {
      tag.kind = Axiom3TypeTag::ThinGQ_S1;
      tag.a = ord->s;
      tag.b = 1;
      return tag;
    }
    if (ord->s == 1) {
      tag.kind = Axiom3TypeTag::ThinGQ_1T;
      tag.a = 1;
      tag.b = ord->t;
      return tag;
    }
    // orders (s,0) / (0,t) fall through to the perp logic below
  }
  if (auto uv = grid_reguli(g)) {
    tag.kind = Axiom3TypeTag::Grid;
    tag.a = uv->first;
    tag.b = uv->second;
    return tag;
  }
  if (auto uv = grid_reguli(dualize(g))) {
    tag.kind = Axiom3TypeTag::DualGrid;
    tag.a = uv->first;
    tag.b = uv->second;
    return tag;
  }
  bool centre = false, spine = false;
  for (int p = 0; p < np && !centre; ++p) centre = (g.point_degree(p) == nl);
  for (int l = 0; l < nl && !spine; ++l) spine = (g.line_size(l) == np);
  if (centre && (!spine || nl >= np)) {
    tag.kind = Axiom3TypeTag::Perp;
    tag.a = nl - 1;
    return tag;
  }
  if (spine) {
    tag.kind = Axiom3TypeTag::DualPerp;
    tag.a = np - 1;
    return tag;
  }
  fail(Err::NotAxiom3, "axiom-(3) geometry escaped the classification");
}

Graph collinearity_graph(const Geometry& g) {
  Graph gr;
  gr.n = g.num_points();
  gr.adj.reserve(gr.n);
  for (int p = 0; p < gr.n; ++p) gr.adj.push_back(g.collinear(p));
  return gr;
}

Geometry relabel(const Geometry& g, const std::vector<int>& point_perm,
                 const std::vector<int>& line_perm) {
  std::vector<std::vector<int>> lines(g.num_lines());
  for (int l = 0; l < g.num_lines(); ++l) {
    auto& out = lines[line_perm[l]];
    for (int p : g.line_points(l)) out.push_back(point_perm[p]);
  }
  Geometry r = Geometry::create(g.num_points(), lines);
  for (auto& [p, s] : g.point_labels) r.point_labels[point_perm[p]] = s;
  for (auto& [l, s] : g.line_labels) r.line_labels[line_perm[l]] = s;
  r.note = g.note;
  return r;
}

bool gq_count_identities(const Geometry& g) {
  auto ord = detect_order(g);
  if (!ord) return false;
  long long s = ord->s, t = ord->t;
  return g.num_points() == (s + 1) * (s * t + 1) && g.num_lines() == (t + 1) * (s * t + 1);
}

}  // namespace gq
