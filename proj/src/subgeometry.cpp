#include "gq/subgeometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <functional>
#include <unordered_set>

namespace gq {

AnchoredSubgeometry AnchoredSubgeometry::of(const Geometry& g, const std::vector<int>& pts,
                                            const std::vector<int>& lns) {
  AnchoredSubgeometry s;
  s.parent = &g;
  s.points = Bitset::of(g.num_points(), pts);
  s.lines = Bitset::of(g.num_lines(), lns);
  return s;
}

AnchoredSubgeometry AnchoredSubgeometry::empty(const Geometry& g) { return of(g, {}, {}); }

AnchoredSubgeometry AnchoredSubgeometry::whole(const Geometry& g) {
  AnchoredSubgeometry s;
  s.parent = &g;
  s.points = Bitset(g.num_points());
  s.lines = Bitset(g.num_lines());
  for (int p = 0; p < g.num_points(); ++p) s.points.set(p);
  for (int l = 0; l < g.num_lines(); ++l) s.lines.set(l);
  return s;
}

bool AnchoredSubgeometry::point_ideal(int p) const {
  for (int l : parent->lines_through(p))
    if (!lines.test(l)) return false;
  return true;
}

bool AnchoredSubgeometry::all_lines_full() const {
  bool ok = true;
  lines.for_each([&](int l) { ok &= line_full(l); });
  return ok;
}

Geometry AnchoredSubgeometry::induced(std::vector<int>* point_of,
                                      std::vector<int>* line_of) const {
  std::vector<int> pts = points.to_vector();
  std::vector<int> idx(parent->num_points(), -1);
  for (size_t i = 0; i < pts.size(); ++i) idx[pts[i]] = int(i);
  std::vector<std::vector<int>> lns;
  std::vector<int> lmap;
  lines.for_each([&](int l) {
    std::vector<int> members;
    for (int p : parent->line_points(l))
      if (idx[p] >= 0) members.push_back(idx[p]);
    lns.push_back(members);
    lmap.push_back(l);
  });
  Geometry g = Geometry::create(int(pts.size()), lns);
  if (point_of) *point_of = pts;
  if (line_of) *line_of = lmap;
  return g;
}

// --- perps, traces, spans -----------------------------------------------------

Bitset perp(const Geometry& g, int x) { return g.collinear(x); }

Bitset trace_set(const Geometry& g, int x, int y) {
  require(x != y, Err::SamePoint, "trace of equal points");
  return g.collinear(x) & g.collinear(y);
}

Bitset span_set(const Geometry& g, int x, int y) {
  Bitset tr = trace_set(g, x, y);
  Bitset res(g.num_points());
  for (int p = 0; p < g.num_points(); ++p) res.set(p);
  tr.for_each([&](int z) { res &= g.collinear(z); });
  return res;
}

bool lines_concurrent(const Geometry& g, int u, int v) {
  return g.line_bits(u).intersects(g.line_bits(v));
}

Bitset line_perp_pair(const Geometry& g, int u, int v) {
  Bitset res(g.num_lines());
  for (int w = 0; w < g.num_lines(); ++w)
    if (w != u && w != v && lines_concurrent(g, w, u) && lines_concurrent(g, w, v)) res.set(w);
  return res;
}

Bitset line_span_pair(const Geometry& g, int u, int v) {
  Bitset cross = line_perp_pair(g, u, v);
  Bitset res(g.num_lines());
  for (int w = 0; w < g.num_lines(); ++w) {
    bool all = true;
    cross.for_each([&](int c) { all &= lines_concurrent(g, w, c); });
    if (all && cross.any()) res.set(w);
  }
  return res;
}

// --- regularity ----------------------------------------------------------------

bool is_regular_pair(const Geometry& g, int u, int v) {
  require(!lines_concurrent(g, u, v), Err::ConcurrentLines, "pair must be nonconcurrent");
  auto ord = detect_order(g);
  require(ord.has_value(), Err::NotOrdered, "regularity needs an order");
  Bitset span = line_span_pair(g, u, v);
  return span.count() == ord->s + 1;
}

bool is_regular_line(const Geometry& g, int u) {
  for (int v = 0; v < g.num_lines(); ++v) {
    if (v == u || lines_concurrent(g, u, v)) continue;
    if (!is_regular_pair(g, u, v)) return false;
  }
  return true;
}

bool is_regular_point_pair(const Geometry& g, int x, int y) {
  require(!g.are_collinear(x, y), Err::ConcurrentLines, "pair must be noncollinear");
  auto ord = detect_order(g);
  require(ord.has_value(), Err::NotOrdered, "regularity needs an order");
  return span_set(g, x, y).count() == ord->t + 1;
}

bool is_regular_point(const Geometry& g, int x) {
  for (int y = 0; y < g.num_points(); ++y) {
    if (y == x || g.are_collinear(x, y)) continue;
    if (!is_regular_point_pair(g, x, y)) return false;
  }
  return true;
}

// --- symmetry ---------------------------------------------------------------------

PermGroup symmetries_about_line(const Geometry& g, const PermGroup& aut, int u) {
  std::vector<int> fixed;
  for (int w = 0; w < g.num_lines(); ++w)
    if (w == u || lines_concurrent(g, w, u)) fixed.push_back(g.num_points() + w);
  return aut.pointwise_stabilizer(fixed);
}

bool is_axis_of_symmetry(const Geometry& g, const PermGroup& aut, int u) {
  PermGroup sym = symmetries_about_line(g, aut, u);
  // pick any line V concurrent with U, V != U
  for (int v = 0; v < g.num_lines(); ++v) {
    if (v == u || !lines_concurrent(g, v, u)) continue;
    int cross = -1;
    for (int p : g.line_points(v))
      if (g.line_bits(u).test(p)) cross = p;
    std::vector<int> moved;
    for (int p : g.line_points(v))
      if (p != cross) moved.push_back(p);
    if (moved.empty()) return false;
    return sym.transitive_on(moved);
  }
  return false;
}

bool is_translation_point(const Geometry& g, const PermGroup& aut, int x) {
  require(is_thick(g), Err::NotThick, "translation points live in thick GQs");
  for (int l : g.lines_through(x))
    if (!is_axis_of_symmetry(g, aut, l)) return false;
  return true;
}

// --- grids ------------------------------------------------------------------------

AnchoredSubgeometry grid_from_regular_pair(const Geometry& g, int u, int v) {
  require(is_regular_pair(g, u, v), Err::NotFullGrid, "pair is not regular");
  Bitset cross = line_perp_pair(g, u, v);
  Bitset span = line_span_pair(g, u, v);
  AnchoredSubgeometry s;
  s.parent = &g;
  s.lines = cross | span;
  s.points = Bitset(g.num_points());
  span.for_each([&](int l) { s.points |= g.line_bits(l); });
  require(s.all_lines_full(), Err::NotFullGrid, "regulus lines are not full");
  return s;
}

std::vector<AnchoredSubgeometry> full_grids(const Geometry& g) {
  std::set<AnchoredSubgeometry> found;
  auto ord = detect_order(g);
  if (!ord) return {};
  for (int u = 0; u < g.num_lines(); ++u)
    for (int v = u + 1; v < g.num_lines(); ++v) {
      if (lines_concurrent(g, u, v)) continue;
      if (!is_regular_pair(g, u, v)) continue;
      found.insert(grid_from_regular_pair(g, u, v));
    }
  return std::vector<AnchoredSubgeometry>(found.begin(), found.end());
}

// --- projection closure and subGQ search ----------------------------------------------

AnchoredSubgeometry projection_closure(const Geometry& g, const AnchoredSubgeometry& seed) {
  return projection_closure_bounded(g, seed, g.num_points(), g.num_lines(), nullptr);
}

// Worklist closure with early bail-out: once the closure exceeds the size of
// any proper closed subgeometry it can only be the whole geometry.
AnchoredSubgeometry projection_closure_bounded(const Geometry& g, const AnchoredSubgeometry& seed,
                                               int pts_bound, int lines_bound, bool* exceeded) {
  AnchoredSubgeometry s = seed;
  if (exceeded) *exceeded = false;
  std::vector<int> new_pts, new_lines;
  auto add_point = [&](int p) {
    if (!s.points.test(p)) {
      s.points.set(p);
      new_pts.push_back(p);
    }
  };
  auto add_line = [&](int l) {
    if (!s.lines.test(l)) {
      s.lines.set(l);
      new_lines.push_back(l);
      g.line_bits(l).for_each(add_point);
    }
  };
  {
    std::vector<int> lv = s.lines.to_vector();
    std::vector<int> pv = s.points.to_vector();
    new_pts = pv;
    for (int l : lv) g.line_bits(l).for_each(add_point);
    new_lines = lv;
  }
  std::vector<int> done_pts, done_lines;
  auto project = [&](int x, int l) {
    if (g.line_bits(l).test(x)) return;
    Bitset z = g.collinear(x) & g.line_bits(l);
    if (z.count() != 1) return;
    int zz = z.first();
    add_point(zz);
    int join = g.joining_line(x, zz);
    if (join >= 0) add_line(join);
  };
  while (!new_pts.empty() || !new_lines.empty()) {
    if (s.points.count() > pts_bound || s.lines.count() > lines_bound) {
      if (exceeded) *exceeded = true;
      return s;
    }
    if (!new_pts.empty()) {
      int x = new_pts.back();
      new_pts.pop_back();
      for (int l : done_lines) project(x, l);
      done_pts.push_back(x);
    } else {
      int l = new_lines.back();
      new_lines.pop_back();
      for (int x : done_pts) project(x, l);
      done_lines.push_back(l);
    }
  }
  return s;
}

SubGqSearch thick_full_subgqs(const Geometry& g, int max_results, long long budget) {
  SubGqSearch out;
  out.exhaustive = true;
  auto ord = detect_order(g);
  if (!ord) return out;
  int s = ord->s, t = ord->t;

  // Any projection-closed full subgeometry with two opposite lines is a full
  // grid or a thick full subGQ; a proper thick full subGQ has order (s,t') with
  // s*t' <= t, which bounds its size. Closures past the bound are the whole
  // geometry and can be discarded immediately.
  int tmax = (s >= 1) ? t / s : 0;
  long long pts_bound = std::max<long long>((long long)(s + 1) * (s + 1),
                                            (long long)(s + 1) * (s * tmax + 1));
  long long lines_bound =
      std::max<long long>(2 * (s + 1), (long long)(tmax + 1) * (s * tmax + 1));
  bool nesting_possible = tmax > s;  // thick subGQs can nest only if t' > s fits

  std::set<std::pair<uint64_t, uint64_t>> seen;
  std::vector<AnchoredSubgeometry> frontier;

  auto key = [](const AnchoredSubgeometry& c) {
    return std::make_pair(c.points.hash(), c.lines.hash());
  };
  auto consider = [&](const AnchoredSubgeometry& c, bool exceeded) {
    if (exceeded) return;  // the closure is the whole geometry
    if (!seen.insert(key(c)).second) return;
    if (c.points.count() == g.num_points() && c.lines.count() == g.num_lines()) return;
    Geometry ind = c.induced();
    auto o = detect_order(ind);
    if (o && o->s >= 2 && o->t >= 2 && check_axiom3(ind).pass) {
      if (int(out.thick.size()) < max_results) out.thick.push_back(c);
    }
    frontier.push_back(c);
  };

  for (int u = 0; u < g.num_lines() && out.exhaustive; ++u)
    for (int v = u + 1; v < g.num_lines(); ++v) {
      if (lines_concurrent(g, u, v)) continue;
      if (++out.nodes > budget) {
        out.exhaustive = false;
        break;
      }
      AnchoredSubgeometry seed;
      seed.parent = &g;
      seed.points = g.line_bits(u) | g.line_bits(v);
      seed.lines = Bitset(g.num_lines());
      seed.lines.set(u);
      seed.lines.set(v);
      bool exceeded = false;
      AnchoredSubgeometry c =
          projection_closure_bounded(g, seed, int(pts_bound), int(lines_bound), &exceeded);
      consider(c, exceeded);
    }

  for (size_t fi = 0; fi < frontier.size() && out.exhaustive; ++fi) {
    AnchoredSubgeometry c = frontier[fi];  // copy: frontier may reallocate
    // a subGQ with s*t' = t is maximal: every extension closes to the whole
    {
      Geometry ind = c.induced();
      auto o = detect_order(ind);
      if (o && o->s >= 2 && (long long)o->s * o->t == t) continue;
    }
    std::vector<size_t> found_above;  // indices of found subs containing c
    if (!nesting_possible)
      for (size_t i = 0; i < out.thick.size(); ++i)
        if (out.thick[i].contains(c)) found_above.push_back(i);
    for (int w = 0; w < g.num_points(); ++w) {
      if (c.points.test(w)) continue;
      if (!nesting_possible) {
        // if w lies in an already-found subGQ above c, the closure is that subGQ
        bool covered = false;
        for (size_t i : found_above)
          if (out.thick[i].points.test(w)) {
            covered = true;
            break;
          }
        if (covered) continue;
      }
      if (++out.nodes > budget) {
        out.exhaustive = false;
        return out;
      }
      AnchoredSubgeometry ext = c;
      ext.points.set(w);
      bool exceeded = false;
      AnchoredSubgeometry cl =
          projection_closure_bounded(g, ext, int(pts_bound), int(lines_bound), &exceeded);
      size_t before = out.thick.size();
      consider(cl, exceeded);
      if (!nesting_possible && out.thick.size() > before && out.thick.back().contains(c))
        found_above.push_back(out.thick.size() - 1);
    }
  }
  std::sort(out.thick.begin(), out.thick.end());
  return out;
}

// --- geometric hyperplanes ---------------------------------------------------------------

bool is_geometric_hyperplane(const Geometry& g, const AnchoredSubgeometry& s) {
  if (s.points.count() == g.num_points()) return false;  // proper
  for (int l = 0; l < g.num_lines(); ++l) {
    int k = g.line_bits(l).count_and(s.points);
    bool full = g.line_bits(l).subset_of(s.points) && s.lines.test(l);
    if (!full && k != 1) return false;
  }
  return true;
}

std::vector<Bitset> ovoids(const Geometry& g, int limit, long long budget) {
  std::vector<Bitset> found;
  int nl = g.num_lines();
  if (nl == 0) return found;
  long long nodes = 0;

  Bitset chosen(g.num_points());
  Bitset excluded(g.num_points());  // collinear with a chosen point
  std::vector<char> covered(nl, 0);

  std::function<void(int)> dfs = [&](int ncov) {
    require(++nodes <= budget, Err::BudgetExceeded, "ovoid search budget exhausted");
    if (int(found.size()) >= limit) return;
    if (ncov == nl) {
      found.push_back(chosen);
      return;
    }
    // uncovered line with fewest available points
    int best = -1, bc = 1 << 30;
    for (int l = 0; l < nl; ++l) {
      if (covered[l]) continue;
      int c = 0;
      g.line_bits(l).for_each([&](int p) {
        if (!excluded.test(p)) ++c;
      });
      if (c < bc) {
        bc = c;
        best = l;
      }
      if (c == 0) break;
    }
    if (bc == 0) return;
    std::vector<int> cands;
    g.line_bits(best).for_each([&](int p) {
      if (!excluded.test(p)) cands.push_back(p);
    });
    for (int p : cands) {
      // choose p
      Bitset old_excluded = excluded;
      std::vector<int> newly;
      chosen.set(p);
      excluded |= g.collinear(p);
      int add = 0;
      bool feasible = true;
      for (int l : g.lines_through(p)) {
        if (covered[l]) feasible = false;  // cannot happen: p was available
        covered[l] = 1;
        ++add;
      }
      if (feasible) dfs(ncov + add);
      for (int l : g.lines_through(p)) covered[l] = 0;
      // recount coverage from scratch for correctness of backtracking
      for (int l = 0; l < nl; ++l) covered[l] = 0;
      chosen.reset(p);
      excluded = old_excluded;
      chosen.for_each([&](int q) {
        for (int l : g.lines_through(q)) covered[l] = 1;
      });
      if (int(found.size()) >= limit) return;
    }
  };
  dfs(0);
  return found;
}

std::vector<GeometricHyperplane> geometric_hyperplanes(const Geometry& g, long long budget) {
  std::vector<GeometricHyperplane> out;
  for (const Bitset& o : ovoids(g, 1 << 20, budget)) {
    AnchoredSubgeometry s;
    s.parent = &g;
    s.points = o;
    s.lines = Bitset(g.num_lines());
    if (is_geometric_hyperplane(g, s)) out.push_back({s, HyperplaneKind::Ovoid});
  }
  for (const auto& grid : full_grids(g))
    if (is_geometric_hyperplane(g, grid)) out.push_back({grid, HyperplaneKind::SubGQ});
  for (const auto& sub : thick_full_subgqs(g, 1 << 20, budget).thick)
    if (is_geometric_hyperplane(g, sub)) out.push_back({sub, HyperplaneKind::SubGQ});
  for (int x = 0; x < g.num_points(); ++x) {
    AnchoredSubgeometry s;
    s.parent = &g;
    s.points = g.collinear(x);
    s.lines = Bitset(g.num_lines());
    for (int l : g.lines_through(x)) s.lines.set(l);
    if (is_geometric_hyperplane(g, s)) out.push_back({s, HyperplaneKind::MaxPerp});
  }
  return out;
}

// --- remnants -------------------------------------------------------------------------------

Geometry remove_closed(const Geometry& g, const AnchoredSubgeometry& s,
                       std::vector<int>* old_point_of) {
  std::vector<int> keep;
  std::vector<int> idx(g.num_points(), -1);
  for (int p = 0; p < g.num_points(); ++p)
    if (!s.points.test(p)) {
      idx[p] = int(keep.size());
      keep.push_back(p);
    }
  std::vector<std::vector<int>> lines;
  std::vector<EmptyLineMark> empties;
  std::vector<HairyPointMark> hairy;
  for (int l = 0; l < g.num_lines(); ++l) {
    if (s.lines.test(l)) continue;  // removed together with S
    std::vector<int> surv;
    for (int p : g.line_points(l))
      if (idx[p] >= 0) surv.push_back(idx[p]);
    if (int(surv.size()) >= 2) {
      lines.push_back(surv);
    } else if (surv.size() == 1) {
      hairy.push_back({surv[0], "line " + std::to_string(l) + " of parent"});
    } else {
      empties.push_back({"line " + std::to_string(l) + " of parent"});
    }
  }
  Geometry r = Geometry::create(int(keep.size()), lines);
  r.empty_line_marks = std::move(empties);
  r.hairy_point_marks = std::move(hairy);
  for (int p : keep)
    if (auto it = g.point_labels.find(p); it != g.point_labels.end())
      r.point_labels[idx[p]] = it->second;
  r.note = g.note.empty() ? "remnant" : ("remnant of: " + g.note);
  if (old_point_of) *old_point_of = keep;
  return r;
}

// --- decomposition ----------------------------------------------------------------------------

bool is_valid_decomposition(const Geometry& g, const AnchoredSubgeometry& a,
                            const AnchoredSubgeometry& b) {
  // coverage
  Bitset pts = a.points | b.points;
  Bitset lns = a.lines | b.lines;
  if (pts.count() != g.num_points() || lns.count() != g.num_lines()) return false;
  // proper and different
  auto whole = [&](const AnchoredSubgeometry& s) {
    return s.points.count() == g.num_points() && s.lines.count() == g.num_lines();
  };
  if (whole(a) || whole(b) || a == b) return false;
  if (a.contains(b) || b.contains(a)) return false;
  return check_axiom3(a.induced()).pass && check_axiom3(b.induced()).pass;
}

namespace {

// Candidate "closed shape" parts for the shape-directed decomposition search.
std::vector<AnchoredSubgeometry> closed_shape_candidates(const Geometry& g, long long budget) {
  std::vector<AnchoredSubgeometry> cands;
  // full lines
  for (int l = 0; l < g.num_lines(); ++l) {
    AnchoredSubgeometry s;
    s.parent = &g;
    s.points = g.line_bits(l);
    s.lines = Bitset(g.num_lines());
    s.lines.set(l);
    cands.push_back(s);
  }
  // ideal perps
  for (int x = 0; x < g.num_points(); ++x) {
    AnchoredSubgeometry s;
    s.parent = &g;
    s.points = g.collinear(x);
    s.lines = Bitset(g.num_lines());
    for (int l : g.lines_through(x)) s.lines.set(l);
    cands.push_back(s);
  }
  for (auto& grid : full_grids(g)) cands.push_back(grid);
  for (auto& sub : thick_full_subgqs(g, 1 << 16, budget).thick) cands.push_back(sub);
  return cands;
}

AnchoredSubgeometry complement_sub(const Geometry& g, const AnchoredSubgeometry& s) {
  AnchoredSubgeometry c;
  c.parent = &g;
  c.points = Bitset(g.num_points());
  c.lines = Bitset(g.num_lines());
  for (int p = 0; p < g.num_points(); ++p)
    if (!s.points.test(p)) c.points.set(p);
  for (int l = 0; l < g.num_lines(); ++l)
    if (!s.lines.test(l)) c.lines.set(l);
  return c;
}

}  // namespace

DecompositionVerdict decomposition_verdict(const Geometry& g, bool blind_fallback,
                                           long long budget) {
  DecompositionVerdict v;
  auto ord = detect_order(g);
  require(ord && ord->s >= 1 && ord->t >= 1, Err::NotOrdered,
          "decomposition verdict needs an order with s,t >= 1");
  int s = ord->s, t = ord->t;

  if (t == 1 && s >= 1) {
    // case (iii): perp geometry of a point vs the complementary s x s grid
    int x = 0;
    AnchoredSubgeometry p2;
    p2.parent = &g;
    p2.points = g.collinear(x);
    p2.lines = Bitset(g.num_lines());
    for (int l : g.lines_through(x)) p2.lines.set(l);
    AnchoredSubgeometry p1 = complement_sub(g, p2);
    if (is_valid_decomposition(g, p1, p2)) {
      v.decomposable = true;
      v.case_tag = 3;
      v.part1 = p1;
      v.part2 = p2;
      v.exhaustive = true;
      return v;
    }
  }
  if (s == 1 && t >= 1) {
    // dual of case (iii): tag (vi)
    Geometry d = dualize(g);
    int x = 0;
    AnchoredSubgeometry dp2;
    dp2.parent = &d;
    dp2.points = d.collinear(x);
    dp2.lines = Bitset(d.num_lines());
    for (int l : d.lines_through(x)) dp2.lines.set(l);
    AnchoredSubgeometry dp1 = complement_sub(d, dp2);
    if (is_valid_decomposition(d, dp1, dp2)) {
      // map back: dual points are lines of g and vice versa
      AnchoredSubgeometry p1, p2;
      p1.parent = p2.parent = &g;
      p1.points = Bitset(g.num_points());
      p1.lines = Bitset(g.num_lines());
      p2.points = Bitset(g.num_points());
      p2.lines = Bitset(g.num_lines());
      dp1.points.for_each([&](int i) { p1.lines.set(i); });
      dp1.lines.for_each([&](int i) { p1.points.set(i); });
      dp2.points.for_each([&](int i) { p2.lines.set(i); });
      dp2.lines.for_each([&](int i) { p2.points.set(i); });
      if (is_valid_decomposition(g, p1, p2)) {
        v.decomposable = true;
        v.case_tag = 6;
        v.part1 = p1;
        v.part2 = p2;
        v.exhaustive = true;
        return v;
      }
    }
  }

  // thick: parts are disjoint, one of them has only full lines or only ideal
  // points; scan the closed-shape candidates on both sides of duality.
  auto scan = [&](const Geometry& host) -> std::optional<std::pair<AnchoredSubgeometry, AnchoredSubgeometry>> {
    for (const auto& cand : closed_shape_candidates(host, budget)) {
      AnchoredSubgeometry comp = complement_sub(host, cand);
      if (is_valid_decomposition(host, comp, cand)) return std::make_pair(comp, cand);
    }
    return std::nullopt;
  };

  if (auto hit = scan(g)) {
    v.decomposable = true;
    v.case_tag = (s == 2 && t == 2) ? 7 : -1;
    v.part1 = hit->first;
    v.part2 = hit->second;
    v.exhaustive = true;
    return v;
  }
  {
    Geometry d = dualize(g);
    if (auto hit = scan(d)) {
      AnchoredSubgeometry p1, p2;
      p1.parent = p2.parent = &g;
      p1.points = Bitset(g.num_points());
      p1.lines = Bitset(g.num_lines());
      p2.points = Bitset(g.num_points());
      p2.lines = Bitset(g.num_lines());
      hit->first.points.for_each([&](int i) { p1.lines.set(i); });
      hit->first.lines.for_each([&](int i) { p1.points.set(i); });
      hit->second.points.for_each([&](int i) { p2.lines.set(i); });
      hit->second.lines.for_each([&](int i) { p2.points.set(i); });
      if (is_valid_decomposition(g, p1, p2)) {
        v.decomposable = true;
        v.case_tag = (s == 2 && t == 2) ? 7 : -1;
        v.part1 = p1;
        v.part2 = p2;
        v.exhaustive = true;
        return v;
      }
    }
  }

  if (blind_fallback && g.num_lines() <= 14) {
    // exhaustive over line bipartitions; points assigned by incidence, with
    // isolated leftovers attached to part 1
    int nl = g.num_lines();
    for (long long mask = 1; mask < (1ll << nl) - 1; ++mask) {
      AnchoredSubgeometry a, b;
      a.parent = b.parent = &g;
      a.points = Bitset(g.num_points());
      a.lines = Bitset(g.num_lines());
      b.points = Bitset(g.num_points());
      b.lines = Bitset(g.num_lines());
      for (int l = 0; l < nl; ++l) {
        if ((mask >> l) & 1) {
          a.lines.set(l);
          a.points |= g.line_bits(l);
        } else {
          b.lines.set(l);
          b.points |= g.line_bits(l);
        }
      }
      for (int p = 0; p < g.num_points(); ++p)
        if (!a.points.test(p) && !b.points.test(p)) a.points.set(p);
      if (is_valid_decomposition(g, a, b)) {
        v.decomposable = true;
        v.case_tag = -1;
        v.part1 = a;
        v.part2 = b;
        return v;
      }
    }
  }

  v.decomposable = false;
  v.case_tag = 0;
  v.exhaustive = true;
  return v;
}

// --- trace geometries ---------------------------------------------------------------------------

TraceBaseType classify_trace_base(const AnchoredSubgeometry& t) {
  require(t.all_lines_full(), Err::WrongBaseType, "trace base must be a full subgeometry");
  const Geometry& g = *t.parent;
  int np = t.points.count(), nl = t.lines.count();
  require(np >= 2, Err::WrongBaseType, "trace base needs at least two points");
  if (nl == 0) {
    // partial ovoid: mutually noncollinear
    std::vector<int> pts = t.points.to_vector();
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        require(!g.are_collinear(pts[i], pts[j]), Err::WrongBaseType,
                "point set is not a partial ovoid");
    return TraceBaseType::PartialOvoid;
  }
  // perp: one base point on every included line
  if (nl >= 1) {
    std::vector<int> lns = t.lines.to_vector();
    for (int x : t.points.to_vector()) {
      bool on_all = true;
      for (int l : lns) on_all &= g.line_bits(l).test(x);
      if (on_all && nl >= 2) return TraceBaseType::Perp;
    }
  }
  // grid: classify induced
  Geometry ind = t.induced();
  if (check_axiom3(ind).pass) {
    auto tag = classify_axiom3_type(ind);
    if (tag.kind == Axiom3TypeTag::Grid || tag.kind == Axiom3TypeTag::ThinGQ_S1)
      return TraceBaseType::Grid;
  }
  fail(Err::WrongBaseType, "trace base must be a partial ovoid, perp or grid");
}

TraceGeometry trace_geometry(const AnchoredSubgeometry& t) {
  TraceGeometry tr;
  tr.base_type = classify_trace_base(t);
  const Geometry& g = *t.parent;
  std::vector<int> pts = t.points.to_vector();
  std::vector<int> idx(g.num_points(), -1);
  for (size_t i = 0; i < pts.size(); ++i) idx[pts[i]] = int(i);
  tr.parent_point_of = pts;

  std::vector<std::vector<int>> lines;
  std::vector<int> types;
  t.lines.for_each([&](int l) {
    std::vector<int> members;
    for (int p : g.line_points(l)) members.push_back(idx[p]);
    std::sort(members.begin(), members.end());
    lines.push_back(members);
    types.push_back(0);
  });
  std::set<std::vector<int>> seen;
  for (int v = 0; v < g.num_points(); ++v) {
    if (t.points.test(v)) continue;
    std::vector<int> members;
    (g.collinear(v) & t.points).for_each([&](int p) { members.push_back(idx[p]); });
    if (int(members.size()) < 2) continue;  // singleton traces are not lines
    std::sort(members.begin(), members.end());
    if (seen.insert(members).second) {
      lines.push_back(members);
      types.push_back(1);
    }
  }
  tr.geom = Geometry::create(int(pts.size()), lines);
  tr.line_type = types;
  for (size_t l = 0; l < types.size(); ++l)
    tr.geom.line_labels[int(l)] = types[l] == 0 ? "original" : "subtended";
  return tr;
}

// --- complete dual grids and arcs ------------------------------------------------------------------

std::vector<DualGridWitness> complete_dual_grids(const Geometry& g) {
  auto ord = detect_order(g);
  require(ord && ord->s == ord->t && ord->s >= 2, Err::WrongOrderShape,
          "construction needs a thick GQ of order (s,s)");
  int s = ord->s;
  std::vector<DualGridWitness> out;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;

  // enumerate candidate small sides A: (s-1)-sets of mutually noncollinear points
  std::vector<int> a_stack;
  std::function<void(int)> rec = [&](int start) {
    if (int(a_stack.size()) == s - 1) {
      // B must consist of points collinear with every a, mutually noncollinear
      Bitset common(g.num_points());
      for (int p = 0; p < g.num_points(); ++p) common.set(p);
      for (int a : a_stack) common &= g.collinear(a);
      for (int a : a_stack) common.reset(a);
      std::vector<int> cand = common.to_vector();
      // B candidates must be mutually noncollinear; search (s+1)-subsets
      std::vector<int> b_stack;
      std::function<void(int)> recb = [&](int bstart) {
        if (int(b_stack.size()) == s + 1) {
          // completeness: no extension of either side
          bool ext = false;
          for (int x = 0; x < g.num_points() && !ext; ++x) {
            bool inA = std::find(a_stack.begin(), a_stack.end(), x) != a_stack.end();
            bool inB = std::find(b_stack.begin(), b_stack.end(), x) != b_stack.end();
            if (inA || inB) continue;
            bool extendsA = true;
            for (int b : b_stack) extendsA &= g.are_collinear(x, b);
            for (int a : a_stack) extendsA &= !g.are_collinear(x, a) && x != a;
            bool extendsB = true;
            for (int a : a_stack) extendsB &= g.are_collinear(x, a);
            for (int b : b_stack) extendsB &= !g.are_collinear(x, b) && x != b;
            ext = extendsA || extendsB;
          }
          if (!ext) {
            auto akey = a_stack;
            auto bkey = b_stack;
            std::sort(akey.begin(), akey.end());
            std::sort(bkey.begin(), bkey.end());
            if (seen.insert({akey, bkey}).second) out.push_back({akey, bkey});
          }
          return;
        }
        for (size_t i = bstart; i < cand.size(); ++i) {
          bool ok = true;
          for (int b : b_stack) ok &= !g.are_collinear(cand[i], b);
          if (!ok) continue;
          b_stack.push_back(cand[i]);
          recb(int(i + 1));
          b_stack.pop_back();
        }
      };
      recb(0);
      return;
    }
    for (int p = start; p < g.num_points(); ++p) {
      bool ok = true;
      for (int a : a_stack) ok &= !g.are_collinear(a, p);
      if (!ok) continue;
      a_stack.push_back(p);
      rec(p + 1);
      a_stack.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<int> arc_from_dual_grid(const Geometry& g, const DualGridWitness& w) {
  // lines through big-side points that are not joining lines of the dual grid
  std::set<int> grid_lines;
  for (int a : w.small_side)
    for (int b : w.big_side) {
      int l = g.joining_line(a, b);
      if (l >= 0) grid_lines.insert(l);
    }
  Bitset extra_pts(g.num_points());
  std::set<int> extra_lines;
  for (int b : w.big_side)
    for (int l : g.lines_through(b))
      if (!grid_lines.count(l)) extra_lines.insert(l);
  for (int l : extra_lines) extra_pts |= g.line_bits(l);
  // points neither in that grid nor collinear with a dual-grid point
  Bitset bad = extra_pts;
  for (int a : w.small_side) bad |= g.collinear(a);
  for (int b : w.big_side) bad |= g.collinear(b);
  std::vector<int> arc;
  for (int p = 0; p < g.num_points(); ++p)
    if (!bad.test(p)) arc.push_back(p);
  return arc;
}

bool is_complete_arc(const Geometry& g, const std::vector<int>& arc) {
  for (size_t i = 0; i < arc.size(); ++i)
    for (size_t j = i + 1; j < arc.size(); ++j)
      if (g.are_collinear(arc[i], arc[j])) return false;
  Bitset cov(g.num_points());
  for (int a : arc) cov |= g.collinear(a);
  for (int p = 0; p < g.num_points(); ++p)
    if (!cov.test(p)) return false;  // p extends the arc
  return true;
}

std::vector<std::vector<int>> complete_arcs_of_size(const Geometry& g, int size,
                                                    long long budget) {
  std::vector<std::vector<int>> out;
  long long nodes = 0;
  std::vector<int> stack;
  std::function<void(int)> rec = [&](int start) {
    require(++nodes <= budget, Err::BudgetExceeded, "arc search budget exhausted");
    if (int(stack.size()) == size) {
      if (is_complete_arc(g, stack)) out.push_back(stack);
      return;
    }
    for (int p = start; p < g.num_points(); ++p) {
      bool ok = true;
      for (int a : stack) ok &= !g.are_collinear(a, p);
      if (!ok) continue;
      stack.push_back(p);
      rec(p + 1);
      stack.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace gq
