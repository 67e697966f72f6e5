#include "doctest.h"

#include <set>

#include "gq/constructions.hpp"
#include "gq/iso.hpp"
#include "gq/ring.hpp"
#include "gq/zariski.hpp"

using namespace gq;

namespace {

// trimmed grid: remove m lines (and their points) from each regulus
struct TrimmedGrid {
  Bitset points, lines;
};

std::vector<TrimmedGrid> trim_grid(const Geometry& g, const AnchoredSubgeometry& grid, int m) {
  // split the grid lines into reguli by concurrency
  std::vector<int> lines = grid.lines.to_vector();
  std::vector<int> r1{lines[0]}, r2;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (lines_concurrent(g, lines[0], lines[i])) r2.push_back(lines[i]);
    else r1.push_back(lines[i]);
  }
  if (int(r1.size()) <= m || int(r2.size()) <= m) return {};
  // remove the last m of each regulus (one representative trimming suffices:
  // reguli are symmetric under the grid's automorphisms)
  TrimmedGrid t;
  t.lines = Bitset(g.num_lines());
  for (size_t i = 0; i + m < r1.size(); ++i) t.lines.set(r1[i]);
  for (size_t i = 0; i + m < r2.size(); ++i) t.lines.set(r2[i]);
  Bitset removed_pts(g.num_points());
  for (size_t i = r1.size() - m; i < r1.size(); ++i) removed_pts |= g.line_bits(r1[i]);
  for (size_t i = r2.size() - m; i < r2.size(); ++i) removed_pts |= g.line_bits(r2[i]);
  t.points = grid.points;
  t.points.subtract(removed_pts);
  return {t};
}

// T is a full grid of the subgeometry S: T's elements lie in S and every
// T-line carries all S-points on it
bool full_in(const Geometry& g, const TrimmedGrid& t, const AnchoredSubgeometry& s) {
  if (!t.points.subset_of(s.points) || !t.lines.subset_of(s.lines)) return false;
  bool ok = true;
  t.lines.for_each([&](int l) {
    Bitset on_s = g.line_bits(l) & s.points;
    Bitset on_t = g.line_bits(l) & t.points;
    ok &= (on_s == on_t);
  });
  return ok;
}

// ideal subquadrangles: every included point carries all its parent lines;
// obtained as duals of the full subGQ search on the dual geometry
std::vector<AnchoredSubgeometry> ideal_subquadrangles(const Geometry& g) {
  Geometry d = dualize(g);
  std::vector<AnchoredSubgeometry> duals = full_grids(d);
  for (auto& s : thick_full_subgqs(d).thick) duals.push_back(s);
  std::vector<AnchoredSubgeometry> out;
  for (const auto& ds : duals) {
    AnchoredSubgeometry s;
    s.parent = &g;
    s.points = Bitset(g.num_points());
    s.lines = Bitset(g.num_lines());
    ds.points.for_each([&](int i) { s.lines.set(i); });
    ds.lines.for_each([&](int i) { s.points.set(i); });
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("trimmed grids are never full grids of ideal subquadrangles (q=2)") {
  for (int m_dim : {4, 5}) {
    Geometry g = quadric_gq(m_dim, 2);
    auto grids = full_grids(g);
    auto ideals = ideal_subquadrangles(g);
    REQUIRE(!grids.empty());
    for (const auto& grid : grids)
      for (int m = 1; m <= 2; ++m)
        for (const auto& t : trim_grid(g, grid, m))
          for (const auto& s : ideals) CHECK(!full_in(g, t, s));
  }
}

TEST_CASE("trimmed grids violating the bound are never full in any subGQ (q=2,3)") {
  for (int q : {2, 3}) {
    Geometry g = quadric_gq(4, q);
    auto grids = full_grids(g);
    std::vector<AnchoredSubgeometry> subs = full_grids(g);
    for (auto& s : thick_full_subgqs(g).thick) subs.push_back(s);
    int checked = 0;
    for (const auto& grid : grids) {
      for (int m = 1; 2 * m < q + 1; ++m) {  // the bound l+1-m > m
        for (const auto& t : trim_grid(g, grid, m)) {
          for (const auto& s : subs) {
            if (s.points == grid.points && s.lines == grid.lines) continue;
            CHECK(!full_in(g, t, s));
          }
          // not full in its own untrimmed grid either: the removed points stay
          AnchoredSubgeometry self = grid;
          CHECK(!full_in(g, t, self));
          ++checked;
        }
      }
      if (checked > 40) break;
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("laws L1-L3: removing points or full lines changes the class") {
  Ring ring(IsoMode::IDEA1);
  for (const Geometry& g : {quadric_gq(4, 2), grid_geometry(3, 3)}) {
    int h = ring.make_root(g);
    int base_key = ring.key_of(h);
    // one point
    auto cut_pt = ring.cut(h, {0}, {});
    CHECK(cut_pt.remnant_handle >= 0);
    CHECK(ring.key_of(cut_pt.remnant_handle) != base_key);
    // one full line
    std::vector<int> lpts;
    for (int p : g.line_points(0)) lpts.push_back(p);
    auto cut_line = ring.cut(h, lpts, {0});
    CHECK(ring.key_of(cut_line.remnant_handle) != base_key);
  }
}

TEST_CASE("images of chains under automorphisms are chains of equal length") {
  Geometry g = quadric_gq(4, 2);
  auto res = krull_dimension(g);
  PermGroup aut = automorphisms(g);
  const Perm& a = aut.generators().front();
  int np = g.num_points();
  std::vector<AnchoredSubgeometry> image;
  for (const auto& e : res.chain.elements) {
    AnchoredSubgeometry img;
    img.parent = &g;
    img.points = Bitset(g.num_points());
    img.lines = Bitset(g.num_lines());
    e.points.for_each([&](int p) { img.points.set(a[p]); });
    e.lines.for_each([&](int l) { img.lines.set(a[np + l] - np); });
    image.push_back(std::move(img));
  }
  CHECK(image.size() == res.chain.elements.size());
  for (size_t i = 0; i + 1 < image.size(); ++i) {
    CHECK(image[i + 1].contains(image[i]));
    CHECK(!(image[i] == image[i + 1]));
  }
}

TEST_CASE("classification swaps under dualize") {
  auto swap_check = [](const Geometry& g, Axiom3TypeTag::Kind kind, Axiom3TypeTag::Kind dual) {
    CHECK(classify_axiom3_type(g).kind == kind);
    CHECK(classify_axiom3_type(dualize(g)).kind == dual);
  };
  swap_check(grid_geometry(3, 4), Axiom3TypeTag::Grid, Axiom3TypeTag::DualGrid);
  swap_check(dual_grid_geometry(2, 5), Axiom3TypeTag::DualGrid, Axiom3TypeTag::Grid);
  swap_check(perp_geometry(2, 3), Axiom3TypeTag::Perp, Axiom3TypeTag::DualPerp);
  swap_check(grid_geometry(3, 3), Axiom3TypeTag::ThinGQ_S1, Axiom3TypeTag::ThinGQ_1T);
}

TEST_CASE("every thick corpus GQ has dimension at least 3 and at most 5") {
  std::vector<Geometry> thick;
  for (int q : {2, 3}) {
    thick.push_back(quadric_gq(4, q));
    thick.push_back(quadric_gq(5, q));
    thick.push_back(wq(q));
    thick.push_back(h3(q));
  }
  thick.push_back(t2_of_oval(brown_oval(1)));
  for (const Geometry& g : thick) {
    auto res = krull_dimension(g);
    CHECK(res.exact);
    CHECK(res.dimension >= 3);
    CHECK(res.dimension <= 5);
  }
}
