#include "doctest.h"
#include <set>

#include "gq/constructions.hpp"
#include "gq/iso.hpp"
#include "gq/subgeometry.hpp"
#include "oracles.hpp"

using namespace gq;
using namespace oracles;

TEST_CASE("perps, traces and spans in Q(4,2)") {
  Geometry g = quadric_gq(4, 2);
  for (int x = 0; x < g.num_points(); ++x) {
    CHECK(perp(g, x).count() == 7);  // 1 + s(t+1)
    CHECK(perp(g, x).to_vector() == naive_perp(g, x));
  }
  int x = 0, y = -1;
  for (int p = 1; p < g.num_points(); ++p)
    if (!g.are_collinear(x, p)) {
      y = p;
      break;
    }
  REQUIRE(y > 0);
  CHECK(trace_set(g, x, y).count() == 3);  // t+1
  CHECK_THROWS_AS(trace_set(g, x, x), GqError);
}

TEST_CASE("span in a grid is computed exhaustively") {
  Geometry g = grid_geometry(3, 3);
  // noncollinear pair: distinct rows and columns
  int x = 0, y = 4;
  REQUIRE(!g.are_collinear(x, y));
  Bitset sp = span_set(g, x, y);
  // brute force: points collinear with every common neighbour of x,y
  std::vector<int> expected;
  for (int p = 0; p < 9; ++p) {
    bool all = true;
    for (int z = 0; z < 9; ++z) {
      if (!naive_collinear(g, x, z) || !naive_collinear(g, y, z)) continue;
      all &= naive_collinear(g, p, z);
    }
    if (all) expected.push_back(p);
  }
  CHECK(sp.to_vector() == expected);
}

TEST_CASE("regularity: Q(4,2) all pairs regular, W(3) none") {
  Geometry g = quadric_gq(4, 2);
  for (int u = 0; u < g.num_lines(); ++u) CHECK(is_regular_line(g, u));

  Geometry w3 = wq(3);
  int regular_pairs = 0, opposite_pairs = 0;
  for (int u = 0; u < w3.num_lines(); ++u)
    for (int v = u + 1; v < w3.num_lines(); ++v) {
      if (lines_concurrent(w3, u, v)) continue;
      ++opposite_pairs;
      if (is_regular_pair(w3, u, v)) ++regular_pairs;
    }
  CHECK(opposite_pairs == 540);
  CHECK(regular_pairs == 0);
  CHECK(full_grids(w3).empty());
}

TEST_CASE("grid(3,3) is its own full grid") {
  Geometry g = grid_geometry(3, 3);
  auto grids = full_grids(g);
  REQUIRE(grids.size() == 1);
  CHECK(grids[0].num_points() == 9);
  CHECK(grids[0].num_lines() == 6);
}

TEST_CASE("axes of symmetry in Q(4,2)") {
  Geometry g = quadric_gq(4, 2);
  PermGroup aut = automorphisms(g);
  CHECK(aut.order() == 720);
  for (int u = 0; u < g.num_lines(); ++u) {
    PermGroup sym = symmetries_about_line(g, aut, u);
    CHECK(sym.order() == 2);  // sharply transitive of degree s = 2
    CHECK(is_axis_of_symmetry(g, aut, u));
  }
  for (int x = 0; x < g.num_points(); ++x) CHECK(is_translation_point(g, aut, x));
}

TEST_CASE("thick full subGQs") {
  Geometry q52 = quadric_gq(5, 2);
  auto search = thick_full_subgqs(q52);
  CHECK(search.exhaustive);
  CHECK(search.thick.size() == 36);  // nondegenerate hyperplane sections
  Geometry q42 = quadric_gq(4, 2);
  auto cert42 = canonical_form(q42);
  for (const auto& sub : search.thick) {
    Geometry ind = sub.induced();
    auto ord = detect_order(ind);
    REQUIRE(ord);
    CHECK(ord->s == 2);
    CHECK(ord->t == 2);
    CHECK(canonical_form(ind) == cert42);
  }
  // Q(4,2) itself has no proper thick full subGQ
  auto search42 = thick_full_subgqs(q42);
  CHECK(search42.exhaustive);
  CHECK(search42.thick.empty());
  // grids are not thick
  CHECK(thick_full_subgqs(grid_geometry(3, 3)).thick.empty());
}

TEST_CASE("ovoids and hyperplanes of Q(4,2)") {
  Geometry g = quadric_gq(4, 2);
  auto ovs = ovoids(g);
  CHECK(!ovs.empty());
  for (const auto& o : ovs) {
    CHECK(o.count() == 5);  // st + 1
    AnchoredSubgeometry s;
    s.parent = &g;
    s.points = o;
    s.lines = Bitset(g.num_lines());
    CHECK(is_geometric_hyperplane(g, s));
  }
  // maximal perps are hyperplanes
  int x = 3;
  AnchoredSubgeometry mp;
  mp.parent = &g;
  mp.points = g.collinear(x);
  mp.lines = Bitset(g.num_lines());
  for (int l : g.lines_through(x)) mp.lines.set(l);
  CHECK(is_geometric_hyperplane(g, mp));
  auto hps = geometric_hyperplanes(g);
  int n_ovoid = 0, n_sub = 0, n_perp = 0;
  for (auto& h : hps) {
    if (h.kind == HyperplaneKind::Ovoid) ++n_ovoid;
    if (h.kind == HyperplaneKind::SubGQ) ++n_sub;
    if (h.kind == HyperplaneKind::MaxPerp) ++n_perp;
  }
  CHECK(n_ovoid == 6);  // Q(4,2) has exactly 6 ovoids
  CHECK(n_sub == 10);   // the 10 full grids
  CHECK(n_perp == 15);
}

TEST_CASE("W(3) has no ovoid") {
  CHECK(ovoids(wq(3)).empty());
}

TEST_CASE("remove_closed remnants") {
  Geometry g = quadric_gq(4, 2);
  // perp hyperplane: affine quadrangle with 8 points
  AnchoredSubgeometry mp;
  mp.parent = &g;
  mp.points = g.collinear(0);
  mp.lines = Bitset(g.num_lines());
  for (int l : g.lines_through(0)) mp.lines.set(l);
  Geometry aff = remove_closed(g, mp);
  CHECK(aff.num_points() == 8);
  for (int l = 0; l < aff.num_lines(); ++l) CHECK(aff.line_size(l) == 2);

  // ovoid removal: 10 points, all 15 lines of size 2
  auto ovs = ovoids(g, 1);
  REQUIRE(!ovs.empty());
  AnchoredSubgeometry ov;
  ov.parent = &g;
  ov.points = ovs[0];
  ov.lines = Bitset(g.num_lines());
  Geometry rem = remove_closed(g, ov);
  CHECK(rem.num_points() == 10);
  CHECK(rem.num_lines() == 15);
  for (int l = 0; l < rem.num_lines(); ++l) CHECK(rem.line_size(l) == 2);

  // removing all points of a line but not the line leaves an empty-line mark
  Geometry line = line_geometry(3);
  AnchoredSubgeometry allpts;
  allpts.parent = &line;
  allpts.points = Bitset(3);
  for (int p = 0; p < 3; ++p) allpts.points.set(p);
  allpts.lines = Bitset(1);
  Geometry emptied = remove_closed(line, allpts);
  CHECK(emptied.num_points() == 0);
  CHECK(emptied.num_lines() == 0);
  CHECK(emptied.empty_line_marks.size() == 1);
}

TEST_CASE("decomposition verdicts") {
  Geometry q42 = quadric_gq(4, 2);
  auto v = decomposition_verdict(q42);
  CHECK(v.decomposable);
  CHECK(v.case_tag == 7);
  // grid part: 9 points 6 lines; dual grid part: 6 points 9 lines
  CHECK(v.part2.num_points() == 9);
  CHECK(v.part2.num_lines() == 6);
  CHECK(v.part1.num_points() == 6);
  CHECK(v.part1.num_lines() == 9);
  CHECK(is_valid_decomposition(q42, v.part1, v.part2));
  // all 15+15 elements covered
  CHECK((v.part1.points | v.part2.points).count() == 15);
  CHECK((v.part1.lines | v.part2.lines).count() == 15);

  Geometry q43 = quadric_gq(4, 3);
  auto v43 = decomposition_verdict(q43);
  CHECK(!v43.decomposable);
  CHECK(v43.exhaustive);

  Geometry grid = grid_geometry(3, 3);
  auto vg = decomposition_verdict(grid);
  CHECK(vg.decomposable);
  CHECK(vg.case_tag == 3);
  CHECK(is_valid_decomposition(grid, vg.part1, vg.part2));

  CHECK_THROWS_AS(decomposition_verdict(line_geometry(3)), GqError);
}

TEST_CASE("trace geometry of an ideal perp in Q(4,2) is the Fano plane") {
  Geometry g = quadric_gq(4, 2);
  AnchoredSubgeometry t;
  t.parent = &g;
  t.points = g.collinear(0);
  t.lines = Bitset(g.num_lines());
  for (int l : g.lines_through(0)) t.lines.set(l);
  TraceGeometry tr = trace_geometry(t);
  CHECK(tr.base_type == TraceBaseType::Perp);
  CHECK(tr.geom.num_points() == 7);
  CHECK(tr.geom.num_lines() == 7);
  CHECK(are_isomorphic(tr.geom, fano_plane()).has_value());
  int original = 0, subtended = 0;
  for (int ty : tr.line_type) (ty == 0 ? original : subtended)++;
  CHECK(original == 3);
  CHECK(subtended == 4);

  // single point is not an admissible base
  AnchoredSubgeometry single;
  single.parent = &g;
  single.points = Bitset(g.num_points());
  single.points.set(0);
  single.lines = Bitset(g.num_lines());
  CHECK_THROWS_AS(trace_geometry(single), GqError);
}

TEST_CASE("trace geometry of a full grid") {
  Geometry g = quadric_gq(4, 2);
  auto grids = full_grids(g);
  REQUIRE(!grids.empty());
  TraceGeometry tr = trace_geometry(grids[0]);
  CHECK(tr.base_type == TraceBaseType::Grid);
  CHECK(tr.geom.num_points() == 9);
  bool has_subtended = false;
  for (int ty : tr.line_type) has_subtended |= (ty == 1);
  CHECK(has_subtended);
}

TEST_CASE("complete arcs in Q(4,2): Theorem 4.1 first bullet") {
  Geometry g = quadric_gq(4, 2);
  // complete (st - t/s) = 3-arcs, counted up to isomorphism
  auto arcs = complete_arcs_of_size(g, 3);
  CHECK(!arcs.empty());
  PermGroup aut = automorphisms(g);
  // orbit count: all arcs in one Aut-orbit means a unique example up to iso
  std::set<std::vector<int>> all;
  for (auto& a : arcs) {
    auto s = a;
    std::sort(s.begin(), s.end());
    all.insert(s);
  }
  std::set<std::vector<int>> reached;
  std::vector<std::vector<int>> stack{*all.begin()};
  reached.insert(*all.begin());
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    for (const Perm& p : aut.elements()) {
      std::vector<int> img;
      for (int x : cur) img.push_back(p[x]);
      std::sort(img.begin(), img.end());
      if (all.count(img) && !reached.count(img)) {
        reached.insert(img);
        stack.push_back(img);
      }
    }
  }
  CHECK(reached.size() == all.size());  // unique up to isomorphism
}

TEST_CASE("complete dual grids in Q(4,3)") {
  Geometry g = quadric_gq(4, 3);
  auto grids = complete_dual_grids(g);
  CHECK(!grids.empty());  // Theorem 4.1 third bullet allows Q(4,q) with q odd
  for (const auto& w : grids) {
    CHECK(w.small_side.size() == 2);
    CHECK(w.big_side.size() == 4);
    auto arc = arc_from_dual_grid(g, w);
    // the advertised size s^2 - s materializes and the set is a partial ovoid;
    // whether it is complete is left to is_complete_arc (observed: it extends)
    CHECK(arc.size() == 6);
    for (size_t i = 0; i < arc.size(); ++i)
      for (size_t j = i + 1; j < arc.size(); ++j) CHECK(!g.are_collinear(arc[i], arc[j]));
  }
  CHECK_THROWS_AS(complete_dual_grids(quadric_gq(5, 2)), GqError);
}
