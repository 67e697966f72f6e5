#include "doctest.h"

#include <set>

#include "gq/constructions.hpp"
#include "gq/zariski.hpp"

using namespace gq;

TEST_CASE("primal enumeration of Q(4,2)") {
  Geometry g = quadric_gq(4, 2);
  auto pe = primal_subgeometries(g);
  CHECK(pe.exhaustive);
  std::set<PrimalKind> kinds;
  for (auto& e : pe.elems) kinds.insert(e.kind);
  CHECK(kinds.count(PrimalKind::OrdinaryPoint));
  CHECK(kinds.count(PrimalKind::FullLine));
  CHECK(kinds.count(PrimalKind::PerpInFullSub));
  CHECK(kinds.count(PrimalKind::FullGrid));
  // Q(4,2) has no proper thick subGQ, and itself is excluded by (2,2)
  CHECK(!kinds.count(PrimalKind::ThickFullSubGQ));
  CHECK(!generic_point(g).has_value());
}

TEST_CASE("primal enumeration of W(3): no full grids") {
  Geometry w3 = wq(3);
  auto pe = primal_subgeometries(w3);
  for (auto& e : pe.elems) CHECK(e.kind != PrimalKind::FullGrid);
  CHECK(generic_point(w3).has_value());  // (3,3) is not excluded
  CHECK(generic_point(quadric_gq(4, 3)).has_value());
  CHECK(generic_point(grid_geometry(3, 3)).has_value());
  CHECK(!generic_point(dual_grid_geometry(3, 3)).has_value());
}

TEST_CASE("closed sets: grid regulus counterexample of Prop 5.7(2)'") {
  Geometry g = quadric_gq(4, 2);
  auto pe = primal_subgeometries(g);
  // a full grid and its two reguli as ideal subgeometries
  int grid_idx = -1;
  for (size_t i = 0; i < pe.elems.size(); ++i)
    if (pe.elems[i].kind == PrimalKind::FullGrid) {
      grid_idx = int(i);
      break;
    }
  REQUIRE(grid_idx >= 0);
  const AnchoredSubgeometry& grid = pe.elems[grid_idx].sub;
  // split grid lines into the two reguli by concurrency
  std::vector<int> glines = grid.lines.to_vector();
  std::vector<int> r1{glines[0]}, r2;
  for (size_t i = 1; i < glines.size(); ++i) {
    if (lines_concurrent(g, glines[0], glines[i])) r2.push_back(glines[i]);
    else r1.push_back(glines[i]);
  }
  auto regulus_sub = [&](const std::vector<int>& lines) {
    AnchoredSubgeometry s;
    s.parent = &g;
    s.points = Bitset(g.num_points());
    s.lines = Bitset(g.num_lines());
    for (int l : lines) {
      s.lines.set(l);
      s.points |= g.line_bits(l);
    }
    return make_ideal(s);
  };
  IdealSubgeometry s1 = regulus_sub(r1), s2 = regulus_sub(r2);
  ClosedSet c1 = closed_set(pe, s1), c2 = closed_set(pe, s2);
  // the grid is in C(S1 ∪ S2) but not in C(S1) ∪ C(S2)
  AnchoredSubgeometry uni;
  uni.parent = &g;
  uni.points = s1.sub.points | s2.sub.points;
  uni.lines = s1.sub.lines | s2.sub.lines;
  ClosedSet cu = closed_set(pe, make_ideal(uni));
  std::set<int> m1(c1.members.begin(), c1.members.end());
  std::set<int> m2(c2.members.begin(), c2.members.end());
  std::set<int> mu(cu.members.begin(), cu.members.end());
  CHECK(mu.count(grid_idx));
  CHECK(!m1.count(grid_idx));
  CHECK(!m2.count(grid_idx));
  // C(S1) ∪ C(S2) ⊆ C(S1 ∪ S2)
  for (int m : m1) CHECK(mu.count(m));
  for (int m : m2) CHECK(mu.count(m));
}

TEST_CASE("C(S1 ∩ S2) = C(S1) ∩ C(S2)") {
  Geometry g = quadric_gq(4, 2);
  auto pe = primal_subgeometries(g);
  // S1 = perp at 0, S2 = perp at 1 (both ideal)
  auto perp_sub = [&](int x) {
    AnchoredSubgeometry s;
    s.parent = &g;
    s.points = g.collinear(x);
    s.lines = Bitset(g.num_lines());
    for (int l : g.lines_through(x)) s.lines.set(l);
    return make_ideal(s);
  };
  IdealSubgeometry s1 = perp_sub(0), s2 = perp_sub(1);
  AnchoredSubgeometry inter;
  inter.parent = &g;
  inter.points = s1.sub.points & s2.sub.points;
  inter.lines = s1.sub.lines & s2.sub.lines;
  IdealSubgeometry si = make_ideal(inter);
  ClosedSet ca = closed_set(pe, s1), cb = closed_set(pe, s2), ci = closed_set(pe, si);
  std::set<int> a(ca.members.begin(), ca.members.end());
  std::set<int> b(cb.members.begin(), cb.members.end());
  std::set<int> i(ci.members.begin(), ci.members.end());
  std::set<int> ab;
  for (int m : a)
    if (b.count(m)) ab.insert(m);
  CHECK(ab == i);
}

TEST_CASE("Krull dimensions of the worked examples") {
  auto d52 = krull_dimension(quadric_gq(5, 2));
  CHECK(d52.dimension == 5);
  CHECK(d52.exact);
  CHECK(d52.chain.elements.size() == 6);

  auto d42 = krull_dimension(quadric_gq(4, 2));
  CHECK(d42.dimension == 4);
  CHECK(d42.exact);

  auto dh = krull_dimension(h3(2));
  CHECK(dh.dimension == 3);
  CHECK(dh.exact);

  auto dw = krull_dimension(wq(3));
  CHECK(dw.dimension == 3);
  CHECK(dw.exact);

  CHECK(krull_dimension(grid_geometry(3, 3)).dimension == 3);
  CHECK(krull_dimension(quadric_gq(3, 2)).dimension == 3);
}

TEST_CASE("chains are strictly increasing and verified") {
  auto res = krull_dimension(quadric_gq(5, 2));
  for (size_t i = 0; i + 1 < res.chain.elements.size(); ++i) {
    CHECK(res.chain.elements[i + 1].contains(res.chain.elements[i]));
    CHECK(!(res.chain.elements[i] == res.chain.elements[i + 1]));
  }
}

TEST_CASE("AFF view of Q(5,2) minus a Q(4,2)-hyperplane has dimension 5") {
  Geometry g = quadric_gq(5, 2);
  auto subs = thick_full_subgqs(g);
  REQUIRE(!subs.thick.empty());
  const AnchoredSubgeometry& delta = subs.thick[0];
  REQUIRE(is_geometric_hyperplane(g, delta));
  SpecView view = SpecView::aff(g, delta);
  auto dim = view.dimension();
  CHECK(dim.dimension == 5);
  CHECK(dim.exact);
  // every chain element meets the open complement
  for (auto& e : dim.chain.elements) {
    bool inside = e.points.subset_of(delta.points) && e.lines.subset_of(delta.lines);
    CHECK(!inside);
  }
}

TEST_CASE("QUAS removal can break irreducibility") {
  // ideal perp of Q(4,2): primal, hence irreducible
  Geometry g = quadric_gq(4, 2);
  AnchoredSubgeometry perp0;
  perp0.parent = &g;
  perp0.points = g.collinear(0);
  perp0.lines = Bitset(g.num_lines());
  for (int l : g.lines_through(0)) perp0.lines.set(l);
  Geometry perp_geom = perp0.induced();
  CHECK(is_primal_geometry(perp_geom));
  // remove the ovoid {centre}: disconnected punctured lines remain
  int centre = -1;
  for (int p = 0; p < perp_geom.num_points(); ++p)
    if (perp_geom.point_degree(p) == perp_geom.num_lines()) centre = p;
  REQUIRE(centre >= 0);
  AnchoredSubgeometry c;
  c.parent = &perp_geom;
  c.points = Bitset(perp_geom.num_points());
  c.points.set(centre);
  c.lines = Bitset(perp_geom.num_lines());
  SpecView view = SpecView::quas(perp_geom, c);
  CHECK(view.has_generic_point() == false);
  CHECK(!view.remnant_irreducible());
  // PROJ view of a primal geometry has a generic point
  CHECK(SpecView::proj(perp_geom).has_generic_point());
}

TEST_CASE("no finite thick corpus GQ reaches dimension 6") {
  for (int q : {2, 3}) {
    for (int m : {4, 5}) {
      auto res = krull_dimension(quadric_gq(m, q));
      CHECK(res.exact);
      CHECK(res.dimension >= 3);
      CHECK(res.dimension <= 5);
    }
  }
}
