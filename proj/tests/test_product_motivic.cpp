#include "doctest.h"

#include <random>

#include "gq/constructions.hpp"
#include "gq/iso.hpp"
#include "gq/motivic.hpp"
#include "gq/product.hpp"
#include "oracles.hpp"

using namespace gq;
using namespace oracles;

namespace {

// random geometry satisfying (3)~ with all lines >= 2 points, by rejection
Geometry random_triangle_free(std::mt19937& rng, int max_pts, int max_lines) {
  std::uniform_int_distribution<int> dp(2, max_pts);
  while (true) {
    int n = dp(rng);
    std::uniform_int_distribution<int> dl(1, max_lines);
    std::uniform_int_distribution<int> dv(0, n - 1);
    int nl = dl(rng);
    std::vector<std::vector<int>> lines;
    for (int l = 0; l < nl; ++l) {
      std::uniform_int_distribution<int> dsz(2, std::min(4, n));
      int sz = dsz(rng);
      std::set<int> pts;
      while (int(pts.size()) < sz) pts.insert(dv(rng));
      lines.push_back(std::vector<int>(pts.begin(), pts.end()));
    }
    try {
      Geometry g = Geometry::create(n, lines);
      if (check_axiom3_tilde(g).pass) return g;
    } catch (const GqError&) {
    }
  }
}

}  // namespace

TEST_CASE("line x line is a grid of order (l,1)") {
  Geometry l3 = line_geometry(3);
  ProductGeometry p = cartesian_product(l3, l3);
  CHECK(p.geom.num_points() == 9);
  CHECK(p.geom.num_lines() == 6);
  auto ord = detect_order(p.geom);
  REQUIRE(ord);
  CHECK(ord->s == 2);
  CHECK(ord->t == 1);
  CHECK(are_isomorphic(p.geom, grid_geometry(3, 3)).has_value());

  // neutral element
  Geometry pt = point_set_geometry(1);
  Geometry g = quadric_gq(3, 2);
  ProductGeometry gp = cartesian_product(g, pt);
  CHECK(are_isomorphic(gp.geom, g).has_value());

  // line(3) x line(4): 12 points, 7 lines
  ProductGeometry l34 = cartesian_product(l3, line_geometry(4));
  CHECK(l34.geom.num_points() == 12);
  CHECK(l34.geom.num_lines() == 7);
}

TEST_CASE("prodwell(1): spectrum union and triangle-freeness") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    Geometry a = random_triangle_free(rng, 8, 4);
    Geometry b = random_triangle_free(rng, 8, 4);
    ProductGeometry p = cartesian_product(a, b);
    std::set<int> expect = line_spectrum(a);
    for (int s : line_spectrum(b)) expect.insert(s);
    CHECK(line_spectrum(p.geom) == expect);
    CHECK(check_axiom3_tilde(p.geom).pass);
    CHECK(naive_triangle_free(p.geom));
  }
}

TEST_CASE("[L]^n has n parallel classes and no triangles") {
  Geometry l3 = line_geometry(3);
  Geometry cur = l3;
  for (int n = 2; n <= 3; ++n) {
    cur = cartesian_product(cur, l3).geom;
    CHECK(check_axiom3_tilde(cur).pass);
    // parallel classes: maximal sets of mutually nonconcurrent lines that
    // partition the points; count = n by construction (3^(n-1) lines each)
    CHECK(cur.num_lines() == n * (cur.num_points() / 3));
  }
}

TEST_CASE("prodwell(2): product respects closure") {
  Geometry y = line_geometry(3);
  Geometry x = quadric_gq(4, 2);
  // C = perp hyperplane
  AnchoredSubgeometry c;
  c.parent = &x;
  c.points = x.collinear(0);
  c.lines = Bitset(x.num_lines());
  for (int l : x.lines_through(0)) c.lines.set(l);
  CHECK(product_respects_closure(y, x, c));
  // C = empty
  AnchoredSubgeometry none = AnchoredSubgeometry::empty(x);
  CHECK(product_respects_closure(y, x, none));
  // C = X
  CHECK(product_respects_closure(y, x, AnchoredSubgeometry::whole(x)));
}

TEST_CASE("product satisfies (3) only for point sets or lines") {
  Geometry l3 = line_geometry(3);
  auto v1 = product_is_prime_only_if(l3, l3);
  CHECK(v1.product_satisfies_axiom3);
  CHECK(v1.factors_are_lines);
  CHECK(v1.consistent_with_proposition);

  Geometry pts = point_set_geometry(3);
  auto v2 = product_is_prime_only_if(pts, pts);
  CHECK(v2.product_satisfies_axiom3);
  CHECK(v2.consistent_with_proposition);

  // a line plus an off-line point violates (3) in the product
  Geometry line_plus = Geometry::create(4, {{0, 1, 2}});
  auto v3 = product_is_prime_only_if(line_plus, l3);
  CHECK(!v3.product_satisfies_axiom3);
  CHECK(v3.consistent_with_proposition);
  CHECK(v3.certificate.witness_point >= 0);
}

TEST_CASE("Sabidussi orders") {
  Geometry l3 = line_geometry(3);
  Geometry l4 = line_geometry(4);
  SimpleGraph k3 = strip_loops(collinearity_graph(l3));
  CHECK(is_prime_cartesian(k3));
  CHECK(graph_aut_order(k3) == 6);
  CHECK(sabidussi_check(l3, l3));  // 6*6*2 = 72
  CHECK(sabidussi_check(l3, l4));  // 6*24 = 144
  SimpleGraph rook = graph_cartesian_product(k3, k3);
  CHECK(graph_aut_order(rook) == 72);
  CHECK(!is_prime_cartesian(rook));
  SimpleGraph k34 = graph_cartesian_product(k3, strip_loops(collinearity_graph(l4)));
  CHECK(graph_aut_order(k34) == 144);
  // G x point keeps the automorphism group
  CHECK(sabidussi_check(l3, point_set_geometry(1)));
}

TEST_CASE("fiber product universal property") {
  Geometry l3 = line_geometry(3);
  SimpleGraph g = strip_loops(collinearity_graph(l3));
  SimpleGraph h = g;
  SimpleGraph prod = graph_cartesian_product(g, h);
  // the product itself with its projections
  std::vector<int> pi1(prod.n), pi2(prod.n);
  for (int v = 0; v < prod.n; ++v) {
    pi1[v] = v / h.n;
    pi2[v] = v % h.n;
  }
  auto phi = verify_fiber_terminal(prod, pi1, pi2, g, h);
  for (int v = 0; v < prod.n; ++v) CHECK(phi[v] == v);  // mediating map is the identity

  // a single vertex mapping to compatible vertices
  SimpleGraph one;
  one.n = 1;
  one.adj.assign(1, Bitset(1));
  auto phi1 = verify_fiber_terminal(one, {0}, {1}, g, h);
  CHECK(phi1[0] == 1);

  // an incompatible cone: K2 mapped to adjacent pairs on both sides
  SimpleGraph k2;
  k2.n = 2;
  k2.adj.assign(2, Bitset(2));
  k2.adj[0].set(1);
  k2.adj[1].set(0);
  CHECK_THROWS_AS(verify_fiber_terminal(k2, {0, 1}, {0, 1}, g, h), GqError);
}

TEST_CASE("product is associative and commutative up to isomorphism") {
  Geometry a = line_geometry(3);
  Geometry b = line_geometry(2);
  Geometry c = point_set_geometry(2);
  Geometry ab_c = cartesian_product(cartesian_product(a, b).geom, c).geom;
  Geometry a_bc = cartesian_product(a, cartesian_product(b, c).geom).geom;
  CHECK(are_isomorphic(ab_c, a_bc).has_value());
  Geometry ab = cartesian_product(a, b).geom;
  Geometry ba = cartesian_product(b, a).geom;
  CHECK(are_isomorphic(ab, ba).has_value());
}

TEST_CASE("motivic classes of the orthogonal forms") {
  Fq f2 = Fq::make(2, 1);
  // Q(3,q): (L+1)^2 = L^2 + 2L + 1
  MotivicClass q3 = quadric_class(orthogonal_form(3, f2), 3, f2);
  MotivicClass expect3;
  expect3.a = {1, 2, 1};
  CHECK(q3 == expect3);
  // Q(4,q): L^3 + L^2 + L + 1
  MotivicClass q4 = quadric_class(orthogonal_form(4, f2), 4, f2);
  MotivicClass expect4;
  expect4.a = {1, 1, 1, 1};
  CHECK(q4 == expect4);
  // Q(5,q): L^4 + L^3 + L^2 [Spec K] + L + 1
  MotivicClass q5 = quadric_class(orthogonal_form(5, f2), 5, f2);
  MotivicClass expect5;
  expect5.a = {1, 1, 0, 1, 1};
  expect5.b = {0, 0, 1};
  CHECK(q5 == expect5);
  CHECK(q5.K == MotivicClass::Ext::Degree2);

  // the same classes over F3 and F4
  for (auto [p, k] : {std::pair{3, 1}, std::pair{2, 2}}) {
    Fq fq = Fq::make(p, k);
    CHECK(quadric_class(orthogonal_form(3, fq), 3, fq) == expect3);
    CHECK(quadric_class(orthogonal_form(4, fq), 4, fq) == expect4);
    CHECK(quadric_class(orthogonal_form(5, fq), 5, fq) == expect5);
  }
}

TEST_CASE("evaluate_count matches the exhaustive oracle") {
  for (auto [p, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
    Fq fq = Fq::make(p, k);
    for (int m : {3, 4, 5}) {
      QuadraticForm form = orthogonal_form(m, fq);
      MotivicClass cls = quadric_class(form, m, fq);
      for (int ext = 1; ext <= 2; ++ext)
        CHECK(evaluate_count(cls, fq.q(), ext) == count_form_zeros(form, fq, ext));
    }
  }
  // the frozen reported values
  Fq f2 = Fq::make(2, 1);
  MotivicClass q5 = quadric_class(orthogonal_form(5, f2), 5, f2);
  CHECK(evaluate_count(q5, 2, 1) == 27);   // 16+8+0+2+1
  CHECK(evaluate_count(q5, 2, 2) == 357);  // 256+64+2*16+4+1
  MotivicClass q3 = quadric_class(orthogonal_form(3, f2), 3, f2);
  CHECK(evaluate_count(q3, 2, 1) == 9);
  MotivicClass q4 = quadric_class(orthogonal_form(4, f2), 4, f2);
  CHECK(evaluate_count(q4, 2, 1) == 15);
}
