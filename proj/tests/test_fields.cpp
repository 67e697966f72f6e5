#include "doctest.h"

#include "gq/constructions.hpp"
#include "gq/gf.hpp"
#include "gq/projective.hpp"
#include "oracles.hpp"

using namespace gq;

namespace {

void check_field_axioms(const Fq& f) {
  int q = f.q();
  for (int a = 0; a < q; ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a) CHECK(f.mul(a, f.inv(a)) == 1);
    for (int b = 0; b < q; ++b) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      for (int c = 0; c < q; ++c) {
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
      }
    }
  }
  // Frobenius is an automorphism
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
      CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
    }
}

}  // namespace

TEST_CASE("small fields satisfy the axioms") {
  check_field_axioms(Fq::make(2, 1));
  check_field_axioms(Fq::make(3, 1));
  check_field_axioms(Fq::make(2, 2));
  check_field_axioms(Fq::make(2, 3));
  check_field_axioms(Fq::make(3, 2));
  check_field_axioms(Fq::make(2, 4));
  CHECK_THROWS_AS(Fq::make(4, 1), GqError);
  CHECK_THROWS_AS(Fq::make(2, 13), GqError);
}

TEST_CASE("F4 uses x^2+x+1") {
  Fq f4 = Fq::make(2, 2);
  CHECK(f4.modulus() == std::vector<int>{1, 1, 1});
  // generator g=2 encodes x: x^2 = x+1 -> 2*2 = 3
  CHECK(f4.mul(2, 2) == 3);
}

TEST_CASE("field embeddings are homomorphisms") {
  Fq f4 = Fq::make(2, 2);
  Fq f16 = Fq::make(2, 4);
  auto emb = f4.embedding_into(f16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CHECK(emb[f4.add(a, b)] == f16.add(emb[a], emb[b]));
      CHECK(emb[f4.mul(a, b)] == f16.mul(emb[a], emb[b]));
    }
  CHECK(emb[0] == 0);
  CHECK(emb[1] == 1);
  Fq f2 = Fq::make(2, 1);
  Fq f8 = Fq::make(2, 3);
  auto e2 = f2.embedding_into(f8);
  CHECK(e2[0] == 0);
  CHECK(e2[1] == 1);
}

TEST_CASE("projective spaces have the right sizes") {
  Fq f2 = Fq::make(2, 1);
  ProjSpace pg32(f2, 3);
  CHECK(pg32.num_points() == 15);
  CHECK(pg32.all_lines().size() == 35);
  Fq f3 = Fq::make(3, 1);
  ProjSpace pg23(f3, 2);
  CHECK(pg23.num_points() == 13);
  CHECK(pg23.all_lines().size() == 13);
  for (auto& l : pg23.all_lines()) CHECK(l.size() == 4);
  // hyperplanes of the plane are its lines
  CHECK(pg23.hyperplanes().size() == 13);
}

TEST_CASE("least irreducible binary form over F2 and F3") {
  Fq f2 = Fq::make(2, 1);
  QuadraticForm g2 = least_irreducible_binary_form(f2);
  CHECK(g2.c[0][0] == 1);
  CHECK(g2.c[0][1] == 1);
  CHECK(g2.c[1][1] == 1);  // X^2+XY+Y^2
  Fq f3 = Fq::make(3, 1);
  QuadraticForm g3 = least_irreducible_binary_form(f3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) CHECK(g3.eval(f3, {x, y}) != 0);
}
