#ifndef GQ_PROJECTIVE_HPP
#define GQ_PROJECTIVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gq/gf.hpp"

namespace gq {

// Projective space PG(m,q). Points are normalized homogeneous coordinate
// vectors (first nonzero entry 1), indexed densely in enumeration order.
class ProjSpace {
 public:
  ProjSpace(const Fq& field, int m);

  const Fq& field() const { return f_; }
  int dim() const { return m_; }
  int num_points() const { return int(pts_.size()); }
  const std::vector<int>& coords(int id) const { return pts_[id]; }

  int id_of(const std::vector<int>& coords) const;  // normalizes first; -1 if zero
  std::vector<int> normalize(std::vector<int> v) const;

  // The q+1 points on the line spanned by two distinct points.
  std::vector<int> line_through(int a, int b) const;

  // All lines, each a sorted vector of point ids.
  std::vector<std::vector<int>> all_lines() const;

  // Hyperplanes a.x = 0 as (dual coords, point set).
  struct Hyperplane {
    std::vector<int> dual;
    std::vector<int> points;
  };
  std::vector<Hyperplane> hyperplanes() const;

  int dot(const std::vector<int>& a, const std::vector<int>& x) const;
  std::string coord_label(int id) const;

 private:
  Fq f_;
  int m_;
  std::vector<std::vector<int>> pts_;
  std::vector<int> index_;  // dense base-q encoding -> id
  int encode(const std::vector<int>& v) const;
};

// Quadratic form sum c[i][j] X_i X_j (i <= j) over Fq in dim variables.
struct QuadraticForm {
  int dim = 0;
  std::vector<std::vector<int>> c;  // upper triangular

  static QuadraticForm zero(int dim);
  int eval(const Fq& f, const std::vector<int>& x) const;
  // Polar form B(x,y) = Q(x+y) - Q(x) - Q(y).
  int polar(const Fq& f, const std::vector<int>& x, const std::vector<int>& y) const;
  std::string describe() const;
};

// The lexicographically least irreducible binary quadratic form over Fq,
// scanned in (a,b,c)-encoding order of a*X^2 + b*XY + c*Y^2.
QuadraticForm least_irreducible_binary_form(const Fq& f);

}  // namespace gq

#endif
