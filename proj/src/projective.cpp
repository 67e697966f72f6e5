#include "gq/projective.hpp"

#include <algorithm>
#include <set>

namespace gq {

ProjSpace::ProjSpace(const Fq& field, int m) : f_(field), m_(m) {
  int q = f_.q();
  long long total = 1;
  for (int i = 0; i <= m; ++i) total *= q;
  index_.assign(total, -1);
  std::vector<int> v(m + 1, 0);
  // enumerate all vectors, keep normalized ones
  for (long long e = 1; e < total; ++e) {
    long long x = e;
    for (int i = 0; i <= m; ++i) {
      v[i] = int(x % q);
      x /= q;
    }
    int lead = -1;
    for (int i = 0; i <= m && lead < 0; ++i)
      if (v[i]) lead = i;
    if (v[lead] != 1) continue;
    index_[e] = int(pts_.size());
    pts_.push_back(v);
  }
}

int ProjSpace::encode(const std::vector<int>& v) const {
  long long e = 0;
  for (int i = m_; i >= 0; --i) e = e * f_.q() + v[i];
  return int(e);
}

std::vector<int> ProjSpace::normalize(std::vector<int> v) const {
  int lead = -1;
  for (int i = 0; i <= m_ && lead < 0; ++i)
    if (v[i]) lead = i;
  if (lead < 0) return v;
  int s = f_.inv(v[lead]);
  for (int i = 0; i <= m_; ++i) v[i] = f_.mul(v[i], s);
  return v;
}

int ProjSpace::id_of(const std::vector<int>& coords) const {
  std::vector<int> v = normalize(coords);
  bool zero = true;
  for (int x : v) zero &= (x == 0);
  if (zero) return -1;
  return index_[encode(v)];
}

std::vector<int> ProjSpace::line_through(int a, int b) const {
  const auto& pa = pts_[a];
  const auto& pb = pts_[b];
  std::vector<int> ids;
  ids.push_back(a);
  std::vector<int> v(m_ + 1);
  for (int lam = 0; lam < f_.q(); ++lam) {
    for (int i = 0; i <= m_; ++i) v[i] = f_.add(f_.mul(lam, pa[i]), pb[i]);
    ids.push_back(id_of(v));
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::vector<std::vector<int>> ProjSpace::all_lines() const {
  std::set<std::vector<int>> lines;
  for (int a = 0; a < num_points(); ++a)
    for (int b = a + 1; b < num_points(); ++b) {
      if (a == b) continue;
      auto l = line_through(a, b);
      if (l.front() == a && l[1] == b) lines.insert(l);  // count each line once
    }
  return std::vector<std::vector<int>>(lines.begin(), lines.end());
}

int ProjSpace::dot(const std::vector<int>& a, const std::vector<int>& x) const {
  int s = 0;
  for (int i = 0; i <= m_; ++i) s = f_.add(s, f_.mul(a[i], x[i]));
  return s;
}

std::vector<ProjSpace::Hyperplane> ProjSpace::hyperplanes() const {
  std::vector<Hyperplane> hs;
  hs.reserve(num_points());
  for (int d = 0; d < num_points(); ++d) {
    Hyperplane h;
    h.dual = pts_[d];
    for (int p = 0; p < num_points(); ++p)
      if (dot(h.dual, pts_[p]) == 0) h.points.push_back(p);
    hs.push_back(std::move(h));
  }
  return hs;
}

std::string ProjSpace::coord_label(int id) const {
  std::string s = "(";
  const auto& v = pts_[id];
  for (int i = 0; i <= m_; ++i) {
    if (i) s += ":";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

QuadraticForm QuadraticForm::zero(int dim) {
  QuadraticForm f;
  f.dim = dim;
  f.c.assign(dim, std::vector<int>(dim, 0));
  return f;
}

int QuadraticForm::eval(const Fq& f, const std::vector<int>& x) const {
  int s = 0;
  for (int i = 0; i < dim; ++i) {
    if (!x[i]) continue;
    for (int j = i; j < dim; ++j) {
      if (!c[i][j] || !x[j]) continue;
      s = f.add(s, f.mul(c[i][j], f.mul(x[i], x[j])));
    }
  }
  return s;
}

int QuadraticForm::polar(const Fq& f, const std::vector<int>& x, const std::vector<int>& y) const {
  std::vector<int> xy(dim);
  for (int i = 0; i < dim; ++i) xy[i] = f.add(x[i], y[i]);
  return f.sub(f.sub(eval(f, xy), eval(f, x)), eval(f, y));
}

std::string QuadraticForm::describe() const {
  std::string s;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      if (c[i][j]) {
        if (!s.empty()) s += " + ";
        if (c[i][j] != 1) s += std::to_string(c[i][j]) + "*";
        s += (i == j) ? "X" + std::to_string(i) + "^2"
                      : "X" + std::to_string(i) + "X" + std::to_string(j);
      }
  return s.empty() ? "0" : s;
}

QuadraticForm least_irreducible_binary_form(const Fq& f) {
  int q = f.q();
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int cc = 0; cc < q; ++cc) {
        bool irr = true;
        for (int x = 0; x < q && irr; ++x)
          for (int y = 0; y < q && irr; ++y) {
            if (x == 0 && y == 0) continue;
            int v = f.add(f.add(f.mul(a, f.mul(x, x)), f.mul(b, f.mul(x, y))),
                          f.mul(cc, f.mul(y, y)));
            if (v == 0) irr = false;
          }
        if (irr) {
          QuadraticForm qf = QuadraticForm::zero(2);
          qf.c[0][0] = a;
          qf.c[0][1] = b;
          qf.c[1][1] = cc;
          return qf;
        }
      }
  fail(Err::NoIrreducibleForm, "no irreducible binary quadratic form over this field");
}

}  // namespace gq
