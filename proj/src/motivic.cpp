#include "gq/motivic.hpp"

#include <algorithm>

namespace gq {

MotivicClass MotivicClass::zero() { return MotivicClass{}; }

MotivicClass MotivicClass::constant(long long c) {
  MotivicClass m;
  if (c) m.a = {c};
  return m;
}

MotivicClass MotivicClass::spec_k(Ext ext) {
  MotivicClass m;
  m.K = ext;
  if (ext == Ext::None || ext == Ext::DualNumbers) {
    m.a = {1};
    m.K = ext;  // remember the reduced marker
  } else {
    m.b = {1};
  }
  return m;
}

MotivicClass& MotivicClass::shift(int by) {
  if (!a.empty()) a.insert(a.begin(), by, 0);
  if (!b.empty()) b.insert(b.begin(), by, 0);
  return *this;
}

MotivicClass& MotivicClass::operator+=(const MotivicClass& o) {
  if (o.K != Ext::None && K == Ext::None) K = o.K;
  a.resize(std::max(a.size(), o.a.size()), 0);
  for (size_t i = 0; i < o.a.size(); ++i) a[i] += o.a[i];
  b.resize(std::max(b.size(), o.b.size()), 0);
  for (size_t i = 0; i < o.b.size(); ++i) b[i] += o.b[i];
  return *this;
}

MotivicClass& MotivicClass::operator*=(long long c) {
  for (auto& x : a) x *= c;
  for (auto& x : b) x *= c;
  return *this;
}

bool MotivicClass::operator==(const MotivicClass& o) const {
  auto trim = [](std::vector<long long> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  return trim(a) == trim(o.a) && trim(b) == trim(o.b);
}

std::string MotivicClass::str() const {
  std::string s;
  auto term = [&](long long c, size_t i, bool spec) {
    if (!c) return;
    if (!s.empty()) s += " + ";
    std::string t;
    if (c != 1 || (i == 0 && !spec)) t += std::to_string(c);
    if (i >= 1) {
      if (!t.empty()) t += "*";
      t += "L";
      if (i > 1) t += "^" + std::to_string(i);
    }
    if (spec) {
      if (!t.empty()) t += "*";
      t += "[SpecK]";
    }
    s += t;
  };
  for (size_t i = a.size(); i-- > 0;) term(a[i], i, false);
  for (size_t i = b.size(); i-- > 0;) term(b[i], i, true);
  return s.empty() ? "0" : s;
}

namespace {

// number of projective zeros of f over the base field
long long projective_zero_count(const QuadraticForm& f, const Fq& k) {
  long long total = 1;
  for (int i = 0; i < f.dim; ++i) total *= k.q();
  long long affine = 0;
  std::vector<int> v(f.dim);
  for (long long e = 0; e < total; ++e) {
    long long x = e;
    for (int i = 0; i < f.dim; ++i) {
      v[i] = int(x % k.q());
      x /= k.q();
    }
    if (f.eval(k, v) == 0) ++affine;
  }
  return (affine - 1) / (k.q() - 1);
}

// Restrict f to the span of the given basis vectors.
QuadraticForm restrict_form(const QuadraticForm& f, const Fq& k,
                            const std::vector<std::vector<int>>& basis) {
  int m = int(basis.size());
  QuadraticForm r = QuadraticForm::zero(m);
  // r(y) = f(sum y_i basis_i): diagonal from f(basis_i), cross from polar form
  for (int i = 0; i < m; ++i) r.c[i][i] = f.eval(k, basis[i]);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) r.c[i][j] = f.polar(k, basis[i], basis[j]);
  return r;
}


// All vectors of F_q^dim in lexicographic encoding order.
template <class F>
void for_each_vector(const Fq& k, int dim, F&& f) {
  long long total = 1;
  for (int i = 0; i < dim; ++i) total *= k.q();
  std::vector<int> v(dim);
  for (long long e = 0; e < total; ++e) {
    long long x = e;
    for (int i = 0; i < dim; ++i) {
      v[i] = int(x % k.q());
      x /= k.q();
    }
    if (!f(v)) return;
  }
}

}  // namespace

MotivicClass quadric_class(const QuadraticForm& f, int n, const Fq& k) {
  require(f.dim == n + 1, Err::IncompatibleTypes, "form dimension must be n+1");
  if (n == 1) {
    long long zeros = projective_zero_count(f, k);
    if (zeros == 0) return MotivicClass::spec_k(MotivicClass::Ext::Degree2);
    if (zeros == 2) return MotivicClass::constant(2);
    if (zeros == 1) return MotivicClass::spec_k(MotivicClass::Ext::DualNumbers);
    // f identically zero on P^1
    MotivicClass m = MotivicClass::constant(1);
    MotivicClass l = MotivicClass::constant(1);
    l.shift(1);
    m += l;
    return m;
  }
  if (n == 2) {
    long long zeros = projective_zero_count(f, k);
    long long q = k.q();
    if (zeros == q + 1) {  // conic or double line: L + 1
      MotivicClass m = MotivicClass::constant(1);
      MotivicClass l = MotivicClass::constant(1);
      l.shift(1);
      m += l;
      return m;
    }
    if (zeros == 2 * q + 1) {  // cone over a split pair: 1 + 2L
      MotivicClass m = MotivicClass::constant(1);
      MotivicClass l = MotivicClass::constant(2);
      l.shift(1);
      m += l;
      return m;
    }
    if (zeros == 1) {  // cone over an irreducible pair: 1 + [Spec K] L
      MotivicClass m = MotivicClass::constant(1);
      MotivicClass s = MotivicClass::spec_k(MotivicClass::Ext::Degree2);
      s.shift(1);
      m += s;
      return m;
    }
    fail(Err::NoRationalPoint, "unexpected ternary quadric point count");
  }
  // n >= 3: project away from a rational smooth point u
  std::vector<int> u;
  bool found = false;
  for_each_vector(k, n + 1, [&](const std::vector<int>& v) {
    bool zero_vec = true;
    for (int x : v) zero_vec &= (x == 0);
    if (zero_vec) return true;
    if (f.eval(k, v) != 0) return true;
    // smooth: polar functional B(v, .) not identically zero
    for (int i = 0; i <= n; ++i) {
      std::vector<int> e(n + 1, 0);
      e[i] = 1;
      if (f.polar(k, v, e) != 0) {
        u = v;
        found = true;
        return false;
      }
    }
    return true;
  });
  require(found, Err::NoRationalPoint, "no smooth rational point for the projection step");

  // tangent hyperplane Pi_u = { x : B(u,x) = 0 }: kernel basis indexed by the
  // non-pivot coordinates; dropping one vector where u is nonzero leaves a
  // complement of <u> inside Pi_u (u lies in the kernel since B(u,u) = 2f(u) = 0)
  std::vector<int> cvec(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<int> e(n + 1, 0);
    e[i] = 1;
    cvec[i] = f.polar(k, u, e);
  }
  int pivot = -1;
  for (int i = 0; i <= n && pivot < 0; ++i)
    if (cvec[i]) pivot = i;
  int cpi = k.inv(cvec[pivot]);
  std::vector<std::vector<int>> tangent_basis;
  int drop = -1;
  for (int i = 0; i <= n; ++i) {
    if (i == pivot) continue;
    if (drop < 0 && u[i] != 0) {
      drop = i;
      continue;
    }
    std::vector<int> v(n + 1, 0);
    v[i] = 1;
    v[pivot] = k.neg(k.mul(cvec[i], cpi));
    tangent_basis.push_back(v);
  }
  require(drop >= 0, Err::NoRationalPoint, "projection basis degenerated");
  QuadraticForm g = restrict_form(f, k, tangent_basis);

  // [Q_n] = L^{n-1} + 1 + L * [Q'_{n-2}]
  MotivicClass res = MotivicClass::constant(1);
  MotivicClass ln1 = MotivicClass::constant(1);
  ln1.shift(n - 1);
  res += ln1;
  MotivicClass inner = quadric_class(g, n - 2, k);
  inner.shift(1);
  res += inner;
  return res;
}

long long evaluate_count(const MotivicClass& m, long long q, int ext) {
  long long qm = 1;
  for (int i = 0; i < ext; ++i) qm *= q;
  long long av = 0, pw = 1;
  for (size_t i = 0; i < m.a.size(); ++i) {
    av += m.a[i] * pw;
    pw *= qm;
  }
  long long hom = 1;
  if (m.K == MotivicClass::Ext::Degree2) hom = (ext % 2 == 0) ? 2 : 0;
  long long bv = 0;
  pw = 1;
  for (size_t i = 0; i < m.b.size(); ++i) {
    bv += m.b[i] * pw;
    pw *= qm;
  }
  return av + bv * hom;
}

}  // namespace gq
