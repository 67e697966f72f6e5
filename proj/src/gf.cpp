#include "gq/gf.hpp"

#include <numeric>

namespace gq {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Polynomials over F_p encoded as coefficient vectors (index = degree).
using Poly = std::vector<int>;

Poly decode(int e, int p, int len) {
  Poly c(len, 0);
  for (int i = 0; i < len; ++i) {
    c[i] = e % p;
    e /= p;
  }
  return c;
}

int poly_deg(const Poly& a) {
  for (int i = int(a.size()) - 1; i >= 0; --i)
    if (a[i]) return i;
  return -1;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, int p) {
  Poly r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  int k = poly_deg(mod);
  for (int d = int(r.size()) - 1; d >= k; --d) {
    if (!r[d]) continue;
    int c = r[d];
    for (int i = 0; i <= k; ++i) {
      int idx = d - k + i;
      r[idx] = ((r[idx] - c * mod[i]) % p + p) % p;
    }
  }
  r.resize(k);
  return r;
}

bool is_irreducible(const Poly& f, int p) {
  // No roots, then no factor of degree d for 2d <= k via gcd with x^(p^d) - x.
  int k = poly_deg(f);
  for (int x = 0; x < p; ++x) {
    int v = 0, xp = 1;
    for (int i = 0; i <= k; ++i) {
      v = (v + f[i] * xp) % p;
      xp = (xp * x) % p;
    }
    if (v == 0) return false;
  }
  if (k <= 3) return true;  // degree 2,3: no roots suffices
  // x^(p^d) mod f via repeated Frobenius of the class of x
  Poly x(k, 0);
  if (k > 1) x[1] = 1;
  Poly cur = x;
  auto powp = [&](Poly a) {
    Poly r(k, 0);
    r[0] = 1;
    Poly base = a;
    int e = p;
    while (e) {
      if (e & 1) r = poly_mulmod(r, base, f, p);
      base = poly_mulmod(base, base, f, p);
      e >>= 1;
    }
    return r;
  };
  for (int d = 1; 2 * d <= k; ++d) {
    cur = powp(cur);
    // gcd(f, cur - x) nontrivial?
    Poly diff = cur;
    diff.resize(std::max<size_t>(diff.size(), 2));
    diff[1] = ((diff[1] - 1) % p + p) % p;
    Poly a = f, b = diff;
    while (poly_deg(b) >= 0) {
      // a mod b
      int db = poly_deg(b);
      int lb = b[db];
      // make b monic factor for stable division
      int linv = 1;
      for (int t = 1; t < p; ++t)
        if (lb * t % p == 1) linv = t;
      while (poly_deg(a) >= db) {
        int da = poly_deg(a);
        int c = a[da] * linv % p;
        for (int i = 0; i <= db; ++i) a[da - db + i] = ((a[da - db + i] - c * b[i]) % p + p) % p;
      }
      std::swap(a, b);
    }
    if (poly_deg(a) > 0) return false;
  }
  return true;
}

}  // namespace

Fq Fq::make(int p, int k) {
  require(is_prime(p), Err::NotPrime, "characteristic must be prime");
  require(k >= 1, Err::TooLarge, "degree must be positive");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    require(q <= kMaxOrder, Err::TooLarge, "field order exceeds configured bound");
  }
  Fq f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = int(q);
  if (k == 1) {
    f.modulus_ = {0, 1};  // x, unused
  } else {
    long long lows = 1;
    for (int i = 0; i < k; ++i) lows *= p;
    for (int enc = 0; enc < lows; ++enc) {
      Poly cand = decode(enc, p, k + 1);
      cand[k] = 1;
      if (is_irreducible(cand, p)) {
        f.modulus_ = cand;
        break;
      }
    }
    require(!f.modulus_.empty(), Err::NoIrreducibleForm, "no irreducible modulus found");
  }
  if (f.q_ <= 1024) {  // table-backed arithmetic at desk scale
    f.mul_.assign(size_t(f.q_) * f.q_, 0);
    for (int a = 0; a < f.q_; ++a)
      for (int b = 0; b < f.q_; ++b) f.mul_[a * f.q_ + b] = f.raw_mul(a, b);
    f.inv_.assign(f.q_, 0);
    for (int a = 1; a < f.q_; ++a)
      for (int b = 1; b < f.q_; ++b)
        if (f.mul_[a * f.q_ + b] == 1) {
          f.inv_[a] = b;
          break;
        }
  }
  return f;
}

int Fq::raw_mul(int a, int b) const {
  if (k_ == 1) return int((long long)a * b % p_);
  Poly pa = decode(a, p_, k_), pb = decode(b, p_, k_);
  Poly r = poly_mulmod(pa, pb, modulus_, p_);
  int e = 0;
  for (int i = k_ - 1; i >= 0; --i) e = e * p_ + r[i];
  return e;
}

int Fq::add(int a, int b) const {
  if (k_ == 1) return (a + b) % p_;
  int r = 0, mul = 1;
  for (int i = 0; i < k_; ++i) {
    r += ((a % p_) + (b % p_)) % p_ * mul;
    a /= p_;
    b /= p_;
    mul *= p_;
  }
  return r;
}

int Fq::neg(int a) const {
  if (k_ == 1) return (p_ - a) % p_;
  int r = 0, mul = 1;
  for (int i = 0; i < k_; ++i) {
    r += (p_ - a % p_) % p_ * mul;
    a /= p_;
    mul *= p_;
  }
  return r;
}

int Fq::sub(int a, int b) const { return add(a, neg(b)); }

int Fq::inv(int a) const {
  require(a != 0, Err::OutOfRangeId, "inverse of zero");
  if (!inv_.empty()) return inv_[a];
  long long e = (long long)q_ - 2;
  int r = 1, base = a;
  while (e) {
    if (e & 1) r = raw_mul(r, base);
    base = raw_mul(base, base);
    e >>= 1;
  }
  return r;
}

int Fq::pow(int a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<int> Fq::embedding_into(const Fq& big) const {
  require(big.p_ == p_ && big.k_ % k_ == 0, Err::IncompatibleTypes,
          "no embedding between these fields");
  if (k_ == 1 || big.k_ == k_) {
    std::vector<int> img(q_);
    for (int a = 0; a < q_; ++a) img[a] = a;  // prime subfield encodes identically
    return img;
  }
  int beta = -1;
  for (int x = 0; x < big.q_ && beta < 0; ++x) {
    int v = 0, xp = 1;
    for (int i = 0; i <= k_; ++i) {
      v = big.add(v, big.mul(modulus_[i] % p_, xp));
      xp = big.mul(xp, x);
    }
    if (v == 0) beta = x;
  }
  require(beta >= 0, Err::IncompatibleTypes, "modulus has no root in target field");
  std::vector<int> img(q_);
  for (int a = 0; a < q_; ++a) {
    int e = a, r = 0, bp = 1;
    for (int i = 0; i < k_; ++i) {
      r = big.add(r, big.mul(e % p_, bp));
      e /= p_;
      bp = big.mul(bp, beta);
    }
    img[a] = r;
  }
  return img;
}

}  // namespace gq
