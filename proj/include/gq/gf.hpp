#ifndef GQ_GF_HPP
#define GQ_GF_HPP

#include <vector>

#include "gq/common.hpp"

namespace gq {

// GF(p^k) with a fixed modulus: the lexicographically least monic irreducible
// polynomial of degree k over F_p (ordered by the base-p encoding of its
// non-leading coefficients). Elements are 0..q-1, encoding coefficient vectors
// c0 + c1*p + ... of polynomials in the generator.
class Fq {
 public:
  static Fq make(int p, int k);  // NotPrime / TooLarge

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }  // degree k, monic, length k+1

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const { return mul_.empty() ? raw_mul(a, b) : mul_[a * q_ + b]; }
  int inv(int a) const;
  int pow(int a, long long e) const;
  int frobenius(int a) const { return pow(a, p_); }

  // Embedding into GF(p^K) with k | K: generator maps to the least root of our
  // modulus in the big field. Returns the image table indexed by element.
  std::vector<int> embedding_into(const Fq& big) const;

  static const int kMaxOrder = 4096;

 private:
  int p_ = 2, k_ = 1, q_ = 2;
  std::vector<int> modulus_;
  std::vector<int> mul_;
  std::vector<int> inv_;

  int raw_mul(int a, int b) const;
};

bool is_prime(int n);

}  // namespace gq

#endif
