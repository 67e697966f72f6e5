#ifndef GQ_MOTIVIC_HPP
#define GQ_MOTIVIC_HPP

#include <string>
#include <vector>

#include "gq/projective.hpp"

namespace gq {

// Element of Z[L] + Z[L]*[Spec K] for a field extension K/k of degree <= 2.
// The dual-numbers case Spec(k[eps]/(eps^2)) reduces to a rational point.
struct MotivicClass {
  enum class Ext { None, Degree2, DualNumbers };
  std::vector<long long> a;  // coefficients of L^i
  std::vector<long long> b;  // coefficients of L^i * [Spec K]
  Ext K = Ext::None;

  static MotivicClass zero();
  static MotivicClass constant(long long c);
  static MotivicClass spec_k(Ext ext);

  MotivicClass& shift(int by);  // multiply by L^by
  MotivicClass& operator+=(const MotivicClass& o);
  MotivicClass& operator*=(long long c);
  bool operator==(const MotivicClass& o) const;
  std::string str() const;
};

// The class of the projective quadric defined by F over F_q in n+1 variables,
// computed by the point-counting branches at n = 1,2 and projection from a
// rational smooth point with tangent-cone reduction for n >= 3.
MotivicClass quadric_class(const QuadraticForm& f, int n, const Fq& base);

// a(q^m) + b(q^m) * #Hom_{F_q}(K, F_{q^m}); the Hom count is 1 for trivial K
// and dual numbers, and 0/2 for quadratic K depending on the parity of m.
long long evaluate_count(const MotivicClass& m, long long q, int ext);

}  // namespace gq

#endif
