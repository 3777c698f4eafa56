#pragma once

#include "arpt/curve.hpp"
#include "arpt/poly.hpp"

#include <map>
#include <utility>

namespace arpt {

/// n-division polynomial as an x-polynomial.  Odd n: psi_n.  Even n >= 4:
/// psi_n / psi_2.  n = 2: the 2-division cubic 4x^3 + b2 x^2 + 2 b4 x + b6
/// (that is, psi_2^2 written in x).
struct DivisionPoly {
  int n;
  PolyQ psi;
};

/// Supported range 1 <= n <= 48.
DivisionPoly division_polynomial(const Curve& e, int n);

/// Memoizing generator for one curve; not thread-safe, keep it local to a
/// single computation.
class DivisionPolyCache {
public:
  explicit DivisionPolyCache(Curve e);

  /// f_n: psi_n for odd n, psi_n/psi_2 for even n (f_2 = 1).
  const PolyQ& reduced(int n);
  /// 4x^3 + b2 x^2 + 2 b4 x + b6.
  const PolyQ& two_division() const { return cubic_; }
  /// Squarefree x-polynomial whose roots are exactly x(P) for P != O with
  /// nP = O.
  PolyQ torsion_x_poly(int n);
  /// Roots are x(P) for P of exact order n (prime power n only).
  PolyQ primitive_x_poly(int n);
  /// x([k]P) = numerator/denominator as polynomials in x(P).
  std::pair<PolyQ, PolyQ> multiplication_map(int k);

  const Curve& curve() const { return curve_; }

private:
  Curve curve_;
  PolyQ cubic_;
  std::map<int, PolyQ> f_;
};

}  // namespace arpt
