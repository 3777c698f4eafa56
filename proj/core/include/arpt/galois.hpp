#pragma once

#include "arpt/curve.hpp"
#include "arpt/point.hpp"
#include "arpt/poly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arpt {

/// Elements of Gal(Q(sqrt d)/Q).
enum class GaloisElement { identity, sigma };
std::string to_string(GaloisElement g);

/// Image of P under a Galois element (coordinatewise conjugation for sigma).
CurvePoint act(GaloisElement g, const CurvePoint& p);
CurvePoint conjugate_point(const CurvePoint& p);

/// Outcome of the almost-rationality test.  A witness (g, h) satisfies
/// gP + hP = 2P while P = gP = hP fails.
struct ARVerdict {
  bool almost_rational = true;
  std::optional<std::pair<GaloisElement, GaloisElement>> witness;
  friend bool operator==(const ARVerdict&, const ARVerdict&) = default;
};

/// Scans every pair of Galois elements; this is the definition.
ARVerdict is_almost_rational(const CurvePoint& p);
/// Quadratic-field shortcut: fails iff sigma P != P and sigma P - P is a
/// nonzero 2-torsion point.
bool almost_rational_by_two_torsion(const CurvePoint& p);
/// Re-evaluates a witness with the group law.
bool witness_holds(const CurvePoint& p, const std::pair<GaloisElement, GaloisElement>& w);

/// A 3-torsion point Q with rational x and sigma Q = -Q over Q(sqrt -3);
/// the one with smallest coordinates when several exist.
std::optional<CurvePoint> mu3_generator(const Curve& e);

/// Whether E has a rational p-isogeny, p in {2, 3, 5, 7}: a divisor of the
/// p-division polynomial of degree (p-1)/2 (the cubic for p = 2) over Q whose
/// root set is stable under multiplication by every unit mod p.
bool has_rational_isogeny(const Curve& e, int p);
/// The kernel polynomials behind has_rational_isogeny (monic).
std::vector<PolyQ> rational_kernel_polynomials(const Curve& e, int p);

/// The multiplicative group over Q: points of order n are almost rational
/// unless some a, b in (Z/n)^* satisfy a + b = 2 with a != 1.
struct GmVerdict {
  bool almost_rational;
  std::optional<std::pair<long, long>> witness;
};
/// Exhaustive up to 10^4 (smallest a first); CRT construction above.
GmVerdict gm_almost_rational(long n);
/// The CRT witness: a = 3, b = -1 mod p^k for p != 3, a = 4, b = -2 mod 3^k.
std::pair<long, long> gm_crt_witness(long n);
bool gm_witness_valid(long n, long a, long b);

/// Point, its conjugates and the group they generate.
struct GaloisOrbit {
  CurvePoint base_point;
  std::vector<CurvePoint> conjugates;
  std::vector<CurvePoint> generated_module;
};
GaloisOrbit orbit_module(const CurvePoint& p);

}  // namespace arpt
