#include "arpt/galois.hpp"

#include "arpt/division.hpp"
#include "arpt/factor.hpp"
#include "arpt/padic.hpp"
#include "arpt/torsion.hpp"

#include <algorithm>
#include <numeric>

namespace arpt {

std::string to_string(GaloisElement g) { return g == GaloisElement::identity ? "id" : "sigma"; }

CurvePoint conjugate_point(const CurvePoint& p) {
  if (p.is_infinity() || p.is_rational()) return p;
  return CurvePoint::affine(p.curve(), p.x().conjugate(), p.y().conjugate());
}

CurvePoint act(GaloisElement g, const CurvePoint& p) {
  return g == GaloisElement::identity ? p : conjugate_point(p);
}

ARVerdict is_almost_rational(const CurvePoint& p) {
  static constexpr GaloisElement group[] = {GaloisElement::identity, GaloisElement::sigma};
  const CurvePoint two_p = p + p;
  for (GaloisElement g : group) {
    for (GaloisElement h : group) {
      CurvePoint gp = act(g, p), hp = act(h, p);
      if (gp + hp == two_p && !(gp == p && hp == p)) return {false, std::make_pair(g, h)};
    }
  }
  return {true, std::nullopt};
}

bool almost_rational_by_two_torsion(const CurvePoint& p) {
  CurvePoint diff = conjugate_point(p) - p;
  if (diff.is_infinity()) return true;
  return !(diff + diff).is_infinity();
}

bool witness_holds(const CurvePoint& p, const std::pair<GaloisElement, GaloisElement>& w) {
  CurvePoint gp = act(w.first, p), hp = act(w.second, p);
  return gp + hp == p + p && !(gp == p && hp == p);
}

std::optional<CurvePoint> mu3_generator(const Curve& e) {
  const std::int64_t d = -3;
  DivisionPolyCache cache(e);
  for (const Rat& x : rational_roots(cache.reduced(3))) {
    for (const CurvePoint& q : points_with_x(e, QuadFieldElement(d, x))) {
      if (conjugate_point(q) == -q && !(q + q).is_infinity()) return q;
    }
  }
  return std::nullopt;
}

std::vector<PolyQ> rational_kernel_polynomials(const Curve& e, int p) {
  if (p != 2 && p != 3 && p != 5 && p != 7) throw std::invalid_argument("isogeny degree must be 2, 3, 5 or 7");
  DivisionPolyCache cache(e);
  if (p == 2) return rational_factors_of_degree(cache.two_division(), 1);
  const int m = (p - 1) / 2;
  std::vector<PolyQ> out;
  for (const PolyQ& g : rational_factors_of_degree(cache.reduced(p), m)) {
    bool stable = true;
    for (int k = 2; k <= m && stable; ++k) {
      auto [num, den] = cache.multiplication_map(k);
      // g(num/den) * den^m must vanish modulo g.
      PolyQ h;
      std::vector<PolyQ> den_pow{PolyQ::constant(Rat(1))};
      for (int i = 1; i <= m; ++i) den_pow.push_back(den_pow.back() * den);
      PolyQ num_pow = PolyQ::constant(Rat(1));
      for (int i = 0; i <= m; ++i) {
        h += g.coeff(static_cast<std::size_t>(i)) * num_pow * den_pow[static_cast<std::size_t>(m - i)];
        num_pow *= num;
      }
      stable = divmod(h, g).second.is_zero();
    }
    if (stable) out.push_back(g);
  }
  return out;
}

bool has_rational_isogeny(const Curve& e, int p) { return !rational_kernel_polynomials(e, p).empty(); }

bool gm_witness_valid(long n, long a, long b) {
  if (n < 1) return false;
  auto unit = [n](long v) { return std::gcd(((v % n) + n) % n, n) == 1; };
  long am = ((a % n) + n) % n, bm = ((b % n) + n) % n;
  return unit(am) && unit(bm) && (am + bm - 2) % n == 0 && am != 1 % n;
}

std::pair<long, long> gm_crt_witness(long n) {
  Int a = 0, b = 0, mod = 1;
  long m = n;
  for (long p = 2; p <= m; ++p) {
    if (m % p) continue;
    long pk = 1;
    while (m % p == 0) {
      m /= p;
      pk *= p;
    }
    long ap = p == 3 ? 4 : 3, bp = p == 3 ? -2 : -1;
    // Combine x = a (mod `mod`) with x = ap (mod pk).
    auto combine = [&](const Int& x, long r) -> Int {
      Int t = mod_floor(Int(r) - x, Int(pk)) * inverse_mod(mod_floor(mod, Int(pk)), Int(pk));
      return x + mod * mod_floor(t, Int(pk));
    };
    a = combine(a, ap);
    b = combine(b, bp);
    mod *= pk;
  }
  return {to_i64(mod_floor(a, Int(n))), to_i64(mod_floor(b, Int(n)))};
}

GmVerdict gm_almost_rational(long n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (n <= 10000) {
    for (long a = 0; a < n; ++a) {
      if (a == 1 % n) continue;
      long b = ((2 - a) % n + n) % n;
      if (std::gcd(a, n) == 1 && std::gcd(b, n) == 1) return {false, std::make_pair(a, b)};
    }
    return {true, std::nullopt};
  }
  auto w = gm_crt_witness(n);
  if (!gm_witness_valid(n, w.first, w.second)) throw std::logic_error("CRT witness failed verification");
  return {false, w};
}

GaloisOrbit orbit_module(const CurvePoint& p) {
  GaloisOrbit orbit{p, {p}, {}};
  CurvePoint c = conjugate_point(p);
  if (!(c == p)) orbit.conjugates.push_back(c);
  orbit.generated_module = generated_subgroup(orbit.conjugates);
  return orbit;
}

}  // namespace arpt
