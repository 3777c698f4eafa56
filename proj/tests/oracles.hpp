#pragma once

// Brute-force reference computations used to cross-check the library.

#include "arpt/curve.hpp"
#include "arpt/point.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline std::int64_t to_mod(const arpt::Rat& r, std::int64_t q) {
  arpt::Int n = r.num() % q, d = r.den() % q;
  std::int64_t num = mod(n.get_si(), q), den = mod(d.get_si(), q);
  for (std::int64_t inv = 1; inv < q; ++inv)
    if (den * inv % q == 1) return num * inv % q;
  throw std::logic_error("denominator divisible by q");
}

/// #E(F_q) by enumerating all (x, y) pairs on the given integral model.
inline std::int64_t count_points(const std::array<arpt::Int, 5>& a, std::int64_t q) {
  std::int64_t c[5];
  for (int i = 0; i < 5; ++i) c[i] = mod(arpt::Int(a[i] % q).get_si(), q);
  std::int64_t n = 1;
  for (std::int64_t x = 0; x < q; ++x)
    for (std::int64_t y = 0; y < q; ++y) {
      std::int64_t lhs = (y * y + c[0] * x % q * y + c[2] * y) % q;
      std::int64_t rhs = (((x * x % q) * x) + c[1] * x % q * x + c[3] * x + c[4]) % q;
      if (lhs == rhs) ++n;
    }
  return n;
}

/// Rational points with x = n/d^2, |n| <= nmax, 1 <= d <= dmax, found by
/// solving the y-quadratic directly.
inline std::vector<arpt::CurvePoint> small_points(const arpt::Curve& e, long nmax, long dmax, std::int64_t field) {
  std::vector<arpt::CurvePoint> out;
  for (long d = 1; d <= dmax; ++d)
    for (long n = -nmax; n <= nmax; ++n) {
      arpt::Rat x(arpt::Int(n), arpt::Int(d * d));
      if (x.den() != d * d) continue;
      arpt::Rat lin = e.a1() * x + e.a3();
      arpt::Rat disc = lin * lin + arpt::Rat(4) * (((x + e.a2()) * x + e.a4()) * x + e.a6());
      arpt::Rat root;
      if (!arpt::rational_sqrt(disc, root)) continue;
      for (const arpt::Rat& s : {root, -root}) {
        out.push_back(arpt::CurvePoint::rational(e, x, (s - lin) / arpt::Rat(2), field));
        if (root.is_zero()) break;
      }
    }
  return out;
}

inline arpt::Rat random_rat(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> num(-range, range), den(1, range);
  return arpt::Rat(arpt::Int(num(rng)), arpt::Int(den(rng)));
}

}  // namespace oracle
