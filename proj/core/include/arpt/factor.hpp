#pragma once

#include "arpt/poly.hpp"

#include <cstdint>
#include <vector>

namespace arpt {

namespace modp {

/// Dense polynomial over F_q, lowest degree first, no trailing zeros.
using Poly = std::vector<std::int64_t>;

Poly reduce(const std::vector<Int>& f, std::int64_t q);
Poly mul(const Poly& a, const Poly& b, std::int64_t q);
Poly add(const Poly& a, const Poly& b, std::int64_t q);
Poly sub(const Poly& a, const Poly& b, std::int64_t q);
/// s*a + t*b = gcd(a, b), gcd returned monic.
Poly ext_gcd(const Poly& a, const Poly& b, std::int64_t q, Poly& s, Poly& t);
void divmod(const Poly& a, const Poly& b, std::int64_t q, Poly& quot, Poly& rem);
Poly monic_gcd(Poly a, Poly b, std::int64_t q);
Poly powmod(const Poly& base, const Int& exp, const Poly& mod, std::int64_t q);

/// Irreducible monic factors of a squarefree polynomial (Cantor-Zassenhaus,
/// fixed seed so the factor order is reproducible).
std::vector<Poly> factor_squarefree(const Poly& f, std::int64_t q);

}  // namespace modp

/// Lifts f = lc(f) * prod(factors) from mod q to mod q^k.  Factors are monic
/// and pairwise coprime mod q; the returned factors are monic mod q^k.
std::vector<std::vector<Int>> hensel_lift_factors(const std::vector<Int>& f, const std::vector<modp::Poly>& factors,
                                                  std::int64_t q, int k);

/// Every monic divisor of f over Q of the given degree.  f must be
/// squarefree.  Found by recombining lifted modular factors under a Mignotte
/// coefficient bound, so the list is complete.
std::vector<PolyQ> rational_factors_of_degree(const PolyQ& f, int degree);

}  // namespace arpt
