#pragma once

#include "arpt/poly.hpp"
#include "arpt/quad.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace arpt {

/// Working precision for q-adic root lifting: a small prime q, a precision
/// k, and optionally the image of sqrt(d) in Z/q^k.
class PadicContext {
public:
  /// Plain context without a square root.
  PadicContext(std::int64_t prime, int precision);
  /// Context in which d is a nonzero square mod q; the image of sqrt(d) is
  /// the lift of the smallest square root mod q.
  PadicContext(std::int64_t prime, int precision, std::int64_t d);

  std::int64_t prime() const { return prime_; }
  int precision() const { return precision_; }
  const Int& modulus() const { return modulus_; }
  const std::optional<Int>& sqrt_d() const { return sqrt_d_; }

private:
  std::int64_t prime_;
  int precision_;
  Int modulus_;
  std::optional<Int> sqrt_d_;
};

struct HenselResult {
  /// Lifted simple roots mod q^k, ascending.
  std::vector<Int> roots;
  /// Roots mod q where the derivative vanishes; not lifted.
  std::vector<std::int64_t> unliftable;
};

/// Roots of f mod q, each simple root lifted to q^k.  f must be nonzero
/// with q-integral coefficients after clearing content (q not dividing the
/// leading coefficient of the primitive part).
HenselResult hensel_roots(const PolyQ& f, const PadicContext& ctx);

/// The unique n/m with |n|, m <= bound and n = m*residue (mod modulus), or
/// nullopt.  Requires 0 <= residue < modulus and 2*bound^2 <= modulus.
std::optional<Rat> rational_reconstruct(const Int& residue, const Int& modulus, const Int& bound);

/// Modular square root by exhaustive search; q small prime.
std::optional<std::int64_t> sqrt_mod_small(std::int64_t a, std::int64_t q);

/// All rational roots of f, ascending.  Complete: the reconstruction bound
/// comes from the rational-root theorem.
std::vector<Rat> rational_roots(const PolyQ& f);

/// All roots of f lying in Q(sqrt d), rational ones included, sorted.  f
/// is reduced to its squarefree part first.  Complete: irrational roots are recovered through
/// their quadratic factor, whose coefficients obey a Mignotte bound.
std::vector<QuadFieldElement> field_roots(const PolyQ& f, std::int64_t d);

/// Deterministic auxiliary prime: smallest prime q > 50 such that q does
/// not divide the leading coefficient, every root of f mod q is simple and,
/// when d != 0, d is a nonzero square mod q.
std::int64_t choose_root_prime(const std::vector<Int>& primitive, std::int64_t d);

}  // namespace arpt
