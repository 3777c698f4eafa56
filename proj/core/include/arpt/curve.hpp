#pragma once

#include "arpt/rational.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace arpt {

class singular_curve : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class ReductionKind { good, multiplicative_split, multiplicative_nonsplit, additive };

std::string to_string(ReductionKind k);
inline bool is_multiplicative(ReductionKind k) {
  return k == ReductionKind::multiplicative_split || k == ReductionKind::multiplicative_nonsplit;
}

struct BadPrime {
  Int prime;
  ReductionKind kind;
  int disc_valuation;  ///< v_p of the minimal discriminant
  friend bool operator==(const BadPrime&, const BadPrime&) = default;
};

/// Change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
struct Isomorphism {
  Rat u{1}, r{0}, s{0}, t{0};
  /// Apply this, then `next`.
  Isomorphism then(const Isomorphism& next) const;
  friend bool operator==(const Isomorphism&, const Isomorphism&) = default;
};

using Coefficients = std::array<Rat, 5>;

/// Coefficients of the model obtained by applying `iso` to a1..a6.
Coefficients transform(const Coefficients& a, const Isomorphism& iso);

/// Long Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over
/// Q.  Immutable handle: copies share the cached invariants.
class Curve {
public:
  const Coefficients& coeffs() const { return data_->a; }
  const Rat& a1() const { return data_->a[0]; }
  const Rat& a2() const { return data_->a[1]; }
  const Rat& a3() const { return data_->a[2]; }
  const Rat& a4() const { return data_->a[3]; }
  const Rat& a6() const { return data_->a[4]; }
  const Rat& b2() const { return data_->b2; }
  const Rat& b4() const { return data_->b4; }
  const Rat& b6() const { return data_->b6; }
  const Rat& b8() const { return data_->b8; }
  const Rat& c4() const { return data_->c4; }
  const Rat& c6() const { return data_->c6; }
  const Rat& discriminant() const { return data_->disc; }
  Rat j_invariant() const { return c4().pow(3) / discriminant(); }

  /// Global minimal model (integral coefficients) and the map to it.
  const std::array<Int, 5>& minimal_coeffs() const { return data_->min_a; }
  const Isomorphism& to_minimal() const { return data_->to_min; }
  const Int& minimal_discriminant() const { return data_->min_disc; }
  const Int& minimal_c4() const { return data_->min_c4; }
  const Int& minimal_c6() const { return data_->min_c6; }
  /// Primes dividing the minimal discriminant, ascending, with their kind.
  const std::vector<BadPrime>& bad_primes() const { return data_->bad; }
  ReductionKind reduction_at(const Int& p) const;

  std::string str() const;

  friend bool operator==(const Curve& x, const Curve& y) {
    return x.data_ == y.data_ || x.coeffs() == y.coeffs();
  }

private:
  struct Data {
    Coefficients a;
    Rat b2, b4, b6, b8, c4, c6, disc;
    std::array<Int, 5> min_a;
    Isomorphism to_min;
    Int min_disc, min_c4, min_c6;
    std::vector<BadPrime> bad;
  };
  explicit Curve(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  friend Curve curve_from_coeffs(const Coefficients& a);

  std::shared_ptr<const Data> data_;
};

/// Builds a curve and its cached invariants, minimal model and bad-prime
/// classification.  Throws singular_curve when the discriminant vanishes.
Curve curve_from_coeffs(const Coefficients& a);
Curve curve_from_coeffs(long a1, long a2, long a3, long a4, long a6);

struct SemistabilityReport {
  bool semistable;
  std::vector<BadPrime> evidence;
};
SemistabilityReport is_semistable(const Curve& e);

/// Finite-at-p criterion: true at good primes; at multiplicative primes,
/// v_p(minimal discriminant) = 0 mod p.  Additive reduction is a
/// precondition breach (std::invalid_argument).
bool peu_ramifie_at(const Curve& e, const Int& p);

/// #E(F_q) on the minimal model; q prime of good reduction, 3 <= q <= 10^4.
std::int64_t count_points_mod(const Curve& e, std::int64_t q);

/// #E(F_{q^2}) from the F_q count.
Int count_points_quadratic_ext(const Curve& e, std::int64_t q);

}  // namespace arpt
