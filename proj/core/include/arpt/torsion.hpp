#pragma once

#include "arpt/curve.hpp"
#include "arpt/point.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace arpt {

/// Z/m1 + Z/m2 with m2 | m1.
struct GroupStructure {
  long m1 = 1;
  long m2 = 1;
  long order() const { return m1 * m2; }
  std::string str() const;
  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
  friend auto operator<=>(const GroupStructure&, const GroupStructure&) = default;
};

/// True for the fifteen groups Z/n (1 <= n <= 10, n = 12) and Z/2 + Z/2n
/// (1 <= n <= 4).
bool is_mazur_group(const GroupStructure& g);

struct TorsionGroup {
  /// 0 for Q, otherwise the d of Q(sqrt d).
  std::int64_t field = 0;
  GroupStructure structure;
  std::vector<CurvePoint> generators;
  /// Every element, sorted, infinity first.
  std::vector<CurvePoint> all_points;

  bool contains(const CurvePoint& p) const;
};

class torsion_search_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Least n <= cap with nP = O, or nullopt.
std::optional<long> exact_order(const CurvePoint& p, long cap);

/// Prime-power components P_q of P, each a multiple of P, summing to P.
/// `order` must be the exact order of P.
std::vector<std::pair<long, CurvePoint>> primary_decomposition(const CurvePoint& p, long order);

/// Points of E(Q(sqrt d)) with x-coordinate in Q(sqrt d): 0 or 2 points per
/// x (1 when the point is 2-torsion).
std::vector<CurvePoint> points_with_x(const Curve& e, const QuadFieldElement& x);

/// Reduction bound on the torsion order: gcd of #E over residue fields at
/// good unramified primes q >= 5 (F_q for split q, F_{q^2} for inert q).
/// d = 0 means Q.  Uses at least `min_primes` primes.
struct ReductionBound {
  Int bound;
  std::vector<std::int64_t> primes;
};
ReductionBound torsion_reduction_bound(const Curve& e, std::int64_t d, int min_primes = 5);

/// E(Q)_tors by Nagell-Lutz on the integral short model, cross-checked
/// against the reduction bound and Mazur's list.  Points live in the ambient
/// field Q(sqrt ambient_d).
TorsionGroup rational_torsion(const Curve& e, std::int64_t ambient_d = -3);

/// E(Q(sqrt d))_tors: prime-power x-polynomials searched for roots in the
/// field, then assembled by group closure.
TorsionGroup quadratic_torsion(const Curve& e, std::int64_t d);

/// Structure and generators of a finite subgroup given by all its elements.
TorsionGroup assemble_group(std::vector<CurvePoint> points, std::int64_t field);

/// Closure of a set of torsion points under addition (includes O).
std::vector<CurvePoint> generated_subgroup(const std::vector<CurvePoint>& gens, std::size_t limit = 4096);

}  // namespace arpt
