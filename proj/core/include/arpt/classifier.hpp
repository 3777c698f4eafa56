#pragma once

#include "arpt/curve.hpp"
#include "arpt/galois.hpp"
#include "arpt/point.hpp"
#include "arpt/torsion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arpt {

/// P = Q + R + S with Q a mu_3 generator (or absent), R a rational point
/// killed by 9 and S a Q(sqrt -3)-point killed by 16.
struct Decomposition {
  std::optional<CurvePoint> q;
  CurvePoint r;
  CurvePoint s;
  CurvePoint sum;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Element of the predicted set: rational torsion points carry no
/// decomposition, every other element does.
struct PredictedPoint {
  CurvePoint point;
  std::optional<Decomposition> decomposition;
};

struct ARPoint {
  CurvePoint point;
  long order;
  ARVerdict verdict;
  std::optional<Decomposition> decomposition;
  friend bool operator==(const ARPoint&, const ARPoint&) = default;
};

struct ClassificationReport {
  std::string label;
  Coefficients coefficients;
  std::array<Int, 5> minimal_model;
  bool semistable = false;
  std::vector<BadPrime> bad_primes;
  GroupStructure rational_torsion;
  /// Absent when the curve is not semistable (no almost-rationality analysis).
  std::optional<GroupStructure> quadratic_torsion;
  bool mu3_present = false;
  std::optional<CurvePoint> mu3_generator;
  std::vector<ARPoint> ar_points;
  /// Absent when no analysis was run.
  std::optional<bool> predicted_equals_actual;
  long largest_prime_in_orders = 1;
  bool order16_s_found = false;
  /// Counterexample block: points in exactly one of the two sets.
  std::vector<CurvePoint> predicted_only;
  std::vector<CurvePoint> actual_only;
  /// Failed structural checks, human readable.
  std::vector<std::string> violations;
  std::string search_field_note;

  bool consistent() const { return predicted_equals_actual.value_or(true) && violations.empty(); }
  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

class not_semistable : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Rational torsion together with every Q + R + S; sorted by point.
std::vector<PredictedPoint> predicted_ar_set(const Curve& e);
std::vector<PredictedPoint> predicted_ar_set(const TorsionGroup& rational, const TorsionGroup& quadratic,
                                             const std::optional<CurvePoint>& mu3);

/// Every almost rational point of E(Q(sqrt -3))_tors; sorted by point.
std::vector<std::pair<CurvePoint, ARVerdict>> actual_ar_set(const Curve& e);
std::vector<std::pair<CurvePoint, ARVerdict>> actual_ar_set(const TorsionGroup& quadratic);

ClassificationReport classify(const Curve& e, const std::string& label = "");

/// Largest prime factor of n (1 for n = 1).
long largest_prime_factor(long n);

}  // namespace arpt
