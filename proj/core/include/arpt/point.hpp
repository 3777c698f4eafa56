#pragma once

#include "arpt/curve.hpp"
#include "arpt/quad.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace arpt {

/// Point of E(Q(sqrt d)): the point at infinity or an affine point whose
/// coordinates share the ambient d.  Rational points carry b = 0.
class CurvePoint {
public:
  static CurvePoint infinity(const Curve& e, std::int64_t d);
  /// Throws std::invalid_argument when (x, y) is not on the curve.
  static CurvePoint affine(const Curve& e, const QuadFieldElement& x, const QuadFieldElement& y);
  static CurvePoint rational(const Curve& e, const Rat& x, const Rat& y, std::int64_t d);

  const Curve& curve() const { return curve_; }
  std::int64_t field() const { return d_; }
  bool is_infinity() const { return !x_.has_value(); }
  const QuadFieldElement& x() const;
  const QuadFieldElement& y() const;
  bool is_rational() const { return is_infinity() || (x_->is_rational() && y_->is_rational()); }

  CurvePoint operator-() const;
  CurvePoint& operator+=(const CurvePoint& o);
  CurvePoint& operator-=(const CurvePoint& o) { return *this += -o; }
  friend CurvePoint operator+(CurvePoint a, const CurvePoint& b) { return a += b; }
  friend CurvePoint operator-(CurvePoint a, const CurvePoint& b) { return a -= b; }

  /// Same point re-embedded in another quadratic field; only valid for
  /// rational points.
  CurvePoint in_field(std::int64_t d) const;

  friend bool operator==(const CurvePoint& p, const CurvePoint& q) {
    return p.d_ == q.d_ && p.x_ == q.x_ && p.y_ == q.y_ && p.curve_ == q.curve_;
  }
  /// Infinity first, then lexicographic on (x, y).
  friend std::strong_ordering operator<=>(const CurvePoint& p, const CurvePoint& q);

  std::string str() const;

private:
  CurvePoint(Curve e, std::int64_t d) : curve_(std::move(e)), d_(d) {}
  void require_compatible(const CurvePoint& o) const;

  Curve curve_;
  std::int64_t d_;
  std::optional<QuadFieldElement> x_, y_;
};

bool on_curve(const Curve& e, const QuadFieldElement& x, const QuadFieldElement& y);
CurvePoint dbl(const CurvePoint& p);
/// n*P by double-and-add; negative n uses -P.
CurvePoint scalar_mul(long n, const CurvePoint& p);

std::ostream& operator<<(std::ostream& os, const CurvePoint& p);

}  // namespace arpt
