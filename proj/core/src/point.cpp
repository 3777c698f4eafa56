#include "arpt/point.hpp"

#include <ostream>

namespace arpt {

bool on_curve(const Curve& e, const QuadFieldElement& x, const QuadFieldElement& y) {
  QuadFieldElement lhs = y * y + e.a1() * x * y + e.a3() * y;
  QuadFieldElement rhs = ((x + e.a2()) * x + e.a4()) * x + e.a6();
  return lhs == rhs;
}

CurvePoint CurvePoint::infinity(const Curve& e, std::int64_t d) {
  (void)QuadFieldElement(d, Rat(0));  // validates d
  return CurvePoint(e, d);
}

CurvePoint CurvePoint::affine(const Curve& e, const QuadFieldElement& x, const QuadFieldElement& y) {
  if (x.d() != y.d()) throw field_mismatch("point coordinates in different fields");
  if (!on_curve(e, x, y)) throw std::invalid_argument("point (" + x.str() + ", " + y.str() + ") is not on " + e.str());
  CurvePoint p(e, x.d());
  p.x_ = x;
  p.y_ = y;
  return p;
}

CurvePoint CurvePoint::rational(const Curve& e, const Rat& x, const Rat& y, std::int64_t d) {
  return affine(e, QuadFieldElement(d, x), QuadFieldElement(d, y));
}

const QuadFieldElement& CurvePoint::x() const {
  if (!x_) throw std::logic_error("point at infinity has no affine coordinates");
  return *x_;
}

const QuadFieldElement& CurvePoint::y() const {
  if (!y_) throw std::logic_error("point at infinity has no affine coordinates");
  return *y_;
}

void CurvePoint::require_compatible(const CurvePoint& o) const {
  if (o.d_ != d_) throw field_mismatch("points over different quadratic fields");
  if (!(o.curve_ == curve_)) throw std::invalid_argument("points on different curves");
}

CurvePoint CurvePoint::operator-() const {
  if (is_infinity()) return *this;
  CurvePoint r = *this;
  r.y_ = -*y_ - curve_.a1() * *x_ - curve_.a3();
  return r;
}

CurvePoint& CurvePoint::operator+=(const CurvePoint& o) {
  require_compatible(o);
  if (o.is_infinity()) return *this;
  if (is_infinity()) return *this = o;
  const Curve& e = curve_;
  const QuadFieldElement &x1 = *x_, &y1 = *y_, &x2 = *o.x_, &y2 = *o.y_;
  std::optional<QuadFieldElement> lambda, nu;
  if (x1 == x2) {
    QuadFieldElement den = y1 + y2 + e.a1() * x2 + e.a3();
    if (den.is_zero()) {
      x_.reset();
      y_.reset();
      return *this;
    }
    QuadFieldElement tan_den = Rat(2) * y1 + e.a1() * x1 + e.a3();
    lambda = (Rat(3) * x1 * x1 + Rat(2) * e.a2() * x1 + e.a4() - e.a1() * y1) / tan_den;
    nu = (-(x1 * x1 * x1) + e.a4() * x1 + Rat(2) * e.a6() - e.a3() * y1) / tan_den;
  } else {
    QuadFieldElement dx = x2 - x1;
    lambda = (y2 - y1) / dx;
    nu = (y1 * x2 - y2 * x1) / dx;
  }
  QuadFieldElement x3 = *lambda * *lambda + e.a1() * *lambda - e.a2() - x1 - x2;
  QuadFieldElement y3 = -(*lambda + e.a1()) * x3 - *nu - e.a3();
  x_ = std::move(x3);
  y_ = std::move(y3);
  return *this;
}

CurvePoint CurvePoint::in_field(std::int64_t d) const {
  if (!is_rational()) throw field_mismatch("only rational points can change ambient field");
  if (is_infinity()) return infinity(curve_, d);
  return rational(curve_, x_->a(), y_->a(), d);
}

std::strong_ordering operator<=>(const CurvePoint& p, const CurvePoint& q) {
  if (p.is_infinity() || q.is_infinity()) {
    if (p.is_infinity() && q.is_infinity()) return std::strong_ordering::equal;
    return p.is_infinity() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = *p.x_ <=> *q.x_; c != 0) return c;
  return *p.y_ <=> *q.y_;
}

std::string CurvePoint::str() const {
  if (is_infinity()) return "O";
  return "(" + x_->str() + ", " + y_->str() + ")";
}

std::ostream& operator<<(std::ostream& os, const CurvePoint& p) { return os << p.str(); }

CurvePoint dbl(const CurvePoint& p) { return p + p; }

CurvePoint scalar_mul(long n, const CurvePoint& p) {
  CurvePoint base = n < 0 ? -p : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1UL : static_cast<unsigned long>(n);
  CurvePoint acc = CurvePoint::infinity(p.curve(), p.field());
  while (k) {
    if (k & 1UL) acc += base;
    k >>= 1U;
    if (k) base = dbl(base);
  }
  return acc;
}

}  // namespace arpt
