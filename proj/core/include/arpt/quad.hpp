#pragma once

#include "arpt/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace arpt {

class field_mismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

bool is_squarefree(std::int64_t d);

/// Element a + b*sqrt(d) of Q(sqrt d).  d is squarefree and different from
/// 0 and 1; elements only combine with elements of the same field.
class QuadFieldElement {
public:
  QuadFieldElement(std::int64_t d, Rat a, Rat b = Rat(0));

  std::int64_t d() const { return d_; }
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadFieldElement conjugate() const { return {d_, a_, -b_}; }
  Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }
  Rat trace() const { return a_ + a_; }
  QuadFieldElement inverse() const;
  /// Square root inside Q(sqrt d), when one exists.
  std::optional<QuadFieldElement> sqrt() const;

  QuadFieldElement operator-() const { return {d_, -a_, -b_}; }
  QuadFieldElement& operator+=(const QuadFieldElement& o);
  QuadFieldElement& operator-=(const QuadFieldElement& o);
  QuadFieldElement& operator*=(const QuadFieldElement& o);
  QuadFieldElement& operator/=(const QuadFieldElement& o);
  QuadFieldElement& operator+=(const Rat& o) { a_ += o; return *this; }
  QuadFieldElement& operator*=(const Rat& o) { a_ *= o; b_ *= o; return *this; }

  friend QuadFieldElement operator+(QuadFieldElement x, const QuadFieldElement& y) { return x += y; }
  friend QuadFieldElement operator-(QuadFieldElement x, const QuadFieldElement& y) { return x -= y; }
  friend QuadFieldElement operator*(QuadFieldElement x, const QuadFieldElement& y) { return x *= y; }
  friend QuadFieldElement operator/(QuadFieldElement x, const QuadFieldElement& y) { return x /= y; }
  friend QuadFieldElement operator+(QuadFieldElement x, const Rat& y) { return x += y; }
  friend QuadFieldElement operator-(QuadFieldElement x, const Rat& y) { return x += -y; }
  friend QuadFieldElement operator*(QuadFieldElement x, const Rat& y) { return x *= y; }
  friend QuadFieldElement operator*(const Rat& y, QuadFieldElement x) { return x *= y; }

  friend bool operator==(const QuadFieldElement& x, const QuadFieldElement& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Lexicographic on (a, b); only meaningful within one field.
  friend std::strong_ordering operator<=>(const QuadFieldElement& x, const QuadFieldElement& y) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.b_ <=> y.b_;
  }

  std::string str() const;

private:
  void require_same_field(const QuadFieldElement& o) const;

  std::int64_t d_;
  Rat a_;
  Rat b_;
};

std::ostream& operator<<(std::ostream& os, const QuadFieldElement& x);

}  // namespace arpt
