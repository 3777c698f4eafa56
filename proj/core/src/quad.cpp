#include "arpt/quad.hpp"

#include <ostream>

namespace arpt {

bool is_squarefree(std::int64_t d) {
  if (d == 0) return false;
  std::int64_t m = d < 0 ? -d : d;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
    if (m % p == 0) m /= p;
  }
  return true;
}

QuadFieldElement::QuadFieldElement(std::int64_t d, Rat a, Rat b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
  if (d == 1 || !is_squarefree(d))
    throw std::invalid_argument("quadratic field seed must be squarefree and not 0 or 1: " + std::to_string(d));
}

void QuadFieldElement::require_same_field(const QuadFieldElement& o) const {
  if (o.d_ != d_)
    throw field_mismatch("mixed quadratic fields: sqrt(" + std::to_string(d_) + ") vs sqrt(" +
                         std::to_string(o.d_) + ")");
}

QuadFieldElement& QuadFieldElement::operator+=(const QuadFieldElement& o) {
  require_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadFieldElement& QuadFieldElement::operator-=(const QuadFieldElement& o) {
  require_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadFieldElement& QuadFieldElement::operator*=(const QuadFieldElement& o) {
  require_same_field(o);
  Rat a = a_ * o.a_ + Rat(d_) * b_ * o.b_;
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadFieldElement QuadFieldElement::inverse() const {
  Rat n = norm();
  if (n.is_zero()) throw arithmetic_error("inverse of zero in Q(sqrt " + std::to_string(d_) + ")");
  return {d_, a_ / n, -b_ / n};
}

QuadFieldElement& QuadFieldElement::operator/=(const QuadFieldElement& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

std::optional<QuadFieldElement> QuadFieldElement::sqrt() const {
  Rat r;
  if (b_.is_zero()) {
    if (rational_sqrt(a_, r)) return QuadFieldElement(d_, r);
    if (rational_sqrt(a_ / Rat(d_), r)) return QuadFieldElement(d_, Rat(0), r);
    return std::nullopt;
  }
  // (e + f sqrt d)^2 = e^2 + d f^2 + 2 e f sqrt d, with e^2 - d f^2 = +-sqrt(norm).
  Rat n;
  if (!rational_sqrt(norm(), n)) return std::nullopt;
  for (const Rat& cand : {(a_ + n) / Rat(2), (a_ - n) / Rat(2)}) {
    Rat e;
    if (cand.is_zero() || !rational_sqrt(cand, e)) continue;
    QuadFieldElement root(d_, e, b_ / (Rat(2) * e));
    if (root * root == *this) return root;
  }
  return std::nullopt;
}

std::string QuadFieldElement::str() const {
  if (b_.is_zero()) return a_.str();
  std::string s = a_.is_zero() ? "" : a_.str() + (b_.sign() > 0 ? "+" : "");
  return s + b_.str() + "*sqrt(" + std::to_string(d_) + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadFieldElement& x) { return os << x.str(); }

}  // namespace arpt
