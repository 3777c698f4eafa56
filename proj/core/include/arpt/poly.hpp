#pragma once

#include "arpt/quad.hpp"
#include "arpt/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace arpt {

/// Univariate polynomial over Q, coefficients lowest degree first.  The zero
/// polynomial is the empty sequence; otherwise the leading coefficient is
/// nonzero.
class PolyQ {
public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rat> coeffs);
  PolyQ(std::initializer_list<Rat> coeffs) : PolyQ(std::vector<Rat>(coeffs)) {}
  static PolyQ constant(const Rat& c) { return PolyQ({c}); }
  static PolyQ x() { return PolyQ({Rat(0), Rat(1)}); }
  static PolyQ monomial(const Rat& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const Rat& leading() const;

  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);
  PolyQ& operator*=(const Rat& c);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(PolyQ a, const Rat& c) { return a *= c; }
  friend PolyQ operator*(const Rat& c, PolyQ a) { return a *= c; }
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

  PolyQ pow(unsigned e) const;
  PolyQ derivative() const;
  PolyQ monic() const;

  Rat operator()(const Rat& x) const;
  QuadFieldElement operator()(const QuadFieldElement& x) const;

  std::string str(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder over Q: f = q*g + r with deg r < deg g.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& f, const PolyQ& g);
/// Exact division; throws arithmetic_error when g does not divide f.
PolyQ div_exact(const PolyQ& f, const PolyQ& g);
/// Pseudo-division over Z-style: lc(g)^(deg f - deg g + 1) * f = q*g + r.
std::pair<PolyQ, PolyQ> pseudo_divmod(const PolyQ& f, const PolyQ& g);
/// Monic gcd; both arguments zero is an error.
PolyQ gcd(const PolyQ& f, const PolyQ& g);

/// Content c and primitive integer polynomial p with f = c * p, lc(p) > 0.
struct ContentSplit {
  Rat content;
  std::vector<Int> primitive;
};
ContentSplit content_split(const PolyQ& f);

/// Integer-coefficient helpers used by the p-adic machinery.
Int eval_mod(const std::vector<Int>& f, const Int& x, const Int& m);
/// sqrt of sum of squares of coefficients, rounded up.
Int l2_norm_ceil(const std::vector<Int>& f);

}  // namespace arpt
