#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arpt {

using Int = mpz_class;

class arithmetic_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.  Equality is structural.
class Rat {
public:
  Rat() = default;
  Rat(long v) : q_(v) {}            // NOLINT(google-explicit-constructor)
  Rat(int v) : q_(v) {}             // NOLINT(google-explicit-constructor)
  Rat(const Int& v) : q_(v) {}      // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "n" or "n/d".
  static Rat parse(const std::string& text);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rat inverse() const;
  Rat abs() const { return Rat(mpq_class(::abs(q_))); }
  Rat pow(unsigned e) const;

  std::string str() const { return q_.get_str(); }

private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Exponent of the prime p in x; negative when p divides the denominator.
int valuation(const Rat& x, const Int& p);
int valuation(const Int& x, const Int& p);

/// Square root in Q when x is a rational square.
bool rational_sqrt(const Rat& x, Rat& root);

Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& m);
/// Representative of a mod m in (-m/2, m/2].
Int symmetric_mod(const Int& a, const Int& m);
Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);
/// Inverse of a mod m; throws when not invertible.
Int inverse_mod(const Int& a, const Int& m);

bool is_prime(const Int& n);
/// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<Int, int>> factor(const Int& n);
/// Distinct prime divisors of |n|.
std::vector<Int> prime_divisors(const Int& n);

/// Fits-in-int64 conversion; throws when out of range.
std::int64_t to_i64(const Int& v);

}  // namespace arpt
