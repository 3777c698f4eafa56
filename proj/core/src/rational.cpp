#include "arpt/rational.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace arpt {

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw arithmetic_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: " + text);
  if (q.get_den() == 0) throw arithmetic_error("rational with zero denominator");
  q.canonicalize();
  return Rat(q);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw arithmetic_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw arithmetic_error("inverse of zero");
  return Rat(mpq_class(1 / q_));
}

Rat Rat::pow(unsigned e) const {
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
  return Rat(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

int valuation(const Int& x, const Int& p) {
  if (x == 0) throw arithmetic_error("valuation of zero");
  if (p < 2) throw std::invalid_argument("valuation base must be a prime");
  Int t = x;
  int v = 0;
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const Rat& x, const Int& p) {
  if (x.is_zero()) throw arithmetic_error("valuation of zero");
  return valuation(x.num(), p) - valuation(x.den(), p);
}

bool rational_sqrt(const Rat& x, Rat& root) {
  if (x.sign() < 0) return false;
  Int n = x.num(), d = x.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rat(rn, rd);
  return true;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int symmetric_mod(const Int& a, const Int& m) {
  Int r = mod_floor(a, m);
  if (2 * r > m) r -= m;
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int inverse_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw arithmetic_error("element not invertible modulo " + m.get_str());
  return r;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

// Brent's variant of Pollard rho; n odd composite, not a perfect power of a
// small prime.
Int pollard_brent(const Int& n) {
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Int& v) { return mod_floor(v * v + c, n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mod_floor(q * ::abs(Int(x - y)), n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(::abs(Int(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Int& n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int root;
  for (unsigned long k = 2; k <= 64; ++k) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      std::map<Int, int> sub;
      factor_into(root, sub);
      for (auto& [p, e] : sub) out[p] += e * static_cast<int>(k);
      return;
    }
  }
  Int d = pollard_brent(n);
  factor_into(d, out);
  factor_into(Int(n / d), out);
}

}  // namespace

std::vector<std::pair<Int, int>> factor(const Int& n) {
  if (n == 0) throw arithmetic_error("factor of zero");
  Int m = ::abs(n);
  std::map<Int, int> found;
  static const unsigned small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (unsigned p : small_primes) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++found[Int(p)];
    }
  }
  for (unsigned long p = 53; p < 10000 && m > 1; p += 2) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++found[Int(p)];
    }
  }
  factor_into(m, found);
  return {found.begin(), found.end()};
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> out;
  for (auto& [p, e] : factor(n)) out.push_back(p);
  return out;
}

std::int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer exceeds 64 bits: " + v.get_str());
  return v.get_si();
}

}  // namespace arpt
