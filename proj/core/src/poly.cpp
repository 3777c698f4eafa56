#include "arpt/poly.hpp"

#include <sstream>

namespace arpt {

PolyQ::PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1, Rat(0));
  v[degree] = c;
  return PolyQ(std::move(v));
}

void PolyQ::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& PolyQ::leading() const {
  if (c_.empty()) throw arithmetic_error("leading coefficient of the zero polynomial");
  return c_.back();
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
  }
  std::vector<Rat> out;
  out.reserve(acc.size());
  for (auto& q : acc) out.emplace_back(q);
  return PolyQ(std::move(out));
}

PolyQ& PolyQ::operator*=(const PolyQ& o) { return *this = *this * o; }

PolyQ& PolyQ::operator*=(const Rat& c) {
  for (auto& v : c_) v *= c;
  trim();
  return *this;
}

PolyQ PolyQ::pow(unsigned e) const {
  PolyQ result = constant(Rat(1)), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

PolyQ PolyQ::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return PolyQ(std::move(d));
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return {};
  return *this * leading().inverse();
}

Rat PolyQ::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QuadFieldElement PolyQ::operator()(const QuadFieldElement& x) const {
  QuadFieldElement acc(x.d(), Rat(0));
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string PolyQ::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rat& c = c_[i];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rat a = c.abs();
    if (i == 0 || a != Rat(1)) os << a;
    if (i > 0) os << (i == 0 || a != Rat(1) ? "*" : "") << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& f, const PolyQ& g) {
  if (g.is_zero()) throw arithmetic_error("polynomial division by zero");
  std::vector<Rat> r = f.coeffs();
  int dg = g.degree();
  if (f.degree() < dg) return {PolyQ(), f};
  std::vector<Rat> q(static_cast<std::size_t>(f.degree() - dg + 1), Rat(0));
  Rat inv_lc = g.leading().inverse();
  for (int i = f.degree(); i >= dg; --i) {
    Rat c = r[i] * inv_lc;
    if (c.is_zero()) continue;
    q[i - dg] = c;
    for (int j = 0; j <= dg; ++j) r[i - dg + j] -= c * g.coeffs()[j];
  }
  r.resize(static_cast<std::size_t>(dg));
  return {PolyQ(std::move(q)), PolyQ(std::move(r))};
}

PolyQ div_exact(const PolyQ& f, const PolyQ& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw arithmetic_error("inexact polynomial division");
  return q;
}

std::pair<PolyQ, PolyQ> pseudo_divmod(const PolyQ& f, const PolyQ& g) {
  if (g.is_zero()) throw arithmetic_error("polynomial division by zero");
  if (f.degree() < g.degree()) return {PolyQ(), f};
  Rat scale = g.leading().pow(static_cast<unsigned>(f.degree() - g.degree() + 1));
  return divmod(f * scale, g);
}

PolyQ gcd(const PolyQ& f, const PolyQ& g) {
  if (f.is_zero() && g.is_zero()) throw arithmetic_error("gcd of two zero polynomials");
  PolyQ a = f, b = g;
  while (!b.is_zero()) {
    PolyQ r = divmod(a, b).second;
    a = std::move(b);
    // Keep the remainder sequence primitive to stop coefficient growth.
    b = r.is_zero() ? r : r * content_split(r).content.inverse();
  }
  return a.monic();
}

ContentSplit content_split(const PolyQ& f) {
  if (f.is_zero()) return {Rat(0), {}};
  Int den_lcm = 1;
  for (const auto& c : f.coeffs()) den_lcm = lcm(den_lcm, c.den());
  std::vector<Int> ints;
  ints.reserve(f.coeffs().size());
  Int g = 0;
  for (const auto& c : f.coeffs()) {
    Int v = c.num() * (den_lcm / c.den());
    g = gcd(g, v);
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) g = -g;
  for (auto& v : ints) v /= g;
  return {Rat(g, den_lcm), std::move(ints)};
}

Int eval_mod(const std::vector<Int>& f, const Int& x, const Int& m) {
  Int acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = mod_floor(acc * x + *it, m);
  return acc;
}

Int l2_norm_ceil(const std::vector<Int>& f) {
  Int s = 0;
  for (const auto& c : f) s += c * c;
  Int r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  if (r * r < s) r += 1;
  return r;
}

}  // namespace arpt
