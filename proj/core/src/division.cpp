#include "arpt/division.hpp"

#include "arpt/rational.hpp"

namespace arpt {

namespace {

std::vector<std::pair<int, int>> small_factor(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

DivisionPolyCache::DivisionPolyCache(Curve e) : curve_(std::move(e)) {
  const Curve& c = curve_;
  cubic_ = PolyQ({c.b6(), Rat(2) * c.b4(), c.b2(), Rat(4)});
  f_[0] = PolyQ();
  f_[1] = PolyQ::constant(Rat(1));
  f_[2] = PolyQ::constant(Rat(1));
  f_[3] = PolyQ({c.b8(), Rat(3) * c.b6(), Rat(3) * c.b4(), c.b2(), Rat(3)});
  f_[4] = PolyQ({c.b4() * c.b8() - c.b6() * c.b6(), c.b2() * c.b8() - c.b4() * c.b6(), Rat(10) * c.b8(),
                 Rat(10) * c.b6(), Rat(5) * c.b4(), c.b2(), Rat(2)});
}

const PolyQ& DivisionPolyCache::reduced(int n) {
  if (n < 0) throw std::invalid_argument("negative division polynomial index");
  if (auto it = f_.find(n); it != f_.end()) return it->second;
  int m = n / 2;
  PolyQ out;
  if (n % 2 == 1) {
    PolyQ fsq = cubic_ * cubic_;
    const PolyQ a = reduced(m + 2) * reduced(m).pow(3);
    const PolyQ b = reduced(m - 1) * reduced(m + 1).pow(3);
    out = (m % 2 == 0) ? fsq * a - b : a - fsq * b;
  } else {
    const PolyQ& fm = reduced(m);
    PolyQ inner = reduced(m + 2) * reduced(m - 1).pow(2) - reduced(m - 2) * reduced(m + 1).pow(2);
    out = fm * inner;
  }
  return f_[n] = std::move(out);
}

PolyQ DivisionPolyCache::torsion_x_poly(int n) {
  if (n < 1) throw std::invalid_argument("torsion order must be positive");
  if (n == 1) return PolyQ::constant(Rat(1));
  if (n == 2) return cubic_;
  if (n % 2 == 1) return reduced(n);
  return reduced(n) * cubic_;
}

PolyQ DivisionPolyCache::primitive_x_poly(int n) {
  PolyQ full = torsion_x_poly(n);
  auto fac = small_factor(n);
  PolyQ lower = PolyQ::constant(Rat(1));
  for (auto [p, e] : fac) {
    PolyQ sub = torsion_x_poly(n / p);
    lower = div_exact(lower * sub, gcd(lower, sub));
  }
  return div_exact(full, lower);
}

std::pair<PolyQ, PolyQ> DivisionPolyCache::multiplication_map(int k) {
  if (k < 1) throw std::invalid_argument("multiplier must be positive");
  const PolyQ x = PolyQ::x();
  PolyQ fk = reduced(k), fkm = reduced(k - 1), fkp = reduced(k + 1);
  if (k % 2 == 1) return {x * fk * fk - cubic_ * fkm * fkp, fk * fk};
  return {x * cubic_ * fk * fk - fkm * fkp, cubic_ * fk * fk};
}

DivisionPoly division_polynomial(const Curve& e, int n) {
  if (n < 1 || n > 48) throw std::out_of_range("division polynomial index must be in [1, 48]");
  DivisionPolyCache cache(e);
  return {n, n == 2 ? cache.two_division() : cache.reduced(n)};
}

}  // namespace arpt
