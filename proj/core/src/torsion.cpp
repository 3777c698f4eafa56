#include "arpt/torsion.hpp"

#include "arpt/division.hpp"
#include "arpt/padic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace arpt {

std::string GroupStructure::str() const {
  if (m2 == 1) return "Z/" + std::to_string(m1);
  return "Z/" + std::to_string(m2) + "xZ/" + std::to_string(m1);
}

bool is_mazur_group(const GroupStructure& g) {
  if (g.m2 == 1) return (g.m1 >= 1 && g.m1 <= 10) || g.m1 == 12;
  return g.m2 == 2 && (g.m1 == 2 || g.m1 == 4 || g.m1 == 6 || g.m1 == 8);
}

bool TorsionGroup::contains(const CurvePoint& p) const {
  return std::binary_search(all_points.begin(), all_points.end(), p);
}

std::optional<long> exact_order(const CurvePoint& p, long cap) {
  if (cap < 1) throw std::invalid_argument("order cap must be positive");
  CurvePoint acc = p;
  for (long n = 1; n <= cap; ++n) {
    if (acc.is_infinity()) return n;
    acc += p;
  }
  return std::nullopt;
}

std::vector<std::pair<long, CurvePoint>> primary_decomposition(const CurvePoint& p, long order) {
  std::vector<std::pair<long, CurvePoint>> out;
  long n = order;
  for (long q = 2; q <= n; ++q) {
    if (n % q) continue;
    long qk = 1;
    while (n % q == 0) {
      n /= q;
      qk *= q;
    }
    long rest = order / qk;
    long inv = to_i64(inverse_mod(Int(rest % qk), Int(qk)));
    long coeff = (rest * inv) % order;
    out.emplace_back(q, scalar_mul(coeff, p));
  }
  return out;
}

std::vector<CurvePoint> points_with_x(const Curve& e, const QuadFieldElement& x) {
  QuadFieldElement lin = e.a1() * x + e.a3();
  QuadFieldElement rhs = ((x + e.a2()) * x + e.a4()) * x + e.a6();
  QuadFieldElement disc = lin * lin + Rat(4) * rhs;
  auto root = disc.sqrt();
  if (!root) return {};
  std::vector<CurvePoint> out;
  QuadFieldElement half(x.d(), Rat(1, 2));
  out.push_back(CurvePoint::affine(e, x, (*root - lin) * half));
  if (!root->is_zero()) out.push_back(CurvePoint::affine(e, x, (-*root - lin) * half));
  std::sort(out.begin(), out.end());
  return out;
}

ReductionBound torsion_reduction_bound(const Curve& e, std::int64_t d, int min_primes) {
  ReductionBound rb{Int(0), {}};
  const int max_primes = 40;
  for (std::int64_t q = 5; static_cast<int>(rb.primes.size()) < max_primes; q += 2) {
    if (!is_prime(Int(q))) continue;
    if (mpz_divisible_ui_p(e.minimal_discriminant().get_mpz_t(), static_cast<unsigned long>(q))) continue;
    if (d != 0 && d % q == 0) continue;
    Int n;
    if (d == 0) {
      n = count_points_mod(e, q);
    } else {
      Int dd(d), qq(q);
      n = mpz_kronecker(dd.get_mpz_t(), qq.get_mpz_t()) == 1 ? Int(count_points_mod(e, q))
                                                              : count_points_quadratic_ext(e, q);
    }
    rb.bound = gcd(rb.bound, n);
    rb.primes.push_back(q);
    long plausible = d == 0 ? 16 : 24;
    if (static_cast<int>(rb.primes.size()) >= min_primes && rb.bound <= plausible) break;
  }
  return rb;
}

std::vector<CurvePoint> generated_subgroup(const std::vector<CurvePoint>& gens, std::size_t limit) {
  if (gens.empty()) throw std::invalid_argument("generated_subgroup needs at least one generator");
  std::set<CurvePoint> seen{CurvePoint::infinity(gens[0].curve(), gens[0].field())};
  std::vector<CurvePoint> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<CurvePoint> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        CurvePoint s = p + g;
        if (seen.insert(s).second) {
          if (seen.size() > limit) throw torsion_search_error("generated subgroup exceeds size limit (not torsion?)");
          next.push_back(std::move(s));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

TorsionGroup assemble_group(std::vector<CurvePoint> points, std::int64_t field) {
  if (points.empty()) throw std::invalid_argument("empty group");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  TorsionGroup g;
  g.field = field;
  g.all_points = points;
  const long n = static_cast<long>(points.size());
  std::vector<long> orders;
  for (const auto& p : points) {
    auto o = exact_order(p, n);
    if (!o) throw std::logic_error("element order exceeds group size in " + p.str());
    orders.push_back(*o);
  }
  long m1 = *std::max_element(orders.begin(), orders.end());
  if (n % m1 != 0) throw std::logic_error("element order does not divide group order");
  long m2 = n / m1;
  if (m1 % m2 != 0) throw std::logic_error("group is not of the form Z/m1 + Z/m2");
  std::size_t i1 = static_cast<std::size_t>(std::find(orders.begin(), orders.end(), m1) - orders.begin());
  g.structure = {m1, m2};
  g.generators = {points[i1]};
  if (m2 > 1) {
    bool found = false;
    for (std::size_t i = 0; i < points.size() && !found; ++i) {
      if (orders[i] != m2) continue;
      if (static_cast<long>(generated_subgroup({points[i1], points[i]}).size()) == n) {
        g.generators.push_back(points[i]);
        found = true;
      }
    }
    if (!found) throw std::logic_error("no complementary generator found");
  }
  return g;
}

namespace {

CurvePoint short_model_to_curve(const Curve& e, const Int& X, const Int& Y, std::int64_t d) {
  const auto& m = e.minimal_coeffs();
  Rat a1(m[0]), a2(m[1]), a3(m[2]);
  Rat b2 = a1 * a1 + Rat(4) * a2;
  Rat xm = (Rat(X) - Rat(3) * b2) / Rat(36);
  Rat ym = (Rat(Y) / Rat(108) - a1 * xm - a3) / Rat(2);
  const Isomorphism& iso = e.to_minimal();
  Rat x = iso.u * iso.u * xm + iso.r;
  Rat y = iso.u.pow(3) * ym + iso.s * iso.u * iso.u * xm + iso.t;
  return CurvePoint::rational(e, x, y, d);
}

void square_divisors(const std::vector<std::pair<Int, int>>& fac, std::size_t i, const Int& acc, std::vector<Int>& out) {
  if (i == fac.size()) {
    out.push_back(acc);
    return;
  }
  Int cur = acc;
  for (int k = 0; 2 * k <= fac[i].second; ++k) {
    square_divisors(fac, i + 1, cur, out);
    cur *= fac[i].first;
  }
}

}  // namespace

TorsionGroup rational_torsion(const Curve& e, std::int64_t ambient_d) {
  ReductionBound rb = torsion_reduction_bound(e, 0);
  std::vector<CurvePoint> pts{CurvePoint::infinity(e, ambient_d)};
  if (rb.bound != 1) {
    Int A = -27 * e.minimal_c4();
    Int B = -54 * e.minimal_c6();
    Int D = 4 * A * A * A + 27 * B * B;
    std::vector<Int> ys{Int(0)};
    square_divisors(factor(D), 0, Int(1), ys);
    for (const Int& y : ys) {
      PolyQ cubic(std::vector<Rat>{Rat(Int(B - y * y)), Rat(A), Rat(0), Rat(1)});
      for (const Rat& root : rational_roots(cubic)) {
        if (!root.is_integer()) continue;
        for (const Int& sy : {y, Int(-y)}) {
          CurvePoint p = short_model_to_curve(e, root.num(), sy, ambient_d);
          if (exact_order(p, 12)) pts.push_back(p);
          if (y == 0) break;
        }
      }
    }
  }
  TorsionGroup g = assemble_group(std::move(pts), 0);
  if (!mpz_divisible_ui_p(rb.bound.get_mpz_t(), static_cast<unsigned long>(g.structure.order())))
    throw std::logic_error("rational torsion order does not divide the reduction bound");
  if (!is_mazur_group(g.structure))
    throw std::logic_error("rational torsion " + g.structure.str() + " is not among Mazur's groups on " + e.str());
  return g;
}

TorsionGroup quadratic_torsion(const Curve& e, std::int64_t d) {
  const long cap = 24;
  ReductionBound rb = torsion_reduction_bound(e, d);
  DivisionPolyCache cache(e);
  std::vector<std::vector<CurvePoint>> primary_parts;
  for (auto& [ell_big, exp] : factor(rb.bound == 0 ? Int(1) : rb.bound)) {
    long ell = ell_big.get_si();
    std::vector<CurvePoint> part{CurvePoint::infinity(e, d)};
    long n = 1;
    bool prev_found = true;
    for (int k = 1; k <= exp && prev_found; ++k) {
      n *= ell;
      if (n > cap)
        throw torsion_search_error("point order " + std::to_string(n) + " exceeds the search cap of " +
                                   std::to_string(cap) + " on " + e.str());
      prev_found = false;
      for (const auto& x : field_roots(cache.primitive_x_poly(static_cast<int>(n)), d)) {
        for (auto& p : points_with_x(e, x)) {
          auto o = exact_order(p, n);
          if (!o || *o != n) throw std::logic_error("root of the order-" + std::to_string(n) + " polynomial has wrong order");
          part.push_back(std::move(p));
          prev_found = true;
        }
      }
    }
    if (part.size() > 1) primary_parts.push_back(std::move(part));
  }
  std::vector<CurvePoint> all{CurvePoint::infinity(e, d)};
  for (const auto& part : primary_parts) {
    std::vector<CurvePoint> next;
    for (const auto& a : all)
      for (const auto& b : part) next.push_back(a + b);
    all = std::move(next);
  }
  TorsionGroup g = assemble_group(std::move(all), d);
  for (const auto& p : g.all_points)
    for (const auto& q : g.all_points)
      if (!g.contains(p + q)) throw std::logic_error("torsion set not closed under addition");
  if (rb.bound != 0 && !mpz_divisible_ui_p(rb.bound.get_mpz_t(), static_cast<unsigned long>(g.structure.order())))
    throw std::logic_error("quadratic torsion order does not divide the reduction bound");
  return g;
}

}  // namespace arpt
