#include <doctest.h>

#include "arpt/division.hpp"
#include "arpt/padic.hpp"
#include "arpt/torsion.hpp"
#include "oracles.hpp"

#include <set>

using namespace arpt;

namespace {

Curve example1() { return curve_from_coeffs(1, 0, 1, 354, 4684); }

std::vector<Curve> sample_curves() {
  return {example1(),
          curve_from_coeffs(0, 0, 0, -1, 0),
          curve_from_coeffs(0, 0, 1, -1, 0),
          curve_from_coeffs(1, 0, 1, 4, -6),
          curve_from_coeffs(0, -1, 1, -10, -20),
          curve_from_coeffs(1, -1, 1, -3, 3),
          curve_from_coeffs(1, 0, 1, -3321, -157604),
          curve_from_coeffs(0, 0, 0, 0, -1),
          curve_from_coeffs(Coefficients{Rat(1, 2), Rat(-3), Rat(2, 3), Rat(5), Rat(-7, 4)})};
}

}  // namespace

TEST_CASE("discriminant and invariant identities") {
  CHECK(curve_from_coeffs(0, 0, 0, -1, 0).discriminant() == Rat(64));
  CHECK_THROWS_AS(curve_from_coeffs(0, 0, 0, 0, 0), singular_curve);
  for (const Curve& e : sample_curves()) {
    CHECK(e.c4().pow(3) - e.c6().pow(2) == Rat(1728) * e.discriminant());
    CHECK(Rat(4) * e.b8() == e.b2() * e.b6() - e.b4() * e.b4());
  }
}

TEST_CASE("conductor 1302 discriminant and reduction types") {
  Curve e = example1();
  CHECK(e.minimal_discriminant() == Int("-12210554412"));
  std::set<Int> support;
  for (const auto& b : e.bad_primes()) {
    support.insert(b.prime);
    CHECK(is_multiplicative(b.kind));
    CHECK(b.disc_valuation == valuation(e.minimal_discriminant(), b.prime));
  }
  CHECK(support == std::set<Int>{2, 3, 7, 31});
  auto ss = is_semistable(e);
  CHECK(ss.semistable);
  CHECK(ss.evidence.size() == 4);
  // Split at odd p iff -c6 is a square mod p.
  for (const auto& b : e.bad_primes()) {
    if (b.prime == 2) continue;
    long p = b.prime.get_si();
    long v = oracle::mod(Int(-e.minimal_c6() % p).get_si(), p);
    bool square = false;
    for (long t = 1; t < p; ++t) square = square || (t * t - v) % p == 0;
    CHECK((b.kind == ReductionKind::multiplicative_split) == square);
  }
}

TEST_CASE("semistability detection") {
  Curve e = curve_from_coeffs(0, 0, 0, 0, -1);
  CHECK(e.c4() == Rat(0));
  auto ss = is_semistable(e);
  CHECK_FALSE(ss.semistable);
  CHECK(e.reduction_at(Int(2)) == ReductionKind::additive);
  CHECK(e.reduction_at(Int(3)) == ReductionKind::additive);
  CHECK_FALSE(is_semistable(curve_from_coeffs(0, 0, 0, -1, 0)).semistable);
  CHECK(is_semistable(curve_from_coeffs(0, 0, 1, -1, 0)).semistable);
  CHECK(curve_from_coeffs(0, 0, 1, -1, 0).reduction_at(Int(5)) == ReductionKind::good);
}

TEST_CASE("minimal models") {
  Curve e = example1();
  for (long u : {2L, 3L, 6L}) {
    Isomorphism iso{Rat(1, u), Rat(3), Rat(-1), Rat(5, 2)};
    Curve scaled = curve_from_coeffs(transform(e.coeffs(), iso));
    CHECK(scaled.minimal_discriminant() == e.minimal_discriminant());
    CHECK(scaled.j_invariant() == e.j_invariant());
    for (const auto& b : scaled.bad_primes())
      CHECK(b.disc_valuation <= valuation(scaled.discriminant(), b.prime));
    Coefficients mc = transform(scaled.coeffs(), scaled.to_minimal());
    for (std::size_t i = 0; i < 5; ++i) CHECK(mc[i] == Rat(scaled.minimal_coeffs()[i]));
  }
  Curve r = sample_curves().back();
  Rat j = r.j_invariant();
  const auto& m = r.minimal_coeffs();
  CHECK(curve_from_coeffs(Coefficients{Rat(m[0]), Rat(m[1]), Rat(m[2]), Rat(m[3]), Rat(m[4])}).j_invariant() == j);
}

TEST_CASE("finite-at-p criterion") {
  Curve e = example1();
  CHECK(peu_ramifie_at(e, Int(5)));
  CHECK(peu_ramifie_at(e, Int(2)));        // v_2 = 2
  CHECK(peu_ramifie_at(e, Int(3)));        // v_3 = 3
  CHECK_FALSE(peu_ramifie_at(e, Int(7)));  // v_7 = 6
  CHECK_FALSE(peu_ramifie_at(e, Int(31))); // v_31 = 2
  CHECK_THROWS(peu_ramifie_at(curve_from_coeffs(0, 0, 0, 0, -1), Int(3)));
}

TEST_CASE("point counting") {
  Curve e = curve_from_coeffs(0, 0, 0, 1, 0);
  long brute = 1;
  for (long x = 0; x < 5; ++x)
    for (long y = 0; y < 5; ++y)
      if ((y * y - x * x * x - x) % 5 == 0) ++brute;
  CHECK(count_points_mod(e, 5) == brute);
  CHECK_THROWS(count_points_mod(e, 2));
  CHECK_THROWS(count_points_mod(example1(), 31));
  for (const Curve& c : sample_curves()) {
    std::int64_t tors = rational_torsion(c).structure.order();
    for (std::int64_t q : {5, 11, 13, 17, 19, 23, 101, 211}) {
      if (mpz_divisible_ui_p(c.minimal_discriminant().get_mpz_t(), static_cast<unsigned long>(q))) continue;
      std::int64_t n = count_points_mod(c, q);
      CHECK(n == oracle::count_points(c.minimal_coeffs(), q));
      CHECK((n - q - 1) * (n - q - 1) <= 4 * q);
      CHECK(n % tors == 0);
    }
  }
}

TEST_CASE("group law axioms") {
  Curve e = curve_from_coeffs(0, 0, 1, -1, 0);
  CurvePoint g = CurvePoint::rational(e, Rat(0), Rat(0), -3);
  CurvePoint o = CurvePoint::infinity(e, -3);
  std::vector<CurvePoint> pts{o};
  for (long k = -6; k <= 6; ++k)
    if (k) pts.push_back(scalar_mul(k, g));
  CHECK(scalar_mul(3, g) == g + g + g);
  for (const auto& p : pts) {
    CHECK(p + o == p);
    CHECK(p + (-p) == o);
    CHECK(-(-p) == p);
    CHECK(dbl(p) == p + p);
    for (const auto& q : pts) {
      CHECK(p + q == q + p);
      for (const auto& r : pts) CHECK((p + q) + r == p + (q + r));
    }
  }
  CHECK_THROWS(CurvePoint::rational(e, Rat(1), Rat(1), -3));

  Curve k = curve_from_coeffs(1, 0, 1, 354, 4684);
  TorsionGroup tg = quadratic_torsion(k, -3);
  for (const auto& p : tg.all_points) {
    if (!p.is_infinity()) CHECK(on_curve(k, p.x(), p.y()));
    for (const auto& q : tg.all_points) {
      CHECK(p + q == q + p);
      for (const auto& r : {tg.generators[0], tg.all_points.back()}) CHECK((p + q) + r == p + (q + r));
    }
  }
  CurvePoint other = CurvePoint::infinity(curve_from_coeffs(0, 0, 1, -1, 0), 5);
  CHECK_THROWS(g + other);
}

TEST_CASE("division polynomials") {
  Curve e = example1();
  CHECK(division_polynomial(e, 1).psi == PolyQ::constant(Rat(1)));
  CHECK(division_polynomial(e, 2).psi ==
        PolyQ({e.b6(), Rat(2) * e.b4(), e.b2(), Rat(4)}));
  for (int n = 3; n <= 12; ++n) {
    int deg = division_polynomial(e, n).psi.degree();
    CHECK(deg == (n % 2 ? (n * n - 1) / 2 : (n * n - 4) / 2));
  }
  CHECK_THROWS_AS(division_polynomial(e, 0), std::out_of_range);
  CHECK_THROWS_AS(division_polynomial(e, 49), std::out_of_range);
  CHECK(rational_roots(division_polynomial(e, 3).psi) == std::vector<Rat>{Rat(2)});

  // x([k]P) maps agree with the group law.
  Curve c = curve_from_coeffs(0, 0, 1, -1, 0);
  DivisionPolyCache cache(c);
  CurvePoint g = CurvePoint::rational(c, Rat(0), Rat(0), -3);
  for (long m : {1L, 2L, 3L}) {
    CurvePoint p = scalar_mul(m, g);
    for (int k = 2; k <= 5; ++k) {
      auto [num, den] = cache.multiplication_map(k);
      CHECK(num(p.x().a()) / den(p.x().a()) == scalar_mul(k, p).x().a());
    }
  }
}

TEST_CASE("division polynomial roots are torsion x-coordinates") {
  for (const Curve& e : sample_curves()) {
    DivisionPolyCache cache(e);
    TorsionGroup g = quadratic_torsion(e, -3);
    for (int n = 2; n <= 9; ++n) {
      PolyQ t = cache.torsion_x_poly(n);
      for (const auto& p : g.all_points) {
        if (p.is_infinity()) continue;
        bool killed = scalar_mul(n, p).is_infinity();
        CHECK(t(p.x()).is_zero() == killed);
      }
      for (const auto& x : field_roots(t, -3))
        for (const auto& p : points_with_x(e, x)) CHECK(scalar_mul(n, p).is_infinity());
    }
  }
}
