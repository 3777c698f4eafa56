#include <doctest.h>

#include "arpt/classifier.hpp"
#include "arpt/report.hpp"

#include <set>
#include <sstream>

using namespace arpt;

namespace {

Curve example1() { return curve_from_coeffs(1, 0, 1, 354, 4684); }
Curve partner() { return curve_from_coeffs(1, 0, 1, -3321, -157604); }

std::set<CurvePoint> points_of(const std::vector<PredictedPoint>& v) {
  std::set<CurvePoint> s;
  for (const auto& p : v) s.insert(p.point);
  return s;
}

}  // namespace

TEST_CASE("conductor 1302 classification") {
  ClassificationReport r = classify(example1(), "1302x");
  CHECK(r.semistable);
  CHECK(r.predicted_equals_actual == true);
  CHECK(r.consistent());
  CHECK(r.rational_torsion == GroupStructure{6, 1});
  CHECK(r.quadratic_torsion == GroupStructure{6, 2});
  CHECK_FALSE(r.mu3_present);
  CHECK(r.ar_points.size() == 6);
  for (const auto& a : r.ar_points) CHECK(a.point.is_rational());
  CHECK(r.largest_prime_in_orders == 3);
  CHECK(r.search_field_note.find("sqrt -3") != std::string::npos);
}

TEST_CASE("predicted and actual sets on the 3-isogenous curve") {
  Curve e = partner();
  auto predicted = predicted_ar_set(e);
  auto actual = actual_ar_set(e);
  std::set<CurvePoint> act;
  for (const auto& [p, v] : actual) {
    act.insert(p);
    CHECK(v.almost_rational);
  }
  CHECK(points_of(predicted) == act);
  CHECK(act.size() == 10);

  CurvePoint q = *mu3_generator(e);
  bool found = false;
  for (const auto& pp : predicted) {
    if (!pp.decomposition) {
      CHECK(pp.point.is_rational());
      continue;
    }
    const Decomposition& d = *pp.decomposition;
    CHECK(d.sum == pp.point);
    CHECK(*d.q + d.r + d.s == d.sum);
    CHECK((*d.q == q || *d.q == -q));
    CHECK(d.r.is_rational());
    CHECK(scalar_mul(9, d.r).is_infinity());
    CHECK(scalar_mul(16, d.s).is_infinity());
    if (exact_order(d.s, 2) == 2L && !d.s.is_rational()) {
      found = true;
      CHECK_FALSE(act.count(d.s));
    }
  }
  CHECK(found);
  // Closed under conjugation.
  auto pts = points_of(predicted);
  for (const auto& p : pts) CHECK(pts.count(conjugate_point(p)));

  ClassificationReport r = classify(e);
  CHECK(r.predicted_equals_actual == true);
  CHECK(r.violations.empty());
  CHECK(r.mu3_present);
  CHECK_FALSE(r.order16_s_found);
  for (const auto& a : r.ar_points) {
    CHECK(a.point.is_rational() == !a.decomposition.has_value());
    CHECK(is_almost_rational(a.point) == a.verdict);
  }
}

TEST_CASE("non-semistable and trivial curves") {
  Curve e = curve_from_coeffs(0, 0, 0, 0, -1);
  ClassificationReport r = classify(e);
  CHECK_FALSE(r.semistable);
  CHECK_FALSE(r.quadratic_torsion.has_value());
  CHECK_FALSE(r.predicted_equals_actual.has_value());
  CHECK(r.ar_points.empty());
  CHECK_THROWS_AS(predicted_ar_set(e), not_semistable);

  Curve c37 = curve_from_coeffs(0, 0, 1, -1, 0);
  auto actual = actual_ar_set(c37);
  REQUIRE(actual.size() == 1);
  CHECK(actual[0].first.is_infinity());
  CHECK(predicted_ar_set(c37).size() == 1);
}

TEST_CASE("rational points of order 5 and 7 are not flagged") {
  for (const Curve& e : {curve_from_coeffs(0, -1, 1, 0, 0), curve_from_coeffs(1, -1, 1, -3, 3)}) {
    ClassificationReport r = classify(e);
    CHECK(r.consistent());
    CHECK(r.largest_prime_in_orders >= 5);
    CHECK(r.largest_prime_in_orders <= 7);
  }
}

TEST_CASE("largest prime factor") {
  CHECK(largest_prime_factor(1) == 1);
  CHECK(largest_prime_factor(144) == 3);
  CHECK(largest_prime_factor(14) == 7);
  CHECK(largest_prime_factor(97) == 97);
}

TEST_CASE("JSON report round trip") {
  std::vector<Curve> curves{example1(), partner(), curve_from_coeffs(0, 0, 0, 0, -1), curve_from_coeffs(0, 0, 1, -1, 0),
                            curve_from_coeffs(Coefficients{Rat(1), Rat(0), Rat(1), Rat(354 * 64), Rat(4684 * 4096)}),
                            curve_from_coeffs(Coefficients{Rat(0), Rat(0), Rat(0), Rat(1, 16), Rat(0)}),
                            curve_from_coeffs(Coefficients{Rat(0), Rat(0), Rat(0), Rat(-1), Rat(Int("100000000000000000000000"))})};
  for (const Curve& e : curves) {
    ClassificationReport r = classify(e, "lbl");
    std::string text = emit_json(r);
    ClassificationReport back = parse_json(text);
    CHECK(back == r);
    CHECK(emit_json(back) == text);
  }
  std::string big = emit_json(classify(curves.back()));
  CHECK(big.find("\"100000000000000000000000\"") != std::string::npos);
  CHECK(emit_json(classify(partner())).find("\"infinity\"") != std::string::npos);
  CHECK_THROWS_AS(parse_json("{"), report_parse_error);
  CHECK_THROWS_AS(parse_json("{\"label\": 3}"), report_parse_error);
}

TEST_CASE("TSV rows") {
  CHECK(tsv_header() == "label\tsemistable\trat_torsion\tquad_torsion\tmu3\tn_ar_points\tmax_ar_order\tconsistent");
  CHECK(tsv_row(classify(partner(), "iso")) == "iso\ttrue\tZ/2\tZ/2xZ/6\ttrue\t10\t6\ttrue");
  CHECK(tsv_row(classify(curve_from_coeffs(0, 0, 0, 0, -1), "add")) == "add\tfalse\tZ/2\tNA\tNA\tNA\tNA\ttrue");
}
