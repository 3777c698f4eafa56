#include "example.hpp"

#include "arpt/classifier.hpp"
#include "arpt/corpus.hpp"
#include "arpt/division.hpp"
#include "arpt/padic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace arpt::cli {

bool ExampleTranscript::all_ok() const {
  return std::all_of(facts.begin(), facts.end(), [](const FactCheck& f) { return f.ok; });
}

namespace {

constexpr std::int64_t kD = -3;

QuadFieldElement qf(long a, long b) { return QuadFieldElement(kD, Rat(a), Rat(b)); }

bool is_ar(const CurvePoint& p) { return is_almost_rational(p).almost_rational; }

std::optional<CurvePoint> rational_order3(const TorsionGroup& g) {
  for (const auto& p : g.all_points)
    if (exact_order(p, 3) == 3L) return p;
  return std::nullopt;
}

/// Q + S checks shared by the quoted claims and the isogenous diagnostic.
void check_sum(std::vector<FactCheck>& out, const std::string& prefix, const Curve& e, const TorsionGroup& quad,
               const std::optional<CurvePoint>& q, const std::optional<CurvePoint>& s) {
  if (!q || !s) {
    std::string why = !q ? "no mu3 generator on this curve" : "S is not a point of this curve";
    for (const char* f : {"P = Q + S is almost rational", "3P = S", "3P = S is not almost rational",
                          "2 sigma P - 2P = -Q != O", "predicted set contains P with S of order 2",
                          "actual set contains P and not S"})
      out.push_back({prefix + f, false, why});
    return;
  }
  CurvePoint p = *q + *s;
  ARVerdict v = is_almost_rational(p);
  out.push_back({prefix + "P = Q + S is almost rational", v.almost_rational, "P = " + p.str()});
  CurvePoint p3 = scalar_mul(3, p);
  out.push_back({prefix + "3P = S", p3 == *s, "3P = " + p3.str()});
  ARVerdict v3 = is_almost_rational(p3);
  std::string wit = v3.witness ? "witness (" + to_string(v3.witness->first) + ", " + to_string(v3.witness->second) + ")"
                               : "no witness";
  out.push_back({prefix + "3P = S is not almost rational", !v3.almost_rational, wit});
  CurvePoint lhs = scalar_mul(2, conjugate_point(p)) - scalar_mul(2, p);
  out.push_back({prefix + "2 sigma P - 2P = -Q != O", lhs == -*q && !lhs.is_infinity(), "2 sigma P - 2P = " + lhs.str()});
  auto predicted = predicted_ar_set(rational_torsion(e, kD), quad, q);
  auto it = std::find_if(predicted.begin(), predicted.end(), [&](const PredictedPoint& pp) { return pp.point == p; });
  bool has = it != predicted.end() && it->decomposition && exact_order(it->decomposition->s, 2) == 2L;
  out.push_back({prefix + "predicted set contains P with S of order 2", has,
                 has ? "S component " + it->decomposition->s.str() : "P missing from predicted set"});
  auto actual = actual_ar_set(quad);
  auto in_actual = [&](const CurvePoint& x) {
    return std::any_of(actual.begin(), actual.end(), [&](const auto& a) { return a.first == x; });
  };
  out.push_back({prefix + "actual set contains P and not S", in_actual(p) && !in_actual(*s),
                 std::to_string(actual.size()) + " almost rational points"});
}

std::optional<CurvePoint> nonrational_two_torsion(const TorsionGroup& quad) {
  for (const auto& p : quad.all_points)
    if (!p.is_rational() && exact_order(p, 2) == 2L) return p;
  return std::nullopt;
}

}  // namespace

ExampleTranscript verify_example() {
  ExampleTranscript t;
  auto& f = t.facts;
  Curve e = curve_from_coeffs(1, 0, 1, 354, 4684);
  QuadFieldElement sx = qf(-3, -6), sy = qf(5, 12);

  f.push_back({"conjugate of x(S) is -3 + 6 sqrt(-3)", sx.conjugate() == qf(-3, 6), sx.conjugate().str()});
  f.push_back({"conjugate of y(S) is 5 - 12 sqrt(-3)", sy.conjugate() == qf(5, -12), sy.conjugate().str()});

  std::istringstream line("1302x 1 0 1 354 4684\n");
  CurveFile cf = parse_curve_stream(line);
  bool parsed = cf.errors.empty() && cf.records.size() == 1 && cf.records[0].label == std::string("1302x") &&
                cf.records[0].a == std::array<Int, 5>{1, 0, 1, 354, 4684};
  f.push_back({"curve line '1302x 1 0 1 354 4684' parses", parsed, ""});

  std::set<Int> allowed{2, 3, 7, 31};
  std::string support;
  bool within = true;
  for (const auto& b : e.bad_primes()) {
    support += (support.empty() ? "" : ",") + b.prime.get_str();
    within = within && allowed.count(b.prime);
  }
  f.push_back({"bad primes within {2,3,7,31}", within,
               "minimal discriminant " + e.minimal_discriminant().get_str() + ", bad primes {" + support + "}"});
  SemistabilityReport ss = is_semistable(e);
  f.push_back({"semistable", ss.semistable, ""});

  TorsionGroup rat = rational_torsion(e, kD);
  TorsionGroup quad = quadratic_torsion(e, kD);
  auto r3 = rational_order3(rat);
  f.push_back({"rational 3-torsion point exists", r3.has_value(), r3 ? r3->str() : "E(Q)_tors = " + rat.structure.str()});
  f.push_back({"rational 3-isogeny exists", has_rational_isogeny(e, 3), ""});

  auto q = mu3_generator(e);
  std::vector<Rat> f3_roots = rational_roots(DivisionPolyCache(e).reduced(3));
  std::string roots;
  for (const auto& r : f3_roots) roots += (roots.empty() ? "" : ", ") + r.str();
  f.push_back({"mu3 generator exists", q.has_value(), q ? q->str() : "rational roots of f_3: {" + roots + "}"});
  bool root_is_xq = q && std::find(f3_roots.begin(), f3_roots.end(), q->x().a()) != f3_roots.end();
  f.push_back({"f_3 has a rational root equal to x(Q)", root_is_xq, "rational roots of f_3: {" + roots + "}"});

  std::optional<CurvePoint> s;
  if (on_curve(e, sx, sy)) s = CurvePoint::affine(e, sx, sy);
  f.push_back({"S = (-3 - 6 sqrt(-3), 5 + 12 sqrt(-3)) lies on the curve", s.has_value(), ""});
  f.push_back({"S has exact order 2", s && exact_order(*s, 2) == 2L, s ? "" : "S is not a point of this curve"});
  f.push_back({"S lies in E(Q(sqrt -3))_tors", s && quad.contains(*s), "E(Q(sqrt -3))_tors = " + quad.structure.str()});
  check_sum(f, "", e, quad, q, s);

  ClassificationReport rep = classify(e, "1302x");
  f.push_back({"predicted set equals actual set", rep.predicted_equals_actual.value_or(false),
               std::to_string(rep.ar_points.size()) + " almost rational points"});

  auto& dg = t.diagnostics;
  QuadFieldElement tx = qf(5, 12), ty = qf(-3, -6);
  bool swapped_on = on_curve(e, tx, ty);
  dg.push_back({"swapped point (5 + 12 sqrt(-3), -3 - 6 sqrt(-3)) lies on the curve", swapped_on, ""});
  if (swapped_on) {
    CurvePoint s2 = CurvePoint::affine(e, tx, ty);
    dg.push_back({"swapped point has exact order 2", exact_order(s2, 2) == 2L, ""});
    dg.push_back({"swapped point is not almost rational", !is_ar(s2), ""});
  }
  Curve iso = curve_from_coeffs(1, 0, 1, -3321, -157604);
  TorsionGroup iso_quad = quadratic_torsion(iso, kD);
  check_sum(dg, "3-isogenous curve [1,0,1,-3321,-157604]: ", iso, iso_quad, mu3_generator(iso),
            nonrational_two_torsion(iso_quad));
  return t;
}

}  // namespace arpt::cli
