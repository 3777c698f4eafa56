#include "arpt/classifier.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace arpt {

long largest_prime_factor(long n) {
  if (n < 1) throw std::invalid_argument("largest_prime_factor needs n >= 1");
  long best = 1;
  for (long p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      best = p;
      n /= p;
    }
  }
  return n > 1 ? n : best;
}

namespace {

bool killed_by(const CurvePoint& p, long n) { return scalar_mul(n, p).is_infinity(); }

}  // namespace

std::vector<PredictedPoint> predicted_ar_set(const TorsionGroup& rational, const TorsionGroup& quadratic,
                                             const std::optional<CurvePoint>& mu3) {
  const std::int64_t d = quadratic.field;
  std::map<CurvePoint, std::optional<Decomposition>> out;
  std::vector<CurvePoint> r_part;
  for (const auto& p : rational.all_points) {
    CurvePoint r = p.in_field(d);
    out.emplace(r, std::nullopt);
    if (killed_by(r, 9)) r_part.push_back(r);
  }
  if (mu3) {
    std::vector<CurvePoint> s_part;
    for (const auto& s : quadratic.all_points)
      if (killed_by(s, 16)) s_part.push_back(s);
    for (const CurvePoint& q : {*mu3, -*mu3}) {
      for (const auto& r : r_part) {
        for (const auto& s : s_part) {
          CurvePoint sum = q + r + s;
          out.emplace(sum, Decomposition{q, r, s, sum});
        }
      }
    }
  }
  std::vector<PredictedPoint> v;
  v.reserve(out.size());
  for (auto& [p, dec] : out) v.push_back({p, std::move(dec)});
  return v;
}

std::vector<PredictedPoint> predicted_ar_set(const Curve& e) {
  if (!is_semistable(e).semistable) throw not_semistable("predicted set requires a semistable curve: " + e.str());
  const std::int64_t d = -3;
  return predicted_ar_set(rational_torsion(e, d), quadratic_torsion(e, d), mu3_generator(e));
}

std::vector<std::pair<CurvePoint, ARVerdict>> actual_ar_set(const TorsionGroup& quadratic) {
  std::vector<std::pair<CurvePoint, ARVerdict>> out;
  for (const auto& p : quadratic.all_points) {
    ARVerdict v = is_almost_rational(p);
    if (v.almost_rational) out.emplace_back(p, v);
  }
  return out;
}

std::vector<std::pair<CurvePoint, ARVerdict>> actual_ar_set(const Curve& e) {
  return actual_ar_set(quadratic_torsion(e, -3));
}

ClassificationReport classify(const Curve& e, const std::string& label) {
  const std::int64_t d = -3;
  ClassificationReport rep;
  rep.label = label;
  rep.coefficients = e.coeffs();
  rep.minimal_model = e.minimal_coeffs();
  rep.semistable = is_semistable(e).semistable;
  rep.bad_primes = e.bad_primes();
  TorsionGroup rat = rational_torsion(e, d);
  rep.rational_torsion = rat.structure;
  rep.search_field_note = "almost rational points searched in E(Q(sqrt -3))_tors only";
  if (!rep.semistable) return rep;

  TorsionGroup quad = quadratic_torsion(e, d);
  rep.quadratic_torsion = quad.structure;
  rep.mu3_generator = mu3_generator(e);
  rep.mu3_present = rep.mu3_generator.has_value();

  std::vector<PredictedPoint> predicted = predicted_ar_set(rat, quad, rep.mu3_generator);
  auto actual = actual_ar_set(quad);

  std::map<CurvePoint, const PredictedPoint*> pred_index;
  for (const auto& pp : predicted) pred_index.emplace(pp.point, &pp);
  std::set<CurvePoint> actual_index;
  for (const auto& [p, v] : actual) actual_index.insert(p);

  for (const auto& pp : predicted) {
    if (!quad.contains(pp.point)) rep.violations.push_back("predicted point outside the torsion group: " + pp.point.str());
    if (!actual_index.count(pp.point)) rep.predicted_only.push_back(pp.point);
    if (!pred_index.count(conjugate_point(pp.point)))
      rep.violations.push_back("predicted set not closed under conjugation at " + pp.point.str());
    if (pp.decomposition && exact_order(pp.decomposition->s, 16) == 16L) rep.order16_s_found = true;
  }
  for (const auto& [p, v] : actual) {
    if (!pred_index.count(p)) rep.actual_only.push_back(p);
    long order = exact_order(p, quad.structure.order()).value();
    auto it = pred_index.find(p);
    std::optional<Decomposition> dec;
    if (it != pred_index.end()) dec = it->second->decomposition;
    rep.ar_points.push_back({p, order, v, dec});
    rep.largest_prime_in_orders = std::max(rep.largest_prime_in_orders, largest_prime_factor(order));
    if (almost_rational_by_two_torsion(p) != v.almost_rational)
      rep.violations.push_back("pair scan and two-torsion criterion disagree at " + p.str());
    if (dec && dec->q && exact_order(dec->s, 2).has_value()) {
      CurvePoint lhs = scalar_mul(2, conjugate_point(p)) - scalar_mul(2, p);
      if (!(lhs == -*dec->q)) rep.violations.push_back("2 sigma P - 2P != -Q at " + p.str());
    }
  }
  rep.predicted_equals_actual = rep.predicted_only.empty() && rep.actual_only.empty();
  if (rep.largest_prime_in_orders > 7)
    rep.violations.push_back("almost rational order with prime factor " + std::to_string(rep.largest_prime_in_orders));
  // Rational points of order 5 or 7 are allowed; the sums Q + R + S have orders dividing 144.
  for (const auto& a : rep.ar_points)
    if (!a.point.is_rational() && largest_prime_factor(a.order) > 3)
      rep.violations.push_back("nonrational almost rational point of order " + std::to_string(a.order) + ": " +
                               a.point.str());
  return rep;
}

}  // namespace arpt
