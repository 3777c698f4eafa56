#include "arpt/report.hpp"

#include "report_json.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace arpt {

using nlohmann::json;

ReductionKind reduction_kind_from_string(const std::string& s) {
  for (ReductionKind k : {ReductionKind::good, ReductionKind::multiplicative_split,
                          ReductionKind::multiplicative_nonsplit, ReductionKind::additive})
    if (to_string(k) == s) return k;
  throw report_parse_error("unknown reduction kind '" + s + "'");
}

namespace detail {
namespace {

json int_json(const Int& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

Int int_from(const json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw report_parse_error("bad integer '" + j.get<std::string>() + "'");
    return v;
  }
  throw report_parse_error("expected an integer, got " + j.dump());
}

json coord_json(const QuadFieldElement& c) {
  return json::array({int_json(c.a().num()), int_json(c.a().den()), int_json(c.b().num()), int_json(c.b().den())});
}

QuadFieldElement coord_from(const json& j, std::int64_t d) {
  if (!j.is_array() || j.size() != 4) throw report_parse_error("coordinate must be [a_num, a_den, b_num, b_den]");
  return QuadFieldElement(d, Rat(int_from(j[0]), int_from(j[1])), Rat(int_from(j[2]), int_from(j[3])));
}

json point_json(const CurvePoint& p) {
  if (p.is_infinity()) return "infinity";
  return {{"x", coord_json(p.x())}, {"y", coord_json(p.y())}, {"d", p.field()}};
}

CurvePoint point_from(const json& j, const Curve& e) {
  if (j.is_string()) {
    if (j.get<std::string>() != "infinity") throw report_parse_error("bad point " + j.dump());
    return CurvePoint::infinity(e, -3);
  }
  std::int64_t d = j.at("d").get<std::int64_t>();
  try {
    return CurvePoint::affine(e, coord_from(j.at("x"), d), coord_from(j.at("y"), d));
  } catch (const std::invalid_argument& ex) {
    throw report_parse_error(std::string("point not on curve: ") + ex.what());
  }
}

json group_json(const GroupStructure& g) { return {{"m1", g.m1}, {"m2", g.m2}, {"label", g.str()}}; }

GroupStructure group_from(const json& j) { return {j.at("m1").get<long>(), j.at("m2").get<long>()}; }

json points_json(const std::vector<CurvePoint>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(point_json(p));
  return a;
}

std::vector<CurvePoint> points_from(const json& j, const Curve& e) {
  std::vector<CurvePoint> v;
  for (const auto& x : j) v.push_back(point_from(x, e));
  return v;
}

GaloisElement galois_from(const std::string& s) {
  if (s == "id") return GaloisElement::identity;
  if (s == "sigma") return GaloisElement::sigma;
  throw report_parse_error("unknown Galois element '" + s + "'");
}

}  // namespace

json report_to_json(const ClassificationReport& r) {
  json j;
  j["label"] = r.label;
  json coeffs = json::array();
  for (const Rat& c : r.coefficients) coeffs.push_back(c.str());
  j["coefficients"] = coeffs;
  json minimal = json::array();
  for (const Int& c : r.minimal_model) minimal.push_back(int_json(c));
  j["minimal_model"] = minimal;
  j["semistable"] = r.semistable;
  json bad = json::array();
  for (const auto& b : r.bad_primes)
    bad.push_back({{"prime", int_json(b.prime)}, {"reduction", to_string(b.kind)}, {"disc_valuation", b.disc_valuation}});
  j["bad_primes"] = bad;
  j["rational_torsion"] = group_json(r.rational_torsion);
  j["quadratic_torsion"] = r.quadratic_torsion ? group_json(*r.quadratic_torsion) : json(nullptr);
  j["mu3_present"] = r.mu3_present;
  j["mu3_generator"] = r.mu3_generator ? point_json(*r.mu3_generator) : json(nullptr);
  json ar = json::array();
  for (const auto& a : r.ar_points) {
    json e{{"point", point_json(a.point)}, {"order", a.order}, {"almost_rational", a.verdict.almost_rational}};
    e["witness"] = a.verdict.witness
                       ? json::array({to_string(a.verdict.witness->first), to_string(a.verdict.witness->second)})
                       : json(nullptr);
    if (a.decomposition) {
      const auto& d = *a.decomposition;
      e["decomposition"] = {{"Q", d.q ? point_json(*d.q) : json(nullptr)},
                            {"R", point_json(d.r)},
                            {"S", point_json(d.s)},
                            {"sum", point_json(d.sum)}};
    } else {
      e["decomposition"] = nullptr;
    }
    ar.push_back(e);
  }
  j["ar_points"] = ar;
  j["predicted_equals_actual"] = r.predicted_equals_actual ? json(*r.predicted_equals_actual) : json(nullptr);
  j["largest_prime_in_orders"] = r.largest_prime_in_orders;
  j["order16_s_found"] = r.order16_s_found;
  j["mismatch"] = {{"predicted_only", points_json(r.predicted_only)}, {"actual_only", points_json(r.actual_only)}};
  j["violations"] = r.violations;
  j["search_field_note"] = r.search_field_note;
  return j;
}

ClassificationReport report_from_json(const json& j) {
  try {
    ClassificationReport r;
    r.label = j.at("label").get<std::string>();
    const json& coeffs = j.at("coefficients");
    if (!coeffs.is_array() || coeffs.size() != 5) throw report_parse_error("coefficients must have five entries");
    for (std::size_t i = 0; i < 5; ++i)
      r.coefficients[i] = coeffs[i].is_string() ? Rat::parse(coeffs[i].get<std::string>()) : Rat(int_from(coeffs[i]));
    const json& minimal = j.at("minimal_model");
    if (!minimal.is_array() || minimal.size() != 5) throw report_parse_error("minimal_model must have five entries");
    for (std::size_t i = 0; i < 5; ++i) r.minimal_model[i] = int_from(minimal[i]);
    Curve e = curve_from_coeffs(r.coefficients);
    r.semistable = j.at("semistable").get<bool>();
    for (const auto& b : j.at("bad_primes"))
      r.bad_primes.push_back({int_from(b.at("prime")), reduction_kind_from_string(b.at("reduction").get<std::string>()),
                              b.at("disc_valuation").get<int>()});
    r.rational_torsion = group_from(j.at("rational_torsion"));
    if (!j.at("quadratic_torsion").is_null()) r.quadratic_torsion = group_from(j.at("quadratic_torsion"));
    r.mu3_present = j.at("mu3_present").get<bool>();
    if (!j.at("mu3_generator").is_null()) r.mu3_generator = point_from(j.at("mu3_generator"), e);
    for (const auto& a : j.at("ar_points")) {
      ARPoint p{point_from(a.at("point"), e), a.at("order").get<long>(), {}, std::nullopt};
      p.verdict.almost_rational = a.at("almost_rational").get<bool>();
      if (!a.at("witness").is_null())
        p.verdict.witness = std::make_pair(galois_from(a.at("witness").at(0).get<std::string>()),
                                           galois_from(a.at("witness").at(1).get<std::string>()));
      const json& dj = a.at("decomposition");
      if (!dj.is_null()) {
        Decomposition d{std::nullopt, point_from(dj.at("R"), e), point_from(dj.at("S"), e), point_from(dj.at("sum"), e)};
        if (!dj.at("Q").is_null()) d.q = point_from(dj.at("Q"), e);
        p.decomposition = d;
      }
      r.ar_points.push_back(std::move(p));
    }
    if (!j.at("predicted_equals_actual").is_null()) r.predicted_equals_actual = j.at("predicted_equals_actual").get<bool>();
    r.largest_prime_in_orders = j.at("largest_prime_in_orders").get<long>();
    r.order16_s_found = j.at("order16_s_found").get<bool>();
    r.predicted_only = points_from(j.at("mismatch").at("predicted_only"), e);
    r.actual_only = points_from(j.at("mismatch").at("actual_only"), e);
    r.violations = j.at("violations").get<std::vector<std::string>>();
    r.search_field_note = j.at("search_field_note").get<std::string>();
    return r;
  } catch (const json::exception& ex) {
    throw report_parse_error(std::string("malformed report: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw report_parse_error(std::string("malformed report: ") + ex.what());
  }
}

}  // namespace detail

std::string emit_json(const ClassificationReport& report, int indent) {
  return detail::report_to_json(report).dump(indent);
}

ClassificationReport parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw report_parse_error(std::string("invalid JSON: ") + ex.what());
  }
  return detail::report_from_json(j);
}

std::string tsv_header() {
  return "label\tsemistable\trat_torsion\tquad_torsion\tmu3\tn_ar_points\tmax_ar_order\tconsistent";
}

std::string tsv_row(const ClassificationReport& r) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  const bool analysed = r.quadratic_torsion.has_value();
  long max_order = 0;
  for (const auto& a : r.ar_points) max_order = std::max(max_order, a.order);
  std::ostringstream os;
  os << (r.label.empty() ? "-" : r.label) << '\t' << flag(r.semistable) << '\t' << r.rational_torsion.str() << '\t';
  if (analysed) {
    os << r.quadratic_torsion->str() << '\t' << flag(r.mu3_present) << '\t' << r.ar_points.size() << '\t' << max_order;
  } else {
    os << "NA\tNA\tNA\tNA";
  }
  os << '\t' << flag(r.consistent());
  return os.str();
}

}  // namespace arpt
