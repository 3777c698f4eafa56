#include "arpt/curve.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace arpt {

std::string to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::good: return "good";
    case ReductionKind::multiplicative_split: return "multiplicative_split";
    case ReductionKind::multiplicative_nonsplit: return "multiplicative_nonsplit";
    case ReductionKind::additive: return "additive";
  }
  return "unknown";
}

Isomorphism Isomorphism::then(const Isomorphism& n) const {
  return {u * n.u, r + u * u * n.r, s + u * n.s, t + u.pow(3) * n.t + s * u * u * n.r};
}

Coefficients transform(const Coefficients& a, const Isomorphism& iso) {
  const auto& [a1, a2, a3, a4, a6] = a;
  const Rat &u = iso.u, &r = iso.r, &s = iso.s, &t = iso.t;
  Rat ui = u.inverse();
  return {(a1 + Rat(2) * s) * ui,
          (a2 - s * a1 + Rat(3) * r - s * s) * ui.pow(2),
          (a3 + r * a1 + Rat(2) * t) * ui.pow(3),
          (a4 - s * a3 + Rat(2) * r * a2 - (t + r * s) * a1 + Rat(3) * r * r - Rat(2) * s * t) * ui.pow(4),
          (a6 + r * a4 + r * r * a2 + r.pow(3) - t * a3 - t * t - r * t * a1) * ui.pow(6)};
}

namespace {

struct Invariants {
  Rat b2, b4, b6, b8, c4, c6, disc;
};

Invariants invariants(const Coefficients& a) {
  const auto& [a1, a2, a3, a4, a6] = a;
  Invariants v;
  v.b2 = a1 * a1 + Rat(4) * a2;
  v.b4 = Rat(2) * a4 + a1 * a3;
  v.b6 = a3 * a3 + Rat(4) * a6;
  v.b8 = a1 * a1 * a6 + Rat(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  v.c4 = v.b2 * v.b2 - Rat(24) * v.b4;
  v.c6 = -v.b2.pow(3) + Rat(36) * v.b2 * v.b4 - Rat(216) * v.b6;
  v.disc = -v.b2 * v.b2 * v.b8 - Rat(8) * v.b4.pow(3) - Rat(27) * v.b6 * v.b6 + Rat(9) * v.b2 * v.b4 * v.b6;
  return v;
}

bool all_integral(const Coefficients& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& c) { return c.is_integer(); });
}

// Scaling x -> x/m^2, y -> y/m^3 multiplies a_i by m^i.
Isomorphism integral_scaling(const Coefficients& a) {
  static const int weight[] = {1, 2, 3, 4, 6};
  std::map<Int, int> need;
  for (int i = 0; i < 5; ++i) {
    if (a[i].is_integer()) continue;
    for (auto& [p, e] : factor(a[i].den())) {
      int k = (e + weight[i] - 1) / weight[i];
      need[p] = std::max(need[p], k);
    }
  }
  Int m = 1;
  for (auto& [p, k] : need) {
    Int pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
    m *= pk;
  }
  return {Rat(Int(1), m), Rat(0), Rat(0), Rat(0)};
}

// Solves c*z = rhs (mod m) for the unique z in [0, m) when gcd(c, m) = 1.
Int solve_unit(const Int& c, const Int& rhs, const Int& m) { return mod_floor(rhs * inverse_mod(c, m), m); }

// One admissible transformation with u = p keeping the model integral, if any.
std::optional<Isomorphism> reduce_once(const Coefficients& a, const Int& p) {
  Int p2 = p * p, p3 = p2 * p;
  Int a1 = a[0].num(), a2 = a[1].num(), a3 = a[2].num();
  std::vector<Int> s_cands, r_cands, t_cands;
  if (p == 2) s_cands = {0, 1};
  else s_cands = {solve_unit(Int(2), Int(-a1), p)};
  for (const Int& s : s_cands) {
    if (mod_floor(a1 + 2 * s, p) != 0) continue;
    r_cands.clear();
    if (p == 3) {
      for (int r = 0; r < 9; ++r) r_cands.emplace_back(r);
    } else {
      r_cands = {solve_unit(Int(3), Int(s * s + s * a1 - a2), p2)};
    }
    for (const Int& r : r_cands) {
      if (mod_floor(a2 - s * a1 + 3 * r - s * s, p2) != 0) continue;
      t_cands.clear();
      if (p == 2) {
        for (int t = 0; t < 8; ++t) t_cands.emplace_back(t);
      } else {
        t_cands = {solve_unit(Int(2), Int(-(a3 + r * a1)), p3)};
      }
      for (const Int& t : t_cands) {
        Isomorphism iso{Rat(p), Rat(r), Rat(s), Rat(t)};
        if (all_integral(transform(a, iso))) return iso;
      }
    }
  }
  return std::nullopt;
}

ReductionKind classify_prime(const std::array<Int, 5>& a, const Int& min_disc, const Int& c4, const Int& c6,
                             const Int& p) {
  if (!mpz_divisible_p(min_disc.get_mpz_t(), p.get_mpz_t())) return ReductionKind::good;
  if (mpz_divisible_p(c4.get_mpz_t(), p.get_mpz_t())) return ReductionKind::additive;
  bool split;
  if (p == 2) {
    // Locate the node mod 2 and test whether the tangent quadratic
    // T^2 + a1 T - a2' splits, with a2' the translated coefficient.
    auto m2 = [](const Int& v) { return static_cast<int>(mpz_fdiv_ui(v.get_mpz_t(), 2)); };
    int A1 = m2(a[0]), A2 = m2(a[1]), A3 = m2(a[2]), A4 = m2(a[3]), A6 = m2(a[4]);
    split = false;
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        int f = (y * y + A1 * x * y + A3 * y + x * x * x + A2 * x * x + A4 * x + A6) & 1;
        int fx = (A1 * y + x * x + A4) & 1;
        int fy = (A1 * x + A3) & 1;
        if (f == 0 && fx == 0 && fy == 0) split = ((A2 + 3 * x) & 1) == 0;
      }
    }
  } else {
    Int neg = -c6;
    split = mpz_kronecker(neg.get_mpz_t(), p.get_mpz_t()) == 1;
  }
  return split ? ReductionKind::multiplicative_split : ReductionKind::multiplicative_nonsplit;
}

}  // namespace

Curve curve_from_coeffs(const Coefficients& a) {
  auto data = std::make_shared<Curve::Data>();
  data->a = a;
  Invariants inv = invariants(a);
  if (inv.disc.is_zero()) throw singular_curve("singular Weierstrass equation (discriminant 0)");
  data->b2 = inv.b2;
  data->b4 = inv.b4;
  data->b6 = inv.b6;
  data->b8 = inv.b8;
  data->c4 = inv.c4;
  data->c6 = inv.c6;
  data->disc = inv.disc;

  Isomorphism iso = integral_scaling(a);
  Coefficients cur = transform(a, iso);
  Rat disc = invariants(cur).disc;
  for (const Int& p : prime_divisors(disc.num())) {
    while (valuation(disc, p) >= 12) {
      auto step = reduce_once(cur, p);
      if (!step) break;
      iso = iso.then(*step);
      cur = transform(cur, *step);
      disc = invariants(cur).disc;
    }
  }
  data->to_min = iso;
  for (int i = 0; i < 5; ++i) data->min_a[i] = cur[i].num();
  Invariants mi = invariants(cur);
  data->min_disc = mi.disc.num();
  data->min_c4 = mi.c4.num();
  data->min_c6 = mi.c6.num();
  for (const Int& p : prime_divisors(data->min_disc)) {
    data->bad.push_back({p, classify_prime(data->min_a, data->min_disc, data->min_c4, data->min_c6, p),
                         valuation(data->min_disc, p)});
  }
  return Curve(std::move(data));
}

Curve curve_from_coeffs(long a1, long a2, long a3, long a4, long a6) {
  return curve_from_coeffs(Coefficients{Rat(a1), Rat(a2), Rat(a3), Rat(a4), Rat(a6)});
}

ReductionKind Curve::reduction_at(const Int& p) const {
  for (const auto& b : bad_primes())
    if (b.prime == p) return b.kind;
  return ReductionKind::good;
}

std::string Curve::str() const {
  std::ostringstream os;
  os << "[" << a1() << "," << a2() << "," << a3() << "," << a4() << "," << a6() << "]";
  return os.str();
}

SemistabilityReport is_semistable(const Curve& e) {
  SemistabilityReport rep{true, e.bad_primes()};
  for (const auto& b : rep.evidence)
    if (b.kind == ReductionKind::additive) rep.semistable = false;
  return rep;
}

bool peu_ramifie_at(const Curve& e, const Int& p) {
  ReductionKind k = e.reduction_at(p);
  if (k == ReductionKind::good) return true;
  if (k == ReductionKind::additive)
    throw std::invalid_argument("finite-at-p criterion needs semistable reduction at " + p.get_str());
  int v = valuation(e.minimal_discriminant(), p);
  return mpz_divisible_p(Int(v).get_mpz_t(), p.get_mpz_t()) != 0;
}

std::int64_t count_points_mod(const Curve& e, std::int64_t q) {
  if (q < 3 || q > 10000 || !is_prime(Int(q))) throw std::invalid_argument("point counting needs a prime 3 <= q <= 10^4");
  if (mpz_divisible_ui_p(e.minimal_discriminant().get_mpz_t(), static_cast<unsigned long>(q)))
    throw std::invalid_argument("bad reduction at " + std::to_string(q));
  const auto& a = e.minimal_coeffs();
  auto m = [q](const Int& v) { return static_cast<std::int64_t>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(q))); };
  std::int64_t a1 = m(a[0]), a2 = m(a[1]), a3 = m(a[2]), a4 = m(a[3]), a6 = m(a[4]);
  std::int64_t b2 = (a1 * a1 + 4 * a2) % q, b4 = (2 * a4 + a1 * a3) % q, b6 = (a3 * a3 + 4 * a6) % q;
  std::vector<signed char> chi(static_cast<std::size_t>(q), -1);
  chi[0] = 0;
  for (std::int64_t y = 1; y < q; ++y) chi[static_cast<std::size_t>(y * y % q)] = 1;
  std::int64_t count = 1;
  for (std::int64_t x = 0; x < q; ++x) {
    std::int64_t rhs = (((4 * x + b2) % q * x + 2 * b4) % q * x + b6) % q;
    count += 1 + chi[static_cast<std::size_t>(rhs)];
  }
  std::int64_t trace = q + 1 - count;
  if (trace * trace > 4 * q) throw std::logic_error("Hasse bound violated at q = " + std::to_string(q));
  return count;
}

Int count_points_quadratic_ext(const Curve& e, std::int64_t q) {
  Int aq = Int(q + 1 - count_points_mod(e, q));
  Int qq = Int(q);
  return qq * qq + 1 - (aq * aq - 2 * qq);
}

}  // namespace arpt
