#include "arpt/factor.hpp"

#include "arpt/padic.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace arpt {

namespace modp {

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t q) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % q);
}

std::int64_t inv(std::int64_t a, std::int64_t q) { return to_i64(inverse_mod(Int(a), Int(q))); }

Poly make_monic(const Poly& a, std::int64_t q) {
  if (a.empty()) return a;
  std::int64_t c = inv(a.back(), q);
  Poly r = a;
  for (auto& v : r) v = mulmod(v, c, q);
  return r;
}

Poly scale(const Poly& a, std::int64_t c, std::int64_t q) {
  Poly r = a;
  for (auto& v : r) v = mulmod(v, c, q);
  trim(r);
  return r;
}

}  // namespace

Poly add(const Poly& a, const Poly& b, std::int64_t q) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % q;
  trim(r);
  return r;
}

// s*a + t*b = gcd (monic).
Poly ext_gcd(const Poly& a, const Poly& b, std::int64_t q, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    Poly quot, rem;
    divmod(r0, r1, q, quot, rem);
    Poly s2 = sub(s0, mul(quot, s1, q), q);
    Poly t2 = sub(t0, mul(quot, t1, q), q);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  std::int64_t c = inv(r0.back(), q);
  s = scale(s0, c, q);
  t = scale(t0, c, q);
  return scale(r0, c, q);
}

Poly reduce(const std::vector<Int>& f, std::int64_t q) {
  Poly r;
  r.reserve(f.size());
  for (const auto& c : f) r.push_back(static_cast<std::int64_t>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(q))));
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::int64_t q) {
  if (a.empty() || b.empty()) return {};
  std::vector<__int128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + static_cast<__int128>(a[i]) * b[j]) % q;
  Poly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::int64_t>(acc[i]);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::int64_t q) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % q + q) % q;
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, std::int64_t q, Poly& quot, Poly& rem) {
  if (b.empty()) throw arithmetic_error("polynomial division by zero mod q");
  rem = a;
  trim(rem);
  quot.clear();
  if (rem.size() < b.size()) return;
  quot.assign(rem.size() - b.size() + 1, 0);
  std::int64_t il = inv(b.back(), q);
  for (std::size_t i = rem.size(); i-- >= b.size();) {
    std::int64_t c = mulmod(rem[i], il, q);
    if (c == 0) continue;
    std::size_t shift = i + 1 - b.size();
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] = ((rem[shift + j] - mulmod(c, b[j], q)) % q + q) % q;
  }
  trim(rem);
  trim(quot);
}

Poly monic_gcd(Poly a, Poly b, std::int64_t q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly quot, rem;
    divmod(a, b, q, quot, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  return make_monic(a, q);
}

Poly powmod(const Poly& base, const Int& exp, const Poly& mod, std::int64_t q) {
  Poly result = {1}, quot, b;
  divmod(base, mod, q, quot, b);
  std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    divmod(mul(result, result, q), mod, q, quot, result);
    if (mpz_tstbit(exp.get_mpz_t(), i)) divmod(mul(result, b, q), mod, q, quot, result);
  }
  if (exp == 0) divmod(result, mod, q, quot, result);
  return result;
}

std::vector<Poly> factor_squarefree(const Poly& f_in, std::int64_t q) {
  if (q == 2) throw std::invalid_argument("factorization needs an odd prime");
  Poly f = make_monic(f_in, q);
  std::vector<std::pair<Poly, int>> by_degree;
  const Poly x = {0, 1};
  Poly h = x, quot;
  for (int d = 1; static_cast<int>(f.size()) - 1 >= 2 * d; ++d) {
    h = powmod(h, Int(q), f, q);
    Poly g = monic_gcd(sub(h, x, q), f, q);
    if (g.size() > 1) {
      by_degree.emplace_back(g, d);
      Poly rem;
      divmod(f, g, q, quot, rem);
      f = quot;
      divmod(h, f, q, quot, rem);
      h = rem;
    }
  }
  if (f.size() > 1) by_degree.emplace_back(f, static_cast<int>(f.size()) - 1);

  std::mt19937_64 rng(0x5eed);
  std::vector<Poly> out;
  std::function<void(const Poly&, int)> split = [&](const Poly& g, int d) {
    int n = static_cast<int>(g.size()) - 1;
    if (n == d) {
      out.push_back(g);
      return;
    }
    Int e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::int64_t> dist(0, q - 1);
    for (;;) {
      Poly a(static_cast<std::size_t>(n));
      for (auto& v : a) v = dist(rng);
      trim(a);
      if (a.size() < 2) continue;
      Poly b = sub(powmod(a, e, g, q), Poly{1}, q);
      Poly c = monic_gcd(b, g, q);
      int dc = static_cast<int>(c.size()) - 1;
      if (dc > 0 && dc < n) {
        Poly other, rem;
        divmod(g, c, q, other, rem);
        split(c, d);
        split(make_monic(other, q), d);
        return;
      }
    }
  };
  for (auto& [g, d] : by_degree) split(g, d);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace modp

namespace {

using IntPoly = std::vector<Int>;

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly mul(const IntPoly& a, const IntPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& v : r) v = mod_floor(v, m);
  trim(r);
  return r;
}

IntPoly lift_small(const modp::Poly& a) { return IntPoly(a.begin(), a.end()); }

IntPoly monic_mod(const IntPoly& a, const Int& m) {
  Int c = inverse_mod(a.back(), m);
  IntPoly r = a;
  for (auto& v : r) v = mod_floor(v * c, m);
  return r;
}

// f = g * h mod q^k from f = g0 * h0 mod q, g0 monic.
void lift_pair(const IntPoly& f, const modp::Poly& g0, const modp::Poly& h0, std::int64_t q, int k, IntPoly& g,
               IntPoly& h) {
  Int mk;
  mpz_ui_pow_ui(mk.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(k));
  modp::Poly s, t;
  if (modp::ext_gcd(g0, h0, q, s, t).size() != 1) throw arithmetic_error("Hensel lifting needs coprime factors");
  g = lift_small(g0);
  h = lift_small(h0);
  Int qj = q;
  for (int j = 1; j < k; ++j) {
    IntPoly gh = mul(g, h, mk);
    IntPoly e(std::max(f.size(), gh.size()), Int(0));
    for (std::size_t i = 0; i < f.size(); ++i) e[i] += f[i];
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    IntPoly e_div(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      Int r = mod_floor(e[i], mk);
      if (!mpz_divisible_p(r.get_mpz_t(), qj.get_mpz_t())) throw arithmetic_error("Hensel lifting lost congruence");
      e_div[i] = r / qj;
    }
    modp::Poly es = modp::reduce(e_div, q);
    modp::Poly te = modp::mul(t, es, q), quot, rem;
    modp::divmod(te, g0, q, quot, rem);
    modp::Poly dh = modp::add(modp::mul(s, es, q), modp::mul(quot, h0, q), q);
    if (g.size() < rem.size()) g.resize(rem.size(), Int(0));
    for (std::size_t i = 0; i < rem.size(); ++i) g[i] = mod_floor(g[i] + qj * rem[i], mk);
    if (h.size() < dh.size()) h.resize(dh.size(), Int(0));
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] = mod_floor(h[i] + qj * dh[i], mk);
    trim(g);
    trim(h);
    qj *= q;
  }
}

void lift_all(const IntPoly& f, const std::vector<modp::Poly>& factors, std::size_t lo, std::size_t hi, std::int64_t q,
              int k, const Int& mk, std::vector<IntPoly>& out) {
  if (hi - lo == 1) {
    out[lo] = monic_mod(f, mk);
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  modp::Poly a = {1}, b = modp::reduce({f.back()}, q);
  for (std::size_t i = lo; i < mid; ++i) a = modp::mul(a, factors[i], q);
  for (std::size_t i = mid; i < hi; ++i) b = modp::mul(b, factors[i], q);
  IntPoly ga, hb;
  lift_pair(f, a, b, q, k, ga, hb);
  lift_all(ga, factors, lo, mid, q, k, mk, out);
  lift_all(hb, factors, mid, hi, q, k, mk, out);
}

std::int64_t choose_factor_prime(const IntPoly& f) {
  for (std::int64_t q = 53;; q += 2) {
    bool prime = true;
    for (std::int64_t p = 3; p * p <= q; p += 2)
      if (q % p == 0) prime = false;
    if (!prime) continue;
    modp::Poly fq = modp::reduce(f, q);
    if (fq.size() != f.size()) continue;
    modp::Poly df;
    for (std::size_t i = 1; i < fq.size(); ++i)
      df.push_back(static_cast<std::int64_t>((static_cast<__int128>(fq[i]) * static_cast<std::int64_t>(i)) % q));
    while (!df.empty() && df.back() == 0) df.pop_back();
    if (modp::monic_gcd(fq, df, q).size() == 1) return q;
  }
}

}  // namespace

std::vector<IntPoly> hensel_lift_factors(const IntPoly& f, const std::vector<modp::Poly>& factors, std::int64_t q,
                                         int k) {
  Int mk;
  mpz_ui_pow_ui(mk.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(k));
  std::vector<IntPoly> out(factors.size());
  if (factors.empty()) return out;
  IntPoly fm = f;
  for (auto& v : fm) v = mod_floor(v, mk);
  lift_all(fm, factors, 0, factors.size(), q, k, mk, out);
  return out;
}

std::vector<PolyQ> rational_factors_of_degree(const PolyQ& f, int degree) {
  if (f.is_zero()) throw std::invalid_argument("factors of the zero polynomial");
  if (degree < 1 || degree > f.degree()) return {};
  IntPoly prim = content_split(f).primitive;
  std::int64_t q = choose_factor_prime(prim);
  auto factors = modp::factor_squarefree(modp::reduce(prim, q), q);

  const Int& lc = prim.back();
  Int binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(degree), static_cast<unsigned long>(degree / 2));
  Int bound = ::abs(lc) * binom * l2_norm_ceil(prim);
  int k = 1;
  Int mk = q;
  while (mk <= 2 * bound) {
    mk *= q;
    ++k;
  }
  auto lifted = hensel_lift_factors(prim, factors, q, k);

  PolyQ fq(std::vector<Rat>(prim.begin(), prim.end()));
  std::vector<PolyQ> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, int)> search = [&](std::size_t start, int remaining) {
    if (remaining == 0) {
      IntPoly prod = {lc};
      for (auto i : chosen) prod = mul(prod, lifted[i], mk);
      std::vector<Rat> coeffs;
      for (const auto& c : prod) {
        Int v = symmetric_mod(c, mk);
        if (::abs(v) > bound) return;
        coeffs.emplace_back(v);
      }
      PolyQ cand = PolyQ(std::move(coeffs)).monic();
      if (cand.degree() == degree && divmod(fq, cand).second.is_zero()) out.push_back(cand);
      return;
    }
    for (std::size_t i = start; i < lifted.size(); ++i) {
      int d = static_cast<int>(factors[i].size()) - 1;
      if (d > remaining) continue;
      chosen.push_back(i);
      search(i + 1, remaining - d);
      chosen.pop_back();
    }
  };
  search(0, degree);
  return out;
}

}  // namespace arpt
