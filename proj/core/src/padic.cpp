#include "arpt/padic.hpp"

#include <algorithm>
#include <set>

namespace arpt {

namespace {

std::int64_t mod_small(const Int& v, std::int64_t q) {
  return static_cast<std::int64_t>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(q)));
}

std::vector<std::int64_t> reduce_small(const std::vector<Int>& f, std::int64_t q) {
  std::vector<std::int64_t> out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(mod_small(c, q));
  return out;
}

std::int64_t eval_small(const std::vector<std::int64_t>& f, std::int64_t x, std::int64_t q) {
  __int128 acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % q;
  return static_cast<std::int64_t>(acc);
}

std::vector<Int> derivative_int(const std::vector<Int>& f) {
  std::vector<Int> d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  return d;
}

Int pow_int(std::int64_t q, int k) {
  Int m;
  mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(k));
  return m;
}

// Newton iteration from a simple root mod q to a root mod q^k.
Int newton_lift(const std::vector<Int>& f, const std::vector<Int>& df, std::int64_t root, std::int64_t q, int k) {
  Int r = root;
  int prec = 1;
  while (prec < k) {
    prec = std::min(2 * prec, k);
    Int m = pow_int(q, prec);
    Int fv = eval_mod(f, r, m);
    Int dv = eval_mod(df, r, m);
    r = mod_floor(r - fv * inverse_mod(dv, m), m);
  }
  return r;
}

bool is_small_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

// Drops factors of x; returns their count.
int strip_zero_roots(std::vector<Int>& f) {
  int k = 0;
  while (!f.empty() && f.front() == 0) {
    f.erase(f.begin());
    ++k;
  }
  return k;
}

int precision_for(std::int64_t q, const Int& need) {
  int k = 1;
  Int m = q;
  while (m <= need) {
    m *= q;
    ++k;
  }
  return k;
}

}  // namespace

PadicContext::PadicContext(std::int64_t prime, int precision)
    : prime_(prime), precision_(precision), modulus_(pow_int(prime, precision)) {
  if (!is_small_prime(prime)) throw std::invalid_argument("p-adic context needs a prime");
  if (precision < 1) throw std::invalid_argument("p-adic precision must be at least 1");
}

PadicContext::PadicContext(std::int64_t prime, int precision, std::int64_t d) : PadicContext(prime, precision) {
  auto s = sqrt_mod_small(((d % prime) + prime) % prime, prime);
  if (!s || *s == 0) throw std::invalid_argument("prime does not split Q(sqrt " + std::to_string(d) + ")");
  std::vector<Int> f = {Int(-d), Int(0), Int(1)};
  sqrt_d_ = newton_lift(f, derivative_int(f), *s, prime, precision);
}

std::optional<std::int64_t> sqrt_mod_small(std::int64_t a, std::int64_t q) {
  a = ((a % q) + q) % q;
  for (std::int64_t x = 0; x < q; ++x)
    if ((static_cast<__int128>(x) * x) % q == a) return x;
  return std::nullopt;
}

HenselResult hensel_roots(const PolyQ& f, const PadicContext& ctx) {
  if (f.is_zero()) throw std::invalid_argument("hensel_roots of the zero polynomial");
  auto prim = content_split(f).primitive;
  const std::int64_t q = ctx.prime();
  if (mod_small(prim.back(), q) == 0)
    throw std::invalid_argument("auxiliary prime divides the leading coefficient");
  auto df = derivative_int(prim);
  auto fs = reduce_small(prim, q);
  auto dfs = reduce_small(df, q);
  HenselResult out;
  for (std::int64_t x = 0; x < q; ++x) {
    if (eval_small(fs, x, q) != 0) continue;
    if (eval_small(dfs, x, q) == 0) {
      out.unliftable.push_back(x);
      continue;
    }
    out.roots.push_back(newton_lift(prim, df, x, q, ctx.precision()));
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

std::optional<Rat> rational_reconstruct(const Int& residue, const Int& modulus, const Int& bound) {
  if (residue < 0 || residue >= modulus) throw std::invalid_argument("residue out of range");
  if (bound < 1 || 2 * bound * bound > modulus)
    throw std::invalid_argument("reconstruction bound too large for the modulus");
  Int r0 = modulus, r1 = residue, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || ::abs(t1) > bound || gcd(r1, t1) != 1) return std::nullopt;
  Int n = t1 < 0 ? Int(-r1) : r1;
  Int m = ::abs(t1);
  if (mod_floor(n - m * residue, modulus) != 0) return std::nullopt;
  return Rat(n, m);
}

std::int64_t choose_root_prime(const std::vector<Int>& prim, std::int64_t d) {
  auto df = derivative_int(prim);
  for (std::int64_t q = 53;; q += 2) {
    if (!is_small_prime(q)) continue;
    if (d != 0) {
      if (d % q == 0) continue;
      auto s = sqrt_mod_small(d, q);
      if (!s) continue;
    }
    if (mod_small(prim.back(), q) == 0) continue;
    auto fs = reduce_small(prim, q);
    auto dfs = reduce_small(df, q);
    bool ok = true;
    for (std::int64_t x = 0; x < q && ok; ++x)
      if (eval_small(fs, x, q) == 0 && eval_small(dfs, x, q) == 0) ok = false;
    if (ok) return q;
  }
}

std::vector<Rat> rational_roots(const PolyQ& f) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  auto prim = content_split(f).primitive;
  std::vector<Rat> out;
  if (strip_zero_roots(prim) > 0) out.emplace_back(0);
  if (prim.size() <= 1) return out;
  // Squarefree part keeps every root simple in characteristic zero.
  PolyQ g(std::vector<Rat>(prim.begin(), prim.end()));
  PolyQ sqf = div_exact(g, gcd(g, g.derivative()));
  prim = content_split(sqf).primitive;
  Int bound = std::max(::abs(prim.front()), ::abs(prim.back()));
  std::int64_t q = choose_root_prime(prim, 0);
  PadicContext ctx(q, precision_for(q, Int(2 * bound * bound)));
  PolyQ h(std::vector<Rat>(prim.begin(), prim.end()));
  for (const auto& r : hensel_roots(h, ctx).roots) {
    auto cand = rational_reconstruct(r, ctx.modulus(), bound);
    if (cand && h(*cand).is_zero()) out.push_back(*cand);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<QuadFieldElement> field_roots(const PolyQ& f, std::int64_t d) {
  std::vector<QuadFieldElement> out;
  for (const auto& r : rational_roots(f)) out.emplace_back(d, r);
  auto prim = content_split(f).primitive;
  strip_zero_roots(prim);
  if (prim.size() <= 2) return out;
  {
    PolyQ g(std::vector<Rat>(prim.begin(), prim.end()));
    prim = content_split(div_exact(g, gcd(g, g.derivative()))).primitive;
    if (prim.size() <= 2) return out;
  }

  const Int& lc = prim.back();
  Int bound = 2 * ::abs(lc) * l2_norm_ceil(prim);
  std::int64_t q = choose_root_prime(prim, d);
  PadicContext ctx(q, precision_for(q, Int(2 * bound + 1)), d);
  PolyQ h(std::vector<Rat>(prim.begin(), prim.end()));
  auto roots = hensel_roots(h, ctx).roots;
  const Int& m = ctx.modulus();

  std::set<std::pair<Rat, Rat>> seen;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      // Candidate quadratic factor x^2 - s x + p, scaled by lc to be integral.
      Int s = symmetric_mod(lc * (roots[i] + roots[j]), m);
      Int p = symmetric_mod(lc * roots[i] * roots[j], m);
      if (::abs(s) > bound || ::abs(p) > bound) continue;
      Rat sr(s, lc), pr(p, lc);
      Rat disc = sr * sr - Rat(4) * pr;
      Rat b;
      if (disc.is_zero() || !rational_sqrt(disc / Rat(4 * d), b)) continue;
      Rat a = sr / Rat(2);
      if (!seen.insert({a, b}).second) continue;
      QuadFieldElement x(d, a, b);
      if (!h(x).is_zero()) continue;
      out.push_back(x);
      out.push_back(x.conjugate());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace arpt
