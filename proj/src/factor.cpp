#include "galcomp/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "galcomp/error.hpp"

namespace galcomp::nf {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p, p < 2^31, constant term first, trimmed.

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 fp_pow(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 fp_inv(u64 a, u64 p) { return fp_pow(a, p - 2, p); }

FpPoly fp_sub(FpPoly a, const FpPoly& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  fp_trim(a);
  return a;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  fp_trim(out);
  return out;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, u64 p) {
  if (b.empty()) throw std::domain_error("F_p division by zero");
  if (a.size() < b.size()) return {{}, a};
  FpPoly rem = a;
  FpPoly quot(a.size() - b.size() + 1, 0);
  const u64 inv = fp_inv(b.back(), p);
  for (std::size_t d = a.size(); d-- >= b.size();) {
    u64 q = rem[d] * inv % p;
    if (!q) continue;
    std::size_t shift = d - (b.size() - 1);
    quot[shift] = q;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] = (rem[shift + j] + p - q * b[j] % p) % p;
  }
  rem.resize(b.size() - 1);
  fp_trim(rem);
  fp_trim(quot);
  return {quot, rem};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b, u64 p) { return fp_divmod(a, b, p).second; }

FpPoly fp_monic(FpPoly a, u64 p) {
  if (a.empty()) return a;
  u64 inv = fp_inv(a.back(), p);
  for (auto& x : a) x = x * inv % p;
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

/// (g, s, t) with s a + t b = g monic.
std::tuple<FpPoly, FpPoly, FpPoly> fp_xgcd(const FpPoly& a, const FpPoly& b, u64 p) {
  FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 inv = fp_inv(r0.back(), p);
  for (auto* v : {&r0, &s0, &t0}) {
    for (auto& x : *v) x = x * inv % p;
  }
  return {r0, s0, t0};
}

FpPoly fp_powmod(FpPoly base, mpz_class e, const FpPoly& m, u64 p) {
  FpPoly r{1};
  base = fp_mod(base, m, p);
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = fp_mod(fp_mul(r, base, p), m, p);
    base = fp_mod(fp_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

FpPoly fp_derivative(const FpPoly& a, u64 p) {
  if (a.size() <= 1) return {};
  FpPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * (i % p) % p;
  fp_trim(d);
  return d;
}

FpPoly reduce(const IntPoly& f, u64 p) {
  FpPoly out;
  out.reserve(f.coeffs().size());
  mpz_class pp = static_cast<unsigned long>(p);
  for (const auto& c : f.coeffs()) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
    out.push_back(r.get_ui());
  }
  fp_trim(out);
  return out;
}

/// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
/// monic squarefree polynomial over F_p with p odd.
std::vector<FpPoly> fp_factor_squarefree(const FpPoly& f, u64 p, std::mt19937_64& rng) {
  std::vector<std::pair<FpPoly, std::size_t>> by_degree;
  FpPoly rest = f;
  FpPoly x{0, 1};
  FpPoly h = x;
  const mpz_class pz = static_cast<unsigned long>(p);
  for (std::size_t d = 1; 2 * d <= rest.size() - 1; ++d) {
    h = fp_powmod(h, pz, rest, p);
    FpPoly g = fp_gcd(rest, fp_sub(h, x, p), p);
    if (g.size() > 1) {
      by_degree.emplace_back(g, d);
      rest = fp_divmod(rest, g, p).first;
      h = fp_mod(h, rest, p);
    }
  }
  if (rest.size() > 1) by_degree.emplace_back(rest, rest.size() - 1);

  std::vector<FpPoly> out;
  std::uniform_int_distribution<u64> coin(0, p - 1);
  for (auto& [g, d] : by_degree) {
    std::vector<FpPoly> pending{g};
    while (!pending.empty()) {
      FpPoly u = std::move(pending.back());
      pending.pop_back();
      if (u.size() - 1 == d) {
        out.push_back(fp_monic(u, p));
        continue;
      }
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, d);
      e = (e - 1) / 2;
      for (;;) {
        FpPoly a(u.size() - 1);
        for (auto& c : a) c = coin(rng);
        fp_trim(a);
        if (a.size() <= 1) continue;
        FpPoly b = fp_sub(fp_powmod(a, e, u, p), FpPoly{1}, p);
        FpPoly s = fp_gcd(u, b, p);
        if (s.size() > 1 && s.size() < u.size()) {
          pending.push_back(fp_divmod(u, s, p).first);
          pending.push_back(s);
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials over Z / m Z with m = p^k, stored as mpz in [0, m).

using ZPoly = std::vector<mpz_class>;

void z_trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

void z_reduce(ZPoly& a, const mpz_class& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  z_trim(a);
}

ZPoly z_add(ZPoly a, const ZPoly& b, const mpz_class& m) {
  if (b.size() > a.size()) a.resize(b.size(), mpz_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  z_reduce(a, m);
  return a;
}

ZPoly z_sub(ZPoly a, const ZPoly& b, const mpz_class& m) {
  if (b.size() > a.size()) a.resize(b.size(), mpz_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  z_reduce(a, m);
  return a;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  z_reduce(out, m);
  return out;
}

ZPoly z_scale(ZPoly a, const mpz_class& s, const mpz_class& m) {
  for (auto& c : a) c *= s;
  z_reduce(a, m);
  return a;
}

/// Division by b whose leading coefficient is a unit modulo m.
std::pair<ZPoly, ZPoly> z_divmod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.size() < b.size()) return {{}, a};
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error("z_divmod: leading coefficient not invertible");
  }
  ZPoly rem = a;
  ZPoly quot(a.size() - b.size() + 1, mpz_class(0));
  for (std::size_t d = a.size(); d-- >= b.size();) {
    mpz_class q = rem[d] * inv;
    mpz_fdiv_r(q.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t());
    if (sgn(q) == 0) continue;
    std::size_t shift = d - (b.size() - 1);
    quot[shift] = q;
    for (std::size_t j = 0; j < b.size(); ++j) {
      rem[shift + j] -= q * b[j];
      mpz_fdiv_r(rem[shift + j].get_mpz_t(), rem[shift + j].get_mpz_t(), m.get_mpz_t());
    }
  }
  rem.resize(b.size() - 1);
  z_trim(rem);
  z_trim(quot);
  return {quot, rem};
}

ZPoly to_z(const FpPoly& a) {
  ZPoly out;
  for (u64 c : a) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

ZPoly to_z(const IntPoly& a, const mpz_class& m) {
  ZPoly out = a.coeffs();
  z_reduce(out, m);
  return out;
}

/// One quadratic Hensel step from modulus m to m^2. On entry f = g h,
/// s g + t h = 1 modulo m, with h monic.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& m2) {
  ZPoly e = z_sub(f, z_mul(g, h, m2), m2);
  auto [q, r] = z_divmod(z_mul(s, e, m2), h, m2);
  ZPoly g1 = z_add(z_add(g, z_mul(t, e, m2), m2), z_mul(q, g, m2), m2);
  ZPoly h1 = z_add(h, r, m2);
  ZPoly b = z_sub(z_add(z_mul(s, g1, m2), z_mul(t, h1, m2), m2), ZPoly{mpz_class(1)}, m2);
  auto [c, d] = z_divmod(z_mul(s, b, m2), h1, m2);
  ZPoly s1 = z_sub(s, d, m2);
  ZPoly t1 = z_sub(z_sub(t, z_mul(t, b, m2), m2), z_mul(c, g1, m2), m2);
  g = std::move(g1);
  h = std::move(h1);
  s = std::move(s1);
  t = std::move(t1);
}

/// Lifts f = lc(f) * prod(factors) mod p (factors monic) to modulus p^k.
void multifactor_lift(const IntPoly& f, const std::vector<FpPoly>& factors, u64 p, const mpz_class& target,
                      std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    ZPoly g = to_z(f, target);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), g.back().get_mpz_t(), target.get_mpz_t());
    out.push_back(z_scale(g, inv, target));
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<FpPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());

  FpPoly h_bar{1};
  for (const auto& x : left) h_bar = fp_mul(h_bar, x, p);
  FpPoly g_bar = reduce(IntPoly(f.coeffs()), p);
  g_bar = fp_divmod(g_bar, h_bar, p).first;
  auto [one, s_bar, t_bar] = fp_xgcd(g_bar, h_bar, p);

  ZPoly fz = f.coeffs();
  ZPoly g = to_z(g_bar), h = to_z(h_bar), s = to_z(s_bar), t = to_z(t_bar);
  mpz_class m = static_cast<unsigned long>(p);
  while (m < target) {
    m = m * m;
    hensel_step(fz, g, h, s, t, m);
  }
  z_reduce(g, target);
  z_reduce(h, target);

  auto symmetric = [&](const ZPoly& a) {
    std::vector<mpz_class> v = a;
    mpz_class half_m = target / 2;
    for (auto& c : v) {
      if (c > half_m) c -= target;
    }
    return IntPoly(std::move(v));
  };
  multifactor_lift(symmetric(h), left, p, target, out);
  multifactor_lift(symmetric(g), right, p, target, out);
}

std::vector<u64> small_primes() {
  std::vector<u64> primes;
  for (u64 n = 3; primes.size() < 400; n += 2) {
    bool prime = true;
    for (u64 d = 3; d * d <= n; d += 2) {
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(n);
  }
  return primes;
}

/// Irreducible factors of a primitive squarefree polynomial of degree >= 2
/// with positive leading coefficient.
std::vector<IntPoly> factor_squarefree(const IntPoly& f, const FactorOptions& options, std::mt19937_64& rng) {
  static const std::vector<u64> primes = small_primes();

  u64 best_p = 0;
  std::vector<FpPoly> best;
  int good = 0;
  for (u64 p : primes) {
    FpPoly fb = reduce(f, p);
    if (static_cast<int>(fb.size()) - 1 != f.degree()) continue;
    if (fp_gcd(fb, fp_derivative(fb, p), p).size() != 1) continue;
    std::vector<FpPoly> local = fp_factor_squarefree(fp_monic(fb, p), p, rng);
    if (best_p == 0 || local.size() < best.size()) {
      best_p = p;
      best = std::move(local);
    }
    if (best.size() == 1 || ++good >= options.primes_to_try) break;
  }
  if (best_p == 0) throw InternalInconsistency("factor: no suitable prime below the search limit");
  if (best.size() == 1) return {f};

  // Mignotte: any factor g of f has |g_j| <= 2^deg(f) ||f||_2; the lc-adjusted
  // candidates need |lc(f)| times that.
  mpz_class norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  mpz_class norm = sqrt(norm2) + 1;
  mpz_class bound = abs(f.leading()) * norm;
  bound <<= static_cast<mp_bitcnt_t>(f.degree());
  mpz_class modulus = static_cast<unsigned long>(best_p);
  while (modulus <= 2 * bound) modulus *= static_cast<unsigned long>(best_p);

  std::vector<ZPoly> lifted;
  multifactor_lift(f, best, best_p, modulus, lifted);

  const mpz_class half = modulus / 2;
  auto symmetric_int = [&](ZPoly a) {
    for (auto& c : a) {
      if (c > half) c -= modulus;
    }
    return IntPoly(std::move(a));
  };

  std::vector<IntPoly> found;
  IntPoly rest = f;
  std::vector<std::size_t> live(lifted.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;

  std::size_t size = 1;
  while (2 * size <= live.size()) {
    bool hit = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      ZPoly g{mpz_class(rest.leading())};
      z_reduce(g, modulus);
      for (std::size_t i : pick) g = z_mul(g, lifted[live[i]], modulus);
      IntPoly cand = symmetric_int(g).primitive_part();
      IntPoly quotient;
      if (cand.degree() > 0 && divides_exactly(cand, rest, &quotient)) {
        found.push_back(cand);
        rest = quotient;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0, j = 0; i < live.size(); ++i) {
          if (j < pick.size() && pick[j] == i) {
            ++j;
            continue;
          }
          keep.push_back(live[i]);
        }
        live = std::move(keep);
        hit = true;
        break;
      }
      // Next combination in lexicographic order.
      std::size_t k = size;
      while (k > 0 && pick[k - 1] == live.size() - size + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t i = k; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
    if (!hit) ++size;
  }
  if (rest.degree() > 0) found.push_back(rest.primitive_part());
  return found;
}

bool factor_less(const std::pair<IntPoly, int>& a, const std::pair<IntPoly, int>& b) {
  if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
  if (a.first.coeffs() != b.first.coeffs()) return a.first.coeffs() < b.first.coeffs();
  return a.second < b.second;
}

}  // namespace

IntPoly Factorization::expand() const {
  IntPoly out({1});
  out = out * content;
  for (const auto& [g, e] : factors) {
    for (int i = 0; i < e; ++i) out = out * g;
  }
  return out;
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& f) {
  if (f.is_zero()) throw InvalidInput("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<RatPoly, int>> out;
  RatPoly a = f.monic();
  RatPoly b = a.derivative();
  RatPoly c = gcd(a, b);
  RatPoly w = a / c;
  RatPoly y = b / c;
  RatPoly z = y - w.derivative();
  for (int i = 1; w.degree() > 0; ++i) {
    RatPoly g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = w / g;
    y = z / g;
    z = y - w.derivative();
  }
  return out;
}

Factorization factor_int_poly(const IntPoly& f, const FactorOptions& options) {
  if (f.is_zero()) throw InvalidInput("factor_int_poly: degenerate zero input");
  if (f.degree() > options.max_degree) {
    throw CapExceeded("factor_int_poly: degree " + std::to_string(f.degree()) + " exceeds cap " +
                      std::to_string(options.max_degree));
  }
  std::mt19937_64 rng(options.seed);
  Factorization out;
  for (const auto& [part, mult] : squarefree_decomposition(f.to_rat())) {
    IntPoly g = split_content(part).second;
    std::vector<IntPoly> pieces = g.degree() <= 1 ? std::vector<IntPoly>{g} : factor_squarefree(g, options, rng);
    for (auto& piece : pieces) out.factors.emplace_back(std::move(piece), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);

  mpz_class lc_product = 1;
  for (const auto& [g, e] : out.factors) {
    for (int i = 0; i < e; ++i) lc_product *= g.leading();
  }
  out.content = f.leading() / lc_product;
  if (!(out.expand() == f)) throw InternalInconsistency("factor_int_poly: factors do not multiply back to the input");
  return out;
}

std::vector<std::pair<RatPoly, int>> factor_rat_poly(const RatPoly& f, const FactorOptions& options) {
  auto [c, prim] = split_content(f);
  std::vector<std::pair<RatPoly, int>> out;
  for (const auto& [g, e] : factor_int_poly(prim, options).factors) out.emplace_back(g.to_rat().monic(), e);
  return out;
}

bool is_irreducible(const RatPoly& f, const FactorOptions& options) {
  if (f.degree() < 1) return false;
  auto fs = factor_rat_poly(f, options);
  return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace galcomp::nf
