#include "galcomp/rational_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace galcomp::nf {

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

RatPoly RatPoly::constant(const mpq_class& c) { return RatPoly(std::vector<mpq_class>{c}); }

RatPoly RatPoly::monomial(const mpq_class& c, int degree) {
  std::vector<mpq_class> v(static_cast<std::size_t>(degree) + 1, mpq_class(0));
  v.back() = c;
  return RatPoly(std::move(v));
}

mpq_class RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

void RatPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  RatPoly r = *this;
  mpq_class inv = 1 / leading();
  for (auto& q : r.c_) q *= inv;
  return r;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return RatPoly(std::move(d));
}

mpq_class RatPoly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const mpq_class& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q *= s;
  return *this;
}

RatPoly operator-(const RatPoly& a) {
  RatPoly r = a;
  for (auto& q : r.c_) q = -q;
  return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(out));
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    mpq_class q = c_[static_cast<std::size_t>(i)];
    if (sgn(q) == 0) continue;
    if (first) {
      if (sgn(q) < 0) out << "-";
    } else {
      out << (sgn(q) < 0 ? " - " : " + ");
    }
    mpq_class a = abs(q);
    if (i == 0 || a != 1) {
      out << a.get_str();
      if (i > 0) out << "*";
    }
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("RatPoly division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<mpq_class> rem = a.coeffs();
  std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, mpq_class(0));
  const mpq_class inv = 1 / b.leading();
  const auto& bc = b.coeffs();
  for (int d = a.degree(); d >= b.degree(); --d) {
    mpq_class q = rem[static_cast<std::size_t>(d)] * inv;
    if (sgn(q) == 0) continue;
    const int shift = d - b.degree();
    quot[static_cast<std::size_t>(shift)] = q;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(shift) + j] -= q * bc[j];
  }
  rem.resize(static_cast<std::size_t>(b.degree()));
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }
RatPoly operator/(const RatPoly& a, const RatPoly& b) { return divmod(a, b).first; }

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::tuple<RatPoly, RatPoly, RatPoly> xgcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(1), s1;
  RatPoly t0, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    RatPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  mpq_class inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

RatPoly compose(const RatPoly& f, const RatPoly& g) {
  RatPoly acc;
  for (int i = f.degree(); i >= 0; --i) acc = acc * g + RatPoly::constant(f.coeff(i));
  return acc;
}

RatPoly compose_mod(const RatPoly& f, const RatPoly& g, const RatPoly& m) {
  RatPoly acc;
  const RatPoly gm = g % m;
  for (int i = f.degree(); i >= 0; --i) acc = (acc * gm + RatPoly::constant(f.coeff(i))) % m;
  return acc;
}

RatPoly inverse_mod(const RatPoly& a, const RatPoly& m) {
  auto [g, s, t] = xgcd(a % m, m);
  if (g.degree() != 0) throw std::domain_error("inverse_mod: not invertible");
  return s % m;
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

void IntPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

mpz_class IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) g = gcd(g, x);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<mpz_class> v = c_;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

RatPoly IntPoly::to_rat() const {
  std::vector<mpq_class> v;
  v.reserve(c_.size());
  for (const auto& x : c_) v.emplace_back(x);
  return RatPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(IntPoly a, const mpz_class& s) {
  for (auto& x : a.c_) x *= s;
  a.trim();
  return a;
}

std::pair<mpq_class, IntPoly> split_content(const RatPoly& f) {
  if (f.is_zero()) throw std::domain_error("split_content of zero polynomial");
  mpz_class den = 1;
  for (const auto& q : f.coeffs()) den = lcm(den, mpz_class(q.get_den()));
  std::vector<mpz_class> v;
  v.reserve(f.coeffs().size());
  for (const auto& q : f.coeffs()) v.emplace_back(mpz_class(q * den));
  IntPoly p(std::move(v));
  IntPoly pp = p.primitive_part();
  mpq_class c = mpq_class(p.leading()) / mpq_class(pp.leading()) / mpq_class(den);
  c.canonicalize();
  return {c, pp};
}

bool divides_exactly(const IntPoly& b, const IntPoly& a, IntPoly* q) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    if (q) *q = IntPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<mpz_class> rem = a.coeffs();
  std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, mpz_class(0));
  const auto& bc = b.coeffs();
  for (int d = a.degree(); d >= b.degree(); --d) {
    const mpz_class& top = rem[static_cast<std::size_t>(d)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) return false;
    mpz_class c = top / b.leading();
    const int shift = d - b.degree();
    quot[static_cast<std::size_t>(shift)] = c;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(shift) + j] -= c * bc[j];
  }
  for (int i = 0; i < b.degree(); ++i) {
    if (sgn(rem[static_cast<std::size_t>(i)]) != 0) return false;
  }
  if (q) *q = IntPoly(std::move(quot));
  return true;
}

}  // namespace galcomp::nf
