#pragma once

#include <gmpxx.h>

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace galcomp::nf {

/// Dense univariate polynomial over the rationals, constant term first, with
/// no trailing zero coefficients. The zero polynomial has degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> coeffs);
  RatPoly(std::initializer_list<long> coeffs);

  static RatPoly constant(const mpq_class& c);
  static RatPoly monomial(const mpq_class& c, int degree);
  static RatPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^i; zero past the degree.
  mpq_class coeff(int i) const;
  const mpq_class& leading() const { return c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  RatPoly monic() const;
  RatPoly derivative() const;
  mpq_class evaluate(const mpq_class& x) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const mpq_class& s);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator-(const RatPoly& a);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const mpq_class& s) { return a *= s; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  /// e.g. "x^3 - 2".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);
RatPoly operator/(const RatPoly& a, const RatPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
/// (g, s, t) with s a + t b = g = gcd(a, b) monic.
std::tuple<RatPoly, RatPoly, RatPoly> xgcd(const RatPoly& a, const RatPoly& b);

/// f(g).
RatPoly compose(const RatPoly& f, const RatPoly& g);
/// f(g) mod m.
RatPoly compose_mod(const RatPoly& f, const RatPoly& g, const RatPoly& m);
/// Inverse of a modulo m; throws std::domain_error if they are not coprime.
RatPoly inverse_mod(const RatPoly& a, const RatPoly& m);

/// Dense polynomial with integer coefficients, constant term first.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  mpz_class coeff(int i) const;
  const mpz_class& leading() const { return c_.back(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  /// Positive gcd of the coefficients (0 for the zero polynomial).
  mpz_class content() const;
  /// Divided by the content, with positive leading coefficient.
  IntPoly primitive_part() const;
  RatPoly to_rat() const;

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& s);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const { return to_rat().to_string(var); }

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Writes f = c * p with c rational and p primitive with positive leading
/// coefficient. f must be nonzero.
std::pair<mpq_class, IntPoly> split_content(const RatPoly& f);

/// Exact division over Z; returns false (and leaves q untouched) if b does not
/// divide a.
bool divides_exactly(const IntPoly& b, const IntPoly& a, IntPoly* q = nullptr);

}  // namespace galcomp::nf
