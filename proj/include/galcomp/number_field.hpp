#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "galcomp/factor.hpp"
#include "galcomp/qmatrix.hpp"
#include "galcomp/rational_poly.hpp"

namespace galcomp::nf {

/// Q(a) = Q[x]/(m) for a monic irreducible m. Elements are polynomials in the
/// generator of degree below deg m.
class NumberField {
 public:
  /// The rationals, Q[x]/(x).
  NumberField();
  /// Normalizes min_poly to be monic and checks irreducibility by
  /// factorization; throws InvalidInput otherwise.
  explicit NumberField(const RatPoly& min_poly, std::string generator = "a", const FactorOptions& options = {});

  int degree() const { return min_poly_.degree(); }
  const RatPoly& min_poly() const { return min_poly_; }
  const std::string& generator_name() const { return generator_; }

  RatPoly reduce(const RatPoly& a) const { return a % min_poly_; }
  RatPoly mul(const RatPoly& a, const RatPoly& b) const { return (a * b) % min_poly_; }
  /// Throws std::domain_error on zero.
  RatPoly inverse(const RatPoly& a) const { return inverse_mod(a, min_poly_); }
  /// p(at), computed in the field.
  RatPoly evaluate(const RatPoly& p, const RatPoly& at) const { return compose_mod(p, at, min_poly_); }
  bool is_root(const RatPoly& p, const RatPoly& at) const { return evaluate(p, at).is_zero(); }

  /// Coordinates in the power basis 1, a, ..., a^(d-1).
  QVector coordinates(const RatPoly& a) const;
  RatPoly from_coordinates(const QVector& v) const { return RatPoly(v); }

  /// Monic minimal polynomial of an element over Q.
  RatPoly min_poly_of(const RatPoly& element) const;

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.min_poly_ == b.min_poly_; }

 private:
  RatPoly min_poly_;
  std::string generator_;
};

/// Monic minimal polynomial over Q of the first vector in a sequence of
/// successive powers z^0, z^1, ...; power(k) must return the coordinates of
/// z^k in a fixed basis of a space of dimension at most max_degree.
template <typename PowerFn>
RatPoly min_poly_from_powers(PowerFn&& power, int max_degree);

/// A field homomorphism domain -> codomain sending the domain generator to
/// image (a polynomial in the codomain generator).
class FieldEmbedding {
 public:
  /// Throws InvalidInput unless domain.min_poly(image) = 0 in codomain.
  FieldEmbedding(NumberField domain, NumberField codomain, const RatPoly& image);

  const NumberField& domain() const { return domain_; }
  const NumberField& codomain() const { return codomain_; }
  const RatPoly& image() const { return image_; }

  RatPoly apply(const RatPoly& a) const { return codomain_.evaluate(a, image_); }

 private:
  NumberField domain_;
  NumberField codomain_;
  RatPoly image_;
};

template <typename PowerFn>
RatPoly min_poly_from_powers(PowerFn&& power, int max_degree) {
  QVector first = power(0);
  LinearSpan span(first.size());
  span.add(first);
  for (int k = 1; k <= max_degree; ++k) {
    if (auto c = span.add(power(k))) {
      std::vector<mpq_class> coeffs(static_cast<std::size_t>(k) + 1);
      for (int i = 0; i < k; ++i) coeffs[static_cast<std::size_t>(i)] = -(*c)[static_cast<std::size_t>(i)];
      coeffs.back() = 1;
      return RatPoly(std::move(coeffs));
    }
  }
  throw std::domain_error("min_poly_from_powers: no relation up to the given degree");
}

}  // namespace galcomp::nf
