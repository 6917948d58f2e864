#include "galcomp/number_field.hpp"

#include "galcomp/error.hpp"

namespace galcomp::nf {

NumberField::NumberField() : min_poly_(RatPoly::x()), generator_("a") {}

NumberField::NumberField(const RatPoly& min_poly, std::string generator, const FactorOptions& options)
    : min_poly_(min_poly.monic()), generator_(std::move(generator)) {
  if (min_poly_.degree() < 1) throw InvalidInput("NumberField: minimal polynomial must have positive degree");
  if (!is_irreducible(min_poly_, options)) {
    throw InvalidInput("NumberField: " + min_poly_.to_string() + " is reducible over Q");
  }
}

QVector NumberField::coordinates(const RatPoly& a) const {
  RatPoly r = reduce(a);
  QVector v(static_cast<std::size_t>(degree()), mpq_class(0));
  for (int i = 0; i <= r.degree(); ++i) v[static_cast<std::size_t>(i)] = r.coeff(i);
  return v;
}

RatPoly NumberField::min_poly_of(const RatPoly& element) const {
  const RatPoly e = reduce(element);
  RatPoly p = RatPoly::constant(1);
  int last = 0;
  return min_poly_from_powers(
      [&](int k) {
        while (last < k) {
          p = mul(p, e);
          ++last;
        }
        return coordinates(p);
      },
      degree());
}

FieldEmbedding::FieldEmbedding(NumberField domain, NumberField codomain, const RatPoly& image)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(codomain_.reduce(image)) {
  if (!codomain_.is_root(domain_.min_poly(), image_)) {
    throw InvalidInput("FieldEmbedding: " + image_.to_string() + " is not a root of " + domain_.min_poly().to_string());
  }
}

}  // namespace galcomp::nf
