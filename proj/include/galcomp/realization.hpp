#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galcomp/galois_model.hpp"
#include "galcomp/number_field.hpp"

namespace galcomp::nf {

/// A Galois number field Omega = Q(g) together with its automorphism group
/// acting on n points (usually roots of some polynomial). Automorphisms are
/// stored as the image of g, one per group element, and compose like the
/// permutations: sigma_{p q} = sigma_p o sigma_q.
class Realization {
 public:
  /// Builds the full automorphism table from generator images and checks
  /// everything it can: each image is a root of the minimal polynomial, the
  /// table is consistent (a homomorphism), the group order equals [Omega:Q],
  /// and when roots are given, sigma_p(roots[j]) = roots[p(j)].
  Realization(std::string name, const RatPoly& min_poly, std::vector<Permutation> root_action,
              std::vector<RatPoly> generator_images, std::vector<RatPoly> roots = {},
              std::optional<RealizationRef> ref = std::nullopt);

  const std::string& name() const { return name_; }
  const GaloisContext& context() const { return ctx_; }
  const NumberField& omega() const { return omega_; }
  const std::vector<Permutation>& root_action() const { return generators_; }
  const std::vector<RatPoly>& generator_images() const { return generator_images_; }
  const std::vector<RatPoly>& roots() const { return roots_; }

  /// sigma_p(g) as a polynomial in g.
  const RatPoly& image_of_generator(const Permutation& p) const;
  /// sigma_p(a).
  RatPoly apply(const Permutation& p, const RatPoly& a) const;

 private:
  std::string name_;
  NumberField omega_;
  std::vector<Permutation> generators_;
  std::vector<RatPoly> generator_images_;
  std::vector<RatPoly> roots_;
  std::map<Permutation, RatPoly> images_;
  GaloisContext ctx_;
};

/// The n-th cyclotomic polynomial.
RatPoly cyclotomic_polynomial(int n);

/// Omega = Q(zeta_n), n <= 30; points are the units mod n in increasing
/// order and k acts by u -> k u.
Realization cyclotomic_realization(int n);

/// Omega = Q(cbrt2, omega) with primitive element cbrt2 + omega; points are
/// the roots cbrt2 * omega^j, j = 0, 1, 2.
Realization s3_x3m2_realization();

/// Throws InvalidInput for an unknown name or n out of range.
Realization realize_context(const RealizationRef& ref);

/// The fixed field Omega^H with a primitive element, positioned inside Omega.
class Subfield {
 public:
  const Subgroup& group() const { return group_; }
  const NumberField& field() const { return embedding_.domain(); }
  int degree() const { return field().degree(); }
  /// The primitive element as an element of Omega.
  const RatPoly& generator() const { return embedding_.image(); }
  const FieldEmbedding& embedding() const { return embedding_; }

  /// a as a polynomial in the primitive element, if a lies in this subfield.
  std::optional<RatPoly> express(const RatPoly& a) const;

 private:
  friend Subfield fixed_field(const Realization& r, const Subgroup& h, std::uint64_t seed);
  Subfield(Subgroup group, FieldEmbedding embedding, QMatrix powers)
      : group_(std::move(group)), embedding_(std::move(embedding)), powers_(std::move(powers)) {}

  Subgroup group_;
  FieldEmbedding embedding_;
  QMatrix powers_;  // columns: coordinates in Omega of 1, t, ..., t^(m-1)
};

/// Omega^H, computed as the kernel of 1 - (average over H) on Omega and a
/// random primitive element of it whose minimal polynomial has degree [G:H].
/// Throws InvalidInput if H is not inside the ambient group and
/// InternalInconsistency if the fixed space has the wrong dimension.
Subfield fixed_field(const Realization& r, const Subgroup& h, std::uint64_t seed = 0x5eedULL);

}  // namespace galcomp::nf
