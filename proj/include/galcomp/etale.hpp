#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "galcomp/number_field.hpp"

namespace galcomp::nf {

/// A finite-dimensional commutative Q-algebra given by the structure
/// constants of a basis b_0, ..., b_{n-1}: b_i b_j = sum_k c[i][j][k] b_k.
class EtaleAlgebra {
 public:
  /// structure[i * n + j] holds the coordinates of b_i b_j.
  EtaleAlgebra(std::size_t dimension, std::vector<QVector> structure, QVector unit, std::string note);

  /// Q[x]/(f) in the power basis; f need not be irreducible or squarefree.
  static EtaleAlgebra from_polynomial(const RatPoly& f);

  std::size_t dimension() const { return n_; }
  const QVector& unit() const { return unit_; }
  const std::string& note() const { return note_; }
  const QVector& product_of_basis(std::size_t i, std::size_t j) const { return c_[i * n_ + j]; }

  QVector basis(std::size_t i) const;
  QVector mul(const QVector& a, const QVector& b) const;
  /// Matrix of x -> a x.
  QMatrix left_multiplication(const QVector& a) const;
  mpq_class trace(const QVector& a) const;

  bool is_commutative() const;
  bool is_associative() const;
  bool is_unital() const;

  /// Minimal polynomial over Q of a.
  RatPoly min_poly_of(const QVector& a) const;
  /// Minimal polynomial of e a inside the ideal e A, whose unit is the
  /// idempotent e.
  RatPoly min_poly_in_summand(const QVector& a, const QVector& e) const;
  /// p(a).
  QVector evaluate(const RatPoly& p, const QVector& a) const;

 private:
  std::size_t n_;
  std::vector<QVector> c_;
  QVector unit_;
  std::string note_;
};

/// k_V (x)_{k_B} k_W, built as (k_V (x)_Q k_W) / (e_V(b) (x) 1 - 1 (x) e_W(b))
/// with the quotient basis taken from monomials v^i w^j.
class TensorProduct {
 public:
  /// Throws InvalidInput if the embeddings do not share their domain, and
  /// InternalInconsistency if the quotient has the wrong dimension.
  TensorProduct(const FieldEmbedding& ev, const FieldEmbedding& ew);

  const EtaleAlgebra& algebra() const { return algebra_; }
  /// The class of p (x) q, for p in k_V and q in k_W.
  QVector image(const RatPoly& p, const RatPoly& q) const;
  QVector left(const RatPoly& p) const { return image(p, RatPoly::constant(1)); }
  QVector right(const RatPoly& q) const { return image(RatPoly::constant(1), q); }

 private:
  QVector reduce_grid(const std::vector<QVector>& grid) const;

  NumberField kv_, kw_;
  std::size_t dv_ = 0, dw_ = 0;
  /// For each monomial v^i w^j (index i * dw + j), its class in quotient
  /// coordinates.
  std::vector<QVector> reduction_;
  EtaleAlgebra algebra_;
};

EtaleAlgebra tensor_over(const FieldEmbedding& ev, const FieldEmbedding& ew);

/// Dimension of the nilradical: n minus the rank of the trace form.
std::size_t radical_dim(const EtaleAlgebra& a);

struct EtaleSummand {
  QVector idempotent;
  /// Minimal polynomial of the projected primitive element; the summand is
  /// the number field it defines.
  RatPoly min_poly;
  int degree = 0;
};

struct EtaleDecomposition {
  QVector theta;
  RatPoly theta_min_poly;
  std::vector<EtaleSummand> summands;
  int attempts = 0;
};

struct DecomposeOptions {
  std::uint64_t seed = 0x5eedULL;
  int max_retries = 32;
  FactorOptions factor{};
};

/// Splits a into field summands through a random primitive element theta: the
/// irreducible factors f_i of its minimal polynomial give idempotents by CRT
/// in Q[t]/(f). Throws SemisimplicityFailure on a nonzero radical and
/// InternalInconsistency if no primitive element is found within the retries
/// or the idempotents fail their identities.
EtaleDecomposition decompose_etale(const EtaleAlgebra& a, const DecomposeOptions& options = {});

}  // namespace galcomp::nf
