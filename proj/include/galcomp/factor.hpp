#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "galcomp/rational_poly.hpp"

namespace galcomp::nf {

struct FactorOptions {
  /// Inputs of higher degree raise CapExceeded.
  int max_degree = 36;
  /// Seed for the randomized equal-degree splitting modulo p.
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  /// Good primes tried before settling on the one with fewest modular factors.
  int primes_to_try = 6;
};

/// f = content * prod(factor^multiplicity); every factor is primitive,
/// irreducible over Z, with positive leading coefficient, and factors are
/// sorted by (degree, coefficients).
struct Factorization {
  mpz_class content;
  std::vector<std::pair<IntPoly, int>> factors;

  IntPoly expand() const;
};

/// Factors a nonzero integer polynomial: squarefree decomposition, then per
/// squarefree part a factorization modulo a small prime, multifactor Hensel
/// lifting and recombination of modular factors under a coefficient bound.
/// Throws InvalidInput for the zero polynomial, CapExceeded past max_degree.
Factorization factor_int_poly(const IntPoly& f, const FactorOptions& options = {});

/// Monic irreducible factors over Q with multiplicities.
std::vector<std::pair<RatPoly, int>> factor_rat_poly(const RatPoly& f, const FactorOptions& options = {});

bool is_irreducible(const RatPoly& f, const FactorOptions& options = {});

/// Yun's squarefree decomposition over Q: monic pairwise coprime squarefree
/// parts with their multiplicities.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& f);

}  // namespace galcomp::nf
