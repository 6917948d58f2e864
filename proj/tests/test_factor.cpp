#include <gtest/gtest.h>

#include <random>

#include "galcomp/error.hpp"
#include "galcomp/factor.hpp"

using namespace galcomp;
using namespace galcomp::nf;

namespace {

std::vector<IntPoly> factors_of(const Factorization& f) {
  std::vector<IntPoly> out;
  for (const auto& [p, e] : f.factors)
    for (int i = 0; i < e; ++i) out.push_back(p);
  return out;
}

// Brute-force rational root search: p/q with p | a0, q | an.
bool has_rational_root(const IntPoly& f) {
  if (f.coeff(0) == 0) return true;
  std::vector<mpz_class> ps, qs;
  mpz_class a0 = abs(f.coeff(0)), an = abs(f.leading());
  for (mpz_class d = 1; d <= a0; ++d)
    if (a0 % d == 0) ps.push_back(d);
  for (mpz_class d = 1; d <= an; ++d)
    if (an % d == 0) qs.push_back(d);
  RatPoly r = f.to_rat();
  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int s : {1, -1})
        if (r.evaluate(mpq_class(s * p, q)) == 0) return true;
  return false;
}

}  // namespace

TEST(Factor, SmallExamples) {
  auto f = factor_int_poly(IntPoly{-1, 0, 1});
  EXPECT_EQ(factors_of(f), (std::vector<IntPoly>{IntPoly{-1, 1}, IntPoly{1, 1}}));
  EXPECT_TRUE(is_irreducible(RatPoly{-2, 0, 0, 1}));
  // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2)
  auto g = factor_int_poly(IntPoly{4, 0, 0, 0, 1});
  EXPECT_EQ(factors_of(g), (std::vector<IntPoly>{IntPoly{2, -2, 1}, IntPoly{2, 2, 1}}));
  // x^4 + 1 is irreducible over Q but reducible modulo every prime.
  EXPECT_TRUE(is_irreducible(RatPoly{1, 0, 0, 0, 1}));
  auto h = factor_int_poly(IntPoly{-6, 0, 6});
  EXPECT_EQ(h.content, 6);
  EXPECT_EQ(h.factors.size(), 2u);
}

TEST(Factor, MultiplicitiesAndContent) {
  IntPoly a{1, 1}, b{-2, 0, 1}, c{1, 1, 1};
  IntPoly f = a * a * a * b * c * c * mpz_class(-10);
  Factorization fac = factor_int_poly(f);
  EXPECT_EQ(fac.content, -10);
  EXPECT_EQ(fac.expand(), f);
  ASSERT_EQ(fac.factors.size(), 3u);
  EXPECT_EQ(fac.factors[0], (std::pair<IntPoly, int>{a, 3}));
  EXPECT_EQ(fac.factors[1], (std::pair<IntPoly, int>{b, 1}));
  EXPECT_EQ(fac.factors[2], (std::pair<IntPoly, int>{c, 2}));
  auto sqf = squarefree_decomposition(f.to_rat());
  ASSERT_EQ(sqf.size(), 3u);
}

TEST(Factor, ProductsOfKnownIrreducibles) {
  // Eisenstein polynomials and cyclotomic polynomials are irreducible.
  std::vector<IntPoly> irreducible{
      IntPoly{-2, 0, 0, 1},       IntPoly{3, 0, 0, 0, 0, 1}, IntPoly{1, 1, 1, 1, 1},
      IntPoly{1, -1, 1},          IntPoly{1, 0, 1},          IntPoly{5, 5, 0, 0, 0, 0, 1},
      IntPoly{1, -1, 0, 1, 0, -1, 1, 0, -1, 1}, IntPoly{-3, 0, 1},
  };
  std::mt19937_64 rng(7);
  for (int round = 0; round < 25; ++round) {
    std::vector<IntPoly> chosen;
    IntPoly f{1};
    for (int k = 0; k < 3; ++k) {
      const IntPoly& p = irreducible[rng() % irreducible.size()];
      chosen.push_back(p);
      f = f * p;
    }
    std::sort(chosen.begin(), chosen.end(), [](const IntPoly& x, const IntPoly& y) {
      return x.degree() != y.degree() ? x.degree() < y.degree() : x.coeffs() < y.coeffs();
    });
    Factorization fac = factor_int_poly(f);
    EXPECT_EQ(fac.expand(), f);
    EXPECT_EQ(factors_of(fac), chosen) << f.to_string();
  }
}

TEST(Factor, LowDegreeFactorsHaveNoRationalRoots) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coef(-6, 6);
  for (int round = 0; round < 60; ++round) {
    IntPoly f{1};
    for (int k = 0; k < 3; ++k) {
      std::vector<mpz_class> c;
      int deg = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < deg; ++i) c.emplace_back(coef(rng));
      c.emplace_back(1 + rng() % 3);
      f = f * IntPoly(c);
    }
    Factorization fac = factor_int_poly(f);
    EXPECT_EQ(fac.expand(), f);
    for (const auto& [p, e] : fac.factors) {
      if (p.degree() >= 2 && p.degree() <= 3) EXPECT_FALSE(has_rational_root(p)) << p.to_string();
    }
  }
}

TEST(Factor, Guards) {
  EXPECT_THROW(factor_int_poly(IntPoly(std::vector<mpz_class>{})), InvalidInput);
  std::vector<mpz_class> big(40, 0);
  big.front() = 1;
  big.back() = 1;
  EXPECT_THROW(factor_int_poly(IntPoly(big)), CapExceeded);
  FactorOptions wide;
  wide.max_degree = 48;
  EXPECT_NO_THROW(factor_int_poly(IntPoly(big), wide));
}
