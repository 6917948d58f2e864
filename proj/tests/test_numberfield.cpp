#include <gtest/gtest.h>

#include "galcomp/error.hpp"
#include "galcomp/etale.hpp"
#include "galcomp/factor.hpp"
#include "galcomp/realization.hpp"

using namespace galcomp;
using namespace galcomp::nf;

namespace {

std::vector<int> summand_degrees(const EtaleDecomposition& d) {
  std::vector<int> out;
  for (const auto& s : d.summands) out.push_back(s.degree);
  std::sort(out.begin(), out.end());
  return out;
}

EtaleAlgebra self_tensor(const RatPoly& f) {
  NumberField q;
  NumberField k(f);
  FieldEmbedding e(q, k, RatPoly{});
  return tensor_over(e, e);
}

}  // namespace

TEST(NumberField, Arithmetic) {
  NumberField k(RatPoly{-2, 0, 0, 1});
  RatPoly a = RatPoly::x();
  EXPECT_EQ(k.mul(k.mul(a, a), a), RatPoly{2});
  RatPoly b = RatPoly{1, 1};
  EXPECT_EQ(k.mul(b, k.inverse(b)), RatPoly{1});
  EXPECT_EQ(k.min_poly_of(k.mul(a, a)), (RatPoly{-4, 0, 0, 1}));
  EXPECT_EQ(k.min_poly_of(RatPoly{3}), (RatPoly{-3, 1}));
  EXPECT_THROW(NumberField(RatPoly{-1, 0, 1}), InvalidInput);
}

TEST(NumberField, EmbeddingChecksRoot) {
  NumberField q2(RatPoly{-2, 0, 1});
  NumberField q8(RatPoly{1, 0, 0, 0, 1});  // Q(zeta_8) contains sqrt 2 = z + z^7 = z - z^3
  EXPECT_NO_THROW(FieldEmbedding(q2, q8, RatPoly{0, 1, 0, -1}));
  EXPECT_THROW(FieldEmbedding(q2, q8, RatPoly{0, 1}), InvalidInput);
}

TEST(Etale, GaussianSelfTensorSplits) {
  EtaleAlgebra a = self_tensor(RatPoly{1, 0, 1});
  EXPECT_EQ(a.dimension(), 4u);
  EXPECT_TRUE(a.is_commutative());
  EXPECT_TRUE(a.is_associative());
  EXPECT_TRUE(a.is_unital());
  EXPECT_EQ(radical_dim(a), 0u);
  EXPECT_EQ(summand_degrees(decompose_etale(a)), (std::vector<int>{2, 2}));
}

TEST(Etale, CubeRootSelfTensor) {
  EtaleAlgebra a = self_tensor(RatPoly{-2, 0, 0, 1});
  EXPECT_EQ(a.dimension(), 9u);
  EXPECT_EQ(radical_dim(a), 0u);
  EtaleDecomposition d = decompose_etale(a);
  EXPECT_EQ(summand_degrees(d), (std::vector<int>{3, 6}));
  QVector sum(a.dimension());
  for (const auto& s : d.summands) {
    EXPECT_EQ(a.mul(s.idempotent, s.idempotent), s.idempotent);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += s.idempotent[i];
  }
  EXPECT_EQ(sum, a.unit());
}

TEST(Etale, DualNumbersHaveRadical) {
  EtaleAlgebra a = EtaleAlgebra::from_polynomial(RatPoly{0, 0, 1});
  EXPECT_EQ(radical_dim(a), 1u);
  EXPECT_THROW(decompose_etale(a), SemisimplicityFailure);
  EtaleAlgebra b = EtaleAlgebra::from_polynomial(RatPoly{-1, 0, 1});
  EXPECT_EQ(radical_dim(b), 0u);
  EXPECT_EQ(summand_degrees(decompose_etale(b)), (std::vector<int>{1, 1}));
}

TEST(Realization, CyclotomicGroups) {
  Realization c5 = cyclotomic_realization(5);
  EXPECT_EQ(c5.context().ambient().order(), 4u);
  bool cyclic = false;
  for (const auto& g : c5.context().ambient().elements()) {
    cyclic = cyclic || Subgroup::generate(g.degree(), std::vector<Permutation>{g}).order() == 4;
  }
  EXPECT_TRUE(cyclic);

  Realization c12 = cyclotomic_realization(12);
  EXPECT_EQ(c12.context().ambient().order(), 4u);
  for (const auto& g : c12.context().ambient().elements()) EXPECT_TRUE((g * g).is_identity());
  EXPECT_EQ(c12.omega().degree(), 4);
  EXPECT_THROW(cyclotomic_realization(31), InvalidInput);
  EXPECT_EQ(cyclotomic_polynomial(12), (RatPoly{1, 0, -1, 0, 1}));
}

TEST(Realization, S3IsNonabelianAndActsOnRoots) {
  Realization r = s3_x3m2_realization();
  const Subgroup& g = r.context().ambient();
  EXPECT_EQ(g.order(), 6u);
  bool nonabelian = false;
  for (const auto& x : g.elements())
    for (const auto& y : g.elements()) nonabelian = nonabelian || !(x * y == y * x);
  EXPECT_TRUE(nonabelian);
  ASSERT_EQ(r.roots().size(), 3u);
  for (const auto& root : r.roots()) EXPECT_TRUE(r.omega().is_root(RatPoly{-2, 0, 0, 1}, root));
  for (const auto& p : g.elements()) {
    for (Permutation::Point j = 0; j < 3; ++j) EXPECT_EQ(r.apply(p, r.roots()[j]), r.roots()[p(j)]);
    for (const auto& q : g.elements()) {
      EXPECT_EQ(r.apply(p * q, RatPoly::x()), r.apply(p, r.apply(q, RatPoly::x())));
    }
  }
}

TEST(Realization, FixedFieldDegrees) {
  for (const Realization& r : {cyclotomic_realization(8), cyclotomic_realization(12), s3_x3m2_realization()}) {
    const Subgroup& g = r.context().ambient();
    for (const auto& h : all_subgroups(g)) {
      Subfield k = fixed_field(r, h);
      EXPECT_EQ(static_cast<std::size_t>(k.degree()), index(g, h));
      for (const auto& p : h.elements()) EXPECT_EQ(r.apply(p, k.generator()), k.generator());
    }
  }
}

TEST(Realization, TranspositionFixesCubeRoot) {
  Realization r = s3_x3m2_realization();
  Subgroup h = Subgroup::generate(3, std::vector<Permutation>{Permutation::from_cycles(3, "(1 2)")});
  Subfield k = fixed_field(r, h);
  ASSERT_EQ(k.degree(), 3);
  // A cubic field containing a root of x^3 - 2 is Q(cbrt2).
  auto e = k.express(r.roots()[0]);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(k.field().min_poly_of(*e), (RatPoly{-2, 0, 0, 1}));
  EXPECT_TRUE(is_irreducible(k.field().min_poly()));
}
