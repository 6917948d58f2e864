#include <gtest/gtest.h>

#include "galcomp/bimodule.hpp"
#include "galcomp/error.hpp"

using namespace galcomp;

namespace {

Subgroup gen(std::size_t n, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> g;
  for (const char* c : cycles) g.push_back(Permutation::from_cycles(n, c));
  return Subgroup::generate(n, g);
}

CompositumSystem c2() {
  CompositumSystem s(GaloisContext(gen(2, {"(0 1)"}), "c2"));
  s.add_node("C", Subgroup::trivial(2));
  s.add_compositum("C", "C", Permutation::from_cycles(2, "(0 1)"));
  return close(s);
}

CompositumSystem s4_system() {
  CompositumSystem s(GaloisContext(gen(4, {"(0 1 2 3)", "(0 1)"}), "s4"));
  s.add_node("A", gen(4, {"(0 1)"}));
  s.add_node("B", gen(4, {"(0 1 2 3)"}));
  s.add_compositum("A", "B", Permutation::identity(4));
  return close(s);
}

}  // namespace

TEST(Fusion, ComplexConjugationSquaresToIdentity) {
  CompositumSystem s = c2();
  ASSERT_EQ(s.composita().size(), 2u);
  const Compositum& i = s.composita()[0];
  const Compositum& a = s.composita()[1];
  ASSERT_TRUE(i.is_identity());
  OneMorphism aa = fuse(a, a);
  EXPECT_EQ(aa.length(), 1u);
  EXPECT_EQ(aa.multiplicity(i), 1u);
  EXPECT_EQ(dual(a), a);
}

TEST(Fusion, CubeRootSelfProduct) {
  FieldNode a("A", gen(3, {"(1 2)"}));
  Compositum v = canonical_compositum(a, a, Permutation::from_cycles(3, "(0 1 2)"));
  OneMorphism vv = fuse(v, dual(v));
  Compositum i = identity_compositum(a);
  EXPECT_EQ(vv.multiplicity(i), 2u);
  EXPECT_EQ(vv.multiplicity(v), 1u);
  EXPECT_EQ(inv_dim(vv), 2u);
  EXPECT_TRUE(weak_rigidity_check(make_simple(v)));
  EndField e = end_field(make_simple(v));
  EXPECT_EQ(e.deg_left, 2u);
  EXPECT_EQ(e.deg_right, 2u);
}

TEST(Fusion, DimensionLaw) {
  // [k_V:k_A][k_W:k_B] = sum over X of mult_X [k_X:k_A], dimensions over k_A.
  CompositumSystem s = s4_system();
  for (const auto& v : s.composita()) {
    for (const auto& w : s.composita()) {
      if (v.target() != w.source()) continue;
      std::size_t lhs = v.deg_left() * w.deg_left();
      std::size_t rhs = 0;
      const OneMorphism vw = fuse(v, w);
      for (const auto& [x, m] : vw.summands()) rhs += m * x.deg_left();
      EXPECT_EQ(lhs, rhs) << v.describe() << " (x) " << w.describe();
      std::size_t terms = 0;
      for (const auto& t : fusion_terms(v, w)) terms += t.degree_over_middle;
      EXPECT_EQ(terms, v.deg_right() * w.deg_left());
    }
  }
}

TEST(Fusion, UnitLawsAndAssociativity) {
  CompositumSystem s = s4_system();
  FusionTable table(simples_of(s));
  EXPECT_TRUE(table.is_associative());
  for (const auto& v : s.composita()) {
    OneMorphism l = fuse(identity_compositum(v.source()), v);
    OneMorphism r = fuse(v, identity_compositum(v.target()));
    EXPECT_EQ(l.length(), 1u);
    EXPECT_EQ(l.multiplicity(v), 1u);
    EXPECT_EQ(r.multiplicity(v), 1u);
    EXPECT_TRUE(weak_rigidity_check(make_simple(v)));
  }
}

TEST(Fusion, NonComposablePairs) {
  CompositumSystem s = s4_system();
  const Compositum* ab = nullptr;
  for (const auto& v : s.composita())
    if (v.source().label() == "A" && v.target().label() == "B") ab = &v;
  ASSERT_NE(ab, nullptr);
  EXPECT_THROW(fuse(*ab, *ab), PreconditionFailed);
  EXPECT_THROW(fusion_terms(*ab, *ab), PreconditionFailed);
}

TEST(TwoCategory, FoldUnfoldRoundTrip) {
  CompositumSystem s(GaloisContext(gen(2, {"(0 1)"}), "rc"));
  s.add_node("R", gen(2, {"(0 1)"}));
  s.add_node("C", Subgroup::trivial(2));
  s.add_compositum("C", "R", Permutation::identity(2));
  CompositumSystem closed = close(s);
  TwoCategory cat = two_category_of(closed);
  EXPECT_EQ(cat.objects.size(), 2u);
  FoldedCategory folded = fold(cat, {"C", "R"});
  EXPECT_EQ(folded.identity_length(), 2u);
  EXPECT_TRUE(folded.table().is_associative());
  EXPECT_EQ(unfold(folded), cat);
  EXPECT_EQ(cat.hom("C", "R").size(), 1u);
  EXPECT_EQ(cat.hom("R", "R").size(), 1u);
  EXPECT_EQ(cat.hom("C", "C").size(), 2u);
  EXPECT_THROW(fold(cat, {}), InvalidInput);
  EXPECT_THROW(fold(cat, {"Q"}), InvalidInput);
}

TEST(BaseField, SplitCount) {
  CompositumSystem s = c2();
  BaseFieldResult bf = base_field(s);
  EXPECT_EQ(split_count(make_simple(s.composita()[1]), bf), 2u);
  EXPECT_EQ(split_count(make_simple(s.composita()[0]), bf), 2u);
}
