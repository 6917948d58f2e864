#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "galcomp/error.hpp"
#include "galcomp/subgroup.hpp"

using namespace galcomp;

namespace {

std::vector<Permutation> all_perms(std::size_t n) {
  std::vector<Permutation::Point> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Subgroup gen(std::size_t n, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> g;
  for (const char* c : cycles) g.push_back(Permutation::from_cycles(n, c));
  return Subgroup::generate(n, g);
}

std::set<Permutation> brute_double_coset(const Subgroup& h, const Permutation& g, const Subgroup& k) {
  std::set<Permutation> out;
  for (const auto& a : h.elements())
    for (const auto& b : k.elements()) out.insert(a * g * b);
  return out;
}

}  // namespace

TEST(Permutation, ComposeAppliesRightFactorFirst) {
  for (const auto& p : all_perms(3)) {
    for (const auto& q : all_perms(3)) {
      Permutation pq = p * q;
      for (Permutation::Point i = 0; i < 3; ++i) EXPECT_EQ(pq(i), p(q(i)));
    }
  }
  auto a = Permutation::from_cycles(3, "(0 1)");
  auto b = Permutation::from_cycles(3, "(1 2)");
  EXPECT_EQ((a * b).images(), (std::vector<Permutation::Point>{1, 2, 0}));
}

TEST(Permutation, GroupAxiomsOnS4) {
  auto s4 = all_perms(4);
  auto e = Permutation::identity(4);
  for (const auto& p : s4) {
    EXPECT_EQ(p * p.inverse(), e);
    EXPECT_EQ(p.inverse() * p, e);
    for (const auto& q : s4) {
      const auto& r = s4[(p.images()[0] * 7 + q.images()[1]) % s4.size()];
      EXPECT_EQ((p * q) * r, p * (q * r));
    }
  }
}

TEST(Permutation, CycleStrings) {
  auto p = Permutation::from_cycles(5, "(0 2 4)(1 3)");
  EXPECT_EQ(p.images(), (std::vector<Permutation::Point>{2, 3, 4, 1, 0}));
  EXPECT_EQ(Permutation::from_cycles(5, p.to_cycle_string()), p);
  EXPECT_TRUE(Permutation::from_cycles(3, "()").is_identity());
  EXPECT_THROW(Permutation::from_cycles(3, "(0 3)"), InvalidInput);
  EXPECT_THROW(Permutation::from_cycles(3, "(0 1 0)"), InvalidInput);
  EXPECT_THROW(Permutation({0, 0, 1}), InvalidInput);
}

TEST(Subgroup, GenerateOrders) {
  EXPECT_EQ(gen(4, {"(0 1 2 3)", "(0 1)"}).order(), 24u);
  EXPECT_EQ(gen(4, {"(0 1)(2 3)", "(0 2)(1 3)"}).order(), 4u);
  EXPECT_EQ(gen(5, {"(0 1 2 3 4)"}).order(), 5u);
  EXPECT_EQ(Subgroup::generate(3, std::vector<Permutation>{}).order(), 1u);
  EXPECT_THROW(Subgroup::generate(5, std::vector<Permutation>{Permutation::from_cycles(5, "(0 1 2 3 4)"),
                                                              Permutation::from_cycles(5, "(0 1)")},
                                  100),
               CapExceeded);
}

TEST(Subgroup, IntersectConjugateIndexAgainstBruteForce) {
  Subgroup s4 = gen(4, {"(0 1 2 3)", "(0 1)"});
  auto subs = all_subgroups(s4);
  EXPECT_EQ(subs.size(), 30u);
  EXPECT_EQ(subgroup_class_representatives(s4).size(), 11u);
  for (std::size_t i = 0; i < subs.size(); i += 3) {
    for (std::size_t j = 0; j < subs.size(); j += 5) {
      Subgroup m = intersect(subs[i], subs[j]);
      for (const auto& p : s4.elements()) {
        EXPECT_EQ(m.contains(p), subs[i].contains(p) && subs[j].contains(p));
      }
    }
    for (const auto& g : s4.elements()) {
      Subgroup c = conjugate(subs[i], g);
      for (const auto& h : subs[i].elements()) EXPECT_TRUE(c.contains(g * h * g.inverse()));
      EXPECT_EQ(c.order(), subs[i].order());
    }
    EXPECT_EQ(index(s4, subs[i]) * subs[i].order(), 24u);
  }
}

TEST(Subgroup, DoubleCosetsPartitionAndUseLeastRep) {
  Subgroup s4 = gen(4, {"(0 1 2 3)", "(0 1)"});
  auto subs = all_subgroups(s4);
  for (std::size_t i = 0; i < subs.size(); i += 4) {
    for (std::size_t j = 1; j < subs.size(); j += 6) {
      const Subgroup& h = subs[i];
      const Subgroup& k = subs[j];
      std::set<Permutation> seen;
      for (const auto& rep : decompose_into_double_cosets(s4.elements(), h, k)) {
        auto dc = brute_double_coset(h, rep, k);
        EXPECT_EQ(rep, *dc.begin());
        EXPECT_EQ(double_coset(h, rep, k).size(), dc.size());
        for (const auto& p : dc) {
          EXPECT_TRUE(seen.insert(p).second);
          EXPECT_EQ(canonical_double_coset_rep(h, p, k), rep);
        }
      }
      EXPECT_EQ(seen.size(), 24u);
    }
  }
}

TEST(Subgroup, IsGroupChecksClosure) {
  Subgroup s3 = gen(3, {"(0 1 2)", "(0 1)"});
  EXPECT_TRUE(is_group(s3.elements()));
  ElementSet not_group(3, {Permutation::identity(3), Permutation::from_cycles(3, "(0 1 2)")});
  EXPECT_FALSE(is_group(not_group));
  EXPECT_THROW(Subgroup::from_elements(not_group), InvalidInput);
}

TEST(Subgroup, GreedyGeneratorsGenerate) {
  Subgroup s4 = gen(4, {"(0 1 2 3)", "(0 1)"});
  for (const auto& h : all_subgroups(s4)) {
    auto g = greedy_generators(h);
    EXPECT_EQ(Subgroup::generate(4, g), h);
  }
}
