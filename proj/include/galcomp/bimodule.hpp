#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "galcomp/closure.hpp"

namespace galcomp {

/// A simple k_A-k_B bimodule V; End_2(V) is the compositum field k_V.
struct SimpleOneMorphism {
  Compositum compositum;
  std::string label;
};

/// "I_A" for identities, otherwise Compositum::describe().
std::string default_label(const Compositum& v);

SimpleOneMorphism make_simple(const Compositum& v, std::string label = {});

/// A semisimple 1-morphism: simple summands with positive multiplicities.
class OneMorphism {
 public:
  OneMorphism(FieldNode source, FieldNode target) : source_(std::move(source)), target_(std::move(target)) {}

  const FieldNode& source() const { return source_; }
  const FieldNode& target() const { return target_; }
  const std::map<Compositum, std::size_t>& summands() const { return summands_; }

  /// Throws PreconditionFailed if x does not run from source to target.
  void add(const Compositum& x, std::size_t multiplicity = 1);
  std::size_t multiplicity(const Compositum& x) const;
  /// Number of simple summands counted with multiplicity.
  std::size_t length() const;

  friend bool operator==(const OneMorphism& a, const OneMorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.summands_ == b.summands_;
  }

 private:
  FieldNode source_;
  FieldNode target_;
  std::map<Compositum, std::size_t> summands_;
};

/// One field summand of k_V (x)_{k_B} k_W. With G_V' = phi_V^-1 G_V phi_V,
/// summands correspond to (G_V', G_W)-double cosets g in G_B.
struct FusionTerm {
  Permutation coset_rep;  // least element of G_V' g G_W
  Subgroup summand_group;  // G_V' cap g G_W g^-1, the summand field positioned over k_B
  Compositum output;      // relative position phi_V g phi_W of k_A and k_C
  /// [G_B : summand_group]: degree of the summand field over k_B.
  std::size_t degree_over_middle = 0;
  /// [k_i : k_X]: copies of the simple bimodule X inside this summand.
  std::size_t multiplicity = 0;
};

/// Throws PreconditionFailed unless v.target() == w.source().
std::vector<FusionTerm> fusion_terms(const Compositum& v, const Compositum& w);

/// V (x) W as a direct sum of simples. The multiplicity of X adds up
/// [k_i : k_X] over the field summands k_i whose k_A, k_C compositum is X.
OneMorphism fuse(const Compositum& v, const Compositum& w);
inline OneMorphism fuse(const SimpleOneMorphism& v, const SimpleOneMorphism& w) {
  return fuse(v.compositum, w.compositum);
}

/// The summands of V (x) W extended linearly over a semisimple left factor.
OneMorphism fuse(const OneMorphism& v, const Compositum& w);
OneMorphism fuse(const Compositum& v, const OneMorphism& w);

struct EndField {
  Compositum compositum;
  std::size_t deg_left = 0;   // [k_V : k_A]
  std::size_t deg_right = 0;  // [k_V : k_B]
};

EndField end_field(const SimpleOneMorphism& v);

/// Multiplicity of I_A in W, i.e. dim over k_A of Inv(W) = Hom_2(I_A, W).
/// Zero when W is not an endomorphism of a single node.
std::size_t inv_dim(const OneMorphism& w);

/// True iff Inv(V (x) V*) != 0. A false result cannot happen in this model and
/// raises InternalInconsistency instead.
bool weak_rigidity_check(const SimpleOneMorphism& v);

/// Number of simple summands of V after base change to the separable
/// closure of k: [k_V : k] = [H_A : G_V].
std::size_t split_count(const SimpleOneMorphism& v, const BaseFieldResult& result);

/// Simples of a system in canonical order, labelled from names when present.
std::vector<SimpleOneMorphism> simples_of(const CompositumSystem& system,
                                          const std::map<Compositum, std::string>& names = {});

/// Fusion rules among a finite set of simples closed under fusion.
class FusionTable {
 public:
  using Row = std::vector<std::pair<std::size_t, std::size_t>>;  // (simple index, multiplicity)

  /// Throws InvalidInput if some product has a summand outside simples.
  explicit FusionTable(std::vector<SimpleOneMorphism> simples);

  const std::vector<SimpleOneMorphism>& simples() const { return simples_; }
  std::size_t find(const Compositum& x) const;
  const SimpleOneMorphism& simple(const std::string& label) const;

  /// Empty for non-composable pairs.
  const Row& product(std::size_t v, std::size_t w) const { return table_[v][w]; }
  bool composable(std::size_t v, std::size_t w) const;

  /// ((v w) u) and (v (w u)) as multiplicity vectors over simples.
  std::vector<std::size_t> left_product(std::size_t v, std::size_t w, std::size_t u) const;
  std::vector<std::size_t> right_product(std::size_t v, std::size_t w, std::size_t u) const;
  bool is_associative() const;

  std::string to_text() const;

 private:
  std::vector<SimpleOneMorphism> simples_;
  std::map<Compositum, std::size_t> position_;
  std::vector<std::vector<Row>> table_;
};

/// A multi-object 2-category: objects with simple 1-identities and simple
/// 1-morphisms between them.
struct TwoCategory {
  std::vector<FieldNode> objects;
  std::vector<SimpleOneMorphism> simples;

  /// Simples V in Hom_1(a, b).
  std::vector<SimpleOneMorphism> hom(const std::string& a, const std::string& b) const;
  /// End_2(I_a), i.e. the identity compositum of a.
  EndField identity_endomorphisms(const std::string& a) const;

  friend bool operator==(const TwoCategory& x, const TwoCategory& y);
};

/// A single-object monoidal category whose identity is the direct sum of the
/// listed simple identities.
struct FoldedCategory {
  std::vector<FieldNode> identity_summands;
  std::vector<SimpleOneMorphism> simples;

  std::size_t identity_length() const { return identity_summands.size(); }
  FusionTable table() const;
};

/// Reorganizes a folded category into a 2-category with objects S, one per
/// identity summand. Hom_1(A,B) holds the simples V with I_A V I_B = V.
/// Throws InvalidInput on a repeated identity summand or a simple whose ends
/// are not among them.
TwoCategory unfold(const std::vector<FieldNode>& identity_decomposition,
                   const std::vector<SimpleOneMorphism>& simples);
TwoCategory unfold(const FoldedCategory& folded);

/// Combines the listed objects into one object whose identity is the sum of
/// their identities. Throws InvalidInput on an empty or unknown selection.
FoldedCategory fold(const TwoCategory& category, const std::vector<std::string>& objects);

/// The full bimodule 2-category on a system's closure.
TwoCategory two_category_of(const CompositumSystem& closed_system,
                            const std::map<Compositum, std::string>& names = {});

}  // namespace galcomp
