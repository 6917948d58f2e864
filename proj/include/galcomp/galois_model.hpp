#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galcomp/subgroup.hpp"

namespace galcomp {

/// Names a built-in concrete number-field realization of an ambient group.
struct RealizationRef {
  std::string name;  // "cyclotomic" or "s3_x3m2"
  int n = 0;         // conductor for "cyclotomic"

  friend bool operator==(const RealizationRef&, const RealizationRef&) = default;
};

/// The ambient Galois group G = Gal(Omega/F) as a permutation group. F is the
/// fixed field of all of G; any group containing every field group and every
/// connecting element is accepted.
class GaloisContext {
 public:
  GaloisContext() = default;
  GaloisContext(Subgroup ambient, std::string label, std::optional<RealizationRef> realization = std::nullopt);

  const Subgroup& ambient() const { return ambient_; }
  std::size_t degree() const { return ambient_.degree(); }
  const std::string& label() const { return label_; }
  const std::optional<RealizationRef>& realization() const { return realization_; }

 private:
  Subgroup ambient_;
  std::string label_;
  std::optional<RealizationRef> realization_;
};

/// A field k_A, represented by its Galois group G_A = Gal(Omega/k_A).
/// Identity is the label: distinct nodes may carry equal groups.
class FieldNode {
 public:
  FieldNode() : group_(std::make_shared<const Subgroup>()) {}
  FieldNode(std::string label, Subgroup group);

  const std::string& label() const { return label_; }
  const Subgroup& group() const { return *group_; }

  friend bool operator==(const FieldNode& a, const FieldNode& b) { return a.label_ == b.label_; }
  friend std::strong_ordering operator<=>(const FieldNode& a, const FieldNode& b) { return a.label_ <=> b.label_; }

 private:
  std::string label_;
  std::shared_ptr<const Subgroup> group_;
};

/// Builds a node whose group is checked to lie in the ambient group.
FieldNode make_field_node(const GaloisContext& ctx, std::string label, const Subgroup& group);

/// An abstract compositum k_V of k_A (source) and k_B (target), identified
/// with its double coset G_A phi G_B. rep() is the least element of that
/// double coset and group() is G_V = G_A cap rep G_B rep^-1.
class Compositum {
 public:
  const FieldNode& source() const { return source_; }
  const FieldNode& target() const { return target_; }
  const Permutation& rep() const { return rep_; }
  const Subgroup& group() const { return group_; }

  /// [G_A : G_V], the degree of k_V over k_A.
  std::size_t deg_left() const;
  /// [G_B : rep^-1 G_V rep], the degree of k_V over k_B.
  std::size_t deg_right() const;
  bool is_identity() const { return source_ == target_ && rep_.is_identity(); }

  std::string describe() const;

  friend bool operator==(const Compositum& a, const Compositum& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.rep_ == b.rep_;
  }
  friend std::strong_ordering operator<=>(const Compositum& a, const Compositum& b);

 private:
  friend Compositum canonical_compositum(const FieldNode& a, const FieldNode& b, const Permutation& phi);

  FieldNode source_;
  FieldNode target_;
  Permutation rep_;
  Subgroup group_;
};

/// Canonicalizes phi within G_A phi G_B and derives G_V. No ambient check.
Compositum canonical_compositum(const FieldNode& a, const FieldNode& b, const Permutation& phi);

/// As canonical_compositum, after checking that phi lies in the ambient group.
Compositum make_compositum(const GaloisContext& ctx, const FieldNode& a, const FieldNode& b, const Permutation& phi);

Compositum identity_compositum(const FieldNode& a);

/// The compositum from B to A with representative rep^-1.
Compositum dual(const Compositum& v);

/// The product set G_A phi_V G_B phi_W G_C. Throws PreconditionFailed unless
/// v.target() == w.source().
ElementSet amalgamation_product_set(const Compositum& v, const Compositum& w);

/// The composita A -> C whose double cosets make up the product set, sorted
/// by representative and without repeats.
std::vector<Compositum> amalgamate(const Compositum& v, const Compositum& w);

}  // namespace galcomp
