#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "galcomp/permutation.hpp"

namespace galcomp {

/// Default cap on the order of any group the kernel will enumerate.
inline constexpr std::size_t kDefaultMaxGroupOrder = 10000;

/// A finite set of permutations of a common degree, kept sorted and
/// deduplicated.
class ElementSet {
 public:
  explicit ElementSet(std::size_t degree = 0) : degree_(degree) {}
  /// Sorts and deduplicates; throws DegreeMismatch if degrees differ.
  ElementSet(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const Permutation& p) const;
  bool is_subset_of(const ElementSet& other) const;

  const std::vector<Permutation>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  const Permutation& front() const { return elements_.front(); }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t degree_;
  std::vector<Permutation> elements_;
};

/// Set union; throws DegreeMismatch.
ElementSet set_union(const ElementSet& a, const ElementSet& b);
/// True if the set contains the identity and is closed under products and
/// inverses, checked over every pair.
bool is_group(const ElementSet& s);

/// A subgroup of a symmetric group, stored as its explicit element list.
/// Copies share the element storage.
class Subgroup {
 public:
  /// The trivial group of degree 0.
  Subgroup();

  static Subgroup trivial(std::size_t degree);

  /// The smallest subgroup containing gens. Throws CapExceeded if it has more
  /// than max_order elements and DegreeMismatch for mixed degrees.
  static Subgroup generate(std::size_t degree, std::span<const Permutation> gens,
                           std::size_t max_order = kDefaultMaxGroupOrder);

  /// Wraps a set already known to be a group. Throws InvalidInput after an
  /// exhaustive closure check fails.
  static Subgroup from_elements(const ElementSet& elements);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_->size(); }
  const ElementSet& elements() const { return *elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool contains(const Permutation& p) const { return elements_->contains(p); }
  bool is_subgroup_of(const Subgroup& other) const { return elements_->is_subset_of(other.elements()); }

  /// Equality of element sets; generators are ignored.
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements() == b.elements(); }

 private:
  std::size_t degree_ = 0;
  std::shared_ptr<const ElementSet> elements_;
  std::vector<Permutation> generators_;
};

/// The set H g K = { h g k }.
ElementSet double_coset(const Subgroup& h, const Permutation& g, const Subgroup& k);

/// Lexicographically least element of H g K.
Permutation canonical_double_coset_rep(const Subgroup& h, const Permutation& g, const Subgroup& k);

/// Splits s into disjoint (H,K)-double cosets and returns the least element of
/// each, in increasing order. Throws InvalidInput if s is not a union of such
/// double cosets.
std::vector<Permutation> decompose_into_double_cosets(const ElementSet& s, const Subgroup& h, const Subgroup& k);

Subgroup intersect(const Subgroup& h, const Subgroup& k);

/// g H g^-1.
Subgroup conjugate(const Subgroup& h, const Permutation& g);

/// |G| / |H|; throws InvalidInput unless H is a subgroup of G.
std::size_t index(const Subgroup& g, const Subgroup& h);

/// A small generating set: each element, in order, that is not yet generated
/// by the earlier picks.
std::vector<Permutation> greedy_generators(const Subgroup& g);

/// Every subgroup of g, ordered by (order, element list).
std::vector<Subgroup> all_subgroups(const Subgroup& g);

/// One representative per conjugacy class of subgroups of g, ordered as in
/// all_subgroups, each the least member of its class.
std::vector<Subgroup> subgroup_class_representatives(const Subgroup& g);

}  // namespace galcomp
