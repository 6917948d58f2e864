#include "galcomp/galois_model.hpp"

#include "galcomp/error.hpp"

namespace galcomp {

GaloisContext::GaloisContext(Subgroup ambient, std::string label, std::optional<RealizationRef> realization)
    : ambient_(std::move(ambient)), label_(std::move(label)), realization_(std::move(realization)) {
  // Subgroup values are closed by construction; re-check for hand-built ones.
  if (!is_group(ambient_.elements())) throw InvalidInput("GaloisContext: ambient set is not a group");
}

FieldNode::FieldNode(std::string label, Subgroup group)
    : label_(std::move(label)), group_(std::make_shared<const Subgroup>(std::move(group))) {}

FieldNode make_field_node(const GaloisContext& ctx, std::string label, const Subgroup& group) {
  if (group.degree() != ctx.degree()) throw DegreeMismatch("field node " + label + ": degree mismatch");
  if (!group.is_subgroup_of(ctx.ambient())) {
    throw InvalidInput("field node " + label + ": group is not contained in the ambient group");
  }
  return FieldNode(std::move(label), group);
}

std::size_t Compositum::deg_left() const { return index(source_.group(), group_); }

std::size_t Compositum::deg_right() const { return index(target_.group(), conjugate(group_, rep_.inverse())); }

std::string Compositum::describe() const {
  return source_.label() + "->" + target_.label() + "@" + rep_.to_string();
}

std::strong_ordering operator<=>(const Compositum& a, const Compositum& b) {
  if (auto c = a.source_ <=> b.source_; c != 0) return c;
  if (auto c = a.target_ <=> b.target_; c != 0) return c;
  return a.rep_ <=> b.rep_;
}

Compositum canonical_compositum(const FieldNode& a, const FieldNode& b, const Permutation& phi) {
  Compositum v;
  v.source_ = a;
  v.target_ = b;
  v.rep_ = canonical_double_coset_rep(a.group(), phi, b.group());
  v.group_ = intersect(a.group(), conjugate(b.group(), v.rep_));
  return v;
}

Compositum make_compositum(const GaloisContext& ctx, const FieldNode& a, const FieldNode& b, const Permutation& phi) {
  if (phi.degree() != ctx.degree()) throw DegreeMismatch("make_compositum: phi has the wrong degree");
  if (!ctx.ambient().contains(phi)) {
    throw InvalidInput("make_compositum: " + phi.to_string() + " is not in the ambient group");
  }
  return canonical_compositum(a, b, phi);
}

Compositum identity_compositum(const FieldNode& a) {
  return canonical_compositum(a, a, Permutation::identity(a.group().degree()));
}

Compositum dual(const Compositum& v) { return canonical_compositum(v.target(), v.source(), v.rep().inverse()); }

ElementSet amalgamation_product_set(const Compositum& v, const Compositum& w) {
  if (v.target() != w.source()) {
    throw PreconditionFailed("amalgamate: " + v.describe() + " and " + w.describe() + " are not composable");
  }
  ElementSet left = double_coset(v.source().group(), v.rep(), v.target().group());
  std::vector<Permutation> tail;
  tail.reserve(w.target().group().order());
  for (const auto& c : w.target().group().elements()) tail.push_back(w.rep() * c);
  std::vector<Permutation> out;
  out.reserve(left.size() * tail.size());
  for (const auto& x : left) {
    for (const auto& t : tail) out.push_back(x * t);
  }
  return ElementSet(v.rep().degree(), std::move(out));
}

std::vector<Compositum> amalgamate(const Compositum& v, const Compositum& w) {
  ElementSet product = amalgamation_product_set(v, w);
  std::vector<Compositum> out;
  for (const auto& rep : decompose_into_double_cosets(product, v.source().group(), w.target().group())) {
    out.push_back(canonical_compositum(v.source(), w.target(), rep));
  }
  return out;
}

}  // namespace galcomp
