#include "galcomp/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>

#include "galcomp/error.hpp"

namespace galcomp {

namespace {

void require_degree(std::size_t expected, const Permutation& p, const char* where) {
  if (p.degree() != expected) {
    throw DegreeMismatch(std::string(where) + ": expected degree " + std::to_string(expected) + ", got " +
                         std::to_string(p.degree()));
  }
}

bool lex_less_subgroup(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements().elements() < b.elements().elements();
}

}  // namespace

ElementSet::ElementSet(std::size_t degree, std::vector<Permutation> elements)
    : degree_(degree), elements_(std::move(elements)) {
  for (const auto& p : elements_) require_degree(degree_, p, "ElementSet");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool ElementSet::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("set_union: degree mismatch");
  std::vector<Permutation> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ElementSet(a.degree(), std::move(out));
}

bool is_group(const ElementSet& s) {
  if (!s.contains(Permutation::identity(s.degree()))) return false;
  for (const auto& x : s) {
    if (!s.contains(x.inverse())) return false;
    for (const auto& y : s) {
      if (!s.contains(x * y)) return false;
    }
  }
  return true;
}

Subgroup::Subgroup() : elements_(std::make_shared<const ElementSet>(0, std::vector{Permutation::identity(0)})) {}

Subgroup Subgroup::trivial(std::size_t degree) {
  Subgroup g;
  g.degree_ = degree;
  g.elements_ = std::make_shared<const ElementSet>(degree, std::vector{Permutation::identity(degree)});
  return g;
}

Subgroup Subgroup::generate(std::size_t degree, std::span<const Permutation> gens, std::size_t max_order) {
  for (const auto& g : gens) require_degree(degree, g, "subgroup_closure");

  std::vector<Permutation> nontrivial;
  for (const auto& g : gens) {
    if (!g.is_identity()) nontrivial.push_back(g);
  }

  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  auto id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  // Right multiplication by generators reaches every element of a finite group.
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : nontrivial) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > max_order) {
          throw CapExceeded("subgroup_closure: group order exceeds cap " + std::to_string(max_order));
        }
        queue.push_back(std::move(y));
      }
    }
  }

  Subgroup out;
  out.degree_ = degree;
  out.elements_ = std::make_shared<const ElementSet>(degree, std::vector<Permutation>(seen.begin(), seen.end()));
  out.generators_.assign(gens.begin(), gens.end());
  return out;
}

Subgroup Subgroup::from_elements(const ElementSet& elements) {
  if (!is_group(elements)) throw InvalidInput("from_elements: set is not closed under products and inverses");
  Subgroup out;
  out.degree_ = elements.degree();
  out.elements_ = std::make_shared<const ElementSet>(elements);
  out.generators_ = elements.elements();
  return out;
}

ElementSet double_coset(const Subgroup& h, const Permutation& g, const Subgroup& k) {
  require_degree(h.degree(), g, "double_coset");
  require_degree(k.degree(), g, "double_coset");
  std::vector<Permutation> gk;
  gk.reserve(k.order());
  for (const auto& y : k.elements()) gk.push_back(g * y);
  std::vector<Permutation> out;
  out.reserve(h.order() * k.order());
  for (const auto& x : h.elements()) {
    for (const auto& z : gk) out.push_back(x * z);
  }
  return ElementSet(g.degree(), std::move(out));
}

Permutation canonical_double_coset_rep(const Subgroup& h, const Permutation& g, const Subgroup& k) {
  return double_coset(h, g, k).front();
}

std::vector<Permutation> decompose_into_double_cosets(const ElementSet& s, const Subgroup& h, const Subgroup& k) {
  if (s.degree() != h.degree() || s.degree() != k.degree()) throw DegreeMismatch("decompose_into_double_cosets");
  std::vector<Permutation> reps;
  std::vector<bool> claimed(s.size(), false);
  const auto& elems = s.elements();
  // The least unclaimed element is the least element of its own double coset,
  // since smaller elements of s were claimed by other, disjoint, cosets.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (claimed[i]) continue;
    ElementSet coset = double_coset(h, elems[i], k);
    for (const auto& x : coset) {
      auto it = std::lower_bound(elems.begin(), elems.end(), x);
      if (it == elems.end() || *it != x) {
        throw InvalidInput("decompose_into_double_cosets: set is not a union of double cosets (element " +
                           x.to_string() + " missing)");
      }
      claimed[static_cast<std::size_t>(it - elems.begin())] = true;
    }
    reps.push_back(elems[i]);
  }
  return reps;
}

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  if (h.degree() != k.degree()) throw DegreeMismatch("intersect");
  std::vector<Permutation> common;
  std::set_intersection(h.elements().begin(), h.elements().end(), k.elements().begin(), k.elements().end(),
                        std::back_inserter(common));
  return Subgroup::from_elements(ElementSet(h.degree(), std::move(common)));
}

Subgroup conjugate(const Subgroup& h, const Permutation& g) {
  require_degree(h.degree(), g, "conjugate");
  Permutation gi = g.inverse();
  std::vector<Permutation> out;
  out.reserve(h.order());
  for (const auto& x : h.elements()) out.push_back(g * x * gi);
  return Subgroup::from_elements(ElementSet(h.degree(), std::move(out)));
}

std::size_t index(const Subgroup& g, const Subgroup& h) {
  if (!h.is_subgroup_of(g)) throw InvalidInput("index: second argument is not a subgroup of the first");
  return g.order() / h.order();
}

std::vector<Subgroup> all_subgroups(const Subgroup& g) {
  std::vector<Subgroup> found;
  std::set<std::vector<Permutation>> keys;
  auto add = [&](const Subgroup& s) {
    if (keys.insert(s.elements().elements()).second) {
      found.push_back(s);
      return true;
    }
    return false;
  };
  add(Subgroup::trivial(g.degree()));
  for (const auto& x : g.elements()) add(Subgroup::generate(g.degree(), std::span(&x, 1)));
  // Every subgroup of a finite group is a join of cyclic subgroups.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (found[j].is_subgroup_of(found[i]) || found[i].is_subgroup_of(found[j])) continue;
      std::vector<Permutation> gens = found[i].generators();
      const auto& more = found[j].generators();
      gens.insert(gens.end(), more.begin(), more.end());
      add(Subgroup::generate(g.degree(), gens));
    }
  }
  std::sort(found.begin(), found.end(), lex_less_subgroup);
  return found;
}

std::vector<Subgroup> subgroup_class_representatives(const Subgroup& g) {
  std::vector<Subgroup> all = all_subgroups(g);
  std::set<std::vector<Permutation>> covered;
  std::vector<Subgroup> reps;
  for (const auto& s : all) {
    if (covered.count(s.elements().elements()) != 0) continue;
    reps.push_back(s);
    for (const auto& x : g.elements()) covered.insert(conjugate(s, x).elements().elements());
  }
  return reps;
}

std::vector<Permutation> greedy_generators(const Subgroup& g) {
  std::vector<Permutation> gens;
  Subgroup current = Subgroup::trivial(g.degree());
  for (const auto& e : g.elements()) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = Subgroup::generate(g.degree(), gens, g.order());
  }
  return gens;
}

}  // namespace galcomp
