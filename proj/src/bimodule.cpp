#include "galcomp/bimodule.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "galcomp/error.hpp"

namespace galcomp {

std::string default_label(const Compositum& v) {
  if (v.is_identity()) return "I_" + v.source().label();
  return v.describe();
}

SimpleOneMorphism make_simple(const Compositum& v, std::string label) {
  if (label.empty()) label = default_label(v);
  return SimpleOneMorphism{v, std::move(label)};
}

void OneMorphism::add(const Compositum& x, std::size_t multiplicity) {
  if (x.source() != source_ || x.target() != target_) {
    throw PreconditionFailed("OneMorphism::add: " + x.describe() + " does not run from " + source_.label() + " to " +
                             target_.label());
  }
  if (multiplicity == 0) return;
  summands_[x] += multiplicity;
}

std::size_t OneMorphism::multiplicity(const Compositum& x) const {
  auto it = summands_.find(x);
  return it == summands_.end() ? 0 : it->second;
}

std::size_t OneMorphism::length() const {
  std::size_t n = 0;
  for (const auto& [x, m] : summands_) n += m;
  return n;
}

std::vector<FusionTerm> fusion_terms(const Compositum& v, const Compositum& w) {
  if (v.target() != w.source()) {
    throw PreconditionFailed("fuse: " + v.describe() + " and " + w.describe() + " are not composable");
  }
  const Subgroup& middle = v.target().group();
  Subgroup v_over_middle = conjugate(v.group(), v.rep().inverse());
  const Subgroup& w_over_middle = w.group();

  std::vector<FusionTerm> terms;
  for (const auto& g : decompose_into_double_cosets(middle.elements(), v_over_middle, w_over_middle)) {
    FusionTerm t;
    t.coset_rep = g;
    t.summand_group = intersect(v_over_middle, conjugate(w_over_middle, g));
    t.output = canonical_compositum(v.source(), w.target(), v.rep() * g * w.rep());
    t.degree_over_middle = index(middle, t.summand_group);
    t.multiplicity = t.output.group().order() / t.summand_group.order();
    terms.push_back(std::move(t));
  }
  return terms;
}

OneMorphism fuse(const Compositum& v, const Compositum& w) {
  OneMorphism out(v.source(), w.target());
  for (const auto& t : fusion_terms(v, w)) out.add(t.output, t.multiplicity);
  return out;
}

OneMorphism fuse(const OneMorphism& v, const Compositum& w) {
  OneMorphism out(v.source(), w.target());
  for (const auto& [x, m] : v.summands()) {
    const OneMorphism xw = fuse(x, w);
    for (const auto& [y, n] : xw.summands()) out.add(y, m * n);
  }
  return out;
}

OneMorphism fuse(const Compositum& v, const OneMorphism& w) {
  OneMorphism out(v.source(), w.target());
  for (const auto& [x, m] : w.summands()) {
    const OneMorphism vx = fuse(v, x);
    for (const auto& [y, n] : vx.summands()) out.add(y, m * n);
  }
  return out;
}

EndField end_field(const SimpleOneMorphism& v) {
  return EndField{v.compositum, v.compositum.deg_left(), v.compositum.deg_right()};
}

std::size_t inv_dim(const OneMorphism& w) {
  if (w.source() != w.target()) return 0;
  return w.multiplicity(identity_compositum(w.source()));
}

bool weak_rigidity_check(const SimpleOneMorphism& v) {
  if (inv_dim(fuse(v.compositum, dual(v.compositum))) == 0) {
    throw InternalInconsistency("weak_rigidity_check: Inv(V (x) V*) vanishes for " + v.label);
  }
  return true;
}

std::size_t split_count(const SimpleOneMorphism& v, const BaseFieldResult& result) {
  auto it = result.h.find(v.compositum.source().label());
  if (it == result.h.end() || result.h.count(v.compositum.target().label()) == 0) {
    throw PreconditionFailed("split_count: base field result does not cover " + v.label);
  }
  return index(it->second, v.compositum.group());
}

std::vector<SimpleOneMorphism> simples_of(const CompositumSystem& system,
                                          const std::map<Compositum, std::string>& names) {
  std::vector<SimpleOneMorphism> out;
  for (const auto& v : system.composita()) {
    auto it = names.find(v);
    out.push_back(make_simple(v, it == names.end() ? std::string() : it->second));
  }
  return out;
}

FusionTable::FusionTable(std::vector<SimpleOneMorphism> simples) : simples_(std::move(simples)) {
  std::sort(simples_.begin(), simples_.end(),
            [](const SimpleOneMorphism& a, const SimpleOneMorphism& b) { return a.compositum < b.compositum; });
  for (std::size_t i = 0; i < simples_.size(); ++i) {
    if (!position_.emplace(simples_[i].compositum, i).second) {
      throw InvalidInput("FusionTable: simple " + simples_[i].label + " listed twice");
    }
  }
  table_.assign(simples_.size(), std::vector<Row>(simples_.size()));
  for (std::size_t i = 0; i < simples_.size(); ++i) {
    for (std::size_t j = 0; j < simples_.size(); ++j) {
      if (!composable(i, j)) continue;
      const OneMorphism product = fuse(simples_[i].compositum, simples_[j].compositum);
      for (const auto& [x, m] : product.summands()) {
        auto it = position_.find(x);
        if (it == position_.end()) {
          throw InvalidInput("FusionTable: " + simples_[i].label + " (x) " + simples_[j].label + " contains " +
                             x.describe() + ", which is not among the simples");
        }
        table_[i][j].emplace_back(it->second, m);
      }
    }
  }
}

std::size_t FusionTable::find(const Compositum& x) const {
  auto it = position_.find(x);
  if (it == position_.end()) throw InvalidInput("FusionTable: unknown simple " + x.describe());
  return it->second;
}

const SimpleOneMorphism& FusionTable::simple(const std::string& label) const {
  for (const auto& s : simples_) {
    if (s.label == label) return s;
  }
  throw InvalidInput("unknown simple label " + label);
}

bool FusionTable::composable(std::size_t v, std::size_t w) const {
  return simples_[v].compositum.target() == simples_[w].compositum.source();
}

std::vector<std::size_t> FusionTable::left_product(std::size_t v, std::size_t w, std::size_t u) const {
  std::vector<std::size_t> out(simples_.size(), 0);
  for (const auto& [x, m] : table_[v][w]) {
    for (const auto& [y, n] : table_[x][u]) out[y] += m * n;
  }
  return out;
}

std::vector<std::size_t> FusionTable::right_product(std::size_t v, std::size_t w, std::size_t u) const {
  std::vector<std::size_t> out(simples_.size(), 0);
  for (const auto& [x, m] : table_[w][u]) {
    for (const auto& [y, n] : table_[v][x]) out[y] += m * n;
  }
  return out;
}

bool FusionTable::is_associative() const {
  const std::size_t n = simples_.size();
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      if (!composable(v, w)) continue;
      for (std::size_t u = 0; u < n; ++u) {
        if (!composable(w, u)) continue;
        if (left_product(v, w, u) != right_product(v, w, u)) return false;
      }
    }
  }
  return true;
}

std::string FusionTable::to_text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < simples_.size(); ++i) {
    for (std::size_t j = 0; j < simples_.size(); ++j) {
      if (!composable(i, j)) continue;
      out << simples_[i].label << " (x) " << simples_[j].label << " = ";
      bool first = true;
      for (const auto& [x, m] : table_[i][j]) {
        if (!first) out << " + ";
        first = false;
        if (m != 1) out << m << "*";
        out << simples_[x].label;
      }
      out << '\n';
    }
  }
  return out.str();
}

std::vector<SimpleOneMorphism> TwoCategory::hom(const std::string& a, const std::string& b) const {
  std::vector<SimpleOneMorphism> out;
  for (const auto& s : simples) {
    if (s.compositum.source().label() == a && s.compositum.target().label() == b) out.push_back(s);
  }
  return out;
}

EndField TwoCategory::identity_endomorphisms(const std::string& a) const {
  for (const auto& x : objects) {
    if (x.label() == a) return end_field(make_simple(identity_compositum(x)));
  }
  throw InvalidInput("unknown object " + a);
}

bool operator==(const TwoCategory& x, const TwoCategory& y) {
  if (x.objects != y.objects || x.simples.size() != y.simples.size()) return false;
  for (std::size_t i = 0; i < x.simples.size(); ++i) {
    if (x.simples[i].compositum != y.simples[i].compositum || x.simples[i].label != y.simples[i].label) return false;
  }
  return true;
}

FusionTable FoldedCategory::table() const { return FusionTable(simples); }

TwoCategory unfold(const std::vector<FieldNode>& identity_decomposition,
                   const std::vector<SimpleOneMorphism>& simples) {
  TwoCategory out;
  std::set<std::string> labels;
  for (const auto& a : identity_decomposition) {
    if (!labels.insert(a.label()).second) {
      throw InvalidInput("unfold: identity summand " + a.label() + " repeated; the identity must be multiplicity-free");
    }
    out.objects.push_back(a);
  }
  std::sort(out.objects.begin(), out.objects.end());
  for (const auto& s : simples) {
    if (labels.count(s.compositum.source().label()) == 0 || labels.count(s.compositum.target().label()) == 0) {
      throw InvalidInput("unfold: simple " + s.label + " is not cut out by any pair of identity summands");
    }
    out.simples.push_back(s);
  }
  std::sort(out.simples.begin(), out.simples.end(),
            [](const SimpleOneMorphism& a, const SimpleOneMorphism& b) { return a.compositum < b.compositum; });
  return out;
}

TwoCategory unfold(const FoldedCategory& folded) { return unfold(folded.identity_summands, folded.simples); }

FoldedCategory fold(const TwoCategory& category, const std::vector<std::string>& objects) {
  if (objects.empty()) throw InvalidInput("fold: empty object selection");
  std::set<std::string> chosen(objects.begin(), objects.end());
  FoldedCategory out;
  for (const auto& a : category.objects) {
    if (chosen.count(a.label()) != 0) out.identity_summands.push_back(a);
  }
  if (out.identity_summands.size() != chosen.size()) throw InvalidInput("fold: selection names an unknown object");
  for (const auto& s : category.simples) {
    if (chosen.count(s.compositum.source().label()) != 0 && chosen.count(s.compositum.target().label()) != 0) {
      out.simples.push_back(s);
    }
  }
  return out;
}

TwoCategory two_category_of(const CompositumSystem& closed_system, const std::map<Compositum, std::string>& names) {
  if (!closed_system.closed()) throw PreconditionFailed("two_category_of: system is not closed");
  std::vector<FieldNode> objects;
  for (const auto& [label, node] : closed_system.nodes()) objects.push_back(node);
  return unfold(objects, simples_of(closed_system, names));
}

}  // namespace galcomp
