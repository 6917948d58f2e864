#include "galcomp/closure.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "galcomp/error.hpp"

namespace galcomp {

const char* to_string(DerivationKind kind) {
  switch (kind) {
    case DerivationKind::Input: return "input";
    case DerivationKind::Identity: return "identity";
    case DerivationKind::Dual: return "dual";
    case DerivationKind::Amalgamation: return "amalgamation";
  }
  return "?";
}

const FieldNode& CompositumSystem::add_node(const std::string& label, const Subgroup& group) {
  if (nodes_.count(label) != 0) throw InvalidInput("duplicate field node label " + label);
  auto [it, _] = nodes_.emplace(label, make_field_node(ctx_, label, group));
  closed_ = false;
  return it->second;
}

const FieldNode& CompositumSystem::node(const std::string& label) const {
  auto it = nodes_.find(label);
  if (it == nodes_.end()) throw InvalidInput("unknown field node " + label);
  return it->second;
}

Compositum CompositumSystem::add_compositum(const std::string& source, const std::string& target,
                                            const Permutation& phi) {
  Compositum v = make_compositum(ctx_, node(source), node(target), phi);
  insert(v, Derivation{v, DerivationKind::Input, {}});
  return v;
}

bool CompositumSystem::insert(const Compositum& v, Derivation why) {
  if (!has_node(v.source().label()) || !has_node(v.target().label())) {
    throw InvalidInput("compositum " + v.describe() + " refers to a node outside the system");
  }
  auto it = std::lower_bound(composita_.begin(), composita_.end(), v);
  if (it != composita_.end() && *it == v) return false;
  composita_.insert(it, v);
  derivations_.push_back(std::move(why));
  closed_ = false;
  return true;
}

bool CompositumSystem::contains(const Compositum& v) const {
  return std::binary_search(composita_.begin(), composita_.end(), v);
}

std::vector<Compositum> CompositumSystem::between(const std::string& a, const std::string& b) const {
  std::vector<Compositum> out;
  for (const auto& v : composita_) {
    if (v.source().label() == a && v.target().label() == b) out.push_back(v);
  }
  return out;
}

CompositumSystem close(const CompositumSystem& system, const ClosureOptions& options) {
  CompositumSystem out = system;
  std::vector<Compositum> order = system.composita();

  auto add = [&](const Compositum& v, Derivation why) {
    if (!out.insert(v, std::move(why))) return false;
    if (out.composita_.size() > options.max_composita) {
      throw CapExceeded("close: more than " + std::to_string(options.max_composita) + " composita");
    }
    order.push_back(v);
    return true;
  };

  for (const auto& [label, node] : out.nodes()) {
    Compositum id = identity_compositum(node);
    add(id, Derivation{id, DerivationKind::Identity, {}});
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    Compositum d = dual(order[i]);
    add(d, Derivation{d, DerivationKind::Dual, {order[i]}});
  }

  // Every pair with at least one member from the latest round is amalgamated.
  std::size_t done = 0;
  while (done < order.size()) {
    const std::size_t end = order.size();
    for (std::size_t i = 0; i < end; ++i) {
      for (std::size_t j = (i < done ? done : 0); j < end; ++j) {
        const Compositum v = order[i];
        const Compositum w = order[j];
        if (v.target() != w.source()) continue;
        for (const auto& x : amalgamate(v, w)) {
          if (add(x, Derivation{x, DerivationKind::Amalgamation, {v, w}})) {
            Compositum d = dual(x);
            add(d, Derivation{d, DerivationKind::Dual, {x}});
          }
        }
      }
    }
    done = end;
  }
  out.closed_ = true;
  return out;
}

bool is_closed_under_operations(const CompositumSystem& system) {
  for (const auto& [label, node] : system.nodes()) {
    if (!system.contains(identity_compositum(node))) return false;
  }
  for (const auto& v : system.composita()) {
    if (!system.contains(dual(v))) return false;
  }
  for (const auto& v : system.composita()) {
    for (const auto& w : system.composita()) {
      if (v.target() != w.source()) continue;
      for (const auto& x : amalgamate(v, w)) {
        if (!system.contains(x)) return false;
      }
    }
  }
  return true;
}

bool replay_derivations(const CompositumSystem& system) {
  for (const auto& d : system.derivations()) {
    if (!system.contains(d.result)) return false;
    for (const auto& p : d.parents) {
      if (!system.contains(p)) return false;
    }
    switch (d.kind) {
      case DerivationKind::Input:
        break;
      case DerivationKind::Identity:
        if (!d.result.is_identity() || d.result != identity_compositum(d.result.source())) return false;
        break;
      case DerivationKind::Dual:
        if (d.parents.size() != 1 || dual(d.parents[0]) != d.result) return false;
        break;
      case DerivationKind::Amalgamation: {
        if (d.parents.size() != 2) return false;
        auto outs = amalgamate(d.parents[0], d.parents[1]);
        if (std::find(outs.begin(), outs.end(), d.result) == outs.end()) return false;
        break;
      }
    }
  }
  return true;
}

bool is_connected(const CompositumSystem& system) {
  const auto& nodes = system.nodes();
  if (nodes.size() <= 1) return true;
  std::map<std::string, std::set<std::string>> adjacent;
  for (const auto& v : system.composita()) {
    adjacent[v.source().label()].insert(v.target().label());
    adjacent[v.target().label()].insert(v.source().label());
  }
  std::set<std::string> seen{nodes.begin()->first};
  std::deque<std::string> queue{nodes.begin()->first};
  while (!queue.empty()) {
    std::string a = queue.front();
    queue.pop_front();
    for (const auto& b : adjacent[a]) {
      if (seen.insert(b).second) queue.push_back(b);
    }
  }
  return seen.size() == nodes.size();
}

Subgroup h_group(const CompositumSystem& system, const std::string& label) {
  if (!system.closed()) throw PreconditionFailed("h_group: system is not closed");
  const FieldNode& a = system.node(label);
  ElementSet h(a.group().degree());
  for (const auto& v : system.between(label, label)) h = set_union(h, double_coset(a.group(), v.rep(), a.group()));
  if (!is_group(h)) {
    throw TheoremViolation("h_group: union of double cosets over E_{" + label + "," + label +
                           "} is not closed under multiplication and inversion");
  }
  return Subgroup::from_elements(h);
}

BaseFieldResult base_field(const CompositumSystem& system) {
  if (!system.closed()) throw PreconditionFailed("base_field: system is not closed");
  if (!is_connected(system)) throw PreconditionFailed("base_field: system is not connected");
  if (system.nodes().empty()) throw PreconditionFailed("base_field: system has no field nodes");

  BaseFieldResult result;
  for (const auto& [label, node] : system.nodes()) {
    Subgroup h = h_group(system, label);
    result.indices[label] = index(h, node.group());
    result.h.emplace(label, std::move(h));
  }
  result.root = system.nodes().begin()->first;
  result.base_group = result.h.at(result.root);

  result.witnesses = verify_triangles(result, system).entries;
  for (const auto& w : result.witnesses) {
    if (!w.h_conjugate) {
      throw TheoremViolation("base_field: conjugating H_" + w.compositum.target().label() + " by the representative of " +
                             w.compositum.describe() + " does not give H_" + w.compositum.source().label());
    }
  }
  return result;
}

bool TriangleReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const TriangleWitness& w) { return w.passed(); });
}

TriangleReport verify_triangles(const BaseFieldResult& result, const CompositumSystem& system) {
  TriangleReport report;
  for (const auto& v : system.composita()) {
    TriangleWitness w{v};
    const Subgroup& ha = result.h.at(v.source().label());
    const Subgroup& hb = result.h.at(v.target().label());
    w.gv_in_ga = v.group().is_subgroup_of(v.source().group());
    w.ga_in_ha = v.source().group().is_subgroup_of(ha);
    w.h_conjugate = conjugate(hb, v.rep()) == ha;
    report.entries.push_back(std::move(w));
  }
  return report;
}

}  // namespace galcomp
