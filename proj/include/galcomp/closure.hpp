#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "galcomp/galois_model.hpp"

namespace galcomp {

enum class DerivationKind { Input, Identity, Dual, Amalgamation };

const char* to_string(DerivationKind kind);

/// How a compositum entered the system. Dual lists one parent, Amalgamation
/// lists the composable pair (V, W) whose amalgamation contains the result.
struct Derivation {
  Compositum result;
  DerivationKind kind = DerivationKind::Input;
  std::vector<Compositum> parents;
};

struct ClosureOptions {
  /// Closure gives up with CapExceeded once E grows past this size. The
  /// result is then inconclusive, not a counterexample.
  std::size_t max_composita = 100000;
};

/// A finite set K of field nodes and a finite set E of composita between them.
class CompositumSystem {
 public:
  CompositumSystem() = default;
  explicit CompositumSystem(GaloisContext ctx) : ctx_(std::move(ctx)) {}

  const GaloisContext& context() const { return ctx_; }

  /// Throws InvalidInput on a duplicate label or a group outside the ambient.
  const FieldNode& add_node(const std::string& label, const Subgroup& group);
  /// Adds the canonical compositum for (source, target, phi); returns it.
  Compositum add_compositum(const std::string& source, const std::string& target, const Permutation& phi);
  /// Adds an already canonical compositum whose nodes belong to this system.
  bool insert(const Compositum& v, Derivation why);

  const FieldNode& node(const std::string& label) const;
  bool has_node(const std::string& label) const { return nodes_.count(label) != 0; }
  const std::map<std::string, FieldNode>& nodes() const { return nodes_; }

  /// E in canonical order.
  const std::vector<Compositum>& composita() const { return composita_; }
  bool contains(const Compositum& v) const;
  /// E_{A,B}.
  std::vector<Compositum> between(const std::string& a, const std::string& b) const;

  bool closed() const { return closed_; }
  const std::vector<Derivation>& derivations() const { return derivations_; }

 private:
  friend CompositumSystem close(const CompositumSystem& system, const ClosureOptions& options);

  GaloisContext ctx_;
  std::map<std::string, FieldNode> nodes_;
  std::vector<Compositum> composita_;
  std::vector<Derivation> derivations_;
  bool closed_ = false;
};

/// The least superset of E containing all identities and closed under duals
/// and amalgamation. Pairs are processed breadth-first in canonical order, so
/// results and derivation logs are deterministic.
CompositumSystem close(const CompositumSystem& system, const ClosureOptions& options = {});

/// Re-checks one more full pass over the system: identities present, duals
/// present, every amalgamation output present.
bool is_closed_under_operations(const CompositumSystem& system);

/// Replays every recorded derivation against its parents.
bool replay_derivations(const CompositumSystem& system);

/// True if the graph on K with an edge for each compositum is connected.
bool is_connected(const CompositumSystem& system);

/// H_A, the union of G_A phi_V G_A over V in E_{A,A}. Throws
/// PreconditionFailed on an unclosed system and TheoremViolation if the union
/// is not a group.
Subgroup h_group(const CompositumSystem& system, const std::string& label);

/// The commuting-triangle conditions for one compositum V in E_{A,B}.
struct TriangleWitness {
  Compositum compositum;
  bool gv_in_ga = false;     // G_V <= G_A
  bool ga_in_ha = false;     // G_A <= H_A
  bool h_conjugate = false;  // phi_V H_B phi_V^-1 == H_A
  bool passed() const { return gv_in_ga && ga_in_ha && h_conjugate; }
};

struct BaseFieldResult {
  std::map<std::string, Subgroup> h;
  /// H of the root node; its fixed field is the common base field k.
  Subgroup base_group;
  std::string root;
  std::string base_label = "k";
  /// [H_A : G_A] for every node.
  std::map<std::string, std::size_t> indices;
  std::vector<TriangleWitness> witnesses;
};

/// Computes every H_A and the common base field. Throws PreconditionFailed if
/// the system is not closed or not connected, TheoremViolation if H_A is not a
/// group or the conjugation condition fails.
BaseFieldResult base_field(const CompositumSystem& system);

struct TriangleReport {
  std::vector<TriangleWitness> entries;
  bool all_passed() const;
};

TriangleReport verify_triangles(const BaseFieldResult& result, const CompositumSystem& system);

}  // namespace galcomp
