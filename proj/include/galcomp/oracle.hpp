#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "galcomp/bimodule.hpp"
#include "galcomp/closure.hpp"
#include "galcomp/etale.hpp"
#include "galcomp/realization.hpp"

namespace galcomp {

/// A realized context with a cache of fixed fields by subgroup.
class OracleContext {
 public:
  explicit OracleContext(nf::Realization realization, std::uint64_t seed = 0x5eedULL, int max_degree = 36)
      : realization_(std::move(realization)), seed_(seed), max_degree_(max_degree) {}

  const nf::Realization& realization() const { return realization_; }
  const GaloisContext& context() const { return realization_.context(); }
  std::uint64_t seed() const { return seed_; }
  /// Degree cap handed to the factorizer.
  int max_degree() const { return max_degree_; }

  const nf::Subfield& field(const Subgroup& h) const;

 private:
  nf::Realization realization_;
  std::uint64_t seed_;
  int max_degree_;
  mutable std::map<std::vector<Permutation>, nf::Subfield> fields_;
};

/// Per output class X: degrees over Q of the field summands of
/// k_V (x)_{k_B} k_W that belong to X, and the bimodule multiplicity of X.
struct ClassTally {
  std::vector<std::size_t> degrees;  // sorted
  std::size_t multiplicity = 0;
  friend bool operator==(const ClassTally&, const ClassTally&) = default;
};

struct OracleReport {
  Compositum v;
  Compositum w;
  std::size_t algebra_dim = 0;
  std::size_t expected_dim = 0;  // [k_V:Q][k_W:Q]/[k_B:Q]
  std::size_t radical_dim = 0;
  long lambda = 0;  // a + lambda c separates the classes
  /// Degree over Q of each summand, from the algebra and from the double cosets.
  std::vector<std::size_t> etale_degrees;
  std::vector<std::size_t> group_degrees;
  std::map<Compositum, ClassTally> etale_classes;
  std::map<Compositum, ClassTally> group_classes;
  std::vector<std::string> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// Builds k_V and k_W as fixed fields over k_B, decomposes their tensor
/// product, names each field summand by the class of its k_A, k_C compositum
/// (the minimal polynomial of a + lambda c, where a and c generate the images
/// of k_A and k_C) and compares counts, degrees, classes and multiplicities
/// with fusion_terms and fuse. Throws PreconditionFailed for a
/// non-composable pair. Disagreements go into the report.
OracleReport oracle_check(const OracleContext& oracle, const Compositum& v, const Compositum& w);

/// The corpus system of a realized context: one node per conjugacy class of
/// subgroups (labelled F0, F1, ... by class order) and every double coset
/// between every pair of nodes as a compositum.
CompositumSystem realized_corpus_system(const nf::Realization& realization);

struct SweepReport {
  std::vector<OracleReport> checks;
  std::size_t failures() const;
};

/// oracle_check on every composable pair of composita in a closed system.
SweepReport oracle_sweep(const OracleContext& oracle, const CompositumSystem& closed_system);

}  // namespace galcomp
