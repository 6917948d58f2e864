#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "galcomp/bimodule.hpp"
#include "galcomp/closure.hpp"
#include "galcomp/oracle.hpp"
#include "galcomp/realization.hpp"

namespace galcomp {

using json = nlohmann::json;

/// A parsed context document:
///   { "label": str?, "degree": n, "ambient_generators": [perm...],
///     "fields": { label: [perm...] }, "realization": {"name", "n"?}?,
///     "composita": [ {"source", "target", "phi", "label"?} ] }
/// Permutations are one-line arrays or cycle strings such as "(0 1 2)".
struct SystemDocument {
  CompositumSystem system;
  /// Display labels from the document, keyed by canonical compositum.
  std::map<Compositum, std::string> names;
};

/// Throws InvalidInput on malformed documents and CapExceeded on groups
/// above max_group_order.
SystemDocument parse_system(const json& doc, std::size_t max_group_order = kDefaultMaxGroupOrder);
/// Reads and parses a file; throws InvalidInput if it cannot be read.
SystemDocument load_system(const std::string& path, std::size_t max_group_order = kDefaultMaxGroupOrder);
json system_to_json(const SystemDocument& doc);

json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const json& j, std::size_t degree);
json subgroup_to_json(const Subgroup& g);

/// Coefficients constant term first; integers as numbers, other rationals as
/// "p/q" strings.
json poly_to_json(const nf::RatPoly& p);
nf::RatPoly poly_from_json(const json& j);

std::string label_of(const Compositum& v, const std::map<Compositum, std::string>& names);
json compositum_to_json(const Compositum& v, const std::map<Compositum, std::string>& names = {});

/// {"E_size", "composita", "derivations"}.
json closure_report(const CompositumSystem& closed, const std::map<Compositum, std::string>& names = {});
/// {"root", "base_label", "base_group", "H", "indices", "triangles", "all_passed"}.
json base_field_report(const BaseFieldResult& result, const std::map<Compositum, std::string>& names = {});
json one_morphism_to_json(const OneMorphism& m, const std::map<Compositum, std::string>& names = {});
/// {"simples": [...], "table": {"V,W": [{"X": label, "mult": m}]}}.
json fusion_table_to_json(const FusionTable& table);
json oracle_report_to_json(const OracleReport& r, const std::map<Compositum, std::string>& names = {});

/// {"name", "min_poly", "root_action", "automorphisms", "roots"}: automorphisms
/// are the images of the generator under the root_action permutations.
json realization_to_json(const nf::Realization& r);
nf::Realization realization_from_json(const json& j);

}  // namespace galcomp
