#include "galcomp/serialize.hpp"

#include <fstream>
#include <set>

#include "galcomp/error.hpp"

namespace galcomp {

namespace {

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::vector<Permutation> permutations_from_json(const json& arr, std::size_t degree) {
  if (!arr.is_array()) throw InvalidInput("expected an array of permutations");
  std::vector<Permutation> out;
  for (const auto& p : arr) out.push_back(permutation_from_json(p, degree));
  return out;
}

json tally_to_json(const ClassTally& t) { return {{"degrees", t.degrees}, {"mult", t.multiplicity}}; }

}  // namespace

json permutation_to_json(const Permutation& p) { return p.images(); }

Permutation permutation_from_json(const json& j, std::size_t degree) {
  if (j.is_string()) return Permutation::from_cycles(degree, j.get<std::string>());
  if (!j.is_array()) throw InvalidInput("permutation must be an image array or a cycle string");
  std::vector<Permutation::Point> images;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) throw InvalidInput("permutation images must be nonnegative");
    images.push_back(x.get<Permutation::Point>());
  }
  if (images.size() != degree) {
    throw InvalidInput("permutation " + j.dump() + " does not have degree " + std::to_string(degree));
  }
  return Permutation(std::move(images));
}

json subgroup_to_json(const Subgroup& g) {
  json gens = json::array();
  for (const auto& p : greedy_generators(g)) gens.push_back(permutation_to_json(p));
  return {{"order", g.order()}, {"generators", gens}};
}

json poly_to_json(const nf::RatPoly& p) {
  json out = json::array();
  for (const auto& q : p.coeffs()) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
      out.push_back(q.get_num().get_si());
    } else {
      out.push_back(q.get_str());
    }
  }
  return out;
}

nf::RatPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial must be a coefficient array");
  std::vector<mpq_class> c;
  for (const auto& x : j) {
    if (x.is_number_integer()) {
      c.emplace_back(static_cast<long>(x.get<long long>()));
    } else if (x.is_string()) {
      mpq_class q;
      if (q.set_str(x.get<std::string>(), 10) != 0) throw InvalidInput("bad rational coefficient " + x.dump());
      if (q.get_den() == 0) throw InvalidInput("bad rational coefficient " + x.dump());
      q.canonicalize();
      c.push_back(q);
    } else {
      throw InvalidInput("polynomial coefficients must be integers or \"p/q\" strings");
    }
  }
  return nf::RatPoly(std::move(c));
}

SystemDocument parse_system(const json& doc, std::size_t max_group_order) {
  try {
    if (!doc.is_object()) throw InvalidInput("context document must be a JSON object");
    const json& deg = field(doc, "degree");
    if (!deg.is_number_integer() || deg.get<long long>() < 1) throw InvalidInput("'degree' must be a positive integer");
    const auto n = deg.get<std::size_t>();
    const auto ambient_gens = permutations_from_json(field(doc, "ambient_generators"), n);
    Subgroup ambient = Subgroup::generate(n, ambient_gens, max_group_order);

    std::optional<RealizationRef> ref;
    if (doc.contains("realization") && !doc.at("realization").is_null()) {
      const json& r = doc.at("realization");
      ref = RealizationRef{field(r, "name").get<std::string>(), r.value("n", 0)};
    }
    SystemDocument out;
    out.system = CompositumSystem(GaloisContext(ambient, doc.value("label", std::string("context")), ref));

    const json& fields = field(doc, "fields");
    if (!fields.is_object()) throw InvalidInput("'fields' must map labels to generator lists");
    for (const auto& [label, gens] : fields.items()) {
      out.system.add_node(label, Subgroup::generate(n, permutations_from_json(gens, n), max_group_order));
    }
    if (doc.contains("composita")) {
      for (const auto& c : doc.at("composita")) {
        const auto src = field(c, "source").get<std::string>();
        const auto tgt = field(c, "target").get<std::string>();
        if (!out.system.has_node(src) || !out.system.has_node(tgt)) {
          throw InvalidInput("compositum refers to unknown field " + (out.system.has_node(src) ? tgt : src));
        }
        Compositum v = out.system.add_compositum(src, tgt, permutation_from_json(field(c, "phi"), n));
        if (c.contains("label")) {
          auto label = c.at("label").get<std::string>();
          auto [it, fresh] = out.names.emplace(v, label);
          if (!fresh && it->second != label) {
            throw InvalidInput("compositum " + v.describe() + " labelled both " + it->second + " and " + label);
          }
        }
      }
    }
    return out;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed context document: ") + e.what());
  }
}

SystemDocument load_system(const std::string& path, std::size_t max_group_order) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return parse_system(doc, max_group_order);
}

json system_to_json(const SystemDocument& doc) {
  const CompositumSystem& s = doc.system;
  json out;
  out["label"] = s.context().label();
  out["degree"] = s.context().degree();
  out["ambient_generators"] = subgroup_to_json(s.context().ambient())["generators"];
  if (s.context().realization()) {
    const auto& r = *s.context().realization();
    out["realization"] = r.name == "cyclotomic" ? json{{"name", r.name}, {"n", r.n}} : json{{"name", r.name}};
  }
  out["fields"] = json::object();
  for (const auto& [label, node] : s.nodes()) out["fields"][label] = subgroup_to_json(node.group())["generators"];
  out["composita"] = json::array();
  for (const auto& v : s.composita()) {
    json c{{"source", v.source().label()}, {"target", v.target().label()}, {"phi", permutation_to_json(v.rep())}};
    if (auto it = doc.names.find(v); it != doc.names.end()) c["label"] = it->second;
    out["composita"].push_back(c);
  }
  return out;
}

std::string label_of(const Compositum& v, const std::map<Compositum, std::string>& names) {
  auto it = names.find(v);
  return it == names.end() ? default_label(v) : it->second;
}

json compositum_to_json(const Compositum& v, const std::map<Compositum, std::string>& names) {
  return {{"label", label_of(v, names)},
          {"source", v.source().label()},
          {"target", v.target().label()},
          {"phi", permutation_to_json(v.rep())},
          {"deg_left", v.deg_left()},
          {"deg_right", v.deg_right()},
          {"G_V", subgroup_to_json(v.group())}};
}

json closure_report(const CompositumSystem& closed, const std::map<Compositum, std::string>& names) {
  json out;
  out["E_size"] = closed.composita().size();
  out["closed"] = closed.closed();
  out["composita"] = json::array();
  for (const auto& v : closed.composita()) out["composita"].push_back(compositum_to_json(v, names));
  out["derivations"] = json::array();
  for (const auto& d : closed.derivations()) {
    json parents = json::array();
    for (const auto& p : d.parents) parents.push_back(label_of(p, names));
    out["derivations"].push_back({{"result", label_of(d.result, names)}, {"kind", to_string(d.kind)}, {"parents", parents}});
  }
  return out;
}

json base_field_report(const BaseFieldResult& result, const std::map<Compositum, std::string>& names) {
  json out;
  out["root"] = result.root;
  out["base_label"] = result.base_label;
  out["base_group"] = subgroup_to_json(result.base_group);
  out["H"] = json::object();
  for (const auto& [label, h] : result.h) out["H"][label] = subgroup_to_json(h);
  out["indices"] = result.indices;
  out["triangles"] = json::array();
  bool all = true;
  for (const auto& w : result.witnesses) {
    out["triangles"].push_back({{"compositum", label_of(w.compositum, names)},
                                {"gv_in_ga", w.gv_in_ga},
                                {"ga_in_ha", w.ga_in_ha},
                                {"h_conjugate", w.h_conjugate},
                                {"passed", w.passed()}});
    all = all && w.passed();
  }
  out["all_passed"] = all;
  return out;
}

json one_morphism_to_json(const OneMorphism& m, const std::map<Compositum, std::string>& names) {
  json summands = json::array();
  for (const auto& [x, mult] : m.summands()) summands.push_back({{"X", label_of(x, names)}, {"mult", mult}});
  return {{"source", m.source().label()}, {"target", m.target().label()}, {"summands", summands}};
}

json fusion_table_to_json(const FusionTable& table) {
  json out;
  const auto& simples = table.simples();
  out["simples"] = json::array();
  for (const auto& s : simples) {
    out["simples"].push_back({{"label", s.label},
                              {"source", s.compositum.source().label()},
                              {"target", s.compositum.target().label()},
                              {"phi", permutation_to_json(s.compositum.rep())}});
  }
  out["table"] = json::object();
  for (std::size_t i = 0; i < simples.size(); ++i) {
    for (std::size_t j = 0; j < simples.size(); ++j) {
      if (!table.composable(i, j)) continue;
      json row = json::array();
      for (const auto& [k, m] : table.product(i, j)) row.push_back({{"X", simples[k].label}, {"mult", m}});
      out["table"][simples[i].label + "," + simples[j].label] = row;
    }
  }
  return out;
}

json oracle_report_to_json(const OracleReport& r, const std::map<Compositum, std::string>& names) {
  json out;
  out["V"] = label_of(r.v, names);
  out["W"] = label_of(r.w, names);
  out["algebra_dim"] = r.algebra_dim;
  out["expected_dim"] = r.expected_dim;
  out["radical_dim"] = r.radical_dim;
  out["lambda"] = r.lambda;
  out["etale_degrees"] = r.etale_degrees;
  out["group_degrees"] = r.group_degrees;
  std::set<Compositum> keys;
  for (const auto& [x, t] : r.etale_classes) keys.insert(x);
  for (const auto& [x, t] : r.group_classes) keys.insert(x);
  out["classes"] = json::array();
  for (const auto& x : keys) {
    auto e = r.etale_classes.find(x);
    auto g = r.group_classes.find(x);
    out["classes"].push_back({{"X", label_of(x, names)},
                              {"etale", e == r.etale_classes.end() ? json(nullptr) : tally_to_json(e->second)},
                              {"group", g == r.group_classes.end() ? json(nullptr) : tally_to_json(g->second)}});
  }
  out["passed"] = r.passed();
  out["mismatches"] = r.mismatches;
  return out;
}

json realization_to_json(const nf::Realization& r) {
  json action = json::array();
  json autos = json::array();
  json roots = json::array();
  for (const auto& p : r.root_action()) action.push_back(permutation_to_json(p));
  for (const auto& a : r.generator_images()) autos.push_back(poly_to_json(a));
  for (const auto& x : r.roots()) roots.push_back(poly_to_json(x));
  return {{"name", r.name()},
          {"min_poly", poly_to_json(r.omega().min_poly())},
          {"root_action", action},
          {"automorphisms", autos},
          {"roots", roots}};
}

nf::Realization realization_from_json(const json& j) {
  try {
    const json& action = field(j, "root_action");
    if (!action.is_array() || action.empty() || !action.front().is_array()) {
      throw InvalidInput("'root_action' must be a nonempty list of image arrays");
    }
    const std::size_t n = action.front().size();
    std::vector<nf::RatPoly> autos, roots;
    for (const auto& a : field(j, "automorphisms")) autos.push_back(poly_from_json(a));
    if (j.contains("roots")) {
      for (const auto& x : j.at("roots")) roots.push_back(poly_from_json(x));
    }
    return nf::Realization(j.value("name", std::string("custom")), poly_from_json(field(j, "min_poly")),
                           permutations_from_json(action, n), std::move(autos), std::move(roots));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed realization document: ") + e.what());
  }
}

}  // namespace galcomp
