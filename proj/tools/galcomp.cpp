// galcomp: command-line front end for the compositum engine.
//
// Exit codes: 0 ok, 1 internal error, 2 bad input or usage, 3 cap exceeded,
// 4 theorem violation, 5 precondition failed (e.g. not connected, not
// composable), 6 oracle mismatch or failed fixture.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "galcomp/error.hpp"
#include "galcomp/serialize.hpp"

#ifndef GALCOMP_FIXTURE_DIR
#define GALCOMP_FIXTURE_DIR "fixtures"
#endif

using namespace galcomp;

namespace {

enum Exit : int { kOk = 0, kInternal = 1, kUsage = 2, kCap = 3, kTheorem = 4, kPrecondition = 5, kMismatch = 6 };

struct RunConfig {
  std::string input;
  std::string format = "text";
  std::uint64_t seed = 0x5eedULL;
  std::size_t max_group_order = kDefaultMaxGroupOrder;
  int max_degree = 36;
};

bool as_json(const RunConfig& cfg) { return cfg.format == "json"; }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string degrees_text(const std::vector<std::size_t>& d) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i];
  out << "}";
  return out.str();
}

nf::Realization realization_for(const GaloisContext& ctx) {
  if (!ctx.realization()) throw InvalidInput("context '" + ctx.label() + "' has no realization");
  nf::Realization r = nf::realize_context(*ctx.realization());
  if (!(r.context().ambient() == ctx.ambient())) {
    throw InvalidInput("ambient group of '" + ctx.label() + "' differs from the group of realization " + r.name());
  }
  return r;
}

const Compositum& find_by_label(const CompositumSystem& s, const std::map<Compositum, std::string>& names,
                                const std::string& label) {
  for (const auto& v : s.composita()) {
    if (label_of(v, names) == label) return v;
  }
  throw InvalidInput("unknown compositum label '" + label + "'");
}

// ---------------------------------------------------------------------------

int cmd_close(const RunConfig& cfg) {
  SystemDocument doc = load_system(cfg.input, cfg.max_group_order);
  CompositumSystem closed = close(doc.system);
  json report = closure_report(closed, doc.names);
  report["H"] = json::object();
  report["indices"] = json::object();
  for (const auto& [label, node] : closed.nodes()) {
    Subgroup h = h_group(closed, label);
    report["H"][label] = subgroup_to_json(h);
    report["indices"][label] = index(h, node.group());
  }
  report["connected"] = is_connected(closed);
  report["triangles"] = json::array();
  if (report["connected"].get<bool>() && !closed.nodes().empty()) {
    report["triangles"] = base_field_report(base_field(closed), doc.names)["triangles"];
  }
  if (as_json(cfg)) {
    emit(report);
    return kOk;
  }
  std::cout << "closure of " << closed.context().label() << ": " << closed.composita().size() << " composita\n";
  for (const auto& v : closed.composita()) {
    std::cout << "  " << label_of(v, doc.names) << "  " << v.source().label() << "->" << v.target().label() << " "
              << v.rep().to_string() << "  degrees (" << v.deg_left() << "," << v.deg_right() << ")\n";
  }
  for (const auto& [label, node] : closed.nodes()) {
    std::cout << "H_" << label << ": order " << report["H"][label]["order"].get<std::size_t>() << ", index "
              << report["indices"][label].get<std::size_t>() << " over G_" << label << "\n";
  }
  for (const auto& d : closed.derivations()) {
    std::cout << "  " << to_string(d.kind) << ": " << label_of(d.result, doc.names);
    for (const auto& p : d.parents) std::cout << " <- " << label_of(p, doc.names);
    std::cout << "\n";
  }
  return kOk;
}

int cmd_base_field(const RunConfig& cfg) {
  SystemDocument doc = load_system(cfg.input, cfg.max_group_order);
  CompositumSystem closed = close(doc.system);
  BaseFieldResult result = base_field(closed);
  json report = base_field_report(result, doc.names);
  if (closed.context().realization()) {
    nf::Realization real = realization_for(closed.context());
    nf::Subfield k = nf::fixed_field(real, result.base_group, cfg.seed);
    report["fixed_field"] = {{"degree", k.degree()},
                             {"min_poly", poly_to_json(k.field().min_poly())},
                             {"text", k.field().min_poly().to_string("t")}};
    report["node_fields"] = json::object();
    for (const auto& [label, node] : closed.nodes()) {
      nf::Subfield f = nf::fixed_field(real, node.group(), cfg.seed);
      report["node_fields"][label] = {{"degree", f.degree()}, {"min_poly", poly_to_json(f.field().min_poly())}};
    }
  }
  if (as_json(cfg)) {
    emit(report);
    return kOk;
  }
  std::cout << "base field k = fixed field of H_" << result.root << " (order " << result.base_group.order() << ")\n";
  for (const auto& [label, idx] : result.indices) std::cout << "  [H_" << label << " : G_" << label << "] = " << idx << "\n";
  if (report.contains("fixed_field")) {
    std::cout << "  k = Q[t]/(" << report["fixed_field"]["text"].get<std::string>() << "), degree "
              << report["fixed_field"]["degree"].get<int>() << "\n";
  }
  std::cout << "triangles: " << (report["all_passed"].get<bool>() ? "all pass" : "FAILURES") << " ("
            << result.witnesses.size() << " composita)\n";
  return report["all_passed"].get<bool>() ? kOk : kTheorem;
}

int cmd_fuse(const RunConfig& cfg, const std::string& left, const std::string& right, bool table) {
  SystemDocument doc = load_system(cfg.input, cfg.max_group_order);
  CompositumSystem closed = close(doc.system);
  if (table) {
    FusionTable t(simples_of(closed, doc.names));
    if (as_json(cfg)) {
      json j = fusion_table_to_json(t);
      j["text"] = t.to_text();
      emit(j);
    } else {
      std::cout << t.to_text();
    }
    return kOk;
  }
  if (left.empty() || right.empty()) throw InvalidInput("fuse needs --left and --right, or --table");
  const Compositum& v = find_by_label(closed, doc.names, left);
  const Compositum& w = find_by_label(closed, doc.names, right);
  OneMorphism product = fuse(v, w);
  json report = one_morphism_to_json(product, doc.names);
  report["V"] = left;
  report["W"] = right;
  {
    auto it = report["summands"].begin();
    for (const auto& [x, m] : product.summands()) (*it++)["field_degree"] = index(closed.context().ambient(), x.group());
  }
  report["terms"] = json::array();
  for (const auto& t : fusion_terms(v, w)) {
    report["terms"].push_back({{"coset_rep", permutation_to_json(t.coset_rep)},
                               {"output", label_of(t.output, doc.names)},
                               {"degree_over_middle", t.degree_over_middle},
                               {"multiplicity", t.multiplicity}});
  }
  if (as_json(cfg)) {
    emit(report);
    return kOk;
  }
  std::cout << left << " (x) " << right << " =";
  bool first = true;
  for (const auto& [x, m] : product.summands()) {
    std::cout << (first ? " " : " + ") << (m == 1 ? "" : std::to_string(m) + " ") << label_of(x, doc.names) << " [k_X of degree "
              << index(closed.context().ambient(), x.group()) << "]";
    first = false;
  }
  std::cout << "\n";
  return kOk;
}

std::optional<RealizationRef> parse_realization_name(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto colon = s.find(':');
  RealizationRef ref{s.substr(0, colon), 0};
  if (colon != std::string::npos) {
    try {
      ref.n = std::stoi(s.substr(colon + 1));
    } catch (const std::exception&) {
      throw InvalidInput("bad realization '" + s + "'");
    }
  }
  return ref;
}

int cmd_oracle_sweep(const RunConfig& cfg, const std::string& realization_name) {
  std::optional<nf::Realization> real;
  CompositumSystem system;
  std::map<Compositum, std::string> names;
  if (!cfg.input.empty()) {
    SystemDocument doc = load_system(cfg.input, cfg.max_group_order);
    real = realization_for(doc.system.context());
    system = close(doc.system);
    names = doc.names;
  } else if (auto ref = parse_realization_name(realization_name)) {
    real = nf::realize_context(*ref);
    system = close(realized_corpus_system(*real));
  } else {
    throw InvalidInput("oracle-sweep needs --input or --realization");
  }
  OracleContext oracle(*real, cfg.seed, cfg.max_degree);
  SweepReport sweep = oracle_sweep(oracle, system);
  json report;
  report["realization"] = real->name();
  report["pairs"] = sweep.checks.size();
  report["failures"] = sweep.failures();
  report["checks"] = json::array();
  for (const auto& c : sweep.checks) report["checks"].push_back(oracle_report_to_json(c, names));
  if (as_json(cfg)) {
    emit(report);
  } else {
    for (const auto& c : sweep.checks) {
      std::cout << label_of(c.v, names) << " (x) " << label_of(c.w, names) << ": dim " << c.algebra_dim
                << ", summands " << degrees_text(c.etale_degrees) << (c.passed() ? "  pass" : "  FAIL") << "\n";
      for (const auto& m : c.mismatches) std::cout << "    " << m << "\n";
    }
    std::cout << sweep.checks.size() - sweep.failures() << "/" << sweep.checks.size() << " pairs agree\n";
  }
  return sweep.failures() == 0 ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------
// Bundled fixtures.

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

using FixtureFn = std::function<void(const SystemDocument&, const RunConfig&, std::vector<Check>&)>;

void expect(std::vector<Check>& out, std::string name, bool ok, std::string detail = {}) {
  out.push_back({std::move(name), ok, std::move(detail)});
}

void expect_oracle(std::vector<Check>& out, const CompositumSystem& closed, const RunConfig& cfg) {
  OracleContext oracle(realization_for(closed.context()), cfg.seed, cfg.max_degree);
  SweepReport sweep = oracle_sweep(oracle, closed);
  expect(out, "oracle sweep agrees", sweep.failures() == 0,
         std::to_string(sweep.checks.size() - sweep.failures()) + "/" + std::to_string(sweep.checks.size()));
}

void fixture_c2(const SystemDocument& doc, const RunConfig& cfg, std::vector<Check>& out) {
  CompositumSystem closed = close(doc.system);
  auto simples = simples_of(closed, doc.names);
  expect(out, "two simple objects", simples.size() == 2, std::to_string(simples.size()));
  const Compositum& a = find_by_label(closed, doc.names, "A");
  const Compositum& i = find_by_label(closed, doc.names, "I");
  OneMorphism aa = fuse(a, a);
  expect(out, "A (x) A = I", aa.summands().size() == 1 && aa.multiplicity(i) == 1);
  EndField e = end_field(make_simple(a, "A"));
  expect(out, "End(A) has degrees (1,1)", e.deg_left == 1 && e.deg_right == 1);
  BaseFieldResult bf = base_field(closed);
  expect(out, "base field index 2", bf.indices.at("C") == 2 && bf.base_group.order() == 2);
  expect(out, "A splits in two over k", split_count(make_simple(a, "A"), bf) == 2);
  nf::Realization real = realization_for(closed.context());
  expect(out, "k is Q, the real subfield", nf::fixed_field(real, bf.base_group, cfg.seed).degree() == 1);
  expect_oracle(out, closed, cfg);
}

void fixture_two_object(const SystemDocument& doc, const RunConfig&, std::vector<Check>& out) {
  CompositumSystem closed = close(doc.system);
  TwoCategory cat = two_category_of(closed, doc.names);
  FoldedCategory folded = fold(cat, {"C", "R"});
  expect(out, "folded identity has 2 summands", folded.identity_length() == 2);
  TwoCategory back = unfold(folded);
  expect(out, "unfold(fold) is the identity", back == cat);
  expect(out, "|S| = 2", back.objects.size() == 2);
  bool ends = true;
  for (const auto& obj : back.objects) {
    EndField e = back.identity_endomorphisms(obj.label());
    ends = ends && e.compositum.group() == obj.group() && e.deg_left == 1 && e.deg_right == 1;
  }
  expect(out, "End_2(I_k) = k for each object", ends);
  BaseFieldResult bf = base_field(closed);
  expect(out, "indices R:1, C:2", bf.indices.at("R") == 1 && bf.indices.at("C") == 2);
  expect(out, "base group C2 at R", bf.h.at("R").order() == 2);
}

void fixture_s3(const SystemDocument& doc, const RunConfig& cfg, std::vector<Check>& out) {
  CompositumSystem closed = close(doc.system);
  expect(out, "closure has 2 composita", closed.composita().size() == 2);
  BaseFieldResult bf = base_field(closed);
  expect(out, "H_A = S3", bf.h.at("A").order() == 6);
  expect(out, "[H_A : G_A] = 3", bf.indices.at("A") == 3);
  const Compositum& v = find_by_label(closed, doc.names, "V");
  SimpleOneMorphism sv = make_simple(v, "V");
  EndField e = end_field(sv);
  expect(out, "End(V) has degrees (2,2)", e.deg_left == 2 && e.deg_right == 2);
  expect(out, "V splits in 6 over Q", split_count(sv, bf) == 6);
  OneMorphism vv = fuse(v, dual(v));
  std::vector<std::size_t> degrees;
  for (const auto& [x, m] : vv.summands()) degrees.push_back(index(closed.context().ambient(), x.group()));
  std::sort(degrees.begin(), degrees.end());
  expect(out, "V (x) V* has summand fields of degrees {3,6}", degrees == std::vector<std::size_t>{3, 6},
         degrees_text(degrees));
  expect(out, "Inv(V (x) V*) != 0", inv_dim(vv) >= 1 && weak_rigidity_check(sv));
  nf::Realization real = realization_for(closed.context());
  nf::Subfield ka = nf::fixed_field(real, v.source().group(), cfg.seed);
  expect(out, "fixed field of G_A is Q(cbrt2)", ka.degree() == 3 && ka.express(real.roots()[0]).has_value());
  expect_oracle(out, closed, cfg);
}

void fixture_identities(const SystemDocument& doc, const RunConfig&, std::vector<Check>& out) {
  CompositumSystem closed = close(doc.system);
  expect(out, "closure has 1 compositum", closed.composita().size() == 1);
  BaseFieldResult bf = base_field(closed);
  const FieldNode& a = closed.node("A");
  expect(out, "base = k_A", bf.base_group == a.group() && bf.indices.at("A") == 1);
  expect(out, "triangles pass", verify_triangles(bf, closed).all_passed());
}

struct Fixture {
  std::string name;
  std::string file;
  FixtureFn run;
};

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all{
      {"c2_complex", "c2_complex.json", fixture_c2},
      {"r_c_two_object", "r_c_two_object.json", fixture_two_object},
      {"s3_cbrt2", "s3_cbrt2.json", fixture_s3},
      {"identities_only", "identities_only.json", fixture_identities},
  };
  return all;
}

int cmd_examples(const RunConfig& cfg, const std::string& only, const std::string& dir) {
  json report;
  report["fixtures"] = json::array();
  bool all_passed = true;
  bool matched = false;
  for (const auto& f : fixtures()) {
    if (!only.empty() && only != f.name) continue;
    matched = true;
    std::vector<Check> checks;
    const std::string path = (std::filesystem::path(dir) / f.file).string();
    try {
      f.run(load_system(path, cfg.max_group_order), cfg, checks);
    } catch (const std::exception& e) {
      expect(checks, "run", false, e.what());
    }
    bool passed = true;
    json cj = json::array();
    for (const auto& c : checks) {
      passed = passed && c.passed;
      json entry = json::object();
      entry["name"] = c.name;
      entry["passed"] = c.passed;
      entry["detail"] = c.detail;
      cj.push_back(std::move(entry));
    }
    all_passed = all_passed && passed;
    json fj = json::object();
    fj["name"] = f.name;
    fj["file"] = path;
    fj["checks"] = std::move(cj);
    fj["passed"] = passed;
    report["fixtures"].push_back(std::move(fj));
  }
  if (!matched) throw InvalidInput("unknown fixture '" + only + "'");
  report["all_passed"] = all_passed;
  if (as_json(cfg)) {
    emit(report);
  } else {
    for (const auto& f : report["fixtures"]) {
      for (const auto& c : f["checks"]) {
        std::cout << (c["passed"].get<bool>() ? "PASS  " : "FAIL  ") << f["name"].get<std::string>() << "  "
                  << c["name"].get<std::string>();
        if (!c["detail"].get<std::string>().empty()) std::cout << "  [" << c["detail"].get<std::string>() << "]";
        std::cout << "\n";
      }
    }
    std::cout << (all_passed ? "all fixtures pass" : "some fixtures FAIL") << "\n";
  }
  return all_passed ? kOk : kMismatch;
}

int guarded(const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegreeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kTheorem;
  } catch (const PreconditionFailed& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const OracleMismatch& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const SemisimplicityFailure& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abstract composita of fields via double cosets, with a number-field oracle"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for every randomized step");
  app.add_option("--max-group-order", cfg.max_group_order, "Largest group the kernel will enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-degree", cfg.max_degree, "Largest polynomial degree the factorizer accepts")
      ->check(CLI::PositiveNumber);

  auto* close_cmd = app.add_subcommand("close", "Close a compositum system and report H_A and derivations");
  close_cmd->add_option("--input", cfg.input, "Context document")->required();

  auto* base_cmd = app.add_subcommand("base-field", "Compute the common base field");
  base_cmd->add_option("--input", cfg.input, "Context document")->required();

  std::string left, right;
  bool table = false;
  auto* fuse_cmd = app.add_subcommand("fuse", "Fuse two simples, or print the fusion table");
  fuse_cmd->add_option("--input", cfg.input, "Context document")->required();
  fuse_cmd->add_option("--left", left, "Label of V");
  fuse_cmd->add_option("--right", right, "Label of W");
  fuse_cmd->add_flag("--table", table, "Print the full fusion table of the closure");

  std::string realization;
  auto* sweep_cmd = app.add_subcommand("oracle-sweep", "Check every composable pair against the number-field oracle");
  sweep_cmd->add_option("--input", cfg.input, "Realized context document");
  sweep_cmd->add_option("--realization", realization, "Built-in corpus: cyclotomic:N or s3_x3m2");

  std::string only, dir = GALCOMP_FIXTURE_DIR;
  auto* examples_cmd = app.add_subcommand("examples", "Run the bundled fixtures");
  examples_cmd->add_option("--only", only, "Run a single fixture");
  examples_cmd->add_option("--fixtures", dir, "Fixture directory");

  // Global options are also accepted after the subcommand name.
  for (auto* sub : {close_cmd, base_cmd, fuse_cmd, sweep_cmd, examples_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (close_cmd->parsed()) return guarded([&] { return cmd_close(cfg); });
  if (base_cmd->parsed()) return guarded([&] { return cmd_base_field(cfg); });
  if (fuse_cmd->parsed()) return guarded([&] { return cmd_fuse(cfg, left, right, table); });
  if (sweep_cmd->parsed()) return guarded([&] { return cmd_oracle_sweep(cfg, realization); });
  if (examples_cmd->parsed()) return guarded([&] { return cmd_examples(cfg, only, dir); });
  return kUsage;
}
