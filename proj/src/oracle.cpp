#include "galcomp/oracle.hpp"

#include <algorithm>

#include "galcomp/error.hpp"

namespace galcomp {

using nf::RatPoly;

const nf::Subfield& OracleContext::field(const Subgroup& h) const {
  const auto& key = h.elements().elements();
  auto it = fields_.find(key);
  if (it == fields_.end()) it = fields_.emplace(key, nf::fixed_field(realization_, h, seed_)).first;
  return it->second;
}

namespace {

RatPoly require(const std::optional<RatPoly>& p, const std::string& what) {
  if (!p) throw InternalInconsistency("oracle_check: " + what + " does not lie in the expected subfield");
  return *p;
}

std::string degrees_string(const std::vector<std::size_t>& d) {
  std::string s = "{";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "}";
}

}  // namespace

OracleReport oracle_check(const OracleContext& oracle, const Compositum& v, const Compositum& w) {
  if (v.target() != w.source()) {
    throw PreconditionFailed("oracle_check: " + v.describe() + " and " + w.describe() + " are not composable");
  }
  const nf::Realization& real = oracle.realization();
  const Subgroup& g = oracle.context().ambient();
  const nf::NumberField& omega = real.omega();

  OracleReport report;
  report.v = v;
  report.w = w;

  // k_V positioned over k_B by inclusion is the fixed field of phi_V^-1 G_V phi_V.
  const nf::Subfield& kb = oracle.field(v.target().group());
  const nf::Subfield& kv = oracle.field(conjugate(v.group(), v.rep().inverse()));
  const nf::Subfield& kw = oracle.field(w.group());
  nf::FieldEmbedding ev(kb.field(), kv.field(), require(kv.express(kb.generator()), "k_B in k_V"));
  nf::FieldEmbedding ew(kb.field(), kw.field(), require(kw.express(kb.generator()), "k_B in k_W"));
  nf::TensorProduct tensor(ev, ew);
  const nf::EtaleAlgebra& algebra = tensor.algebra();
  report.algebra_dim = algebra.dimension();
  report.expected_dim = static_cast<std::size_t>(kv.degree() * kw.degree() / kb.degree());
  report.radical_dim = nf::radical_dim(algebra);
  if (report.algebra_dim != report.expected_dim) {
    report.mismatches.push_back("tensor dimension " + std::to_string(report.algebra_dim) + " != " +
                                std::to_string(report.expected_dim));
  }
  if (report.radical_dim != 0) {
    report.mismatches.push_back("radical of dimension " + std::to_string(report.radical_dim));
    return report;
  }
  nf::DecomposeOptions opts;
  opts.seed = oracle.seed();
  opts.factor.max_degree = oracle.max_degree();
  const nf::EtaleDecomposition parts = nf::decompose_etale(algebra, opts);

  // Images of k_A (through phi_V^-1) and k_C (through phi_W).
  const nf::Subfield& ka = oracle.field(v.source().group());
  const nf::Subfield& kc = oracle.field(w.target().group());
  const RatPoly a_in_v = require(kv.express(real.apply(v.rep().inverse(), ka.generator())), "phi_V^-1(k_A) in k_V");
  const RatPoly c_in_w = require(kw.express(real.apply(w.rep(), kc.generator())), "phi_W(k_C) in k_W");
  const nf::QVector a = tensor.left(a_in_v);
  const nf::QVector c = tensor.right(c_in_w);

  // Every class X: A -> C is named by the minimal polynomial of
  // a_A + lambda psi(a_C) for psi in its double coset.
  std::vector<Compositum> classes;
  for (const auto& psi : decompose_into_double_cosets(g.elements(), v.source().group(), w.target().group())) {
    classes.push_back(canonical_compositum(v.source(), w.target(), psi));
  }
  std::map<std::vector<mpq_class>, Compositum> by_poly;
  for (long lambda = 1; lambda <= 64 && by_poly.size() != classes.size(); ++lambda) {
    by_poly.clear();
    bool ok = true;
    for (const auto& x : classes) {
      RatPoly z = ka.generator() + real.apply(x.rep(), kc.generator()) * mpq_class(lambda);
      RatPoly mp = omega.min_poly_of(z);
      if (static_cast<std::size_t>(mp.degree()) != index(g, x.group()) || !by_poly.emplace(mp.coeffs(), x).second) {
        ok = false;
        break;
      }
    }
    if (ok) report.lambda = lambda;
    else by_poly.clear();
  }
  if (report.lambda == 0) throw InternalInconsistency("oracle_check: no lambda separates the compositum classes");

  nf::QVector z = a;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += report.lambda * c[i];
  for (const auto& s : parts.summands) {
    const auto degree = static_cast<std::size_t>(s.degree);
    report.etale_degrees.push_back(degree);
    RatPoly mp = algebra.min_poly_in_summand(z, s.idempotent);
    auto it = by_poly.find(mp.coeffs());
    if (it == by_poly.end()) {
      report.mismatches.push_back("summand of degree " + std::to_string(degree) + " matches no compositum class");
      continue;
    }
    const std::size_t dx = index(g, it->second.group());
    ClassTally& tally = report.etale_classes[it->second];
    tally.degrees.push_back(degree);
    if (degree % dx != 0) {
      report.mismatches.push_back("summand degree " + std::to_string(degree) + " not a multiple of [k_X:Q] = " +
                                  std::to_string(dx));
    }
    tally.multiplicity += degree / dx;
  }

  const std::size_t kb_degree = static_cast<std::size_t>(kb.degree());
  for (const auto& t : fusion_terms(v, w)) {
    const std::size_t degree = t.degree_over_middle * kb_degree;
    report.group_degrees.push_back(degree);
    report.group_classes[t.output].degrees.push_back(degree);
  }
  const OneMorphism product = fuse(v, w);
  for (const auto& [x, m] : product.summands()) report.group_classes[x].multiplicity = m;

  for (auto* d : {&report.etale_degrees, &report.group_degrees}) std::sort(d->begin(), d->end());
  for (auto* m : {&report.etale_classes, &report.group_classes}) {
    for (auto& [x, tally] : *m) std::sort(tally.degrees.begin(), tally.degrees.end());
  }

  if (report.etale_degrees.size() != report.group_degrees.size()) {
    report.mismatches.push_back("summand count " + std::to_string(report.etale_degrees.size()) + " vs " +
                                std::to_string(report.group_degrees.size()));
  }
  if (report.etale_degrees != report.group_degrees) {
    report.mismatches.push_back("degree multiset " + degrees_string(report.etale_degrees) + " vs " +
                                degrees_string(report.group_degrees));
  }
  if (report.etale_classes != report.group_classes) {
    for (const auto& x : classes) {
      auto e = report.etale_classes.find(x);
      auto q = report.group_classes.find(x);
      ClassTally none;
      const ClassTally& te = e == report.etale_classes.end() ? none : e->second;
      const ClassTally& tq = q == report.group_classes.end() ? none : q->second;
      if (!(te == tq)) {
        report.mismatches.push_back("class " + x.describe() + ": algebra " + degrees_string(te.degrees) + " x" +
                                    std::to_string(te.multiplicity) + ", double cosets " + degrees_string(tq.degrees) +
                                    " x" + std::to_string(tq.multiplicity));
      }
    }
  }
  return report;
}

CompositumSystem realized_corpus_system(const nf::Realization& realization) {
  CompositumSystem system(realization.context());
  const Subgroup& g = realization.context().ambient();
  const auto reps = subgroup_class_representatives(g);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    labels.push_back("F" + std::to_string(i));
    system.add_node(labels.back(), reps[i]);
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      for (const auto& phi : decompose_into_double_cosets(g.elements(), reps[i], reps[j])) {
        system.add_compositum(labels[i], labels[j], phi);
      }
    }
  }
  return system;
}

std::size_t SweepReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const OracleReport& r) { return !r.passed(); }));
}

SweepReport oracle_sweep(const OracleContext& oracle, const CompositumSystem& closed_system) {
  SweepReport out;
  for (const auto& v : closed_system.composita()) {
    for (const auto& w : closed_system.composita()) {
      if (v.target() == w.source()) out.checks.push_back(oracle_check(oracle, v, w));
    }
  }
  return out;
}

}  // namespace galcomp
