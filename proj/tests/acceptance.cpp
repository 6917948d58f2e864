// Acceptance runner: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "galcomp/error.hpp"
#include "galcomp/serialize.hpp"

using namespace galcomp;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

#define EXPECT(out, cond, msg) \
  do {                         \
    if (!(cond)) (out).fail(msg); \
  } while (0)

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const char* name, const Outcome& o, double seconds, double limit) {
  bool ok = o.ok && seconds < limit;
  if (!ok) ++failures;
  std::printf("%s  criterion %d  %-38s %7.2fs", ok ? "PASS" : "FAIL", id, name, seconds);
  if (limit < 1e6) std::printf(" (limit %.0fs)", limit);
  if (!o.ok) std::printf("  %s", o.detail.c_str());
  else if (seconds >= limit) std::printf("  over time");
  std::printf("\n");
  std::fflush(stdout);
}

void run(int id, const char* name, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  report(id, name, o, std::chrono::duration<double>(Clock::now() - t0).count(), limit);
}

std::string fixture(const char* name) { return std::string(GALCOMP_FIXTURE_DIR) + "/" + name; }

const Compositum& by_label(const CompositumSystem& s, const SystemDocument& doc, const std::string& label) {
  for (const auto& v : s.composita()) {
    if (label_of(v, doc.names) == label) return v;
  }
  throw InvalidInput("no compositum " + label);
}

// ---------------------------------------------------------------------------
// Brute-force group helpers, independent of the library's coset code.

std::set<Permutation> triple_product(const Subgroup& h, const Permutation& g, const Subgroup& k) {
  std::set<Permutation> out;
  for (const auto& a : h.elements()) {
    for (const auto& b : k.elements()) out.insert(a * g * b);
  }
  return out;
}

bool exhaustive_group(const std::set<Permutation>& s) {
  if (s.empty()) return false;
  for (const auto& x : s) {
    if (!s.count(x.inverse())) return false;
    for (const auto& y : s) {
      if (!s.count(x * y)) return false;
    }
  }
  return true;
}

std::set<Permutation> h_brute(const CompositumSystem& s, const std::string& a) {
  std::set<Permutation> out;
  const Subgroup& ga = s.node(a).group();
  for (const auto& v : s.between(a, a)) {
    auto part = triple_product(ga, v.rep(), ga);
    out.insert(part.begin(), part.end());
  }
  return out;
}

std::size_t intersection_order(const Subgroup& h, const Permutation& g, const Subgroup& k) {
  std::size_t n = 0;
  const Permutation gi = g.inverse();
  for (const auto& x : h.elements()) n += k.contains(gi * x * g) ? 1 : 0;
  return n;
}

// ---------------------------------------------------------------------------
// Random corpus.

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Permutation::Point> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

Permutation random_element(const Subgroup& g, std::mt19937_64& rng) {
  const auto& e = g.elements();
  return *(e.begin() + static_cast<std::ptrdiff_t>(rng() % e.size()));
}

CompositumSystem random_system(std::mt19937_64& rng) {
  for (;;) {
    const std::size_t n = 3 + rng() % 4;
    std::vector<Permutation> gens{random_perm(n, rng), random_perm(n, rng)};
    Subgroup ambient;
    try {
      ambient = Subgroup::generate(n, gens, 24);
    } catch (const CapExceeded&) {
      continue;
    }
    CompositumSystem s(GaloisContext(ambient, "random"));
    const std::size_t nodes = 1 + rng() % 3;
    for (std::size_t i = 0; i < nodes; ++i) {
      std::vector<Permutation> sub;
      for (std::size_t j = rng() % 3; j > 0; --j) sub.push_back(random_element(ambient, rng));
      s.add_node("N" + std::to_string(i), Subgroup::generate(n, sub));
    }
    for (std::size_t i = 0; i + 1 < nodes; ++i) {
      s.add_compositum("N" + std::to_string(i), "N" + std::to_string(i + 1), random_element(ambient, rng));
    }
    for (std::size_t j = rng() % 3; j > 0; --j) {
      s.add_compositum("N" + std::to_string(rng() % nodes), "N" + std::to_string(rng() % nodes),
                       random_element(ambient, rng));
    }
    return s;
  }
}

std::vector<CompositumSystem> random_corpus;

// ---------------------------------------------------------------------------

void criterion1(Outcome& o) {
  SystemDocument doc = load_system(fixture("c2_complex.json"));
  CompositumSystem s = close(doc.system);
  EXPECT(o, simples_of(s, doc.names).size() == 2, "expected 2 simples");
  const Compositum& a = by_label(s, doc, "A");
  const Compositum& i = by_label(s, doc, "I");
  OneMorphism aa = fuse(a, a);
  EXPECT(o, aa.summands().size() == 1 && aa.multiplicity(i) == 1, "A (x) A != I");
  EndField e = end_field(make_simple(a, "A"));
  EXPECT(o, e.deg_left == 1 && e.deg_right == 1, "end field degrees not (1,1)");
  BaseFieldResult bf = base_field(s);
  for (const auto& [label, idx] : bf.indices) EXPECT(o, idx == 2, "index over " + label + " != 2");
}

void criterion2(Outcome& o) {
  SystemDocument doc = load_system(fixture("r_c_two_object.json"));
  CompositumSystem s = close(doc.system);
  TwoCategory cat = two_category_of(s, doc.names);
  FoldedCategory folded = fold(cat, {"C", "R"});
  TwoCategory back = unfold(folded);
  EXPECT(o, back.objects.size() == 2, "|S| != 2");
  EXPECT(o, back == cat, "unfold(fold) differs");
  for (const auto& obj : back.objects) {
    EndField e = back.identity_endomorphisms(obj.label());
    EXPECT(o, e.compositum.group() == obj.group() && e.deg_left == 1 && e.deg_right == 1,
           "End_2(I_" + obj.label() + ") != k_" + obj.label());
  }
}

void criterion3(Outcome& o) {
  std::mt19937_64 rng(20240611);
  random_corpus.clear();
  for (int k = 0; k < 240; ++k) {
    CompositumSystem s = close(random_system(rng), ClosureOptions{20000});
    EXPECT(o, s.closed() && is_closed_under_operations(s), "closure not closed");
    for (const auto& [label, node] : s.nodes()) {
      auto h = h_brute(s, label);
      EXPECT(o, exhaustive_group(h), "H_" + label + " is not a group");
      Subgroup lib = h_group(s, label);
      EXPECT(o, std::set<Permutation>(lib.elements().begin(), lib.elements().end()) == h, "H_" + label + " differs");
      EXPECT(o, h.size() % node.group().order() == 0, "index not an integer");
    }
    BaseFieldResult bf = base_field(s);
    for (const auto& [label, node] : s.nodes()) {
      EXPECT(o, bf.indices.at(label) == bf.h.at(label).order() / node.group().order(), "reported index wrong");
    }
    EXPECT(o, verify_triangles(bf, s).all_passed(), "verify_triangles failed");
    for (const auto& v : s.composita()) {
      const auto& ha = bf.h.at(v.source().label());
      const auto& hb = bf.h.at(v.target().label());
      bool conj = true;
      for (const auto& x : hb.elements()) conj = conj && ha.contains(v.rep() * x * v.rep().inverse());
      EXPECT(o, conj && ha.order() == hb.order(), "triangle fails for " + v.describe());
      EXPECT(o, v.group().is_subgroup_of(v.source().group()), "G_V not in G_A");
    }
    random_corpus.push_back(std::move(s));
  }
  EXPECT(o, random_corpus.size() >= 200, "corpus too small");
}

void criterion4(Outcome& o) {
  EXPECT(o, !random_corpus.empty(), "criterion 3 corpus missing");
  std::size_t checked = 0;
  for (const auto& s : random_corpus) {
    for (const auto& v : s.composita()) {
      for (const auto& w : s.composita()) {
        if (v.target() != w.source()) continue;
        const Subgroup& ga = v.source().group();
        const Subgroup& gb = v.target().group();
        const Subgroup& gc = w.target().group();
        std::set<Permutation> product;
        for (const auto& b : gb.elements()) {
          auto part = triple_product(ga, v.rep() * b * w.rep(), gc);
          product.insert(part.begin(), part.end());
        }
        std::set<Permutation> covered;
        std::size_t size_sum = 0;
        for (const auto& x : amalgamate(v, w)) {
          auto dc = triple_product(ga, x.rep(), gc);
          for (const auto& p : dc) EXPECT(o, covered.insert(p).second, "double cosets overlap");
          const std::size_t law = ga.order() * gc.order() / intersection_order(ga, x.rep(), gc);
          EXPECT(o, dc.size() == law, "size law fails");
          size_sum += law;
        }
        EXPECT(o, covered == product, "double cosets do not cover the product set");
        EXPECT(o, size_sum == product.size(), "sizes do not sum to the product set");
        ++checked;
      }
    }
  }
  EXPECT(o, checked > 0, "no amalgamations checked");
}

std::vector<OracleReport> oracle_reports;

void criterion5(Outcome& o) {
  oracle_reports.clear();
  std::vector<nf::Realization> reals;
  for (int n : {4, 5, 8, 12}) reals.push_back(nf::cyclotomic_realization(n));
  reals.push_back(nf::s3_x3m2_realization());
  for (const auto& r : reals) {
    OracleContext oracle(r);
    CompositumSystem s = close(realized_corpus_system(r));
    SweepReport sweep = oracle_sweep(oracle, s);
    EXPECT(o, sweep.failures() == 0, r.name() + ": " + std::to_string(sweep.failures()) + " pairs disagree");
    for (auto& c : sweep.checks) oracle_reports.push_back(std::move(c));
  }
  // Q(cbrt2) (x)_Q Q(cbrt2): the compositum Q(cbrt2) -> Q -> Q(cbrt2).
  const nf::Realization& s3 = reals.back();
  const Subgroup& g = s3.context().ambient();
  const Permutation t = Permutation::from_cycles(3, "(1 2)");
  FieldNode a("A", Subgroup::generate(3, std::vector<Permutation>{t}));
  FieldNode q("Q", g);
  const Permutation e = Permutation::identity(3);
  OracleReport r = oracle_check(OracleContext(s3), canonical_compositum(a, q, e), canonical_compositum(q, a, e));
  EXPECT(o, r.passed(), "Q(cbrt2) pair disagrees");
  EXPECT(o, r.etale_degrees == (std::vector<std::size_t>{3, 6}), "Q(cbrt2) (x) Q(cbrt2) degrees not {3,6}");
  EXPECT(o, std::accumulate(r.etale_degrees.begin(), r.etale_degrees.end(), std::size_t{0}) == 9, "degrees sum != 9");
  oracle_reports.push_back(r);
}

void criterion6(Outcome& o) {
  EXPECT(o, !oracle_reports.empty(), "criterion 5 produced no algebras");
  for (const auto& r : oracle_reports) EXPECT(o, r.radical_dim == 0, "nonzero radical for " + r.v.describe());
}

std::vector<std::pair<CompositumSystem, std::map<Compositum, std::string>>> desk_systems() {
  std::vector<std::pair<CompositumSystem, std::map<Compositum, std::string>>> out;
  for (const char* f : {"c2_complex.json", "r_c_two_object.json", "s3_cbrt2.json", "identities_only.json"}) {
    SystemDocument doc = load_system(fixture(f));
    out.emplace_back(close(doc.system), doc.names);
  }
  for (int n : {4, 5, 8, 12}) {
    out.emplace_back(close(realized_corpus_system(nf::cyclotomic_realization(n))), std::map<Compositum, std::string>{});
  }
  out.emplace_back(close(realized_corpus_system(nf::s3_x3m2_realization())), std::map<Compositum, std::string>{});
  for (std::size_t i = 0; i < random_corpus.size(); i += 4) out.emplace_back(random_corpus[i], std::map<Compositum, std::string>{});
  return out;
}

void criterion7(Outcome& o) {
  for (const auto& [s, names] : desk_systems()) {
    const auto& e = s.composita();
    std::set<Compositum> all(e.begin(), e.end());
    CompositumSystem again = close(s);
    EXPECT(o, again.composita() == e, "closure is not idempotent");
    for (const auto& v : e) {
      EXPECT(o, dual(dual(v)) == v, "dual is not an involution");
      EXPECT(o, all.count(dual(v)), "dual missing from E");
      OneMorphism left = fuse(identity_compositum(v.source()), v);
      OneMorphism right = fuse(v, identity_compositum(v.target()));
      EXPECT(o, left.summands().size() == 1 && left.multiplicity(v) == 1, "left unit law fails");
      EXPECT(o, right.summands().size() == 1 && right.multiplicity(v) == 1, "right unit law fails");
    }
    FusionTable table(simples_of(s, names));
    EXPECT(o, table.is_associative(), "fusion table not associative");
    // Associativity again through fuse on sums, without the table.
    for (const auto& v : e) {
      for (const auto& w : e) {
        if (v.target() != w.source()) continue;
        OneMorphism vw = fuse(v, w);
        for (const auto& u : e) {
          if (w.target() != u.source()) continue;
          EXPECT(o, fuse(vw, u) == fuse(v, fuse(w, u)), "fusion is not associative");
        }
      }
    }
  }
}

void criterion8(Outcome& o) {
  for (const auto& [s, names] : desk_systems()) {
    for (const auto& v : simples_of(s, names)) {
      EXPECT(o, weak_rigidity_check(v), "weak rigidity fails for " + v.label);
      EXPECT(o, inv_dim(fuse(v.compositum, dual(v.compositum))) >= 1, "Inv(V (x) V*) = 0 for " + v.label);
    }
  }
}

}  // namespace

int main() {
  run(1, "C2 worked example", 1, criterion1);
  run(2, "two-object R/C fold and unfold", 1, criterion2);
  auto t0 = Clock::now();
  run(3, "random corpus closure and base field", 60, criterion3);
  run(4, "double coset partition and size law", 60, criterion4);
  const double corpus_time = std::chrono::duration<double>(Clock::now() - t0).count();
  if (corpus_time >= 60) {
    std::printf("FAIL  criteria 3+4 together took %.2fs\n", corpus_time);
    ++failures;
  }
  run(5, "oracle equivalence", 120, criterion5);
  run(6, "tensor algebras are reduced", 1e9, criterion6);
  run(7, "structural laws", 30, criterion7);
  run(8, "weak rigidity", 1e9, criterion8);
  std::printf("%s\n", failures == 0 ? "all criteria pass" : "some criteria FAIL");
  return failures == 0 ? 0 : 1;
}
