// Acceptance suite: one PASS/FAIL line per criterion. With no argument every
// criterion runs; with a number only that one does.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "frustra/criticality.hpp"
#include "frustra/enumeration.hpp"
#include "frustra/frustration.hpp"
#include "support.hpp"

using namespace frustra;
using namespace frustra::testing;

namespace {

constexpr double kOracleSeconds = 300;
constexpr double kCensusSeconds = 1800;
constexpr int kRandomEight = 200;
constexpr int kRandomCubic = 50;
constexpr int kSynthetic = 20;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

const std::vector<SignedMultigraph>& corpus() {
  static const std::vector<SignedMultigraph> graphs = [] {
    auto out = small_corpus(6, 10);
    Rng rng(20240801);
    for (int i = 0; i < kRandomEight; ++i) {
      const int m = 8 + static_cast<int>(rng() % 9);
      out.push_back(random_signed_graph(rng, 8, m));
    }
    return out;
  }();
  return graphs;
}

double census_seconds = 0;

const Catalog& catalog(int k) {
  static std::map<int, Catalog> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  EnumerationOptions o;
  o.k = k;
  const auto t0 = Clock::now();
  auto cat = enumerate_prime(o);
  if (k == 3) census_seconds = seconds_since(t0);
  return cache.emplace(k, std::move(cat)).first->second;
}

std::vector<const CatalogEntry*> embedded_entries() {
  std::vector<const CatalogEntry*> out;
  for (int k : {2, 3, 4})
    for (const auto& e : catalog(k).entries)
      if (e.embedding) out.push_back(&e);
  return out;
}

void oracle_agreement(Outcome& o) {
  const auto t0 = Clock::now();
  const auto& graphs = corpus();
  int checked = 0;
  for (const auto& g : graphs) {
    const int a = frustration_value(g);
    const int b = deletion_frustration(g).index;
    if (a != b) o.fail("switching " + std::to_string(a) + " vs deletion " + std::to_string(b) + " on " + canonical_key(g));
    ++checked;
  }
  const double t = seconds_since(t0);
  if (t >= kOracleSeconds) o.fail("took " + std::to_string(t) + " s");
  o.detail << checked << " graphs (" << graphs.size() - kRandomEight << " exhaustive classes + " << kRandomEight
           << " random), " << static_cast<int>(t) << " s";
}

void known_values(Outcome& o) {
  if (frustration_value(k4()) != 2) o.fail("(K4,-)");
  if (frustration_value(negative_loop()) != 1) o.fail("negative loop");
  for (int m = 1; m <= 5; ++m) {
    std::set<int> all;
    for (int i = 0; i < 2 * m + 1; ++i) all.insert(i);
    if (frustration_value(cycle(2 * m + 1, all)) != 1) o.fail("all-negative C" + std::to_string(2 * m + 1));
  }
  Rng rng(7);
  for (int i = 0; i < kRandomCubic; ++i) {
    const int n = 4 + 2 * (i % 4);
    const auto g = random_cubic(rng, n, Sign::Negative);
    if (frustration_value(g) != g.edge_count() - max_cut(g)) o.fail("cubic graph " + canonical_key(g));
  }
  o.detail << "K4, loop, C3..C11, " << kRandomCubic << " cubic graphs on 4..10 vertices";
}

void characterisations(Outcome& o) {
  int frustrated = 0;
  int critical = 0;
  for (const auto& g : corpus()) {
    CriticalityOptions co;
    const auto r = is_critical(g, co);
    if (r.k == 0) continue;
    ++frustrated;
    critical += r.is_critical;
    if (r.char1 != r.char2 || r.char2 != r.char3) o.fail("disagreement on " + canonical_key(g));
  }
  o.detail << frustrated << " graphs with k >= 1, " << critical << " critical";
}

void rediscovery(Outcome& o) {
  const auto& c1 = catalog(1);
  if (c1.entries.size() != 1 || c1.entries[0].key != canonical_key(negative_loop())) o.fail("k = 1 catalog");
  const auto& c2 = catalog(2);
  if (c2.entries.size() != 1 || c2.entries[0].key != canonical_key(k4())) o.fail("k = 2 catalog");
  const auto& c3 = catalog(3);
  if (c3.entries.size() != 2) o.fail("k = 3 catalog has " + std::to_string(c3.entries.size()) + " entries");
  if (!c3.complete) o.fail("k = 3 run aborted");
  if (census_seconds >= kCensusSeconds) o.fail("k = 3 took " + std::to_string(census_seconds) + " s");
  o.detail << "sizes " << c1.entries.size() << "/" << c2.entries.size() << "/" << c3.entries.size() << ", k = 3 in "
           << static_cast<int>(census_seconds) << " s at base <= " << c3.max_base;
}

void lemma_battery(Outcome& o) {
  int embeddings = 0;
  int checks = 0;
  int diagnostics = 0;
  for (int k : {3, 4}) {
    const auto& cat = catalog(k);
    if (k == 4 && cat.complete) o.fail("k = 4 run lacks the incompleteness marker");
    for (const auto& e : cat.entries) {
      const auto& ce = *e.embedding;
      ++embeddings;
      for (const auto& r : {verify_weight_lemma(ce), verify_bridge_structure(ce), verify_zero_runs(ce),
                            verify_face_adjacency(ce), verify_four_cut_property(ce.graph, k),
                            verify_equilibrated_cuts(ce), verify_matching_property(ce.graph, k)}) {
        ++checks;
        if (!r.applicable) {
          diagnostics += r.passed ? 0 : 1;
          continue;
        }
        if (!r.passed)
          o.fail("k = " + std::to_string(k) + " entry on " + std::to_string(e.graph.vertex_count()) +
                 " vertices, " + r.name + ": " + (r.witnesses.empty() ? r.note : r.witnesses.front()));
      }
    }
  }
  o.detail << embeddings << " embeddings (k = 4 at base <= " << catalog(4).max_base << ": " << catalog(4).entries.size()
           << "), " << checks << " checks, " << diagnostics << " out-of-scope diagnostics";
}

void check_normalize(Outcome& o, const CanonicalEmbedding& ce, const std::string& label) {
  try {
    const auto t = normalize(ce);
    for (std::size_t i = 1; i < t.bridge_counts.size(); ++i)
      if (t.bridge_counts[i] >= t.bridge_counts[i - 1]) o.fail(label + ": count did not drop");
    if (t.bridge_counts.back() != 0) o.fail(label + ": bridge faces remain");
    if (canonical_key(t.embedding.graph) != canonical_key(ce.graph)) o.fail(label + ": key changed");
    if (frustration_value(t.embedding.graph) != frustration_value(ce.graph)) o.fail(label + ": index changed");
  } catch (const std::exception& ex) {
    o.fail(label + ": " + ex.what());
  }
}

void normalization(Outcome& o) {
  int cataloged = 0;
  for (const auto* e : embedded_entries()) {
    check_normalize(o, *e->embedding, "entry " + e->key);
    ++cataloged;
  }
  const auto synthetic = synthetic_bridge_embeddings(kSynthetic);
  if (static_cast<int>(synthetic.size()) < kSynthetic) o.fail("only " + std::to_string(synthetic.size()) + " synthetic embeddings");
  int steps = 0;
  for (std::size_t i = 0; i < synthetic.size(); ++i) {
    if (bridge_face_count(synthetic[i]) == 0) o.fail("synthetic embedding without a bridge face");
    check_normalize(o, synthetic[i], "synthetic " + std::to_string(i));
    steps += bridge_face_count(synthetic[i]);
  }
  o.detail << cataloged << " cataloged + " << synthetic.size() << " synthetic (" << steps << " bridge faces removed)";
}

void compositions(Outcome& o) {
  const std::vector<int> allowed{1, 2};
  const auto series = cyclic_composition_series(14);
  const std::vector<std::int64_t> head{1, 2, 2, 3};
  std::ostringstream values;
  for (int n = 1; n <= 14; ++n) {
    const auto c = count_cyclic_compositions_closed_form(n);
    values << (n > 1 ? "," : "") << c;
    if (c != static_cast<std::int64_t>(enumerate_cyclic_compositions(n, allowed).size())) o.fail("enumeration at n = " + std::to_string(n));
    if (series[n].denominator() != 1 || series[n].numerator() != c) o.fail("series at n = " + std::to_string(n));
    if (n <= 4 && c != head[n - 1]) o.fail("value at n = " + std::to_string(n));
  }
  o.detail << "c(1..14) = " << values.str();
}

void bound_values(Outcome& o) {
  const auto b4 = bounds(4);
  const auto b5 = bounds(5);
  if (b4.M != 48 || b4.edge_bound != 183) o.fail("k = 4");
  if (b5.M != 3072 || b5.edge_bound != 12279) o.fail("k = 5");
  o.detail << "(" << b4.M << "," << b4.edge_bound << ") (" << b5.M << "," << b5.edge_bound << ")";
}

void q_construction(Outcome& o) {
  int built = 0;
  int skipped = 0;
  for (const auto* e : embedded_entries()) {
    if (e->embedding->free_circle()) {
      ++skipped;
      continue;
    }
    const auto q = build_eta_and_Q(*e->embedding);
    ++built;
    const std::string who = "entry " + e->key + ": ";
    if (!q.planar) o.fail(who + "Q not planar");
    if (q.max_multiplicity > 3) o.fail(who + "multiplicity " + std::to_string(q.max_multiplicity));
    if (!q.cycle_simple) o.fail(who + "C_M edge repeated");
    if (q.edges != q.boundary_faces + q.internal_faces) o.fail(who + "|E(Q)| != |F1| + |F2|");
    if (q.boundary_faces >= 3 && q.edges > 4 * q.boundary_faces - 9) o.fail(who + "edge bound exceeded");
  }
  o.detail << built << " embeddings" << (skipped ? " (" + std::to_string(skipped) + " without a base skipped)" : "");
}

struct Criterion {
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {"frustration oracle agreement", oracle_agreement},
      {"known values", known_values},
      {"equivalence of the three characterisations", characterisations},
      {"catalog rediscovery", rediscovery},
      {"lemma battery", lemma_battery},
      {"normalization", normalization},
      {"cyclic compositions", compositions},
      {"bounds", bound_values},
      {"eta/Q construction", q_construction},
  };
  std::vector<int> pick;
  for (int i = 1; i < argc; ++i) pick.push_back(std::atoi(argv[i]));
  if (pick.empty())
    for (int i = 1; i <= static_cast<int>(all.size()); ++i) pick.push_back(i);
  int failures = 0;
  for (int i : pick) {
    if (i < 1 || i > static_cast<int>(all.size())) {
      std::cerr << "no criterion " << i << '\n';
      return 2;
    }
    Outcome o;
    const auto t0 = Clock::now();
    try {
      all[i - 1].run(o);
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    std::printf("criterion %d %-44s %s  [%.1fs] %s\n", i, all[i - 1].name, o.pass ? "PASS" : "FAIL", seconds_since(t0),
                o.detail.str().c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures ? 1 : 0;
}
