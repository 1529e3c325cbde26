#include "frustra/enumeration.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>

#include "frustra/canonical.hpp"
#include "frustra/criticality.hpp"
#include "frustra/frustration.hpp"

namespace frustra {

namespace {

struct BaseFaces {
  std::vector<int> slot_face;
  std::vector<std::uint8_t> bridge;  // per face
  int faces = 0;
};

BaseFaces base_faces(const RootedBase& rb) {
  std::vector<int> weights(rb.walk.size(), 0);
  weights[0] = 2;
  const auto ce = make_canonical(rb.base, rb.walk, weights, 1);
  const auto fc = classify_faces(ce);
  return {fc.slot_face, fc.bridge, static_cast<int>(fc.faces.size())};
}

bool has_parallel_edge(const SignedMultigraph& g) {
  std::map<std::pair<VertexId, VertexId>, int> seen;
  for (const SignedEdge& e : g.edges())
    if (++seen[{std::min(e.u, e.v), std::max(e.u, e.v)}] > 1) return true;
  return false;
}

bool has_triangle(const SignedMultigraph& g) {
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const SignedEdge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (const SignedEdge& e : g.edges())
    for (VertexId w : adj[e.u])
      if (w != e.v && w != e.u && std::find(adj[e.v].begin(), adj[e.v].end(), w) != adj[e.v].end()) return true;
  return false;
}

SignedMultigraph negative_cycle(int n) {
  auto g = SignedMultigraph::with_vertices(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, i == 0 ? Sign::Negative : Sign::Positive);
  return g;
}

struct Candidate {
  int base = -1;  // -1: vertex-free circle
  std::vector<int> weights;
};

}  // namespace

bool CatalogEntry::verifiers_ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const VerifierReport& r) { return r.ok(); });
}

std::vector<std::vector<int>> candidate_weightings(const RootedBase& rb, int k, bool prune) {
  const int len = static_cast<int>(rb.walk.size());
  const int total = 2 * k;
  std::vector<std::vector<int>> out;
  std::vector<int> w(len, 0);
  const bool lemma = prune && k >= 3;
  const bool neighbours = prune && k >= 4;  // consecutive faces weigh at most 3
  BaseFaces bf;
  if (lemma) bf = base_faces(rb);
  std::vector<int> face_weight(bf.faces, 0);
  auto consecutive_ok = [&](int s, int t) {
    const int f = bf.slot_face[s];
    const int g = bf.slot_face[t];
    return !neighbours || f == g || face_weight[f] + face_weight[g] <= 3;
  };
  std::function<void(int, int)> place = [&](int s, int left) {
    if (s == len) {
      if (left != 0) return;
      if (lemma && len > 1 && !consecutive_ok(len - 1, 0)) return;
      if (prune && (k == 4 || k == 5) && !admissible_weight_sequence(w, k)) return;
      out.push_back(w);
      return;
    }
    const int cap = lemma ? std::min(left, 2) : left;
    for (int x = 0; x <= cap; ++x) {
      if (s == len - 1 && x != left) continue;
      if (lemma) {
        const int f = bf.slot_face[s];
        if (bf.bridge[f] && x > 0) break;
        if (face_weight[f] + x > 2) break;
        face_weight[f] += x;
        const bool ok = s == 0 || consecutive_ok(s - 1, s);
        if (ok) {
          w[s] = x;
          place(s + 1, left - x);
        }
        face_weight[f] -= x;
      } else {
        w[s] = x;
        place(s + 1, left - x);
      }
    }
    w[s] = 0;
  };
  place(0, total);
  return out;
}

Catalog enumerate_prime(const EnumerationOptions& opt) {
  if (opt.k < 1 || opt.k > 5) throw std::invalid_argument("k must lie in [1, 5]");
  const int max_base = opt.max_base < 0 ? default_max_base(opt.k) : opt.max_base;
  Catalog cat;
  cat.k = opt.k;
  cat.max_base = max_base;
  cat.pruned = opt.prune;
  const int k = opt.k;
  if (k >= 4) {
    cat.bounds = bounds(k);
    cat.admissible_sequences = count_admissible_weight_sequences(k);
  }
  CriticalityOptions co;
  co.max_vertices = opt.max_vertices;
  co.kernel = Kernel::Serial;

  if (k == 1) {
    // Negative cycles, each reduced by undoing subdivisions.
    std::map<std::string, CatalogEntry> found;
    for (int n = 1; n <= std::max(1, max_base); ++n) {
      const auto trace = reduce_subdivision_traced(negative_cycle(n));
      cat.stats.multi_edge_contractions += trace.multi_edge_steps;
      ++cat.stats.weightings;
      if (!is_prime(trace.graph, co)) {
        ++cat.stats.not_prime;
        continue;
      }
      const auto key = canonical_key(trace.graph);
      if (found.count(key)) {
        ++cat.stats.duplicates;
        continue;
      }
      CatalogEntry e;
      e.key = key;
      e.graph = trace.graph;
      e.reports.push_back(verify_matching_property(e.graph, 1));
      found.emplace(key, std::move(e));
    }
    for (auto& [key, e] : found) cat.entries.push_back(std::move(e));
    cat.stats.distinct = static_cast<std::int64_t>(cat.entries.size());
    cat.complete = true;
    cat.notes.push_back("negative cycles of length 1.." + std::to_string(std::max(1, max_base)) + " reduced");
    return cat;
  }

  const std::vector<RootedBase> bases = opt.bases ? *opt.bases : generate_bases(max_base);
  std::vector<Candidate> cands;
  cands.push_back({-1, {2 * k}});
  for (int b = 0; b < static_cast<int>(bases.size()); ++b) {
    if (bases[b].base.graph.vertex_count() > max_base) continue;
    ++cat.stats.rooted_bases;
    if (opt.prune && k >= 4) {
      const auto bf = base_faces(bases[b]);
      if (std::any_of(bf.bridge.begin(), bf.bridge.end(), [](std::uint8_t x) { return x != 0; })) {
        ++cat.stats.pruned_bases;
        continue;
      }
    }
    for (auto& w : candidate_weightings(bases[b], k, opt.prune)) cands.push_back({b, std::move(w)});
  }
  cat.stats.weightings = static_cast<std::int64_t>(cands.size());

  // Stage 1: assemble, structural filters, key.
  enum Outcome : int { Keep, Cheap, NotE4c, Abort };
  std::vector<int> outcome(cands.size(), Keep);
  std::vector<std::string> keys(cands.size());
  const int jobs = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
  const PlaneEmbedding empty_base;
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(cands.size()); ++i) {
    const Candidate& c = cands[i];
    try {
      const auto ce = c.base < 0 ? make_canonical(empty_base, {}, c.weights, k)
                                 : make_canonical(bases[c.base].base, bases[c.base].walk, c.weights, k);
      const SignedMultigraph& g = ce.graph;
      if (k >= 3 && ((g.vertex_count() >= 4 && has_parallel_edge(g)) || (g.vertex_count() >= 6 && has_triangle(g)))) {
        outcome[i] = Cheap;
        continue;
      }
      if (k >= 3 && !essentially_4_edge_connected(g)) {
        outcome[i] = NotE4c;
        continue;
      }
      keys[i] = canonical_key(g);
    } catch (const SizeLimitError&) {
      outcome[i] = Abort;
    }
  }
  std::map<std::string, std::size_t> first;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    switch (outcome[i]) {
      case Cheap: ++cat.stats.cheap_rejects; break;
      case NotE4c: ++cat.stats.not_essentially_4ec; break;
      case Abort: ++cat.stats.aborted; break;
      default:
        if (!first.emplace(keys[i], i).second) ++cat.stats.duplicates;
    }
  }
  cat.stats.distinct = static_cast<std::int64_t>(first.size());

  // Stage 2: index, criticality, primality per distinct key.
  std::vector<std::size_t> order;
  for (const auto& [key, i] : first) order.push_back(i);
  std::sort(order.begin(), order.end());
  enum Verdict : int { Prime, WrongIndex, NotCritical, NotPrime, Aborted };
  std::vector<int> verdict(order.size(), Prime);
  std::vector<std::optional<CanonicalEmbedding>> built(order.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(order.size()); ++j) {
    const Candidate& c = cands[order[j]];
    try {
      auto ce = c.base < 0 ? make_canonical(empty_base, {}, c.weights, k)
                           : make_canonical(bases[c.base].base, bases[c.base].walk, c.weights, k);
      if (frustration_value(ce.graph, opt.max_vertices, Kernel::Serial) != k) {
        verdict[j] = WrongIndex;
        continue;
      }
      const auto pr = prime_report(ce.graph, co);
      if (!pr.criticality.is_critical) {
        verdict[j] = NotCritical;
        continue;
      }
      if (!pr.is_prime) {
        verdict[j] = NotPrime;
        continue;
      }
      built[j] = std::move(ce);
    } catch (const SizeLimitError&) {
      verdict[j] = Aborted;
    }
  }
  for (std::size_t j = 0; j < order.size(); ++j) {
    switch (verdict[j]) {
      case WrongIndex: ++cat.stats.wrong_index; break;
      case NotCritical: ++cat.stats.not_critical; break;
      case NotPrime: ++cat.stats.not_prime; break;
      case Aborted: ++cat.stats.aborted; break;
      default: {
        const Candidate& c = cands[order[j]];
        CatalogEntry e;
        e.key = keys[order[j]];
        e.graph = built[j]->graph;
        e.base_vertices = c.base < 0 ? 0 : bases[c.base].base.graph.vertex_count();
        e.weights = c.weights;
        e.embedding = std::move(built[j]);
        cat.entries.push_back(std::move(e));
      }
    }
  }

  // Stage 3: lemma verifiers on survivors.
  if (opt.run_verifiers) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(cat.entries.size()); ++j) {
      auto& e = cat.entries[j];
      try {
        e.reports = run_all_verifiers(*e.embedding);
      } catch (const std::exception& ex) {
        VerifierReport r;
        r.name = "verifier run";
        r.fail(ex.what());
        e.reports = {r};
      }
    }
  }
  std::sort(cat.entries.begin(), cat.entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return std::pair(a.graph.vertex_count(), a.key) < std::pair(b.graph.vertex_count(), b.key);
  });
  cat.complete = k <= 3 && cat.stats.aborted == 0;
  if (k >= 4) cat.notes.push_back("bounded best-effort run; the census of this level is not exhausted");
  return cat;
}

}  // namespace frustra
