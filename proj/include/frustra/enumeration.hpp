#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frustra/combinatorics.hpp"
#include "frustra/embedding.hpp"
#include "frustra/plane_cubic.hpp"
#include "frustra/verifiers.hpp"

namespace frustra {

// Base-size bound used when EnumerationOptions::max_base is negative. k = 2
// has no weight pruning, so its search grows fastest.
constexpr int default_max_base(int k) { return k == 2 ? 10 : k >= 4 ? 8 : 14; }

struct EnumerationOptions {
  int k = 3;
  int max_base = -1;               // vertices of the plane cubic base; < 0: default_max_base(k)
  bool prune = true;
  int jobs = 0;
  int max_vertices = 30;           // exact-search bound on the assembled graph
  bool run_verifiers = true;
  std::optional<std::vector<RootedBase>> bases;  // replaces generation when set
};

struct EnumerationStats {
  std::int64_t rooted_bases = 0;
  std::int64_t weightings = 0;
  std::int64_t pruned_bases = 0;
  std::int64_t cheap_rejects = 0;    // parallel edges or triangles
  std::int64_t not_essentially_4ec = 0;
  std::int64_t duplicates = 0;
  std::int64_t distinct = 0;
  std::int64_t wrong_index = 0;
  std::int64_t not_critical = 0;
  std::int64_t not_prime = 0;
  std::int64_t aborted = 0;
  std::int64_t multi_edge_contractions = 0;
};

struct CatalogEntry {
  std::string key;
  SignedMultigraph graph;
  std::optional<CanonicalEmbedding> embedding;  // absent for k = 1
  std::vector<VerifierReport> reports;
  int base_vertices = 0;
  std::vector<int> weights;  // insertions per boundary slot
  bool verifiers_ok() const;
};

struct Catalog {
  int k = 0;
  bool complete = false;
  int max_base = 0;
  bool pruned = true;
  std::vector<CatalogEntry> entries;  // by (vertex count, key)
  EnumerationStats stats;
  std::optional<BoundReport> bounds;
  std::optional<std::int64_t> admissible_sequences;
  std::vector<std::string> notes;
};

// Weightings of one rooted base that survive the weight-lemma pruning (or
// every weak composition of 2k over the walk when prune is false).
std::vector<std::vector<int>> candidate_weightings(const RootedBase& base, int k, bool prune);

Catalog enumerate_prime(const EnumerationOptions& options);

}  // namespace frustra
