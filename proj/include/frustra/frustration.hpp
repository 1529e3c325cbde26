#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "frustra/compact_graph.hpp"
#include "frustra/signed_graph.hpp"

namespace frustra {

enum class Kernel : std::uint8_t { Serial, Parallel };

struct FrustrationOptions {
  int max_vertices = 24;
  bool cross_check = true;          // run the edge-deletion oracle and compare
  bool list_signatures = true;      // collect every minimum signature
  bool list_witnesses = false;      // collect every minimum balancing edge set
  std::size_t max_signatures = 1'000'000;
  std::size_t max_deletion_subsets = 50'000'000;
  Kernel kernel = Kernel::Parallel;
  int jobs = 0;                     // 0: OpenMP default
};

struct FrustrationResult {
  int index = 0;
  std::vector<SignedMultigraph> minimum_signatures;   // sorted by sign vector
  std::vector<std::vector<EdgeId>> witness_cut_sets;  // sorted edge id lists
};

// l(G, sigma) by switching search over 2^(n - c) classes (c = components),
// cross-checked against the edge-deletion oracle unless disabled.
FrustrationResult frustration_index(const SignedMultigraph& g, const FrustrationOptions& options = {});

// Switching search only; no listing, no cross-check.
int frustration_value(const SignedMultigraph& g, int max_vertices = 24, Kernel kernel = Kernel::Parallel,
                      int jobs = 0);

struct DeletionResult {
  int index = 0;
  std::vector<std::vector<EdgeId>> minimum_sets;
};

// Least |E'| with G - E' balanced, by increasing-size subset search.
DeletionResult deletion_frustration(const SignedMultigraph& g, bool list_all = false,
                                    std::size_t max_subsets = 50'000'000);

// mc(G) of the underlying multigraph by exhaustive bipartition search.
int max_cut(const SignedMultigraph& g, int max_vertices = 24);

bool is_minimum_signature(const SignedMultigraph& g, int max_vertices = 24);

namespace kernels {

// Result of scanning all switchings at subsets of `free_vertices`.
// Loops are ignored; callers add the negative loops back.
struct SwitchingScan {
  int min_negative = 0;
  std::vector<std::uint64_t> argmin_masks;  // bit i = free_vertices[i] switched; sorted
};

// Reference implementation: recounts every subset from scratch and abandons a
// subset once its partial count exceeds the incumbent.
SwitchingScan switching_scan_serial(const CompactGraph& g, std::span<const int> free_vertices, bool collect,
                                    std::size_t max_argmins);

// Gray-code walk split into chunks across OpenMP threads; results merged in
// sorted order so the output does not depend on the thread count.
SwitchingScan switching_scan_parallel(const CompactGraph& g, std::span<const int> free_vertices, bool collect,
                                      std::size_t max_argmins, int jobs = 0);

// One representative per component stays fixed; the rest are free.
std::vector<int> free_vertices(const CompactGraph& g);

}  // namespace kernels

}  // namespace frustra
