#pragma once

#include <cstdint>
#include <vector>

#include "frustra/signed_graph.hpp"

namespace frustra {

// Index-based snapshot of a SignedMultigraph used by the search kernels.
// Vertices and edges are renumbered 0..n-1 and 0..m-1 in id order.
struct CompactGraph {
  int n = 0;
  int m = 0;
  std::vector<VertexId> vertex_ids;
  std::vector<EdgeId> edge_ids;
  std::vector<int> eu;
  std::vector<int> ev;
  std::vector<std::uint8_t> negative;
  std::vector<std::vector<int>> incident;  // non-loop edges at each vertex

  CompactGraph() = default;
  explicit CompactGraph(const SignedMultigraph& g);

  bool is_loop(int e) const noexcept { return eu[e] == ev[e]; }
  int other(int e, int v) const noexcept { return eu[e] == v ? ev[e] : eu[e]; }
  int negative_loop_count() const noexcept;
  // Component index for each vertex, components numbered by smallest member.
  std::vector<int> components(int* count = nullptr) const;
  // Bitmask adjacency; requires n <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;
};

// Is the vertex set `mask` connected in the graph given by adjacency masks?
bool mask_connected(const std::vector<std::uint64_t>& adj, std::uint64_t mask);

}  // namespace frustra
