#include "frustra/compact_graph.hpp"

#include <bit>

namespace frustra {

CompactGraph::CompactGraph(const SignedMultigraph& g)
    : n(g.vertex_count()), m(g.edge_count()), vertex_ids(g.vertices()), incident(n) {
  edge_ids.reserve(m);
  eu.reserve(m);
  ev.reserve(m);
  negative.reserve(m);
  for (const SignedEdge& e : g.edges()) {
    const int a = g.vertex_index(e.u);
    const int b = g.vertex_index(e.v);
    const int idx = static_cast<int>(edge_ids.size());
    edge_ids.push_back(e.id);
    eu.push_back(a);
    ev.push_back(b);
    negative.push_back(e.is_negative() ? 1 : 0);
    if (a != b) {
      incident[a].push_back(idx);
      incident[b].push_back(idx);
    }
  }
}

int CompactGraph::negative_loop_count() const noexcept {
  int count = 0;
  for (int e = 0; e < m; ++e)
    if (is_loop(e) && negative[e]) ++count;
  return count;
}

std::vector<int> CompactGraph::components(int* count) const {
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.assign(1, s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e : incident[v]) {
        const int w = other(e, v);
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

std::vector<std::uint64_t> CompactGraph::adjacency_masks() const {
  if (n > 64) throw SizeLimitError("adjacency masks need at most 64 vertices");
  std::vector<std::uint64_t> adj(n, 0);
  for (int e = 0; e < m; ++e) {
    if (is_loop(e)) continue;
    adj[eu[e]] |= std::uint64_t{1} << ev[e];
    adj[ev[e]] |= std::uint64_t{1} << eu[e];
  }
  return adj;
}

bool mask_connected(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
  if (mask == 0) return true;
  std::uint64_t seen = mask & (~mask + 1);
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= mask & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

}  // namespace frustra
