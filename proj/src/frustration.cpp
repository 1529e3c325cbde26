#include "frustra/frustration.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

namespace frustra {

namespace kernels {

std::vector<int> free_vertices(const CompactGraph& g) {
  const auto comp = g.components();
  std::vector<char> seen_comp(g.n, 0);
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v) {
    if (!seen_comp[comp[v]]) {
      seen_comp[comp[v]] = 1;
      continue;
    }
    out.push_back(v);
  }
  return out;
}

namespace {

void check_width(std::span<const int> free) {
  if (free.size() > 40) throw SizeLimitError("switching search limited to 40 free vertices");
}

void push_argmin(std::vector<std::uint64_t>& masks, std::uint64_t mask, std::size_t cap) {
  if (masks.size() >= cap) throw SizeLimitError("too many minimum signatures to list");
  masks.push_back(mask);
}

}  // namespace

SwitchingScan switching_scan_serial(const CompactGraph& g, std::span<const int> free, bool collect,
                                    std::size_t max_argmins) {
  check_width(free);
  std::vector<int> edges;
  for (int e = 0; e < g.m; ++e)
    if (!g.is_loop(e)) edges.push_back(e);
  std::vector<std::uint8_t> p(g.n, 0);
  SwitchingScan scan;
  scan.min_negative = std::numeric_limits<int>::max();
  const std::uint64_t total = std::uint64_t{1} << free.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < free.size(); ++i) p[free[i]] = (mask >> i) & 1;
    int count = 0;
    bool pruned = false;
    for (int e : edges) {
      count += g.negative[e] ^ p[g.eu[e]] ^ p[g.ev[e]];
      if (count > scan.min_negative) {
        pruned = true;
        break;
      }
    }
    if (pruned) continue;
    if (count < scan.min_negative) {
      scan.min_negative = count;
      scan.argmin_masks.clear();
    }
    if (collect) push_argmin(scan.argmin_masks, mask, max_argmins);
  }
  return scan;
}

SwitchingScan switching_scan_parallel(const CompactGraph& g, std::span<const int> free, bool collect,
                                      std::size_t max_argmins, int jobs) {
  check_width(free);
  const int width = static_cast<int>(free.size());
  const std::uint64_t total = std::uint64_t{1} << width;
  // Chunks are aligned Gray-code blocks; a few per thread keeps the load even.
  const int chunk_bits = std::max(0, width - 8);
  const std::uint64_t chunk_size = std::uint64_t{1} << chunk_bits;
  const std::int64_t chunks = static_cast<std::int64_t>(total / chunk_size);

  std::vector<int> best(chunks, std::numeric_limits<int>::max());
  std::vector<std::vector<std::uint64_t>> found(chunks);
  std::atomic<bool> overflow{false};

  // Per-vertex incident edge lists restricted to free vertices.
  std::vector<std::vector<int>> inc(width);
  for (int i = 0; i < width; ++i) inc[i] = g.incident[free[i]];

  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t c = 0; c < chunks; ++c) {
    std::vector<std::uint8_t> p(g.n, 0);
    const std::uint64_t first = static_cast<std::uint64_t>(c) * chunk_size;
    std::uint64_t gray = first ^ (first >> 1);
    for (int i = 0; i < width; ++i) p[free[i]] = (gray >> i) & 1;
    int count = 0;
    for (int e = 0; e < g.m; ++e)
      if (!g.is_loop(e)) count += g.negative[e] ^ p[g.eu[e]] ^ p[g.ev[e]];
    int local_best = std::numeric_limits<int>::max();
    std::vector<std::uint64_t> local;
    auto consider = [&](std::uint64_t mask) {
      if (count < local_best) {
        local_best = count;
        local.clear();
      }
      if (count == local_best && collect) {
        if (local.size() >= max_argmins) {
          overflow = true;
          return;
        }
        local.push_back(mask);
      }
    };
    consider(gray);
    for (std::uint64_t i = first + 1; i < first + chunk_size; ++i) {
      const int bit = std::countr_zero(i);
      const int v = free[bit];
      for (int e : inc[bit]) count += (g.negative[e] ^ p[g.eu[e]] ^ p[g.ev[e]]) ? -1 : 1;
      p[v] ^= 1;
      gray ^= std::uint64_t{1} << bit;
      consider(gray);
    }
    best[c] = local_best;
    found[c] = std::move(local);
  }
  if (overflow) throw SizeLimitError("too many minimum signatures to list");

  SwitchingScan scan;
  scan.min_negative = *std::min_element(best.begin(), best.end());
  if (collect) {
    for (std::int64_t c = 0; c < chunks; ++c) {
      if (best[c] != scan.min_negative) continue;
      for (std::uint64_t m : found[c]) push_argmin(scan.argmin_masks, m, max_argmins);
    }
    std::sort(scan.argmin_masks.begin(), scan.argmin_masks.end());
  }
  return scan;
}

}  // namespace kernels

namespace {

void check_vertex_bound(const SignedMultigraph& g, int max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw SizeLimitError("exact frustration search is limited to " + std::to_string(max_vertices) +
                         " vertices (got " + std::to_string(g.vertex_count()) + ")");
}

kernels::SwitchingScan run_scan(const CompactGraph& cg, bool collect, std::size_t cap, Kernel kernel, int jobs) {
  const auto free = kernels::free_vertices(cg);
  return kernel == Kernel::Serial ? kernels::switching_scan_serial(cg, free, collect, cap)
                                  : kernels::switching_scan_parallel(cg, free, collect, cap, jobs);
}

SignedMultigraph apply_mask(const SignedMultigraph& g, const CompactGraph& cg, std::span<const int> free,
                            std::uint64_t mask) {
  std::vector<VertexId> x;
  for (std::size_t i = 0; i < free.size(); ++i)
    if ((mask >> i) & 1) x.push_back(cg.vertex_ids[free[i]]);
  return switch_at(g, x);
}

// Parity union-find: balanced iff no edge closes an odd cycle.
struct ParityForest {
  std::vector<int> parent;
  std::vector<std::uint8_t> parity;  // parity to parent
  explicit ParityForest(int n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
  std::pair<int, int> find(int v) {
    int par = 0;
    while (parent[v] != v) {
      par ^= parity[v];
      v = parent[v];
    }
    return {v, par};
  }
  // false when the edge creates an inconsistent cycle
  bool unite(int a, int b, int want) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == want;
    parent[ra] = rb;
    parity[ra] = static_cast<std::uint8_t>(pa ^ pb ^ want);
    return true;
  }
};

}  // namespace

DeletionResult deletion_frustration(const SignedMultigraph& g, bool list_all, std::size_t max_subsets) {
  const CompactGraph cg(g);
  std::vector<int> forced;  // negative loops always go
  std::vector<int> pool;
  for (int e = 0; e < cg.m; ++e) {
    if (cg.is_loop(e)) {
      if (cg.negative[e]) forced.push_back(e);
    } else {
      pool.push_back(e);
    }
  }
  const int m = static_cast<int>(pool.size());
  int upper = 0;
  for (int e : pool) upper += cg.negative[e];

  auto balanced_without = [&](const std::vector<int>& removed_pos) {
    ParityForest forest(cg.n);
    std::size_t r = 0;
    for (int i = 0; i < m; ++i) {
      if (r < removed_pos.size() && removed_pos[r] == i) {
        ++r;
        continue;
      }
      const int e = pool[i];
      if (!forest.unite(cg.eu[e], cg.ev[e], cg.negative[e])) return false;
    }
    return true;
  };

  DeletionResult result;
  std::size_t visited = 0;
  for (int t = 0; t <= upper; ++t) {
    std::vector<int> comb(t);
    std::iota(comb.begin(), comb.end(), 0);
    bool found = false;
    while (true) {
      if (++visited > max_subsets) throw SizeLimitError("edge-deletion oracle exceeded its subset budget");
      if (balanced_without(comb)) {
        found = true;
        std::vector<EdgeId> ids;
        for (int e : forced) ids.push_back(cg.edge_ids[e]);
        for (int i : comb) ids.push_back(cg.edge_ids[pool[i]]);
        std::sort(ids.begin(), ids.end());
        result.minimum_sets.push_back(std::move(ids));
        if (!list_all) break;
      }
      int i = t - 1;
      while (i >= 0 && comb[i] == m - t + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < t; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (found) {
      result.index = t + static_cast<int>(forced.size());
      return result;
    }
  }
  throw InternalInconsistency("edge-deletion oracle found no balancing set");
}

FrustrationResult frustration_index(const SignedMultigraph& g, const FrustrationOptions& options) {
  check_vertex_bound(g, options.max_vertices);
  const CompactGraph cg(g);
  const auto free = kernels::free_vertices(cg);
  const auto scan = options.kernel == Kernel::Serial
                        ? kernels::switching_scan_serial(cg, free, options.list_signatures, options.max_signatures)
                        : kernels::switching_scan_parallel(cg, free, options.list_signatures,
                                                           options.max_signatures, options.jobs);
  FrustrationResult result;
  result.index = scan.min_negative + cg.negative_loop_count();
  if (options.list_signatures) {
    for (std::uint64_t mask : scan.argmin_masks) result.minimum_signatures.push_back(apply_mask(g, cg, free, mask));
    auto key = [](const SignedMultigraph& s) {
      std::vector<std::uint8_t> v;
      for (const SignedEdge& e : s.edges()) v.push_back(e.is_negative());
      return v;
    };
    std::sort(result.minimum_signatures.begin(), result.minimum_signatures.end(),
              [&](const SignedMultigraph& a, const SignedMultigraph& b) { return key(a) < key(b); });
    result.minimum_signatures.erase(
        std::unique(result.minimum_signatures.begin(), result.minimum_signatures.end()),
        result.minimum_signatures.end());
  }
  if (options.cross_check || options.list_witnesses) {
    auto deletion = deletion_frustration(g, options.list_witnesses, options.max_deletion_subsets);
    if (deletion.index != result.index)
      throw InternalInconsistency("switching search gave " + std::to_string(result.index) +
                                  " but edge deletion gave " + std::to_string(deletion.index));
    if (options.list_witnesses) result.witness_cut_sets = std::move(deletion.minimum_sets);
  }
  return result;
}

int frustration_value(const SignedMultigraph& g, int max_vertices, Kernel kernel, int jobs) {
  check_vertex_bound(g, max_vertices);
  const CompactGraph cg(g);
  return run_scan(cg, false, 0, kernel, jobs).min_negative + cg.negative_loop_count();
}

int max_cut(const SignedMultigraph& g, int max_vertices) {
  check_vertex_bound(g, max_vertices);
  const CompactGraph cg(g);
  if (cg.n <= 1) return 0;
  int best = 0;
  const std::uint64_t total = std::uint64_t{1} << (cg.n - 1);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const std::uint64_t side = bits << 1;
    int cut = 0;
    for (int e = 0; e < cg.m; ++e) cut += ((side >> cg.eu[e]) ^ (side >> cg.ev[e])) & 1;
    best = std::max(best, cut);
  }
  return best;
}

bool is_minimum_signature(const SignedMultigraph& g, int max_vertices) {
  return g.negative_count() == frustration_value(g, max_vertices);
}

}  // namespace frustra
