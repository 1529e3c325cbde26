#include "frustra/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "frustra/compact_graph.hpp"

namespace frustra {

namespace {

using Code = std::vector<std::array<int, 4>>;  // (i, j, positive, negative), i <= j

struct Labeler {
  const CompactGraph& cg;
  std::vector<std::vector<std::pair<int, int>>> nbrs;  // (neighbour, multiplicity), loops excluded
  std::optional<Code> best;

  explicit Labeler(const CompactGraph& g) : cg(g), nbrs(g.n) {
    std::vector<std::map<int, int>> count(g.n);
    for (int e = 0; e < g.m; ++e) {
      if (g.is_loop(e)) continue;
      ++count[g.eu[e]][g.ev[e]];
      ++count[g.ev[e]][g.eu[e]];
    }
    for (int v = 0; v < g.n; ++v)
      for (auto [w, c] : count[v]) nbrs[v].emplace_back(w, c);
  }

  // Equitable refinement; colours end up as ranks of sorted signatures.
  void refine(std::vector<int>& colour) const {
    int cells = static_cast<int>(std::set<int>(colour.begin(), colour.end()).size());
    while (true) {
      std::vector<std::pair<std::vector<int>, int>> sig(cg.n);
      for (int v = 0; v < cg.n; ++v) {
        auto& s = sig[v].first;
        s.push_back(colour[v]);
        std::vector<std::pair<int, int>> around;
        for (auto [w, c] : nbrs[v]) around.emplace_back(colour[w], c);
        std::sort(around.begin(), around.end());
        for (auto [c, m] : around) {
          s.push_back(c);
          s.push_back(m);
        }
        sig[v].second = v;
      }
      std::vector<int> order(cg.n);
      for (int v = 0; v < cg.n; ++v) order[v] = v;
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a].first < sig[b].first; });
      int rank = 0;
      for (int i = 0; i < cg.n; ++i) {
        if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++rank;
        colour[order[i]] = rank;
      }
      const int now = rank + 1;
      if (now == cells) return;
      cells = now;
    }
  }

  void leaf(const std::vector<int>& label) {
    // Spanning forest by BFS in label order; potentials keep each tree
    // parallel class majority positive, branching on ties.
    std::vector<int> by_label(cg.n);
    for (int v = 0; v < cg.n; ++v) by_label[label[v]] = v;
    // Sign counts per (min label, max label).
    std::map<std::pair<int, int>, std::array<int, 2>> bundles;
    for (int e = 0; e < cg.m; ++e) {
      int a = label[cg.eu[e]];
      int b = label[cg.ev[e]];
      if (a > b) std::swap(a, b);
      ++bundles[{a, b}][cg.negative[e] ? 1 : 0];
    }
    std::vector<std::pair<int, int>> tree;  // (parent label, child label) in discovery order
    std::vector<bool> seen(cg.n, false);
    for (int r = 0; r < cg.n; ++r) {
      if (seen[r]) continue;
      seen[r] = true;
      std::vector<int> queue{r};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        const int a = queue[i];
        std::vector<int> next;
        for (auto [w, c] : nbrs[by_label[a]]) next.push_back(label[w]);
        std::sort(next.begin(), next.end());
        for (int b : next)
          if (!seen[b]) {
            seen[b] = true;
            queue.push_back(b);
            tree.emplace_back(a, b);
          }
      }
    }
    std::vector<int> potential(cg.n, 0);
    std::function<void(std::size_t)> assign = [&](std::size_t t) {
      if (t == tree.size()) {
        Code code;
        for (const auto& [ab, counts] : bundles) {
          const bool flip = ab.first != ab.second && potential[ab.first] != potential[ab.second];
          code.push_back({ab.first, ab.second, flip ? counts[1] : counts[0], flip ? counts[0] : counts[1]});
        }
        if (!best || code < *best) best = std::move(code);
        return;
      }
      const auto [a, b] = tree[t];
      const auto& counts = bundles.at({std::min(a, b), std::max(a, b)});
      // potential[b] = potential[a] keeps the class as is.
      const int keep = counts[0] - counts[1];
      for (int flip : {0, 1}) {
        const int balance = flip ? -keep : keep;
        if (balance < 0) continue;
        potential[b] = potential[a] ^ flip;
        assign(t + 1);
      }
    };
    assign(0);
  }

  void search(std::vector<int> colour) {
    refine(colour);
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < cg.n; ++v) cells[colour[v]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, members] : cells)
      if (members.size() > 1) {
        target = &members;
        break;
      }
    if (!target) {
      leaf(colour);
      return;
    }
    for (int v : *target) {
      std::vector<int> next(cg.n);
      for (int w = 0; w < cg.n; ++w) next[w] = 2 * colour[w] + (colour[w] == colour[v] && w != v ? 1 : 0);
      search(std::move(next));
    }
  }
};

}  // namespace

std::string canonical_key(const SignedMultigraph& g, int max_vertices) {
  if (g.vertex_count() > max_vertices) throw SizeLimitError("canonical key limited to " + std::to_string(max_vertices) +
                                                            " vertices");
  const CompactGraph cg(g);
  Labeler lab(cg);
  std::vector<std::tuple<int, int, int>> initial(cg.n, {0, 0, 0});
  for (int e = 0; e < cg.m; ++e) {
    if (cg.is_loop(e)) {
      auto& [d, p, q] = initial[cg.eu[e]];
      d += 2;
      (cg.negative[e] ? q : p) += 1;
    } else {
      std::get<0>(initial[cg.eu[e]]) += 1;
      std::get<0>(initial[cg.ev[e]]) += 1;
    }
  }
  auto sorted = initial;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> colour(cg.n);
  for (int v = 0; v < cg.n; ++v)
    colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), initial[v]) - sorted.begin());
  if (cg.n > 0) lab.search(colour);
  std::string key = "n" + std::to_string(cg.n) + ":";
  if (lab.best)
    for (const auto& t : *lab.best)
      key += std::to_string(t[0]) + "-" + std::to_string(t[1]) + "+" + std::to_string(t[2]) + "-" +
             std::to_string(t[3]) + ";";
  return key;
}

bool essentially_4_edge_connected(const SignedMultigraph& g) {
  const CompactGraph cg(g);
  const int n = cg.n;
  if (n < 4) return is_connected(g);
  std::vector<int> parent(n);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<int> removed;
  auto check = [&]() {
    for (int v = 0; v < n; ++v) parent[v] = v;
    for (int e = 0; e < cg.m; ++e)
      if (std::find(removed.begin(), removed.end(), e) == removed.end()) parent[find(cg.eu[e])] = find(cg.ev[e]);
    std::vector<int> size(n, 0);
    for (int v = 0; v < n; ++v) ++size[find(v)];
    for (int v = 0; v < n; ++v)
      if (size[v] >= 2 && size[v] <= n - 2) return false;
    return true;
  };
  if (!check()) return false;
  for (int a = 0; a < cg.m; ++a) {
    removed = {a};
    if (!check()) return false;
    for (int b = a + 1; b < cg.m; ++b) {
      removed = {a, b};
      if (!check()) return false;
      for (int c = b + 1; c < cg.m; ++c) {
        removed = {a, b, c};
        if (!check()) return false;
      }
    }
  }
  return true;
}

bool essentially_4_edge_connected_brute(const SignedMultigraph& g) {
  const CompactGraph cg(g);
  const int n = cg.n;
  if (n > 30) throw SizeLimitError("brute-force cut walk limited to 30 vertices");
  if (n < 4) return is_connected(g);
  const auto adj = cg.adjacency_masks();
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint8_t> crossing(cg.m, 0);
  int size = 0;
  std::uint64_t mask = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << (n - 1)); ++i) {
    const int v = 1 + std::countr_zero(i);
    for (int e : cg.incident[v]) {
      crossing[e] ^= 1;
      size += crossing[e] ? 1 : -1;
    }
    mask ^= std::uint64_t{1} << v;
    const int k = std::popcount(mask);
    if (size > 3 || k < 2 || k > n - 2) continue;
    if (mask_connected(adj, mask) || mask_connected(adj, all & ~mask)) return false;
  }
  return true;
}

}  // namespace frustra
