#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "frustra/canonical.hpp"
#include "frustra/embedding.hpp"
#include "frustra/signed_graph.hpp"

namespace frustra::testing {

using Rng = std::mt19937_64;

inline constexpr Sign P = Sign::Positive;
inline constexpr Sign N = Sign::Negative;

inline SignedMultigraph negative_loop() {
  auto g = SignedMultigraph::with_vertices(1);
  g.add_edge(0, 0, N);
  return g;
}

// Edge i joins i and i+1 (mod n); negative where listed.
inline SignedMultigraph cycle(int n, std::set<int> negative = {}) {
  auto g = SignedMultigraph::with_vertices(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, negative.count(i) ? N : P);
  return g;
}

inline SignedMultigraph complete(int n, Sign s) {
  auto g = SignedMultigraph::with_vertices(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j, s);
  return g;
}

inline SignedMultigraph k4(Sign s = N) { return complete(4, s); }

inline SignedMultigraph from_pairs(int n, const std::vector<std::pair<int, int>>& es, Sign s = P) {
  auto g = SignedMultigraph::with_vertices(n);
  for (auto [u, v] : es) g.add_edge(u, v, s);
  return g;
}

// Vertex i is the bit pattern i; edges between patterns differing in one bit.
inline SignedMultigraph cube() {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < 8; ++v)
    for (int b : {1, 2, 4})
      if (!(v & b)) es.emplace_back(v, v | b);
  return from_pairs(8, es);
}

inline SignedMultigraph prism() { return from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}); }

inline SignedMultigraph petersen(Sign s = P) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return from_pairs(10, es, s);
}

inline SignedMultigraph disjoint_union(const SignedMultigraph& a, const SignedMultigraph& b) {
  SignedMultigraph g = a;
  const int shift = a.vertices().empty() ? 0 : a.vertices().back() + 1;
  for (VertexId v : b.vertices()) g.add_vertex(v + shift);
  for (const SignedEdge& e : b.edges()) g.add_edge(e.u + shift, e.v + shift, e.sign);
  return g;
}

// Counter-clockwise rotation from straight-line coordinates; simple graphs only.
inline Rotation rotation_from_coordinates(const SignedMultigraph& g, const std::map<VertexId, std::pair<double, double>>& at) {
  Rotation rot;
  for (const SignedEdge& e : g.edges()) {
    rot[e.u].push_back({e.id, 0});
    rot[e.v].push_back({e.id, 1});
  }
  for (auto& [v, ring] : rot) {
    auto angle = [&](const Dart& d) {
      const VertexId w = dart_head(g, d);
      return std::atan2(at.at(w).second - at.at(v).second, at.at(w).first - at.at(v).first);
    };
    std::sort(ring.begin(), ring.end(), [&](const Dart& a, const Dart& b) { return angle(a) < angle(b); });
  }
  return rot;
}

inline PlaneEmbedding planar_cube() {
  PlaneEmbedding pe;
  pe.graph = cube();
  pe.rotation = rotation_from_coordinates(pe.graph, {{0, {-2, -2}}, {1, {2, -2}}, {3, {2, 2}}, {2, {-2, 2}},
                                                     {4, {-1, -1}}, {5, {1, -1}}, {7, {1, 1}}, {6, {-1, 1}}});
  return pe;
}

inline PlaneEmbedding planar_k4() {
  PlaneEmbedding pe;
  pe.graph = k4(P);
  pe.rotation = rotation_from_coordinates(pe.graph, {{0, {0, 0}}, {1, {0, 3}}, {2, {-3, -2}}, {3, {3, -2}}});
  return pe;
}

// Connected graph: random spanning tree, then extra edges.
inline SignedMultigraph random_signed_graph(Rng& rng, int n, int m, bool loops = false, bool parallel = false,
                                            double negative_rate = 0.5) {
  auto g = SignedMultigraph::with_vertices(n);
  std::bernoulli_distribution neg(negative_rate);
  std::set<std::pair<int, int>> used;
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    g.add_edge(u, v, neg(rng) ? N : P);
    used.insert({u, v});
  }
  const int max_simple = n * (n - 1) / 2;
  std::uniform_int_distribution<int> pick(0, n - 1);
  int attempts = 0;
  while (g.edge_count() < m && attempts++ < 100000) {
    int u = pick(rng);
    int v = pick(rng);
    if (u == v && !loops) continue;
    if (u > v) std::swap(u, v);
    if (!parallel && u != v && used.count({u, v})) {
      if (static_cast<int>(used.size()) >= max_simple) break;
      continue;
    }
    used.insert({u, v});
    g.add_edge(u, v, neg(rng) ? N : P);
  }
  return g;
}

// Simple connected cubic graph on n vertices (n even, n >= 4) by the pairing model.
inline SignedMultigraph random_cubic(Rng& rng, int n, Sign s = N) {
  while (true) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < 3; ++i) points.push_back(v);
    std::shuffle(points.begin(), points.end(), rng);
    std::set<std::pair<int, int>> pairs;
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      int u = points[i];
      int v = points[i + 1];
      if (u > v) std::swap(u, v);
      ok = u != v && pairs.insert({u, v}).second;
    }
    if (!ok) continue;
    auto g = SignedMultigraph::with_vertices(n);
    for (auto [u, v] : pairs) g.add_edge(u, v, s);
    if (is_connected(g)) return g;
  }
}

inline std::vector<VertexId> random_subset(Rng& rng, const SignedMultigraph& g) {
  std::vector<VertexId> x;
  std::bernoulli_distribution coin(0.5);
  for (VertexId v : g.vertices())
    if (coin(rng)) x.push_back(v);
  return x;
}

// Every connected simple signed graph on 1..max_n vertices with at most max_m
// edges, one per isomorphism-and-switching class.
inline std::vector<SignedMultigraph> small_corpus(int max_n = 6, int max_m = 10) {
  std::vector<SignedMultigraph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::set<std::string> shapes;
    std::set<std::string> signed_keys;
    const int s = static_cast<int>(slots.size());
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
      const int m = std::popcount(mask);
      if (m > max_m || m < n - 1) continue;
      auto g = SignedMultigraph::with_vertices(n);
      for (int i = 0; i < s; ++i)
        if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second, P);
      if (!is_connected(g) || !shapes.insert(canonical_key(g)).second) continue;
      // Spanning tree by union-find stays positive; co-tree edges take every sign pattern.
      std::vector<int> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      std::vector<EdgeId> cotree;
      for (const SignedEdge& e : g.edges()) {
        const int a = find(e.u);
        const int b = find(e.v);
        if (a == b)
          cotree.push_back(e.id);
        else
          parent[a] = b;
      }
      for (std::uint32_t sig = 0; sig < (1u << cotree.size()); ++sig) {
        SignedMultigraph h = g;
        for (std::size_t i = 0; i < cotree.size(); ++i)
          if (sig >> i & 1) h = h.with_sign(cotree[i], N);
        if (signed_keys.insert(canonical_key(h)).second) out.push_back(std::move(h));
      }
    }
  }
  return out;
}

// Canonical embeddings whose bridge faces have the two-component shape: each
// comes from a normal embedding by switching the two vertices of one weight-2
// slot. Deterministic order; at most `limit`.
std::vector<CanonicalEmbedding> synthetic_bridge_embeddings(int limit, int max_base = 8);

}  // namespace frustra::testing
