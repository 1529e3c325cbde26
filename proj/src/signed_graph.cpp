#include "frustra/signed_graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "frustra/compact_graph.hpp"

namespace frustra {

SignedMultigraph SignedMultigraph::with_vertices(int n) {
  SignedMultigraph g;
  g.vertices_.resize(n);
  std::iota(g.vertices_.begin(), g.vertices_.end(), 0);
  return g;
}

void SignedMultigraph::add_vertex(VertexId id) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it != vertices_.end() && *it == id)
    throw GraphError("duplicate vertex id " + std::to_string(id));
  vertices_.insert(it, id);
}

VertexId SignedMultigraph::add_vertex() {
  const VertexId id = vertices_.empty() ? 0 : vertices_.back() + 1;
  vertices_.push_back(id);
  return id;
}

EdgeId SignedMultigraph::add_edge(VertexId u, VertexId v, Sign sign) {
  const EdgeId id = next_edge_id_;
  add_edge_with_id(id, u, v, sign);
  return id;
}

void SignedMultigraph::add_edge_with_id(EdgeId id, VertexId u, VertexId v, Sign sign) {
  if (id < 0) throw GraphError("negative edge id " + std::to_string(id));
  if (!has_vertex(u) || !has_vertex(v))
    throw GraphError("edge " + std::to_string(id) + " has a dangling endpoint");
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const SignedEdge& e, EdgeId x) { return e.id < x; });
  if (it != edges_.end() && it->id == id)
    throw GraphError("duplicate edge id " + std::to_string(id));
  edges_.insert(it, SignedEdge{id, u, v, sign});
  next_edge_id_ = std::max(next_edge_id_, id + 1);
}

int SignedMultigraph::vertex_index(VertexId id) const noexcept {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) return -1;
  return static_cast<int>(it - vertices_.begin());
}

int SignedMultigraph::edge_index(EdgeId id) const noexcept {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const SignedEdge& e, EdgeId x) { return e.id < x; });
  if (it == edges_.end() || it->id != id) return -1;
  return static_cast<int>(it - edges_.begin());
}

const SignedEdge& SignedMultigraph::edge(EdgeId id) const {
  const int idx = edge_index(id);
  if (idx < 0) throw GraphError("unknown edge id " + std::to_string(id));
  return edges_[idx];
}

int SignedMultigraph::negative_count() const noexcept {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [](const SignedEdge& e) { return e.is_negative(); }));
}

std::vector<EdgeId> SignedMultigraph::negative_edges() const {
  std::vector<EdgeId> out;
  for (const SignedEdge& e : edges_)
    if (e.is_negative()) out.push_back(e.id);
  return out;
}

int SignedMultigraph::degree(VertexId id) const {
  if (!has_vertex(id)) throw GraphError("unknown vertex id " + std::to_string(id));
  int d = 0;
  for (const SignedEdge& e : edges_) d += (e.u == id) + (e.v == id);
  return d;
}

SignedMultigraph SignedMultigraph::without_edge(EdgeId id) const {
  const int idx = edge_index(id);
  if (idx < 0) throw GraphError("unknown edge id " + std::to_string(id));
  SignedMultigraph out = *this;
  out.edges_.erase(out.edges_.begin() + idx);
  return out;
}

SignedMultigraph SignedMultigraph::without_edges(std::span<const EdgeId> ids) const {
  SignedMultigraph out = *this;
  for (EdgeId id : ids) {
    const int idx = out.edge_index(id);
    if (idx < 0) throw GraphError("unknown edge id " + std::to_string(id));
    out.edges_.erase(out.edges_.begin() + idx);
  }
  return out;
}

SignedMultigraph SignedMultigraph::without_vertex(VertexId id) const {
  const int idx = vertex_index(id);
  if (idx < 0) throw GraphError("unknown vertex id " + std::to_string(id));
  SignedMultigraph out = *this;
  out.vertices_.erase(out.vertices_.begin() + idx);
  std::erase_if(out.edges_, [id](const SignedEdge& e) { return e.u == id || e.v == id; });
  return out;
}

SignedMultigraph SignedMultigraph::with_sign(EdgeId id, Sign sign) const {
  const int idx = edge_index(id);
  if (idx < 0) throw GraphError("unknown edge id " + std::to_string(id));
  SignedMultigraph out = *this;
  out.edges_[idx].sign = sign;
  return out;
}

SignedMultigraph SignedMultigraph::all_negative() const {
  SignedMultigraph out = *this;
  for (SignedEdge& e : out.edges_) e.sign = Sign::Negative;
  return out;
}

SignedMultigraph SignedMultigraph::all_positive() const {
  SignedMultigraph out = *this;
  for (SignedEdge& e : out.edges_) e.sign = Sign::Positive;
  return out;
}

SignedMultigraph SignedMultigraph::edge_induced(std::span<const EdgeId> ids) const {
  SignedMultigraph out;
  out.next_edge_id_ = next_edge_id_;
  std::vector<SignedEdge> kept;
  for (EdgeId id : ids) kept.push_back(edge(id));
  std::vector<VertexId> verts;
  for (const SignedEdge& e : kept) {
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  out.vertices_ = std::move(verts);
  std::sort(kept.begin(), kept.end(), [](const SignedEdge& a, const SignedEdge& b) { return a.id < b.id; });
  if (std::adjacent_find(kept.begin(), kept.end(), [](const SignedEdge& a, const SignedEdge& b) {
        return a.id == b.id;
      }) != kept.end())
    throw GraphError("duplicate edge id in edge-induced subgraph");
  out.edges_ = std::move(kept);
  return out;
}

bool SignedMultigraph::same_underlying(const SignedMultigraph& other) const noexcept {
  if (vertices_ != other.vertices_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const SignedEdge& a = edges_[i];
    const SignedEdge& b = other.edges_[i];
    if (a.id != b.id || a.u != b.u || a.v != b.v) return false;
  }
  return true;
}

namespace {

std::vector<std::uint8_t> membership(const SignedMultigraph& g, std::span<const VertexId> x) {
  std::vector<std::uint8_t> in(g.vertex_count(), 0);
  for (VertexId v : x) {
    const int idx = g.vertex_index(v);
    if (idx < 0) throw GraphError("unknown vertex id " + std::to_string(v));
    in[idx] = 1;
  }
  return in;
}

// Potential p with p[u] ^ p[v] == want(e) on every non-loop edge, if one exists.
template <class Want>
bool two_colorable(const CompactGraph& cg, Want want) {
  std::vector<int> p(cg.n, -1);
  std::vector<int> stack;
  for (int s = 0; s < cg.n; ++s) {
    if (p[s] >= 0) continue;
    p[s] = 0;
    stack.assign(1, s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e : cg.incident[v]) {
        const int w = cg.other(e, v);
        const int expect = p[v] ^ (want(e) ? 1 : 0);
        if (p[w] < 0) {
          p[w] = expect;
          stack.push_back(w);
        } else if (p[w] != expect) {
          return false;
        }
      }
    }
  }
  return true;
}

void enumerate_cycles(const CompactGraph& cg, std::size_t max_cycles, bool negative_only,
                      std::vector<CycleSubgraph>& out) {
  if (cg.m > kMaxMaskEdges)
    throw SizeLimitError("cycle enumeration is limited to " + std::to_string(kMaxMaskEdges) + " edges");
  auto emit = [&](const std::vector<int>& path_edges) {
    int neg = 0;
    CycleSubgraph c;
    for (int e : path_edges) {
      neg += cg.negative[e];
      c.edge_ids.push_back(cg.edge_ids[e]);
    }
    c.parity = (neg % 2) ? Parity::Negative : Parity::Positive;
    if (negative_only && c.parity != Parity::Negative) return;
    std::sort(c.edge_ids.begin(), c.edge_ids.end());
    if (out.size() >= max_cycles) throw SizeLimitError("too many cycles to enumerate");
    out.push_back(std::move(c));
  };

  for (int e = 0; e < cg.m; ++e)
    if (cg.is_loop(e)) emit({e});

  std::vector<std::uint8_t> on_path(cg.n, 0);
  std::vector<int> path;
  // Cycles are rooted at their smallest vertex and reported once: the first
  // edge of the walk has a smaller index than the closing edge.
  auto dfs = [&](auto&& self, int start, int v) -> void {
    for (int e : cg.incident[v]) {
      if (!path.empty() && e == path.back()) continue;
      const int w = cg.other(e, v);
      if (w == start) {
        if (path.empty() || path.front() >= e) continue;
        path.push_back(e);
        emit(path);
        path.pop_back();
        continue;
      }
      if (w < start || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(e);
      self(self, start, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (int s = 0; s < cg.n; ++s) {
    on_path[s] = 1;
    dfs(dfs, s, s);
    on_path[s] = 0;
  }
}

}  // namespace

SignedMultigraph switch_at(const SignedMultigraph& g, std::span<const VertexId> x) {
  const auto in = membership(g, x);
  SignedMultigraph out;
  for (VertexId v : g.vertices()) out.add_vertex(v);
  for (const SignedEdge& e : g.edges()) {
    const bool crosses = in[g.vertex_index(e.u)] != in[g.vertex_index(e.v)];
    out.add_edge_with_id(e.id, e.u, e.v, crosses ? flipped(e.sign) : e.sign);
  }
  return out;
}

std::vector<CycleSubgraph> all_cycles(const SignedMultigraph& g, std::size_t max_cycles) {
  std::vector<CycleSubgraph> out;
  enumerate_cycles(CompactGraph(g), max_cycles, false, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CycleSubgraph> negative_cycles(const SignedMultigraph& g, std::size_t max_cycles) {
  std::vector<CycleSubgraph> out;
  enumerate_cycles(CompactGraph(g), max_cycles, true, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_balanced(const SignedMultigraph& g) {
  const CompactGraph cg(g);
  if (cg.negative_loop_count() > 0) return false;
  return two_colorable(cg, [&](int e) { return cg.negative[e] != 0; });
}

bool switching_equivalent(const SignedMultigraph& g1, const SignedMultigraph& g2) {
  if (!g1.same_underlying(g2)) throw GraphError("switching_equivalent needs the same underlying graph");
  const CompactGraph cg(g1);
  const auto& e2 = g2.edges();
  for (int e = 0; e < cg.m; ++e)
    if (cg.is_loop(e) && g1.edges()[e].sign != e2[e].sign) return false;
  return two_colorable(cg, [&](int e) { return g1.edges()[e].sign != e2[e].sign; });
}

bool same_negative_cycles(const SignedMultigraph& g1, const SignedMultigraph& g2) {
  if (!g1.same_underlying(g2)) throw GraphError("same_negative_cycles needs the same underlying graph");
  return negative_cycles(g1) == negative_cycles(g2);
}

VertexCut cut_of(const SignedMultigraph& g, std::span<const VertexId> x) {
  const auto in = membership(g, x);
  const int inside = static_cast<int>(std::count(in.begin(), in.end(), 1));
  if (inside == 0) throw GraphError("cut side is empty");
  if (inside == g.vertex_count()) throw GraphError("cut side is the whole vertex set");
  VertexCut cut;
  for (int i = 0; i < g.vertex_count(); ++i)
    if (in[i]) cut.subset.push_back(g.vertices()[i]);
  for (const SignedEdge& e : g.edges()) {
    if (e.is_loop()) continue;
    if (in[g.vertex_index(e.u)] == in[g.vertex_index(e.v)]) continue;
    cut.cut_edges.push_back(e.id);
    (e.is_negative() ? cut.negative_count : cut.positive_count)++;
  }
  return cut;
}

std::vector<VertexCut> equilibrated_cuts_containing(const SignedMultigraph& g, EdgeId e, int max_vertices) {
  const CompactGraph cg(g);
  const int target = g.edge_index(e);
  if (target < 0) throw GraphError("unknown edge id " + std::to_string(e));
  if (cg.n > max_vertices || cg.n > 30)
    throw SizeLimitError("equilibrated cut search limited to " + std::to_string(std::min(max_vertices, 30)) +
                         " vertices");
  std::vector<VertexCut> out;
  if (cg.n < 2) return out;
  const auto adj = cg.adjacency_masks();
  const std::uint64_t all = (cg.n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << cg.n) - 1);
  // X never contains vertex index 0, so each cut is visited once.
  const std::uint64_t limit = std::uint64_t{1} << (cg.n - 1);
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    const std::uint64_t x = bits << 1;
    int a = 0;
    int b = 0;
    bool has_target = false;
    for (int i = 0; i < cg.m; ++i) {
      if (cg.is_loop(i)) continue;
      if (((x >> cg.eu[i]) & 1) == ((x >> cg.ev[i]) & 1)) continue;
      (cg.negative[i] ? b : a)++;
      if (i == target) has_target = true;
    }
    if (b > a) throw GraphError("equilibrated_cuts_containing requires a minimum signature");
    if (!has_target || a != b) continue;
    if (!mask_connected(adj, x) || !mask_connected(adj, all & ~x)) continue;
    std::vector<VertexId> subset;
    for (std::uint64_t f = x; f; f &= f - 1) subset.push_back(cg.vertex_ids[std::countr_zero(f)]);
    out.push_back(cut_of(g, subset));
  }
  return out;
}

std::vector<std::vector<VertexId>> connected_components(const SignedMultigraph& g) {
  const CompactGraph cg(g);
  int count = 0;
  const auto comp = cg.components(&count);
  std::vector<std::vector<VertexId>> out(count);
  for (int v = 0; v < cg.n; ++v) out[comp[v]].push_back(cg.vertex_ids[v]);
  return out;
}

bool is_connected(const SignedMultigraph& g) { return connected_components(g).size() <= 1; }

}  // namespace frustra
