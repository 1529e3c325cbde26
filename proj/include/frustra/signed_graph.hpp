#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace frustra {

using VertexId = int;
using EdgeId = int;

enum class Sign : std::uint8_t { Positive, Negative };

constexpr Sign flipped(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

constexpr char sign_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }

// Malformed input: dangling endpoints, duplicate ids, unknown vertices.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact search was refused because the instance exceeds a configured bound.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Two independent computations disagreed. Always a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SignedEdge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;
  Sign sign = Sign::Positive;

  bool is_loop() const noexcept { return u == v; }
  bool is_negative() const noexcept { return sign == Sign::Negative; }
  VertexId other(VertexId w) const noexcept { return w == u ? v : u; }
  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

// Vertices plus sign-labelled edges. Loops and parallel edges are allowed.
// Edge ids are never reused: removing an edge leaves a hole in the id space.
class SignedMultigraph {
 public:
  SignedMultigraph() = default;

  // Vertices 0..n-1 and no edges.
  static SignedMultigraph with_vertices(int n);

  void add_vertex(VertexId id);
  VertexId add_vertex();  // max id + 1
  EdgeId add_edge(VertexId u, VertexId v, Sign sign);
  void add_edge_with_id(EdgeId id, VertexId u, VertexId v, Sign sign);

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<SignedEdge>& edges() const noexcept { return edges_; }
  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  EdgeId next_edge_id() const noexcept { return next_edge_id_; }

  bool has_vertex(VertexId id) const noexcept { return vertex_index(id) >= 0; }
  // Position of the vertex in vertices(), -1 when absent.
  int vertex_index(VertexId id) const noexcept;
  // Position of the edge in edges(), -1 when absent.
  int edge_index(EdgeId id) const noexcept;
  const SignedEdge& edge(EdgeId id) const;

  int negative_count() const noexcept;
  std::vector<EdgeId> negative_edges() const;
  int degree(VertexId id) const;  // loops count twice

  SignedMultigraph without_edge(EdgeId id) const;
  SignedMultigraph without_edges(std::span<const EdgeId> ids) const;
  SignedMultigraph without_vertex(VertexId id) const;  // drops incident edges too
  SignedMultigraph with_sign(EdgeId id, Sign sign) const;
  SignedMultigraph all_negative() const;
  SignedMultigraph all_positive() const;
  // Subgraph spanned by the given edges and their endpoints; ids are kept.
  SignedMultigraph edge_induced(std::span<const EdgeId> ids) const;

  // Same vertex ids, edge ids and endpoints; signs may differ.
  bool same_underlying(const SignedMultigraph& other) const noexcept;

  friend bool operator==(const SignedMultigraph& a, const SignedMultigraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;  // sorted
  std::vector<SignedEdge> edges_;   // sorted by id
  EdgeId next_edge_id_ = 0;
};

// Edge set of a graph with at most kMaxMaskEdges edges, indexed by position in edges().
inline constexpr int kMaxMaskEdges = 128;
using EdgeMask = std::bitset<kMaxMaskEdges>;

enum class Parity : std::uint8_t { Positive, Negative };

struct CycleSubgraph {
  std::vector<EdgeId> edge_ids;  // sorted
  Parity parity = Parity::Positive;
  friend bool operator==(const CycleSubgraph&, const CycleSubgraph&) = default;
  friend auto operator<=>(const CycleSubgraph&, const CycleSubgraph&) = default;
};

struct VertexCut {
  std::vector<VertexId> subset;   // X, sorted
  std::vector<EdgeId> cut_edges;  // non-loop edges with exactly one end in X
  int positive_count = 0;         // a
  int negative_count = 0;         // b

  bool equilibrated() const noexcept { return positive_count == negative_count; }
};

SignedMultigraph switch_at(const SignedMultigraph& g, std::span<const VertexId> x);

// Every connected 2-regular subgraph; a loop alone and a pair of parallel edges
// both qualify. Exponential; refuses graphs beyond kMaxMaskEdges edges or
// max_cycles cycles.
std::vector<CycleSubgraph> all_cycles(const SignedMultigraph& g, std::size_t max_cycles = 5'000'000);
std::vector<CycleSubgraph> negative_cycles(const SignedMultigraph& g,
                                           std::size_t max_cycles = 5'000'000);

// Spanning-forest sign-potential test.
bool is_balanced(const SignedMultigraph& g);

// Difference set is an edge cut of the underlying graph.
bool switching_equivalent(const SignedMultigraph& g1, const SignedMultigraph& g2);
// Same negative cycles. Independent of the cut test; used to cross-check it.
bool same_negative_cycles(const SignedMultigraph& g1, const SignedMultigraph& g2);

VertexCut cut_of(const SignedMultigraph& g, std::span<const VertexId> x);

// Minimised equilibrated cuts d+(X) = d-(X) containing edge e, where G[X] and
// G[X^c] are connected and X is the side without the smallest vertex id.
// Throws GraphError when g is not a minimum signature (some cut has b > a).
std::vector<VertexCut> equilibrated_cuts_containing(const SignedMultigraph& g, EdgeId e,
                                                    int max_vertices = 24);

// Connected components as sorted vertex id lists, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const SignedMultigraph& g);
bool is_connected(const SignedMultigraph& g);

}  // namespace frustra
