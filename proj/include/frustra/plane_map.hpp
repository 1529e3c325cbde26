#pragma once

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "frustra/signed_graph.hpp"

namespace frustra {

// Edge-end. side 0 sits at edge.u, side 1 at edge.v; a loop has both at one vertex.
struct Dart {
  EdgeId edge = 0;
  int side = 0;
  Dart twin() const noexcept { return {edge, 1 - side}; }
  friend bool operator==(const Dart&, const Dart&) = default;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

VertexId dart_tail(const SignedMultigraph& g, Dart d);
VertexId dart_head(const SignedMultigraph& g, Dart d);

// Cyclic order of edge-ends at each vertex. With signs, negative edges are the
// twisted ones: a signed rotation system.
using Rotation = std::map<VertexId, std::vector<Dart>>;

struct Face {
  std::vector<Dart> darts;  // facial walk; each dart leaves the vertex it sits at
  Dart id() const;          // least dart of the walk
  int length() const noexcept { return static_cast<int>(darts.size()); }
};

// Every edge-end appears in exactly one rotation; throws GraphError otherwise.
void check_rotation(const SignedMultigraph& g, const Rotation& rotation);

// Orientable traversal ignoring signs: next = successor of the twin. Faces are
// ordered by id.
std::vector<Face> traverse_faces(const SignedMultigraph& g, const Rotation& rotation);

// Traversal of the signed rotation system (orientation flips on each negative
// edge). Each face is met once per direction, so this is half the orbit count.
int signed_face_count(const SignedMultigraph& g, const Rotation& rotation);

// Edge multisets (sorted ids) of the faces of a signed rotation system.
std::vector<std::vector<EdgeId>> signed_face_edges(const SignedMultigraph& g, const Rotation& rotation);

// V - E + F for the surface given by the signed rotation system of a connected graph.
int euler_characteristic(const SignedMultigraph& g, const Rotation& rotation);

struct PlaneEmbedding {
  SignedMultigraph graph;
  Rotation rotation;
};

// Facial walks; enforces V - E + F = 2 on a connected graph with at least one edge.
std::vector<Face> faces(const PlaneEmbedding& pe);

// Switching in a signed rotation system: reverse the rotation at each vertex of
// x and flip the sign of every edge of the cut. The embedded surface is unchanged.
std::pair<SignedMultigraph, Rotation> switch_embedding(const SignedMultigraph& g, const Rotation& rotation,
                                                       std::span<const VertexId> x);

}  // namespace frustra
