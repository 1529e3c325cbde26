#pragma once

#include <istream>
#include <span>
#include <string>
#include <vector>

#include "frustra/plane_map.hpp"

namespace frustra {

// Oriented map on darts 0..2m-1: twin is an involution without fixed points,
// sigma the rotation. Faces are orbits of sigma o twin.
struct DartMap {
  std::vector<int> twin;
  std::vector<int> sigma;
  int darts() const noexcept { return static_cast<int>(twin.size()); }
  int vertex_count() const;
};

DartMap theta_map();
// Subdivide the edges of darts a and b (one face; a == b subdivides twice) and
// join the new vertices by an edge drawn inside that face.
DartMap insert_edge(const DartMap& m, int a, int b);
std::vector<std::vector<int>> map_faces(const DartMap& m);  // each from its least dart

// Least breadth-first code over the given roots, in both orientations when
// mirror_roots is non-null (those roots are used with the reversed rotation).
std::vector<int> map_code(const DartMap& m, std::span<const int> roots, std::span<const int> mirror_roots);
// Isomorphism class code of the unrooted map, reflections included.
std::vector<int> map_code(const DartMap& m);
// Code of the map with one face distinguished.
std::vector<int> rooted_face_code(const DartMap& m, const std::vector<int>& face);

DartMap to_dart_map(const PlaneEmbedding& pe);
PlaneEmbedding to_plane_embedding(const DartMap& m);

// Base with its distinguished facial circuit, walked in traversal order.
struct RootedBase {
  PlaneEmbedding base;
  std::vector<Dart> walk;
  std::vector<int> code;
};

// Loopless 2-connected plane cubic maps on 2..n_max vertices up to
// isomorphism and reflection, by edge insertion from the theta graph.
std::vector<DartMap> generate_plane_cubic(int n_max);
// Each map paired with every inequivalent facial circuit, ordered by (n, code).
std::vector<RootedBase> generate_bases(int n_max);

// Independent generator: every loopless cubic multigraph on n vertices with
// every rotation, keeping the connected plane 2-connected ones; codes deduplicated.
std::vector<std::vector<int>> brute_force_plane_cubic_codes(int n);

// One base per line: `n m; u v; u v; ...; F: e1 e2 ...` with 0-based vertex
// and edge indices, the face given by its edges. Rotations are found by search.
std::vector<RootedBase> read_bases(std::istream& in, int max_vertices = 16);

bool is_two_connected(const SignedMultigraph& g);

}  // namespace frustra
