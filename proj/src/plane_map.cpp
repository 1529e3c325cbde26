#include "frustra/plane_map.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace frustra {

VertexId dart_tail(const SignedMultigraph& g, Dart d) {
  const SignedEdge& e = g.edge(d.edge);
  return d.side == 0 ? e.u : e.v;
}

VertexId dart_head(const SignedMultigraph& g, Dart d) { return dart_tail(g, d.twin()); }

Dart Face::id() const { return *std::min_element(darts.begin(), darts.end()); }

namespace {

struct Position {
  VertexId vertex;
  int index;
};

std::map<Dart, Position> index_rotation(const Rotation& rotation) {
  std::map<Dart, Position> pos;
  for (const auto& [v, darts] : rotation)
    for (int i = 0; i < static_cast<int>(darts.size()); ++i) pos[darts[i]] = {v, i};
  return pos;
}

Dart step(const Rotation& rotation, const std::map<Dart, Position>& pos, Dart d, int direction) {
  const Position& p = pos.at(d);
  const auto& ring = rotation.at(p.vertex);
  const int n = static_cast<int>(ring.size());
  return ring[((p.index + direction) % n + n) % n];
}

}  // namespace

void check_rotation(const SignedMultigraph& g, const Rotation& rotation) {
  std::set<Dart> seen;
  for (const auto& [v, darts] : rotation) {
    if (!g.has_vertex(v)) throw GraphError("rotation names unknown vertex " + std::to_string(v));
    for (const Dart& d : darts) {
      if (g.edge_index(d.edge) < 0 || d.side < 0 || d.side > 1)
        throw GraphError("rotation names unknown edge-end of edge " + std::to_string(d.edge));
      if (dart_tail(g, d) != v)
        throw GraphError("edge-end of edge " + std::to_string(d.edge) + " listed at the wrong vertex");
      if (!seen.insert(d).second)
        throw GraphError("edge-end of edge " + std::to_string(d.edge) + " appears twice");
    }
  }
  if (static_cast<int>(seen.size()) != 2 * g.edge_count()) throw GraphError("rotation misses some edge-ends");
}

std::vector<Face> traverse_faces(const SignedMultigraph& g, const Rotation& rotation) {
  check_rotation(g, rotation);
  const auto pos = index_rotation(rotation);
  std::set<Dart> used;
  std::vector<Face> out;
  for (const auto& [d0, p] : pos) {
    if (used.count(d0)) continue;
    Face f;
    Dart d = d0;
    do {
      used.insert(d);
      f.darts.push_back(d);
      d = step(rotation, pos, d.twin(), 1);
    } while (d != d0);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) { return a.id() < b.id(); });
  return out;
}

int signed_face_count(const SignedMultigraph& g, const Rotation& rotation) {
  check_rotation(g, rotation);
  const auto pos = index_rotation(rotation);
  std::set<std::pair<Dart, int>> used;
  int orbits = 0;
  for (const auto& [d0, p] : pos) {
    for (int o0 : {1, -1}) {
      if (used.count({d0, o0})) continue;
      ++orbits;
      Dart d = d0;
      int o = o0;
      do {
        used.insert({d, o});
        if (g.edge(d.edge).is_negative()) o = -o;
        d = step(rotation, pos, d.twin(), o);
      } while (!(d == d0 && o == o0));
    }
  }
  if (orbits % 2 != 0) throw InternalInconsistency("signed face traversal produced an odd orbit count");
  return orbits / 2;
}

std::vector<std::vector<EdgeId>> signed_face_edges(const SignedMultigraph& g, const Rotation& rotation) {
  check_rotation(g, rotation);
  const auto pos = index_rotation(rotation);
  std::set<std::pair<Dart, int>> used;
  std::map<std::vector<EdgeId>, int> orbits;
  for (const auto& [d0, p] : pos) {
    for (int o0 : {1, -1}) {
      if (used.count({d0, o0})) continue;
      std::vector<EdgeId> edges;
      Dart d = d0;
      int o = o0;
      do {
        used.insert({d, o});
        edges.push_back(d.edge);
        if (g.edge(d.edge).is_negative()) o = -o;
        d = step(rotation, pos, d.twin(), o);
      } while (!(d == d0 && o == o0));
      std::sort(edges.begin(), edges.end());
      ++orbits[edges];
    }
  }
  // The two traversal directions of a face give the same multiset.
  std::vector<std::vector<EdgeId>> out;
  for (const auto& [edges, count] : orbits)
    for (int i = 0; i < count / 2; ++i) out.push_back(edges);
  return out;
}

int euler_characteristic(const SignedMultigraph& g, const Rotation& rotation) {
  return g.vertex_count() - g.edge_count() + signed_face_count(g, rotation);
}

std::vector<Face> faces(const PlaneEmbedding& pe) {
  if (!is_connected(pe.graph) || pe.graph.edge_count() == 0)
    throw GraphError("plane embedding needs a connected graph with at least one edge");
  auto out = traverse_faces(pe.graph, pe.rotation);
  const int chi = pe.graph.vertex_count() - pe.graph.edge_count() + static_cast<int>(out.size());
  if (chi != 2) throw GraphError("rotation is not planar: V - E + F = " + std::to_string(chi));
  return out;
}

std::pair<SignedMultigraph, Rotation> switch_embedding(const SignedMultigraph& g, const Rotation& rotation,
                                                       std::span<const VertexId> x) {
  Rotation r = rotation;
  for (VertexId v : x) {
    auto it = r.find(v);
    if (it == r.end()) throw GraphError("switching at unknown vertex " + std::to_string(v));
    std::reverse(it->second.begin(), it->second.end());
  }
  return {switch_at(g, x), std::move(r)};
}

}  // namespace frustra
