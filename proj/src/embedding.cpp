#include "frustra/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace frustra {

namespace {

using RotationIndex = std::map<Dart, std::pair<VertexId, int>>;

RotationIndex index_of(const Rotation& rotation) {
  RotationIndex idx;
  for (const auto& [v, ring] : rotation)
    for (int i = 0; i < static_cast<int>(ring.size()); ++i) idx[ring[i]] = {v, i};
  return idx;
}

Dart successor(const Rotation& rotation, const RotationIndex& idx, Dart d, int by = 1) {
  const auto [v, i] = idx.at(d);
  const auto& ring = rotation.at(v);
  const int n = static_cast<int>(ring.size());
  return ring[((i + by) % n + n) % n];
}

void fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
}

void check_base(const PlaneEmbedding& base) {
  for (const SignedEdge& e : base.graph.edges()) {
    if (e.is_negative()) throw GraphError("base edge " + std::to_string(e.id) + " is negative");
    if (e.is_loop()) throw GraphError("base edge " + std::to_string(e.id) + " is a loop");
  }
  for (VertexId v : base.graph.vertices())
    if (base.graph.degree(v) != 3) throw GraphError("base vertex " + std::to_string(v) + " is not cubic");
  faces(base);
}

// Fills graph, rotation, paths, z and chords from base, boundary and k.
void build(CanonicalEmbedding& ce) {
  const int k = ce.k;
  SignedMultigraph g;
  Rotation rot;
  ce.paths.clear();
  for (VertexId v : ce.base.graph.vertices()) g.add_vertex(v);
  std::vector<VertexId> z;
  for (const BoundarySlot& s : ce.boundary)
    for (VertexId v : s.inserted) {
      if (g.has_vertex(v)) throw GraphError("inserted vertex " + std::to_string(v) + " clashes with another vertex");
      g.add_vertex(v);
      z.push_back(v);
    }
  EdgeId next_id = ce.base.graph.next_edge_id();
  std::map<VertexId, std::pair<Dart, Dart>> walk_ends;  // inserted vertex -> (incoming, outgoing)

  if (ce.free_circle()) {
    const int n = static_cast<int>(z.size());
    std::vector<EdgeId> cyc(n);
    for (int i = 0; i < n; ++i) {
      cyc[i] = next_id++;
      g.add_edge_with_id(cyc[i], z[i], z[(i + 1) % n], Sign::Positive);
    }
    for (int i = 0; i < n; ++i) walk_ends[z[i]] = {Dart{cyc[(i + n - 1) % n], 1}, Dart{cyc[i], 0}};
  } else {
    std::map<EdgeId, int> slot_of;
    for (int s = 0; s < static_cast<int>(ce.boundary.size()); ++s) {
      const EdgeId b = ce.boundary[s].dart->edge;
      if (!slot_of.emplace(b, s).second) throw GraphError("boundary walk repeats base edge " + std::to_string(b));
    }
    for (const SignedEdge& be : ce.base.graph.edges()) {
      std::vector<VertexId> ins;
      int side = 0;
      if (auto it = slot_of.find(be.id); it != slot_of.end()) {
        const BoundarySlot& slot = ce.boundary[it->second];
        side = slot.dart->side;
        ins = slot.inserted;
        if (side == 1) std::reverse(ins.begin(), ins.end());
      }
      std::vector<VertexId> path{be.u};
      path.insert(path.end(), ins.begin(), ins.end());
      path.push_back(be.v);
      std::vector<EdgeId> pieces;
      for (std::size_t j = 0; j + 1 < path.size(); ++j) {
        const EdgeId id = j == 0 ? be.id : next_id++;
        g.add_edge_with_id(id, path[j], path[j + 1], Sign::Positive);
        pieces.push_back(id);
      }
      for (std::size_t j = 1; j + 1 < path.size(); ++j) {
        const Dart toward_u{pieces[j - 1], 1};
        const Dart toward_v{pieces[j], 0};
        walk_ends[path[j]] = side == 0 ? std::pair{toward_u, toward_v} : std::pair{toward_v, toward_u};
      }
      ce.paths[be.id] = std::move(pieces);
    }
    for (const auto& [v, ring] : ce.base.rotation) {
      auto& out = rot[v];
      for (const Dart& d : ring) {
        const auto& pieces = ce.paths.at(d.edge);
        out.push_back(d.side == 0 ? Dart{pieces.front(), 0} : Dart{pieces.back(), 1});
      }
    }
  }

  ce.chords.clear();
  for (int i = 0; i < k; ++i) {
    const EdgeId id = next_id++;
    g.add_edge_with_id(id, z[i], z[i + k], Sign::Negative);
    ce.chords.push_back(id);
  }
  for (int i = 0; i < 2 * k; ++i) {
    const auto& [in, out] = walk_ends.at(z[i]);
    const Dart chord = i < k ? Dart{ce.chords[i], 0} : Dart{ce.chords[i - k], 1};
    rot[z[i]] = {in, chord, out};
  }
  ce.graph = std::move(g);
  ce.rotation = std::move(rot);
  ce.z = std::move(z);
}

}  // namespace

bool CanonicalEmbedding::is_inserted(VertexId v) const { return std::find(z.begin(), z.end(), v) != z.end(); }

std::map<EdgeId, BaseImage> base_images(const CanonicalEmbedding& ce) {
  std::map<EdgeId, BaseImage> out;
  for (const auto& [b, pieces] : ce.paths) {
    VertexId cur = ce.base.graph.edge(b).u;
    for (EdgeId e : pieces) {
      const SignedEdge& ge = ce.graph.edge(e);
      const bool forward = ge.u == cur;
      out[e] = {b, forward};
      cur = ge.other(cur);
    }
  }
  return out;
}

CanonicalEmbedding make_canonical(const PlaneEmbedding& base, std::span<const Dart> walk,
                                  std::span<const int> weights, int k) {
  if (walk.empty() && weights.size() != 1) throw GraphError("a vertex-free circle has exactly one slot");
  if (!walk.empty() && walk.size() != weights.size()) throw GraphError("one weight per boundary edge is required");
  VertexId next = 0;
  for (VertexId v : base.graph.vertices()) next = std::max(next, v + 1);
  std::vector<BoundarySlot> slots;
  for (std::size_t s = 0; s < weights.size(); ++s) {
    BoundarySlot slot;
    if (!walk.empty()) slot.dart = walk[s];
    if (weights[s] < 0) throw GraphError("negative weight");
    for (int i = 0; i < weights[s]; ++i) slot.inserted.push_back(next++);
    slots.push_back(std::move(slot));
  }
  return make_canonical(base, std::move(slots), k);
}

CanonicalEmbedding make_canonical(const PlaneEmbedding& base, std::vector<BoundarySlot> slots, int k) {
  if (k < 1) throw GraphError("k must be positive");
  if (slots.empty()) throw GraphError("boundary has no slots");
  int total = 0;
  for (const auto& s : slots) total += s.weight();
  if (total != 2 * k) throw GraphError("boundary carries " + std::to_string(total) + " insertions, expected 2k");
  CanonicalEmbedding ce;
  ce.k = k;
  ce.base = base;
  ce.boundary = std::move(slots);
  if (ce.free_circle()) {
    if (base.graph.vertex_count() != 0) throw GraphError("a vertex-free circle needs an empty base");
  } else {
    for (const auto& s : ce.boundary)
      if (!s.dart) throw GraphError("boundary slot without a base edge");
    check_base(base);
    const auto idx = index_of(base.rotation);
    const int len = static_cast<int>(ce.boundary.size());
    for (int s = 0; s < len; ++s) {
      const Dart d = *ce.boundary[s].dart;
      const Dart next = *ce.boundary[(s + 1) % len].dart;
      if (successor(base.rotation, idx, d.twin()) != next) throw GraphError("boundary is not a facial walk of the base");
    }
    const Dart first = *ce.boundary.front().dart;
    if (successor(base.rotation, idx, ce.boundary.back().dart->twin()) != first)
      throw GraphError("boundary walk does not close");
  }
  build(ce);
  return ce;
}

SignedMultigraph assemble(const CanonicalEmbedding& ce) {
  CanonicalEmbedding copy;
  copy.k = ce.k;
  copy.base = ce.base;
  copy.boundary = ce.boundary;
  build(copy);
  if (copy.graph.negative_count() != ce.k) throw InternalInconsistency("assembled graph has the wrong negative count");
  return copy.graph;
}

std::optional<CanonicalEmbedding> derive_canonical(const SignedMultigraph& g, const Rotation& rotation,
                                                   std::string* why) {
  check_rotation(g, rotation);
  const auto negatives = g.negative_edges();
  const int k = static_cast<int>(negatives.size());
  if (k == 0) return fail(why, "no negative edge"), std::nullopt;
  std::set<VertexId> r_set;
  std::map<VertexId, EdgeId> chord_at;
  for (EdgeId id : negatives) {
    const SignedEdge& e = g.edge(id);
    if (e.is_loop()) return fail(why, "negative loop"), std::nullopt;
    if (!r_set.insert(e.u).second || !r_set.insert(e.v).second)
      return fail(why, "negative edges share an endpoint"), std::nullopt;
    chord_at[e.u] = id;
    chord_at[e.v] = id;
  }
  for (VertexId v : g.vertices())
    if (g.degree(v) != 3) return fail(why, "graph is not cubic"), std::nullopt;

  const SignedMultigraph plus = g.without_edges(negatives);
  Rotation plus_rot;
  for (const auto& [v, ring] : rotation)
    for (const Dart& d : ring)
      if (!g.edge(d.edge).is_negative()) plus_rot[v].push_back(d);
  if (!is_connected(plus)) return fail(why, "positive part is disconnected"), std::nullopt;
  const auto plus_faces = traverse_faces(plus, plus_rot);
  if (plus.vertex_count() - plus.edge_count() + static_cast<int>(plus_faces.size()) != 2)
    return fail(why, "positive part is not plane"), std::nullopt;

  std::map<Dart, int> face_of;
  for (int f = 0; f < static_cast<int>(plus_faces.size()); ++f)
    for (const Dart& d : plus_faces[f].darts) face_of[d] = f;

  // Each chord stub sits in the corner a -> b of its ring [a, chord, b].
  int outer = -1;
  for (VertexId v : r_set) {
    const auto& ring = rotation.at(v);
    const int i = static_cast<int>(std::find_if(ring.begin(), ring.end(),
                                                [&](const Dart& d) { return g.edge(d.edge).is_negative(); }) -
                                   ring.begin());
    const Dart out = ring[(i + 1) % 3];
    const int f = face_of.at(out);
    if (outer >= 0 && f != outer) return fail(why, "chord stubs lie in different faces"), std::nullopt;
    outer = f;
  }
  const Face& c = plus_faces[outer];
  {
    std::set<VertexId> seen;
    for (const Dart& d : c.darts)
      if (!seen.insert(dart_tail(g, d)).second) return fail(why, "boundary face is not a circuit"), std::nullopt;
  }

  const auto is_base = [&](VertexId v) { return r_set.count(v) == 0; };
  int start = 0;
  const int len = static_cast<int>(c.darts.size());
  bool has_base = false;
  for (int i = 0; i < len; ++i)
    if (is_base(dart_tail(g, c.darts[i]))) {
      has_base = true;
      break;
    }

  CanonicalEmbedding ce;
  ce.k = k;
  ce.graph = g;
  ce.rotation = rotation;

  if (!has_base) {
    if (plus.vertex_count() != 2 * k) return fail(why, "free circle with extra vertices"), std::nullopt;
    // Start the circle at the least inserted vertex.
    for (int i = 0; i < len; ++i)
      if (dart_tail(g, c.darts[i]) < dart_tail(g, c.darts[start])) start = i;
    BoundarySlot slot;
    for (int i = 0; i < len; ++i) slot.inserted.push_back(dart_tail(g, c.darts[(start + i) % len]));
    ce.boundary.push_back(std::move(slot));
  } else {
    // Suppress R: each maximal path through inserted vertices becomes one base edge.
    const auto plus_idx = index_of(plus_rot);
    struct Trace {
      std::vector<EdgeId> edges;
      VertexId end;
    };
    auto trace = [&](Dart d) {
      Trace t{{d.edge}, dart_head(g, d)};
      while (!is_base(t.end)) {
        const Dart in = d.twin();
        d = successor(plus_rot, plus_idx, in);
        t.edges.push_back(d.edge);
        t.end = dart_head(g, d);
      }
      return t;
    };
    std::map<Dart, Dart> base_dart_of;  // first G dart of a path -> base dart
    for (const auto& [v, ring] : plus_rot) {
      if (!is_base(v)) continue;
      ce.base.graph.add_vertex(v);
    }
    for (const auto& [v, ring] : plus_rot) {
      if (!is_base(v)) continue;
      for (const Dart& d : ring) {
        const Trace t = trace(d);
        if (t.end == v) return fail(why, "base would have a loop"), std::nullopt;
        const EdgeId b = *std::min_element(t.edges.begin(), t.edges.end());
        if (!ce.paths.count(b)) {
          // Orient the base edge along edge b's own direction.
          VertexId cur = v;
          bool along = false;
          for (EdgeId e : t.edges) {
            const SignedEdge& ge = g.edge(e);
            if (e == b) along = ge.u == cur;
            cur = ge.other(cur);
          }
          std::vector<EdgeId> path = t.edges;
          VertexId bu = v;
          VertexId bv = t.end;
          if (!along) {
            std::reverse(path.begin(), path.end());
            std::swap(bu, bv);
          }
          ce.base.graph.add_edge_with_id(b, bu, bv, Sign::Positive);
          ce.paths[b] = std::move(path);
        }
        const SignedEdge& be = ce.base.graph.edge(b);
        base_dart_of[d] = Dart{b, v == be.u ? 0 : 1};
        ce.base.rotation[v].push_back(base_dart_of[d]);
      }
    }
    for (int i = 0; i < len; ++i)
      if (is_base(dart_tail(g, c.darts[i])) && (!is_base(dart_tail(g, c.darts[start])) ||
                                                 base_dart_of.at(c.darts[i]) < base_dart_of.at(c.darts[start])))
        start = i;
    for (int i = 0; i < len; ++i) {
      const Dart d = c.darts[(start + i) % len];
      const VertexId tail = dart_tail(g, d);
      if (is_base(tail)) {
        ce.boundary.push_back(BoundarySlot{base_dart_of.at(d), {}});
      } else {
        ce.boundary.back().inserted.push_back(tail);
      }
    }
  }

  for (const auto& s : ce.boundary) ce.z.insert(ce.z.end(), s.inserted.begin(), s.inserted.end());
  if (static_cast<int>(ce.z.size()) != 2 * k) return fail(why, "some chord end is off the boundary"), std::nullopt;
  for (int i = 0; i < k; ++i) {
    const EdgeId e = chord_at.at(ce.z[i]);
    if (g.edge(e).other(ce.z[i]) != ce.z[i + k]) return fail(why, "chords are not antipodal"), std::nullopt;
    ce.chords.push_back(e);
  }
  if (euler_characteristic(g, rotation) != 1) return fail(why, "surface is not the projective plane"), std::nullopt;
  return ce;
}

int weight_of_edge(const CanonicalEmbedding& ce, EdgeId base_edge) {
  for (const auto& s : ce.boundary)
    if (s.dart && s.dart->edge == base_edge) return s.weight();
  if (ce.base.graph.edge_index(base_edge) < 0) throw GraphError("edge is not in the base");
  return 0;
}

int weight_of_edges(const CanonicalEmbedding& ce, std::span<const EdgeId> base_edges) {
  int w = 0;
  for (EdgeId e : base_edges) w += weight_of_edge(ce, e);
  return w;
}

int weight_of_face(const CanonicalEmbedding& ce, const Face& face) {
  std::set<EdgeId> edges;
  for (const Dart& d : face.darts) edges.insert(d.edge);
  return weight_of_edges(ce, std::vector<EdgeId>(edges.begin(), edges.end()));
}

int weight_of_vertices(const CanonicalEmbedding& ce, std::span<const VertexId> x) {
  int w = 0;
  for (VertexId v : x) w += ce.is_inserted(v) ? 1 : 0;
  return w;
}

FaceClassification classify_faces(const CanonicalEmbedding& ce) {
  FaceClassification fc;
  for (int i = 0; i < ce.k; ++i) fc.crosscap.emplace_back(i, (i + 1) % ce.k);
  if (ce.free_circle()) return fc;
  fc.faces = faces(ce.base);
  const int nf = static_cast<int>(fc.faces.size());
  std::map<Dart, int> face_of;
  for (int f = 0; f < nf; ++f)
    for (const Dart& d : fc.faces[f].darts) face_of[d] = f;
  fc.outer = face_of.at(*ce.boundary.front().dart);
  fc.slots_of.assign(nf, {});
  fc.bridge.assign(nf, 0);
  std::vector<std::uint8_t> is_boundary(nf, 0);
  for (int s = 0; s < static_cast<int>(ce.boundary.size()); ++s) {
    const int f = face_of.at(ce.boundary[s].dart->twin());
    fc.slot_face.push_back(f);
    fc.slots_of[f].push_back(s);
    if (!is_boundary[f]) {
      is_boundary[f] = 1;
      fc.boundary.push_back(f);
    }
  }
  for (int f = 0; f < nf; ++f)
    if (f != fc.outer && !is_boundary[f]) fc.internal.push_back(f);
  for (int f : fc.boundary) {
    const auto& slots = fc.slots_of[f];
    const int n = static_cast<int>(slots.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const SignedEdge& ea = ce.base.graph.edge(ce.boundary[slots[a]].dart->edge);
        const SignedEdge& eb = ce.base.graph.edge(ce.boundary[slots[b]].dart->edge);
        if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v) parent[find(a)] = find(b);
      }
    int comps = 0;
    for (int a = 0; a < n; ++a) comps += find(a) == a;
    fc.bridge[f] = comps > 1;
  }
  return fc;
}

int bridge_face_count(const CanonicalEmbedding& ce) {
  const auto fc = classify_faces(ce);
  return static_cast<int>(std::count(fc.bridge.begin(), fc.bridge.end(), 1));
}

std::vector<Face> positive_faces(const CanonicalEmbedding& ce) {
  const auto negatives = ce.graph.negative_edges();
  const SignedMultigraph plus = ce.graph.without_edges(negatives);
  Rotation rot;
  for (const auto& [v, ring] : ce.rotation)
    for (const Dart& d : ring)
      if (!ce.graph.edge(d.edge).is_negative()) rot[v].push_back(d);
  return traverse_faces(plus, rot);
}

}  // namespace frustra
