#include "frustra/verifiers.hpp"

#include <algorithm>
#include <bit>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <functional>
#include <numeric>
#include <set>

#include "frustra/compact_graph.hpp"
#include "frustra/frustration.hpp"

namespace frustra {

namespace {

std::string ids_text(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

std::string dart_text(Dart d) { return "face(" + std::to_string(d.edge) + "," + std::to_string(d.side) + ")"; }

// Gray-code walk over vertex subsets avoiding index 0, tracking (a, b).
template <class Visit>
void for_each_cut(const CompactGraph& cg, Visit&& visit) {
  if (cg.n > 40) throw SizeLimitError("cut enumeration limited to 40 vertices");
  if (cg.n < 2) return;
  std::vector<std::uint8_t> crossing(cg.m, 0);
  std::uint64_t mask = 0;
  int a = 0;
  int b = 0;
  const std::uint64_t total = std::uint64_t{1} << (cg.n - 1);
  for (std::uint64_t i = 1; i < total; ++i) {
    const int v = 1 + std::countr_zero(i);
    for (int e : cg.incident[v]) {
      crossing[e] ^= 1;
      (cg.negative[e] ? b : a) += crossing[e] ? 1 : -1;
    }
    mask ^= std::uint64_t{1} << v;
    visit(mask, a, b);
  }
}

struct MaskStats {
  int vertices = 0;
  int edges = 0;
  int components = 0;
  bool two_regular = true;
  int cyclomatic() const { return edges - vertices + components; }
};

int count_components(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
  int comps = 0;
  while (mask) {
    ++comps;
    std::uint64_t frontier = mask & (~mask + 1);
    std::uint64_t seen = frontier;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint64_t fresh = adj[v] & mask & ~seen;
      seen |= fresh;
      frontier |= fresh;
    }
    mask &= ~seen;
  }
  return comps;
}

MaskStats stats(const CompactGraph& cg, const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
  MaskStats s;
  s.vertices = std::popcount(mask);
  std::vector<int> deg(cg.n, 0);
  for (int e = 0; e < cg.m; ++e) {
    if (((mask >> cg.eu[e]) & 1) && ((mask >> cg.ev[e]) & 1)) {
      ++s.edges;
      ++deg[cg.eu[e]];
      ++deg[cg.ev[e]];
    }
  }
  for (int v = 0; v < cg.n; ++v)
    if (((mask >> v) & 1) && deg[v] != 2) s.two_regular = false;
  s.components = count_components(adj, mask);
  return s;
}

std::vector<int> mask_ids(const CompactGraph& cg, std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; v < cg.n; ++v)
    if ((mask >> v) & 1) out.push_back(cg.vertex_ids[v]);
  return out;
}

std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

std::map<Dart, int> face_index(const std::vector<Face>& faces) {
  std::map<Dart, int> out;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    for (const Dart& d : faces[f].darts) out[d] = f;
  return out;
}

// Index of the face of G+ that carries the chords.
int outer_positive_face(const CanonicalEmbedding& ce, const std::map<Dart, int>& face_of) {
  const auto& ring = ce.rotation.at(ce.z.front());
  for (int i = 0; i < 3; ++i)
    if (ce.graph.edge(ring[i].edge).is_negative()) return face_of.at(ring[(i + 1) % 3]);
  throw InternalInconsistency("inserted vertex without a chord");
}

// Components of the base after deleting some edges, as vertex id lists.
std::vector<std::vector<VertexId>> base_components_without(const CanonicalEmbedding& ce,
                                                           const std::set<EdgeId>& removed) {
  std::vector<EdgeId> ids(removed.begin(), removed.end());
  return connected_components(ce.base.graph.without_edges(ids));
}

int component_weight(const CanonicalEmbedding& ce, const std::vector<VertexId>& comp,
                     const std::set<EdgeId>& removed) {
  const std::set<VertexId> in(comp.begin(), comp.end());
  int w = 0;
  for (const auto& s : ce.boundary) {
    if (!s.dart || removed.count(s.dart->edge)) continue;
    const SignedEdge& e = ce.base.graph.edge(s.dart->edge);
    if (in.count(e.u) && in.count(e.v)) w += s.weight();
  }
  return w;
}

int face_weight(const CanonicalEmbedding& ce, const FaceClassification& fc, int f) {
  int w = 0;
  for (int s : fc.slots_of[f]) w += ce.boundary[s].weight();
  return w;
}

std::set<EdgeId> boundary_edges_of(const CanonicalEmbedding& ce, const FaceClassification& fc, int f) {
  std::set<EdgeId> out;
  for (int s : fc.slots_of[f]) out.insert(ce.boundary[s].dart->edge);
  return out;
}

// The digon {a, b} of the base whose C' edge carries exactly two insertions.
struct DigonShape {
  VertexId a = 0;
  VertexId b = 0;
  int slot = -1;
};

std::optional<DigonShape> as_weighted_digon(const CanonicalEmbedding& ce, const std::vector<VertexId>& comp) {
  if (comp.size() != 2) return std::nullopt;
  std::vector<EdgeId> inside;
  for (const SignedEdge& e : ce.base.graph.edges()) {
    const bool iu = e.u == comp[0] || e.u == comp[1];
    const bool iv = e.v == comp[0] || e.v == comp[1];
    if (iu && iv) inside.push_back(e.id);
  }
  if (inside.size() != 2) return std::nullopt;
  for (int s = 0; s < static_cast<int>(ce.boundary.size()); ++s) {
    const auto& slot = ce.boundary[s];
    if (!slot.dart || slot.weight() != 2) continue;
    if (slot.dart->edge == inside[0] || slot.dart->edge == inside[1]) return DigonShape{comp[0], comp[1], s};
  }
  return std::nullopt;
}

std::vector<std::set<int>> face_adjacency(const CanonicalEmbedding& ce, const FaceClassification& fc) {
  const auto face_of = face_index(fc.faces);
  std::vector<std::set<int>> adj(fc.faces.size());
  for (const SignedEdge& e : ce.base.graph.edges()) {
    const int f = face_of.at(Dart{e.id, 0});
    const int g = face_of.at(Dart{e.id, 1});
    if (f == g) continue;
    adj[f].insert(g);
    adj[g].insert(f);
  }
  return adj;
}

}  // namespace

std::optional<CutSequence> cut_sequence(const CanonicalEmbedding& ce, const VertexCut& cut, std::string* why) {
  if (!cut.equilibrated() || cut.positive_count == 0) throw GraphError("cut sequence needs an equilibrated cut");
  const auto pf = positive_faces(ce);
  const auto face_of = face_index(pf);
  const int outer = outer_positive_face(ce, face_of);
  std::vector<EdgeId> pos;
  for (EdgeId e : cut.cut_edges)
    if (!ce.graph.edge(e).is_negative()) pos.push_back(e);
  // Dual multigraph on faces of G+ spanned by the positive cut edges.
  std::map<int, std::vector<EdgeId>> at;
  for (EdgeId e : pos) {
    const int f = face_of.at(Dart{e, 0});
    const int g = face_of.at(Dart{e, 1});
    if (f == g) {
      if (why) *why = "cut edge " + std::to_string(e) + " has one face on both sides";
      return std::nullopt;
    }
    at[f].push_back(e);
    at[g].push_back(e);
  }
  for (const auto& [f, es] : at)
    if (es.size() != 2) {
      if (why) *why = "face meets the cut " + std::to_string(es.size()) + " times";
      return std::nullopt;
    }
  if (!at.count(outer)) {
    if (why) *why = "cut avoids the boundary circuit";
    return std::nullopt;
  }
  CutSequence seq;
  seq.source_cut = cut;
  std::set<EdgeId> used;
  EdgeId e = at[outer][0];
  int f = outer;
  while (true) {
    used.insert(e);
    seq.elements.push_back(SequenceItem{false, e, {}});
    const int g0 = face_of.at(Dart{e, 0});
    const int next_face = g0 == f ? face_of.at(Dart{e, 1}) : g0;
    if (next_face == outer) break;
    seq.elements.push_back(SequenceItem{true, 0, pf[next_face].id()});
    const auto& es = at[next_face];
    e = es[0] == e ? es[1] : es[0];
    f = next_face;
  }
  if (used.size() != pos.size()) {
    if (why) *why = "positive cut edges trace more than one curve";
    return std::nullopt;
  }
  return seq;
}

VerifierReport verify_embedding_structure(const CanonicalEmbedding& ce) {
  VerifierReport r{"embedding structure"};
  const auto& g = ce.graph;
  for (VertexId v : g.vertices())
    if (g.degree(v) != 3) r.fail("vertex " + std::to_string(v) + " is not cubic");
  if (g.negative_count() != ce.k) r.fail("negative edge count differs from k");
  if (static_cast<int>(ce.z.size()) != 2 * ce.k) r.fail("wrong number of inserted vertices");
  for (int i = 0; i < ce.k && i < static_cast<int>(ce.chords.size()); ++i) {
    const SignedEdge& c = g.edge(ce.chords[i]);
    if (!c.is_negative() || c.other(ce.z[i]) != ce.z[i + ce.k]) r.fail("chord " + std::to_string(i) + " is not antipodal");
  }
  const int chi = euler_characteristic(g, ce.rotation);
  if (chi != 1) r.fail("V - E + F = " + std::to_string(chi) + " on the projective plane");
  const int plus_faces = static_cast<int>(positive_faces(ce).size());
  const int total = signed_face_count(g, ce.rotation);
  if (total != plus_faces - 1 + ce.k)
    r.fail("cross cap holds " + std::to_string(total - plus_faces + 1) + " faces instead of k");
  if (!ce.free_circle()) {
    const auto& b = ce.base.graph;
    if (b.vertex_count() >= 3)
      for (VertexId v : b.vertices())
        if (!is_connected(b.without_vertex(v))) r.fail("base has cut vertex " + std::to_string(v));
  }
  return r;
}

VerifierReport verify_weight_lemma(const CanonicalEmbedding& ce) {
  VerifierReport r{"weight lemma"};
  r.applicable = ce.k >= 3;
  if (ce.free_circle()) {
    r.note = "no boundary faces";
    return r;
  }
  const auto fc = classify_faces(ce);
  for (int f : fc.boundary) {
    const int w = face_weight(ce, fc, f);
    if (w > 2) r.fail("boundary " + dart_text(fc.faces[f].id()) + " has weight " + std::to_string(w));
    if (fc.bridge[f] && w != 0) r.fail("bridge " + dart_text(fc.faces[f].id()) + " has weight " + std::to_string(w));
  }
  const int len = static_cast<int>(ce.boundary.size());
  for (int s = 0; s < len; ++s) {
    const int f = fc.slot_face[s];
    const int g = fc.slot_face[(s + 1) % len];
    if (f == g) continue;
    const int w = face_weight(ce, fc, f) + face_weight(ce, fc, g);
    if (w > 3)
      r.fail("consecutive boundary faces " + dart_text(fc.faces[f].id()) + " and " + dart_text(fc.faces[g].id()) +
             " weigh " + std::to_string(w));
  }
  for (int f : fc.boundary) {
    if (!fc.bridge[f]) continue;
    const auto removed = boundary_edges_of(ce, fc, f);
    for (const auto& comp : base_components_without(ce, removed)) {
      const int w = component_weight(ce, comp, removed);
      if (w != 2 && w != 2 * ce.k - 2)
        r.fail("component " + ids_text(comp) + " beside bridge " + dart_text(fc.faces[f].id()) + " weighs " +
               std::to_string(w));
    }
  }
  return r;
}

VerifierReport verify_bridge_structure(const CanonicalEmbedding& ce) {
  VerifierReport r{"bridge structure"};
  r.applicable = ce.k >= 4;
  if (ce.free_circle()) return r;
  const auto fc = classify_faces(ce);
  int bridges = 0;
  for (int f : fc.boundary) {
    if (!fc.bridge[f]) continue;
    ++bridges;
    const std::string name = dart_text(fc.faces[f].id());
    const auto removed = boundary_edges_of(ce, fc, f);
    const auto comps = base_components_without(ce, removed);
    if (comps.size() != 2) {
      r.fail(name + " splits the base into " + std::to_string(comps.size()) + " components");
      continue;
    }
    bool shaped = false;
    for (int i = 0; i < 2; ++i) {
      const auto digon = as_weighted_digon(ce, comps[i]);
      if (!digon || component_weight(ce, comps[i], removed) != 2) continue;
      if (component_weight(ce, comps[1 - i], removed) != 2 * ce.k - 2) continue;
      // The digon must bound a face of the base (a 4-cycle face in G).
      const EdgeId c = ce.boundary[digon->slot].dart->edge;
      bool bounds_face = false;
      for (const Face& face : fc.faces) {
        std::set<EdgeId> es;
        for (const Dart& d : face.darts) es.insert(d.edge);
        if (face.length() == 2 && es.count(c)) bounds_face = true;
      }
      shaped = shaped || bounds_face;
    }
    if (!shaped) r.fail(name + " lacks a weight-2 digon beside a weight-(2k-2) component");
    if (fc.faces[f].length() < 6) r.fail(name + " has length " + std::to_string(fc.faces[f].length()));
  }
  if (bridges == 0) r.note = "no bridge face";
  return r;
}

VerifierReport verify_small_cuts(const CanonicalEmbedding& ce) {
  VerifierReport r{"small cuts"};
  r.applicable = ce.k >= 4;
  const auto& g = ce.graph;
  if (!is_minimum_signature(g, 40)) {
    r.fail("signature is not minimum");
    return r;
  }
  const CompactGraph cg(g);
  if (cg.n > 40) throw SizeLimitError("small cut check limited to 40 vertices");
  const auto adj = cg.adjacency_masks();
  const std::uint64_t all = full_mask(cg.n);
  std::set<std::vector<EdgeId>> face_sets;
  for (auto& es : signed_face_edges(g, ce.rotation)) face_sets.insert(es);
  std::vector<std::uint8_t> inserted(cg.n, 0);
  for (int v = 0; v < cg.n; ++v) inserted[v] = ce.is_inserted(cg.vertex_ids[v]);
  auto weight = [&](std::uint64_t m) {
    int w = 0;
    for (int v = 0; v < cg.n; ++v) w += ((m >> v) & 1) && inserted[v];
    return w;
  };
  auto is_k2 = [&](std::uint64_t m) {
    const auto s = stats(cg, adj, m);
    return s.vertices == 2 && s.edges == 1;
  };
  auto is_c4 = [&](std::uint64_t m) {
    const auto s = stats(cg, adj, m);
    return s.vertices == 4 && s.edges == 4 && s.two_regular && s.components == 1;
  };
  auto is_face_c4 = [&](std::uint64_t m) {
    if (!is_c4(m)) return false;
    std::vector<EdgeId> es;
    for (int e = 0; e < cg.m; ++e)
      if (((m >> cg.eu[e]) & 1) && ((m >> cg.ev[e]) & 1)) es.push_back(cg.edge_ids[e]);
    return face_sets.count(es) > 0;
  };
  for_each_cut(cg, [&](std::uint64_t x, int a, int b) {
    const bool c22 = a == 2 && b == 2;
    const bool c31 = a == 3 && b == 1;
    const bool c32 = a == 3 && b == 2;
    if (!c22 && !c31 && !c32) return;
    const std::uint64_t y = all & ~x;
    if (!mask_connected(adj, x) || !mask_connected(adj, y)) return;
    const std::string where = "cut " + ids_text(mask_ids(cg, x));
    if (c22) {
      if (!(is_k2(x) || is_k2(y) || is_face_c4(x) || is_face_c4(y))) r.fail("(2,2) " + where + " has neither form");
      return;
    }
    const int wx = weight(x);
    const int wy = weight(y);
    std::vector<std::uint64_t> sides;
    if (wx <= wy) sides.push_back(x);
    if (wy <= wx) sides.push_back(y);
    bool good = false;
    for (std::uint64_t s : sides) {
      if (c31) good = good || is_k2(s) || is_c4(s);
      if (c32) good = good || stats(cg, adj, s).cyclomatic() <= 1;
    }
    if (!good) r.fail(std::string(c31 ? "(3,1) " : "(3,2) ") + where + " violates the lighter-side form");
  });
  return r;
}

VerifierReport verify_four_cut_property(const SignedMultigraph& g, int k) {
  VerifierReport r{"four-edge cuts"};
  r.applicable = k >= 4;
  const CompactGraph cg(g);
  const auto adj = cg.adjacency_masks();
  const std::uint64_t all = full_mask(cg.n);
  for_each_cut(cg, [&](std::uint64_t x, int a, int b) {
    if (a + b != 4) return;
    const std::uint64_t y = all & ~x;
    if (stats(cg, adj, x).cyclomatic() <= 1 || stats(cg, adj, y).cyclomatic() <= 1) return;
    r.fail("4-edge cut " + ids_text(mask_ids(cg, x)) + " has two cycles on each side");
  });
  return r;
}

VerifierReport verify_zero_runs(const CanonicalEmbedding& ce) {
  VerifierReport r{"zero runs"};
  const int bridges = bridge_face_count(ce);
  r.applicable = (ce.k == 4 || ce.k == 5) && bridges == 0;
  const int len = static_cast<int>(ce.boundary.size());
  int longest = 0;
  for (int s = 0; s < len; ++s) {
    int run = 0;
    while (run < len && ce.boundary[(s + run) % len].weight() == 0) ++run;
    longest = std::max(longest, run);
  }
  r.note = "longest run of weight-0 boundary edges: " + std::to_string(longest);
  const int limit = ce.k == 4 ? 1 : ce.k == 5 ? 3 : len;
  if (longest > limit) r.fail("run of " + std::to_string(longest) + " weight-0 edges exceeds " + std::to_string(limit));
  return r;
}

VerifierReport verify_face_adjacency(const CanonicalEmbedding& ce) {
  VerifierReport r{"face adjacency"};
  r.applicable = ce.k >= 4;
  if (ce.free_circle()) return r;
  const auto fc = classify_faces(ce);
  const auto adj = face_adjacency(ce, fc);
  const int nf = static_cast<int>(fc.faces.size());
  auto common = [&](int f, int g) {
    int c = 0;
    for (int h : adj[f])
      if (h != fc.outer && h != f && h != g && adj[g].count(h)) ++c;
    return c;
  };
  for (int f = 0; f < nf; ++f)
    for (int g = f + 1; g < nf; ++g) {
      if (f == fc.outer || g == fc.outer) continue;
      const int c = common(f, g);
      if (c > 3)
        r.fail(dart_text(fc.faces[f].id()) + " and " + dart_text(fc.faces[g].id()) + " share " + std::to_string(c) +
               " adjacent faces");
    }
  const int len = static_cast<int>(ce.boundary.size());
  for (int s = 0; s < len; ++s) {
    const int f = fc.slot_face[s];
    const int g = fc.slot_face[(s + 1) % len];
    if (f == g) continue;
    const int c = common(f, g);
    if (c > 1)
      r.fail("consecutive boundary faces " + dart_text(fc.faces[f].id()) + " and " + dart_text(fc.faces[g].id()) +
             " share " + std::to_string(c) + " adjacent faces");
  }
  std::set<int> boundary(fc.boundary.begin(), fc.boundary.end());
  for (int f : fc.internal) {
    int c = 0;
    for (int h : adj[f]) c += boundary.count(h) ? 1 : 0;
    if (c < 2) r.fail("internal " + dart_text(fc.faces[f].id()) + " meets " + std::to_string(c) + " boundary faces");
  }
  return r;
}

VerifierReport verify_equilibrated_cuts(const CanonicalEmbedding& ce) {
  VerifierReport r{"equilibrated cuts"};
  r.applicable = ce.k >= 2;
  const auto& g = ce.graph;
  if (!is_minimum_signature(g, 40)) {
    r.fail("signature is not minimum");
    return r;
  }
  const CompactGraph cg(g);
  const auto adj = cg.adjacency_masks();
  const std::uint64_t all = full_mask(cg.n);
  // Adjacency of the base, on the vertex indices of G.
  std::vector<std::uint64_t> base_adj(cg.n, 0);
  std::uint64_t base_mask = 0;
  for (const SignedEdge& e : ce.base.graph.edges()) {
    const int u = g.vertex_index(e.u);
    const int v = g.vertex_index(e.v);
    base_adj[u] |= std::uint64_t{1} << v;
    base_adj[v] |= std::uint64_t{1} << u;
  }
  for (VertexId v : ce.base.graph.vertices()) base_mask |= std::uint64_t{1} << g.vertex_index(v);
  int checked = 0;
  for_each_cut(cg, [&](std::uint64_t x, int a, int b) {
    if (a != b || a == 0) return;
    const std::uint64_t y = all & ~x;
    if (!mask_connected(adj, x) || !mask_connected(adj, y)) return;
    ++checked;
    const std::string where = "cut " + ids_text(mask_ids(cg, x));
    for (std::uint64_t side : {x, y}) {
      const std::uint64_t prime = side & base_mask;
      if (prime && !mask_connected(base_adj, prime)) r.fail(where + ": base part of a side is disconnected");
    }
    const auto xs = mask_ids(cg, x);
    std::string why;
    if (!cut_sequence(ce, cut_of(g, xs), &why)) r.fail(where + ": no cut sequence (" + why + ")");
  });
  r.note = std::to_string(checked) + " minimised equilibrated cuts";
  return r;
}

VerifierReport verify_matching_property(const SignedMultigraph& g, int k) {
  VerifierReport r{"equilibrated cut matching"};
  r.applicable = k >= 2;
  FrustrationOptions fo;
  fo.max_vertices = 40;
  fo.cross_check = false;
  const auto fr = frustration_index(g, fo);
  for (const SignedMultigraph& s : fr.minimum_signatures) {
    const CompactGraph cg(s);
    std::vector<std::uint8_t> crossing(cg.m, 0);
    std::vector<int> pos_at(cg.n, 0);
    int crowded = 0;  // vertices meeting two positive cut edges
    auto bump = [&](int v, int delta) {
      const bool before = pos_at[v] >= 2;
      pos_at[v] += delta;
      crowded += (pos_at[v] >= 2) - before;
    };
    int a = 0;
    int b = 0;
    std::uint64_t mask = 0;
    const std::uint64_t total = std::uint64_t{1} << (cg.n - 1);
    for (std::uint64_t i = 1; i < total; ++i) {
      const int v = 1 + std::countr_zero(i);
      for (int e : cg.incident[v]) {
        crossing[e] ^= 1;
        const int d = crossing[e] ? 1 : -1;
        if (cg.negative[e]) {
          b += d;
        } else {
          a += d;
          bump(cg.eu[e], d);
          bump(cg.ev[e], d);
        }
      }
      mask ^= std::uint64_t{1} << v;
      if (a == b && a > 0 && crowded > 0)
        r.fail("equilibrated cut " + ids_text(mask_ids(cg, mask)) + " has adjacent positive edges");
    }
  }
  r.note = std::to_string(fr.minimum_signatures.size()) + " minimum signatures";
  return r;
}

QReport build_eta_and_Q(const CanonicalEmbedding& ce) {
  QReport q;
  q.report.name = "eta and Q";
  if (ce.free_circle()) {
    q.report.applicable = false;
    q.report.note = "no base faces";
    return q;
  }
  const auto fc = classify_faces(ce);
  q.report.applicable = ce.k >= 4 && std::count(fc.bridge.begin(), fc.bridge.end(), 1) == 0;
  const int m = static_cast<int>(fc.boundary.size());
  q.boundary_faces = m;
  q.internal_faces = static_cast<int>(fc.internal.size());
  std::map<int, int> position;
  for (int i = 0; i < m; ++i) position[fc.boundary[i]] = i;
  const auto adj = face_adjacency(ce, fc);
  auto consecutive = [&](int p, int r) { return m >= 3 && (r - p == 1 || (p == 0 && r == m - 1)); };
  std::vector<std::vector<std::pair<int, int>>> options;
  for (int f : fc.internal) {
    std::vector<int> ps;
    for (int h : adj[f])
      if (position.count(h)) ps.push_back(position[h]);
    std::sort(ps.begin(), ps.end());
    std::vector<std::pair<int, int>> opts;
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        if (!consecutive(ps[i], ps[j])) opts.emplace_back(ps[i], ps[j]);
    if (ps.size() < 2)
      q.report.fail("internal " + dart_text(fc.faces[f].id()) + " meets fewer than two boundary faces");
    options.push_back(std::move(opts));
  }
  if (!q.report.passed) return q;

  auto crosses = [](std::pair<int, int> s, std::pair<int, int> t) {
    return (s.first < t.first && t.first < s.second && s.second < t.second) ||
           (t.first < s.first && s.first < t.second && t.second < s.second);
  };
  std::vector<std::pair<int, int>> chosen;
  std::map<std::pair<int, int>, int> mult;
  long budget = 2'000'000;
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == options.size()) return true;
    for (const auto& p : options[i]) {
      if (--budget < 0) return false;
      if (mult[p] >= 3) continue;
      if (std::any_of(chosen.begin(), chosen.end(), [&](const auto& c) { return crosses(c, p); })) continue;
      chosen.push_back(p);
      ++mult[p];
      if (place(i + 1)) return true;
      --mult[p];
      chosen.pop_back();
    }
    return false;
  };
  if (!place(0)) {
    q.report.fail(budget < 0 ? "eta search budget exhausted" : "no admissible eta");
    return q;
  }
  q.eta = chosen;

  // Q: the cycle C_M plus one chord per internal face.
  std::map<std::pair<int, int>, int> edges;
  auto add = [&](int u, int v) { ++edges[{std::min(u, v), std::max(u, v)}]; };
  for (int i = 0; i < m; ++i) add(i, (i + 1) % m);
  for (const auto& p : chosen) add(p.first, p.second);
  q.edges = m + static_cast<int>(chosen.size());
  for (const auto& [uv, c] : edges) q.max_multiplicity = std::max(q.max_multiplicity, c);
  if (m >= 3)
    for (int i = 0; i < m; ++i) {
      const int u = std::min(i, (i + 1) % m);
      const int v = std::max(i, (i + 1) % m);
      if (edges[{u, v}] != 1) q.cycle_simple = false;
    }
  using UGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  UGraph ug(std::max(m, 1));
  for (const auto& [uv, c] : edges)
    if (uv.first != uv.second) boost::add_edge(uv.first, uv.second, ug);
  q.planar = boost::boyer_myrvold_planarity_test(ug);
  q.edge_bound = 4 * m - 9;
  if (!q.planar) q.report.fail("Q is not planar");
  if (q.max_multiplicity > 3) q.report.fail("multiedge of multiplicity " + std::to_string(q.max_multiplicity));
  if (!q.cycle_simple) q.report.fail("an edge of C_M is not simple");
  if (q.edges != q.boundary_faces + q.internal_faces) q.report.fail("|E(Q)| differs from |F1| + |F2|");
  if (m >= 3 && q.edges > q.edge_bound)
    q.report.fail("|E(Q)| = " + std::to_string(q.edges) + " exceeds " + std::to_string(q.edge_bound));
  q.report.note = "M=" + std::to_string(m) + " |F2|=" + std::to_string(q.internal_faces) +
                  " |E(Q)|=" + std::to_string(q.edges);
  return q;
}

std::vector<VerifierReport> run_all_verifiers(const CanonicalEmbedding& ce) {
  std::vector<VerifierReport> out;
  out.push_back(verify_embedding_structure(ce));
  out.push_back(verify_weight_lemma(ce));
  out.push_back(verify_bridge_structure(ce));
  out.push_back(verify_small_cuts(ce));
  out.push_back(verify_four_cut_property(ce.graph, ce.k));
  out.push_back(verify_zero_runs(ce));
  out.push_back(verify_face_adjacency(ce));
  out.push_back(verify_equilibrated_cuts(ce));
  out.push_back(verify_matching_property(ce.graph, ce.k));
  out.push_back(build_eta_and_Q(ce).report);
  return out;
}

std::optional<CanonicalEmbedding> switch_slot_pair(const CanonicalEmbedding& ce, int slot, std::string* why) {
  const auto& s = ce.boundary.at(slot);
  if (s.weight() != 2) throw GraphError("slot does not carry exactly two insertions");
  const std::vector<VertexId> x = s.inserted;
  auto [g, rot] = switch_embedding(ce.graph, ce.rotation, x);
  return derive_canonical(g, rot, why);
}

NormalizationTrace normalize(const CanonicalEmbedding& ce) {
  NormalizationTrace t{ce, {}};
  while (true) {
    const auto fc = classify_faces(t.embedding);
    const int count = static_cast<int>(std::count(fc.bridge.begin(), fc.bridge.end(), 1));
    t.bridge_counts.push_back(count);
    if (count == 0) return t;
    int slot = -1;
    for (int f : fc.boundary) {
      if (!fc.bridge[f]) continue;
      const auto removed = boundary_edges_of(t.embedding, fc, f);
      for (const auto& comp : base_components_without(t.embedding, removed))
        if (auto d = as_weighted_digon(t.embedding, comp)) {
          slot = d->slot;
          break;
        }
      if (slot >= 0) break;
    }
    if (slot < 0) throw VerificationFailure("bridge face without an adjacent weight-2 digon");
    std::string why;
    auto next = switch_slot_pair(t.embedding, slot, &why);
    if (!next) throw VerificationFailure("re-derivation after switching failed: " + why);
    if (bridge_face_count(*next) >= count)
      throw VerificationFailure("bridge face count did not decrease (" + std::to_string(count) + " -> " +
                                std::to_string(bridge_face_count(*next)) + ")");
    t.embedding = std::move(*next);
  }
}

}  // namespace frustra
