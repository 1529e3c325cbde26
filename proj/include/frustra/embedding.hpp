#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "frustra/plane_map.hpp"
#include "frustra/signed_graph.hpp"

namespace frustra {

// A structural claim checked on an instance did not hold where it must.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One edge of the boundary circuit C' of the base, in facial-walk order.
struct BoundarySlot {
  std::optional<Dart> dart;         // base dart; empty for a vertex-free circle
  std::vector<VertexId> inserted;   // vertices of R on this edge, in walk order
  int weight() const noexcept { return static_cast<int>(inserted.size()); }
};

// Plane cubic base G' with a facial circuit C' carrying 2k inserted vertices
// z_1..z_2k, and k negative chords z_i z_{i+k} through the cross cap. `graph`
// and `rotation` describe the assembled G as a signed rotation system.
struct CanonicalEmbedding {
  int k = 0;
  PlaneEmbedding base;
  std::vector<BoundarySlot> boundary;
  SignedMultigraph graph;
  Rotation rotation;
  std::vector<VertexId> z;
  std::vector<EdgeId> chords;                     // chord i joins z[i] and z[i + k]
  std::map<EdgeId, std::vector<EdgeId>> paths;    // base edge -> edges of G from its u to its v

  bool free_circle() const noexcept { return boundary.size() == 1 && !boundary.front().dart; }
  bool is_inserted(VertexId v) const;
};

// Base edge carrying a given edge of G, and whether their directions agree.
struct BaseImage {
  EdgeId base_edge = 0;
  bool forward = true;
};
std::map<EdgeId, BaseImage> base_images(const CanonicalEmbedding& ce);

// Builds G from the base, the walk of C' (empty walk = vertex-free circle) and
// per-slot insertion counts. Inserted vertices get ids above every base id.
// Edge ids: base edges keep theirs on the first piece; further pieces, then
// chords, are numbered upward from the base's next free id.
CanonicalEmbedding make_canonical(const PlaneEmbedding& base, std::span<const Dart> walk,
                                  std::span<const int> weights, int k);
// Same, with the inserted vertex ids given per slot.
CanonicalEmbedding make_canonical(const PlaneEmbedding& base, std::vector<BoundarySlot> slots, int k);

// Rebuilds G from the base and slots with the id scheme above.
SignedMultigraph assemble(const CanonicalEmbedding& ce);

// Recovers the canonical structure from a signed rotation system whose
// negative edges are the chords. Returns nullopt with a reason when the
// negative edges do not sit in one facial circuit of G+ in antipodal order.
std::optional<CanonicalEmbedding> derive_canonical(const SignedMultigraph& g, const Rotation& rotation,
                                                   std::string* why = nullptr);

// omega
int weight_of_edge(const CanonicalEmbedding& ce, EdgeId base_edge);
int weight_of_edges(const CanonicalEmbedding& ce, std::span<const EdgeId> base_edges);
int weight_of_face(const CanonicalEmbedding& ce, const Face& face);
int weight_of_vertices(const CanonicalEmbedding& ce, std::span<const VertexId> x);  // |X cap R|

struct FaceClassification {
  std::vector<Face> faces;                    // faces of G' by id
  int outer = -1;                             // index of C'
  std::vector<int> boundary;                  // F1, by first appearance along C'
  std::vector<int> internal;                  // F2
  std::vector<std::uint8_t> bridge;           // per face
  std::vector<int> slot_face;                 // face across each slot of C'
  std::vector<std::vector<int>> slots_of;     // per face, the slots on it
  std::vector<std::pair<int, int>> crosscap;  // F0: region between chords i and i+1
};

FaceClassification classify_faces(const CanonicalEmbedding& ce);
int bridge_face_count(const CanonicalEmbedding& ce);

// Faces of G+ (G without its chords), by id.
std::vector<Face> positive_faces(const CanonicalEmbedding& ce);

}  // namespace frustra
