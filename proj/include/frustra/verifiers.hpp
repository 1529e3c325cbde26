#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "frustra/embedding.hpp"

namespace frustra {

// Outcome of checking one structural claim on one instance. When the claim's
// hypothesis on k does not hold the check still runs, but only as a diagnostic.
struct VerifierReport {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::vector<std::string> witnesses;
  std::string note;

  bool ok() const noexcept { return passed || !applicable; }
  void fail(std::string witness) {
    passed = false;
    if (witnesses.size() < 16) witnesses.push_back(std::move(witness));
  }
};

struct SequenceItem {
  bool is_face = false;
  EdgeId edge = 0;  // positive edge of G
  Dart face;        // face of G+ by id
};

struct CutSequence {
  std::vector<SequenceItem> elements;  // e_1 F_1 e_2 ... F_{r-1} e_r
  VertexCut source_cut;
};

// Alternating face/edge sequence of a minimised equilibrated cut. Throws
// GraphError on a non-equilibrated cut; nullopt (with reason) when the
// positive edges do not trace a single curve through the faces of G+.
std::optional<CutSequence> cut_sequence(const CanonicalEmbedding& ce, const VertexCut& cut, std::string* why = nullptr);

VerifierReport verify_embedding_structure(const CanonicalEmbedding& ce);
VerifierReport verify_weight_lemma(const CanonicalEmbedding& ce);
VerifierReport verify_bridge_structure(const CanonicalEmbedding& ce);
VerifierReport verify_small_cuts(const CanonicalEmbedding& ce);
VerifierReport verify_four_cut_property(const SignedMultigraph& g, int k = 4);
VerifierReport verify_zero_runs(const CanonicalEmbedding& ce);
VerifierReport verify_face_adjacency(const CanonicalEmbedding& ce);
// Minimised equilibrated cuts: G'[X'] connected on both sides and a cut sequence exists.
VerifierReport verify_equilibrated_cuts(const CanonicalEmbedding& ce);
// Positive edges of every equilibrated cut form a matching, in every minimum signature.
VerifierReport verify_matching_property(const SignedMultigraph& g, int k = 2);

struct QReport {
  int boundary_faces = 0;                // M = |F1|
  int internal_faces = 0;                // |F2|
  std::vector<std::pair<int, int>> eta;  // per internal face, positions on C_M
  int edges = 0;                         // |E(Q)|
  int max_multiplicity = 0;
  bool planar = true;
  bool cycle_simple = true;
  int edge_bound = 0;                    // 4M - 9
  VerifierReport report;
};

// Picks eta(I) for each internal face I (lexicographically least admissible
// pair, backtracking when a later face is left without one) and checks Q.
QReport build_eta_and_Q(const CanonicalEmbedding& ce);

std::vector<VerifierReport> run_all_verifiers(const CanonicalEmbedding& ce);

struct NormalizationTrace {
  CanonicalEmbedding embedding;
  std::vector<int> bridge_counts;  // before each step, then the final count
};

// Switches away bridge faces one at a time; throws VerificationFailure when a
// bridge face lacks the expected C4 neighbour or the count does not drop.
NormalizationTrace normalize(const CanonicalEmbedding& ce);

// Switch at the two inserted vertices of a weight-2 slot and re-derive.
std::optional<CanonicalEmbedding> switch_slot_pair(const CanonicalEmbedding& ce, int slot, std::string* why = nullptr);

}  // namespace frustra
