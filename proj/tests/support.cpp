#include "support.hpp"

#include "frustra/enumeration.hpp"
#include "frustra/verifiers.hpp"

namespace frustra::testing {

std::vector<CanonicalEmbedding> synthetic_bridge_embeddings(int limit, int max_base) {
  std::vector<CanonicalEmbedding> out;
  const auto bases = generate_bases(max_base);
  for (int k : {4, 3})
    for (const RootedBase& rb : bases)
      for (const auto& w : candidate_weightings(rb, k, false)) {
        const auto ce = make_canonical(rb.base, rb.walk, w, k);
        if (bridge_face_count(ce) != 0) continue;
        for (int s = 0; s < static_cast<int>(ce.boundary.size()); ++s) {
          if (ce.boundary[s].weight() != 2) continue;
          auto sw = switch_slot_pair(ce, s);
          if (!sw || bridge_face_count(*sw) == 0 || !verify_bridge_structure(*sw).passed) continue;
          out.push_back(std::move(*sw));
          if (static_cast<int>(out.size()) >= limit) return out;
        }
      }
  return out;
}

}  // namespace frustra::testing
