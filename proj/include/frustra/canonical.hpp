#pragma once

#include <string>

#include "frustra/signed_graph.hpp"

namespace frustra {

// Equal for g1, g2 iff some isomorphism of the underlying multigraphs carries
// the negative cycles of g1 onto those of g2. Ids are ignored.
std::string canonical_key(const SignedMultigraph& g, int max_vertices = 64);

// Every edge cut with at most three edges leaves a single vertex on one side.
// Checks every edge subset of size <= 3.
bool essentially_4_edge_connected(const SignedMultigraph& g);
// Reference version walking all vertex bipartitions.
bool essentially_4_edge_connected_brute(const SignedMultigraph& g);

}  // namespace frustra
