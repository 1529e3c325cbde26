#pragma once

#include <json.hpp>
#include <string>

#include "frustra/criticality.hpp"
#include "frustra/enumeration.hpp"
#include "frustra/frustration.hpp"

namespace frustra {

using Json = nlohmann::ordered_json;

// {"vertices":[...],"edges":[{"id":0,"u":0,"v":1,"sign":"-"},...]}
Json graph_to_json(const SignedMultigraph& g);
// Throws GraphError on duplicate ids, dangling endpoints or bad signs.
SignedMultigraph graph_from_json(const Json& j);

// Base graph plus "k", "rotation" (vertex -> [[edge, side], ...]), "boundary"
// (base edge ids along the facial walk of C'), "insertions" (base edge id ->
// inserted vertex ids in walk order; key "circle" for a vertex-free circle)
// and the assembled "graph", which is checked on import.
Json embedding_to_json(const CanonicalEmbedding& ce);
CanonicalEmbedding embedding_from_json(const Json& j);

Json report_to_json(const VerifierReport& r);
Json criticality_to_json(const CriticalityReport& r);
Json prime_to_json(const PrimeReport& r);
Json bounds_to_json(const BoundReport& b);
Json catalog_to_json(const Catalog& c);
// Entries only (graph, embedding, key, weights, reports); statistics are not read back.
Catalog catalog_from_json(const Json& j);

// Negative edges dashed; with an embedding, the boundary circuit is bold.
std::string to_dot(const SignedMultigraph& g);
std::string to_dot(const CanonicalEmbedding& ce);

}  // namespace frustra
