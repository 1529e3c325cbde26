#pragma once

#include <optional>
#include <vector>

#include "frustra/frustration.hpp"
#include "frustra/signed_graph.hpp"

namespace frustra {

struct CriticalityOptions {
  int max_vertices = 24;
  Kernel kernel = Kernel::Parallel;
  int jobs = 0;
};

struct CriticalityReport {
  int k = 0;
  bool is_critical = false;
  bool char1 = false;  // every single-edge deletion drops the index to k - 1
  bool char2 = false;  // every edge is negative in some minimum signature
  bool char3 = false;  // in a minimum signature every positive edge lies in an equilibrated cut
  std::optional<EdgeId> failing_edge;
};

// Evaluates all three characterisations; is_critical follows the deletion test.
// A graph without edges, or with index 0, is never critical.
CriticalityReport is_critical(const SignedMultigraph& g, const CriticalityOptions& options = {});

struct DecompositionWitness {
  std::vector<std::vector<EdgeId>> parts;
  std::vector<int> part_indices;
};

// Partition of E(G) into t >= 2 critically k_i-frustrated parts with sum k_i = k.
// Exhaustive; refuses graphs with more than max_edges edges.
std::optional<DecompositionWitness> is_decomposable(const SignedMultigraph& g, int max_edges = 20,
                                                    const CriticalityOptions& options = {});

// Vertices that undo a subdivision step: all incident edges go to two parallel
// classes of equal size t, one all positive and the other of one sign. Both
// classes may end at the same neighbour, which undoes the subdivision of a loop.
std::vector<VertexId> contractible_vertices(const SignedMultigraph& g);

struct Contraction {
  SignedMultigraph graph;
  int multiplicity = 1;  // t
};

Contraction contract_vertex(const SignedMultigraph& g, VertexId w);

struct ReductionTrace {
  SignedMultigraph graph;
  int steps = 0;
  int multi_edge_steps = 0;  // contractions with t > 1, flagged for inspection
};

// Contract until no vertex is contractible; lowest vertex id first.
SignedMultigraph reduce_subdivision(const SignedMultigraph& g);
ReductionTrace reduce_subdivision_traced(const SignedMultigraph& g);

bool has_edge_disjoint_negative_cycle_pair(const SignedMultigraph& g);

struct PrimeReport {
  CriticalityReport criticality;
  bool irreducible = false;
  bool disjoint_negative_cycles = false;
  bool is_prime = false;
};

PrimeReport prime_report(const SignedMultigraph& g, const CriticalityOptions& options = {});
bool is_prime(const SignedMultigraph& g, const CriticalityOptions& options = {});

// Cross-check of the decomposition view of primality: every critical edge
// subgraph should be indecomposable. Lists the critical subgraphs that decompose.
struct CriticalSubgraphAudit {
  int critical_subgraphs = 0;
  std::vector<std::vector<EdgeId>> decomposable;
  bool indecomposable_everywhere() const noexcept { return decomposable.empty(); }
};

CriticalSubgraphAudit audit_critical_subgraphs(const SignedMultigraph& g, int max_edges = 14);

}  // namespace frustra
