#include "frustra/criticality.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <unordered_map>

#include "frustra/compact_graph.hpp"

namespace frustra {

namespace {

EdgeMask cover_equilibrated_positive(const SignedMultigraph& g, int max_vertices) {
  const CompactGraph cg(g);
  if (cg.n > max_vertices || cg.n > 40)
    throw SizeLimitError("equilibrated cut scan limited to " + std::to_string(std::min(max_vertices, 40)) +
                         " vertices");
  if (cg.m > kMaxMaskEdges) throw SizeLimitError("equilibrated cut scan limited to 128 edges");
  EdgeMask covered;
  if (cg.n < 2) return covered;
  // Gray walk over subsets of vertices 1..n-1 tracking the cut and its sign counts.
  std::vector<std::uint8_t> in(cg.n, 0);
  EdgeMask cut;
  int a = 0;
  int b = 0;
  const std::uint64_t total = std::uint64_t{1} << (cg.n - 1);
  for (std::uint64_t i = 1; i < total; ++i) {
    const int v = 1 + std::countr_zero(i);
    for (int e : cg.incident[v]) {
      const bool was_cut = cut[e];
      cut.flip(e);
      const int delta = was_cut ? -1 : 1;
      (cg.negative[e] ? b : a) += delta;
    }
    in[v] ^= 1;
    if (a == b && a > 0) covered |= cut;
  }
  return covered;
}

}  // namespace

CriticalityReport is_critical(const SignedMultigraph& g, const CriticalityOptions& options) {
  FrustrationOptions fo;
  fo.max_vertices = options.max_vertices;
  fo.kernel = options.kernel;
  fo.jobs = options.jobs;
  fo.cross_check = false;
  fo.list_signatures = true;
  const FrustrationResult base = frustration_index(g, fo);

  CriticalityReport report;
  report.k = base.index;
  if (g.edge_count() == 0 || base.index == 0) {
    if (g.edge_count() > 0) report.failing_edge = g.edges().front().id;
    return report;
  }

  report.char1 = true;
  for (const SignedEdge& e : g.edges()) {
    const int reduced = frustration_value(g.without_edge(e.id), options.max_vertices, options.kernel, options.jobs);
    if (reduced != base.index - 1) {
      report.char1 = false;
      report.failing_edge = e.id;
      break;
    }
  }

  std::vector<std::uint8_t> ever_negative(g.edge_count(), 0);
  for (const SignedMultigraph& s : base.minimum_signatures)
    for (int i = 0; i < s.edge_count(); ++i)
      if (s.edges()[i].is_negative()) ever_negative[i] = 1;
  report.char2 = std::all_of(ever_negative.begin(), ever_negative.end(), [](auto x) { return x != 0; });

  const SignedMultigraph& fixed = base.minimum_signatures.front();
  const EdgeMask covered = cover_equilibrated_positive(fixed, options.max_vertices);
  report.char3 = true;
  for (int i = 0; i < fixed.edge_count(); ++i) {
    if (!fixed.edges()[i].is_negative() && !covered[i]) {
      report.char3 = false;
      break;
    }
  }

  report.is_critical = report.char1;
  return report;
}

namespace {

struct PartInfo {
  bool critical = false;
  int k = 0;
};

class Decomposer {
 public:
  Decomposer(const SignedMultigraph& g, const CriticalityOptions& options) : g_(g), options_(options) {
    const CompactGraph cg(g);
    eu_ = cg.eu;
    ev_ = cg.ev;
    n_ = cg.n;
  }

  std::optional<DecompositionWitness> run(int k) {
    const std::uint64_t all = (g_.edge_count() == 64) ? ~std::uint64_t{0}
                                                      : (std::uint64_t{1} << g_.edge_count()) - 1;
    std::vector<std::uint64_t> parts;
    std::vector<int> ks;
    if (!search(all, k, true, parts, ks)) return std::nullopt;
    DecompositionWitness w;
    for (std::uint64_t p : parts) w.parts.push_back(ids(p));
    w.part_indices = ks;
    return w;
  }

 private:
  std::vector<EdgeId> ids(std::uint64_t mask) const {
    std::vector<EdgeId> out;
    for (std::uint64_t f = mask; f; f &= f - 1) out.push_back(g_.edges()[std::countr_zero(f)].id);
    return out;
  }

  // Every edge of a critical part lies on a cycle of the part, so every vertex
  // it touches has degree at least 2 there.
  bool min_degree_two(std::uint64_t mask) const {
    std::vector<int> deg(n_, 0);
    for (std::uint64_t f = mask; f; f &= f - 1) {
      const int e = std::countr_zero(f);
      ++deg[eu_[e]];
      ++deg[ev_[e]];
    }
    return std::none_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
  }

  PartInfo info(std::uint64_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const auto sub = g_.edge_induced(ids(mask));
    const auto report = is_critical(sub, options_);
    PartInfo pi{report.is_critical, report.k};
    memo_.emplace(mask, pi);
    return pi;
  }

  bool search(std::uint64_t remaining, int target, bool top, std::vector<std::uint64_t>& parts,
              std::vector<int>& ks) {
    const std::uint64_t low = remaining & (~remaining + 1);
    const std::uint64_t rest = remaining & ~low;
    std::vector<std::uint64_t> candidates;
    // Subsets of `rest`, each joined with the lowest edge.
    for (std::uint64_t s = rest;; s = (s - 1) & rest) {
      const std::uint64_t part = s | low;
      if (!(top && part == remaining)) candidates.push_back(part);
      if (s == 0) break;
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](std::uint64_t a, std::uint64_t b) {
      return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b);
    });
    for (std::uint64_t part : candidates) {
      const std::uint64_t remainder = remaining & ~part;
      if (!min_degree_two(part) || !min_degree_two(remainder)) continue;
      const PartInfo pi = info(part);
      if (!pi.critical || pi.k < 1 || pi.k > target) continue;
      if (remainder == 0) {
        if (pi.k != target) continue;
        parts.push_back(part);
        ks.push_back(pi.k);
        return true;
      }
      if (pi.k == target) continue;
      parts.push_back(part);
      ks.push_back(pi.k);
      if (search(remainder, target - pi.k, false, parts, ks)) return true;
      parts.pop_back();
      ks.pop_back();
    }
    return false;
  }

  const SignedMultigraph& g_;
  CriticalityOptions options_;
  std::vector<int> eu_;
  std::vector<int> ev_;
  int n_ = 0;
  std::unordered_map<std::uint64_t, PartInfo> memo_;
};

struct ParallelClass {
  VertexId other;
  int positive = 0;
  int negative = 0;
  int size() const { return positive + negative; }
};

// Incident edges of w grouped by far endpoint; nullopt if w carries a loop.
std::optional<std::vector<ParallelClass>> classes_at(const SignedMultigraph& g, VertexId w) {
  std::map<VertexId, ParallelClass> by_other;
  for (const SignedEdge& e : g.edges()) {
    if (e.u != w && e.v != w) continue;
    if (e.is_loop()) return std::nullopt;
    const VertexId x = e.other(w);
    auto& c = by_other.try_emplace(x, ParallelClass{x}).first->second;
    (e.is_negative() ? c.negative : c.positive)++;
  }
  std::vector<ParallelClass> out;
  for (auto& [x, c] : by_other) out.push_back(c);
  return out;
}

struct ContractionPlan {
  VertexId x = 0;
  VertexId y = 0;
  int t = 0;
  Sign sign = Sign::Positive;
};

std::optional<ContractionPlan> plan_at(const SignedMultigraph& g, VertexId w) {
  const auto classes = classes_at(g, w);
  if (!classes) return std::nullopt;
  if (classes->size() == 1) {
    // Subdivided loop: 2t parallel edges to one neighbour, t of them positive
    // and the other t of one sign.
    const ParallelClass& c = classes->front();
    if (c.size() < 2 || c.size() % 2 != 0) return std::nullopt;
    const int t = c.size() / 2;
    if (c.negative == 0) return ContractionPlan{c.other, c.other, t, Sign::Positive};
    if (c.negative == t) return ContractionPlan{c.other, c.other, t, Sign::Negative};
    return std::nullopt;
  }
  if (classes->size() != 2) return std::nullopt;
  const ParallelClass& a = (*classes)[0];
  const ParallelClass& b = (*classes)[1];
  if (a.size() != b.size()) return std::nullopt;
  const int t = a.size();
  const bool a_pos = a.negative == 0;
  const bool b_pos = b.negative == 0;
  const bool a_uniform = a_pos || a.positive == 0;
  const bool b_uniform = b_pos || b.positive == 0;
  if (a_pos && b_uniform) return ContractionPlan{a.other, b.other, t, b_pos ? Sign::Positive : Sign::Negative};
  if (b_pos && a_uniform) return ContractionPlan{a.other, b.other, t, a_pos ? Sign::Positive : Sign::Negative};
  return std::nullopt;
}

}  // namespace

std::optional<DecompositionWitness> is_decomposable(const SignedMultigraph& g, int max_edges,
                                                    const CriticalityOptions& options) {
  if (g.edge_count() > max_edges || g.edge_count() > 62)
    throw SizeLimitError("decomposition search limited to " + std::to_string(std::min(max_edges, 62)) + " edges");
  const int k = frustration_value(g, options.max_vertices, options.kernel, options.jobs);
  if (k < 2) return std::nullopt;  // t >= 2 parts each with index >= 1
  return Decomposer(g, options).run(k);
}

std::vector<VertexId> contractible_vertices(const SignedMultigraph& g) {
  std::vector<VertexId> out;
  for (VertexId w : g.vertices())
    if (plan_at(g, w)) out.push_back(w);
  return out;
}

Contraction contract_vertex(const SignedMultigraph& g, VertexId w) {
  const auto plan = plan_at(g, w);
  if (!plan) throw GraphError("vertex " + std::to_string(w) + " is not contractible");
  Contraction c{g.without_vertex(w), plan->t};
  for (int i = 0; i < plan->t; ++i) c.graph.add_edge(plan->x, plan->y, plan->sign);
  return c;
}

ReductionTrace reduce_subdivision_traced(const SignedMultigraph& g) {
  ReductionTrace trace{g};
  while (true) {
    const auto candidates = contractible_vertices(trace.graph);
    if (candidates.empty()) return trace;
    auto c = contract_vertex(trace.graph, candidates.front());
    trace.graph = std::move(c.graph);
    ++trace.steps;
    if (c.multiplicity > 1) ++trace.multi_edge_steps;
  }
}

SignedMultigraph reduce_subdivision(const SignedMultigraph& g) { return reduce_subdivision_traced(g).graph; }

bool has_edge_disjoint_negative_cycle_pair(const SignedMultigraph& g) {
  const auto cycles = negative_cycles(g);
  std::vector<EdgeMask> masks;
  masks.reserve(cycles.size());
  for (const CycleSubgraph& c : cycles) {
    EdgeMask m;
    for (EdgeId id : c.edge_ids) m.set(g.edge_index(id));
    masks.push_back(m);
  }
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if ((masks[i] & masks[j]).none()) return true;
  return false;
}

PrimeReport prime_report(const SignedMultigraph& g, const CriticalityOptions& options) {
  PrimeReport r;
  r.criticality = is_critical(g, options);
  r.irreducible = contractible_vertices(g).empty();
  r.disjoint_negative_cycles = has_edge_disjoint_negative_cycle_pair(g);
  r.is_prime = r.criticality.is_critical && r.irreducible && !r.disjoint_negative_cycles;
  return r;
}

bool is_prime(const SignedMultigraph& g, const CriticalityOptions& options) {
  // Cheap structural tests first.
  if (!contractible_vertices(g).empty()) return false;
  if (has_edge_disjoint_negative_cycle_pair(g)) return false;
  return is_critical(g, options).is_critical;
}

CriticalSubgraphAudit audit_critical_subgraphs(const SignedMultigraph& g, int max_edges) {
  if (g.edge_count() > max_edges || g.edge_count() > 30)
    throw SizeLimitError("critical subgraph audit limited to " + std::to_string(std::min(max_edges, 30)) + " edges");
  CriticalSubgraphAudit audit;
  const int m = g.edge_count();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<EdgeId> ids;
    for (std::uint64_t f = mask; f; f &= f - 1) ids.push_back(g.edges()[std::countr_zero(f)].id);
    const auto sub = g.edge_induced(ids);
    if (!is_critical(sub).is_critical) continue;
    ++audit.critical_subgraphs;
    if (is_decomposable(sub, max_edges)) audit.decomposable.push_back(ids);
  }
  return audit;
}

}  // namespace frustra
