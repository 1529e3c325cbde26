#include <doctest.h>

#include "frustra/criticality.hpp"
#include "support.hpp"

using namespace frustra;
using namespace frustra::testing;

namespace {

// Replace edge e by a path u-w-v: one piece positive, the other keeps e's sign.
SignedMultigraph subdivide(const SignedMultigraph& g, EdgeId id) {
  const SignedEdge e = g.edge(id);
  SignedMultigraph h = g.without_edge(id);
  const VertexId w = h.add_vertex();
  h.add_edge(e.u, w, Sign::Positive);
  h.add_edge(w, e.v, e.sign);
  return h;
}

}  // namespace

TEST_CASE("criticality examples") {
  const auto c3 = is_critical(cycle(3, {0}));
  CHECK(c3.is_critical);
  CHECK(c3.k == 1);
  const auto r = is_critical(k4());
  CHECK(r.is_critical);
  CHECK(r.k == 2);
  CHECK((r.char1 && r.char2 && r.char3));
  CHECK_FALSE(is_critical(cycle(4)).is_critical);
  const auto tail = [] {
    auto g = k4();
    g.add_vertex(4);
    g.add_edge(0, 4, P);
    return g;
  }();
  const auto t = is_critical(tail);
  CHECK_FALSE(t.is_critical);
  CHECK(t.failing_edge.has_value());
}

TEST_CASE("decomposability examples") {
  const auto two = disjoint_union(cycle(3, {0}), cycle(3, {0}));
  const auto w = is_decomposable(two);
  REQUIRE(w.has_value());
  CHECK(w->part_indices == std::vector<int>{1, 1});
  CHECK_FALSE(is_decomposable(k4()).has_value());
  CHECK_FALSE(is_decomposable(negative_loop()).has_value());
}

TEST_CASE("subdivision reduction examples") {
  const auto c4 = reduce_subdivision(cycle(4, {0}));
  CHECK(c4.vertex_count() == 1);
  CHECK(c4.edge_count() == 1);
  CHECK(c4.negative_count() == 1);
  CHECK(reduce_subdivision(k4()) == k4());
  const auto sub = subdivide(subdivide(k4(), 0), 6);
  CHECK(frustration_value(sub) == 2);
  CHECK(canonical_key(reduce_subdivision(sub)) == canonical_key(k4()));
}

TEST_CASE("edge-disjoint negative cycles") {
  CHECK(has_edge_disjoint_negative_cycle_pair(disjoint_union(cycle(3, {0}), cycle(3, {1}))));
  CHECK_FALSE(has_edge_disjoint_negative_cycle_pair(k4()));
  CHECK_FALSE(has_edge_disjoint_negative_cycle_pair(complete(5, P)));
}

TEST_CASE("primality examples") {
  const auto loop = prime_report(negative_loop());
  CHECK(loop.is_prime);
  CHECK(loop.criticality.k == 1);
  const auto k = prime_report(k4());
  CHECK(k.is_prime);
  CHECK(k.criticality.k == 2);
  CHECK_FALSE(is_prime(disjoint_union(cycle(3, {0}), cycle(3, {0}))));
  CHECK_FALSE(is_prime(cycle(3, {0})));  // reducible to the loop
}

TEST_CASE("critical subgraphs of a prime graph are indecomposable") {
  CHECK(audit_critical_subgraphs(k4()).indecomposable_everywhere());
  CHECK(audit_critical_subgraphs(k4()).critical_subgraphs > 0);
}

TEST_CASE("property: characterisations agree") {
  Rng rng(41);
  int critical = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto g = random_signed_graph(rng, n, n + static_cast<int>(rng() % 5), true, true);
    const auto r = is_critical(g);
    if (r.k == 0) continue;
    CHECK(r.char1 == r.char2);
    CHECK(r.char2 == r.char3);
    critical += r.is_critical;
  }
  CHECK(critical > 0);
}

TEST_CASE("property: subdivision keeps index, criticality and decomposability") {
  Rng rng(43);
  for (int t = 0; t < 60; ++t) {
    const auto g = random_signed_graph(rng, 5, 7, true, true);
    const EdgeId e = g.edges()[rng() % g.edge_count()].id;
    const auto h = subdivide(g, e);
    CHECK(frustration_value(g) == frustration_value(h));
    CHECK(is_critical(g).is_critical == is_critical(h).is_critical);
    CHECK(is_decomposable(g).has_value() == is_decomposable(h).has_value());
  }
}

TEST_CASE("property: primes carry no mixed parallel pair or stray negative loop") {
  Rng rng(47);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_signed_graph(rng, 4, 6 + static_cast<int>(rng() % 3), true, true);
    if (!is_prime(g)) continue;
    if (g.edge_count() > 1)
      for (const SignedEdge& e : g.edges()) CHECK_FALSE((e.is_loop() && e.is_negative()));
    for (const SignedEdge& a : g.edges())
      for (const SignedEdge& b : g.edges())
        if (a.id < b.id && std::minmax(a.u, a.v) == std::minmax(b.u, b.v)) CHECK(a.sign == b.sign);
  }
}

TEST_CASE("property: reduction of subdivided critical graphs is confluent") {
  Rng rng(53);
  int tried = 0;
  for (int attempt = 0; attempt < 2000 && tried < 40; ++attempt) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const auto base = random_signed_graph(rng, n, n + 1 + static_cast<int>(rng() % 3), false, true);
    if (!is_critical(base).is_critical) continue;
    ++tried;
    auto g = base;
    for (int s = 0; s < 3; ++s) g = subdivide(g, g.edges()[rng() % g.edge_count()].id);
    const auto expect = canonical_key(reduce_subdivision(g));
    // Contract in a random order instead of lowest id first.
    SignedMultigraph h = g;
    while (true) {
      const auto c = contractible_vertices(h);
      if (c.empty()) break;
      h = contract_vertex(h, c[rng() % c.size()]).graph;
    }
    CHECK(canonical_key(h) == expect);
    CHECK(canonical_key(reduce_subdivision(base)) == expect);
  }
  CHECK(tried >= 20);
}
