#include <doctest.h>

#include "frustra/frustration.hpp"
#include "support.hpp"

using namespace frustra;
using namespace frustra::testing;

TEST_CASE("frustration index examples") {
  CHECK(frustration_index(k4()).index == 2);
  CHECK(frustration_index(complete(5, P)).index == 0);
  CHECK(frustration_index(switch_at(complete(5, P), std::vector<VertexId>{1, 3})).index == 0);
  CHECK(frustration_index(cycle(5, {0, 1, 2, 3, 4})).index == 1);
  CHECK(frustration_index(negative_loop()).index == 1);
  CHECK(frustration_index(SignedMultigraph{}).index == 0);
}

TEST_CASE("max cut examples") {
  CHECK(max_cut(cycle(4)) == 4);
  CHECK(max_cut(cycle(5)) == 4);
  CHECK(max_cut(k4()) == 4);
}

TEST_CASE("minimum signature examples") {
  CHECK(is_minimum_signature(complete(4, P)));
  CHECK_FALSE(is_minimum_signature(cycle(3, {0, 1, 2})));
  CHECK(is_minimum_signature(cycle(3, {1})));
  for (const auto& s : frustration_index(k4()).minimum_signatures) CHECK(is_minimum_signature(s));
}

TEST_CASE("size limit") {
  Rng rng(5);
  const auto g = random_signed_graph(rng, 30, 40);
  CHECK_THROWS_AS(frustration_value(g, 24), SizeLimitError);
}

TEST_CASE("serial and parallel kernels agree") {
  Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    const auto g = random_signed_graph(rng, 10, 18, true, true);
    const CompactGraph cg(g);
    const auto free = kernels::free_vertices(cg);
    const auto a = kernels::switching_scan_serial(cg, free, true, 1 << 20);
    for (int jobs : {1, 2, 4}) {
      const auto b = kernels::switching_scan_parallel(cg, free, true, 1 << 20, jobs);
      CHECK(a.min_negative == b.min_negative);
      CHECK(a.argmin_masks == b.argmin_masks);
    }
  }
}

TEST_CASE("property: switching search equals deletion oracle") {
  Rng rng(23);
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto g = random_signed_graph(rng, n, n + static_cast<int>(rng() % 6), true, true);
    CHECK(frustration_value(g, 24, Kernel::Serial) == deletion_frustration(g).index);
  }
}

TEST_CASE("property: minimum signatures have no cut with b > a") {
  Rng rng(29);
  for (int t = 0; t < 40; ++t) {
    const auto g = random_signed_graph(rng, 6, 9, false, true);
    const auto r = frustration_index(g);
    for (const auto& s : r.minimum_signatures) {
      CHECK(s.negative_count() == r.index);
      CHECK(switching_equivalent(s, g));
      for (std::uint32_t mask = 1; mask + 1 < (1u << 6); ++mask) {
        std::vector<VertexId> x;
        for (int v = 0; v < 6; ++v)
          if (mask >> v & 1) x.push_back(v);
        const auto c = cut_of(s, x);
        CHECK(c.positive_count >= c.negative_count);
      }
    }
  }
}

TEST_CASE("property: all-negative index is |E| - mc") {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    const auto g = random_signed_graph(rng, 8, 8 + static_cast<int>(rng() % 10), false, true).all_negative();
    CHECK(frustration_value(g) == g.edge_count() - max_cut(g));
  }
}

TEST_CASE("property: monotone under deletion") {
  Rng rng(37);
  for (int t = 0; t < 40; ++t) {
    const auto g = random_signed_graph(rng, 7, 12, true, true);
    const auto r = frustration_index(g);
    for (const SignedEdge& e : g.edges()) CHECK(frustration_value(g.without_edge(e.id)) <= r.index);
    const auto& ms = r.minimum_signatures.front();
    for (EdgeId e : ms.negative_edges()) {
      const int d = r.index - frustration_value(ms.without_edge(e));
      CHECK((d == 0 || d == 1));
    }
  }
}
