#include <doctest.h>

#include "frustra/frustration.hpp"
#include "support.hpp"

using namespace frustra;
using namespace frustra::testing;

namespace {

std::set<EdgeId> cut_set(const SignedMultigraph& g, const std::vector<VertexId>& x) {
  const auto c = cut_of(g, x);
  return {c.cut_edges.begin(), c.cut_edges.end()};
}

std::vector<std::pair<std::vector<EdgeId>, Parity>> cycle_parities(const SignedMultigraph& g) {
  std::vector<std::pair<std::vector<EdgeId>, Parity>> out;
  for (const auto& c : all_cycles(g)) out.emplace_back(c.edge_ids, c.parity);
  return out;
}

}  // namespace

TEST_CASE("switch_at examples") {
  const auto g = cycle(3, {0});  // edges 0:01(-) 1:12 2:20
  CHECK(switch_at(g, {}) == g);
  CHECK(switch_at(switch_at(g, std::vector<VertexId>{1}), std::vector<VertexId>{1}) == g);
  const auto h = switch_at(g, std::vector<VertexId>{0});
  CHECK(h.edge(0).sign == P);
  CHECK(h.edge(1).sign == P);
  CHECK(h.edge(2).sign == N);
}

TEST_CASE("negative cycles") {
  CHECK(negative_cycles(cycle(5)).empty());
  CHECK(negative_cycles(complete(5, P)).empty());
  const auto loop = negative_cycles(negative_loop());
  REQUIRE(loop.size() == 1);
  CHECK(loop[0].edge_ids.size() == 1);
  const auto g = k4();
  CHECK(all_cycles(g).size() == 7);
  const auto neg = negative_cycles(g);
  CHECK(neg.size() == 4);
  for (const auto& c : neg) CHECK(c.edge_ids.size() == 3);
}

TEST_CASE("balance") {
  CHECK(is_balanced(cycle(3)));
  CHECK_FALSE(is_balanced(cycle(3, {1})));
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    auto g = random_signed_graph(rng, 7, 12, true, true, 0.0);
    CHECK(is_balanced(switch_at(g, random_subset(rng, g))));
  }
}

TEST_CASE("switching equivalence examples") {
  Rng rng(3);
  const auto g = random_signed_graph(rng, 6, 10);
  CHECK(switching_equivalent(g, switch_at(g, std::vector<VertexId>{0, 2})));
  CHECK_FALSE(switching_equivalent(cycle(3), cycle(3, {0})));
  CHECK(switching_equivalent(cycle(4, {0, 2}), cycle(4, {1, 3})));
}

TEST_CASE("cut counts") {
  CHECK(cut_of(k4(), std::vector<VertexId>{0}).positive_count == 0);
  CHECK(cut_of(k4(), std::vector<VertexId>{0}).negative_count == 3);
  const auto star = from_pairs(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto c = cut_of(star, std::vector<VertexId>{0});
  CHECK(c.positive_count == 3);
  CHECK(c.negative_count == 0);

  // Negative edges of a minimum signature of (K4,-) form a perfect matching;
  // the ends of any positive edge then see a (2,2)-cut.
  const auto ms = frustration_index(k4()).minimum_signatures.front();
  CHECK(ms.negative_count() == 2);
  int equilibrated = 0;
  for (const SignedEdge& e : ms.edges()) {
    const auto cut = cut_of(ms, std::vector<VertexId>{std::min(e.u, e.v), std::max(e.u, e.v)});
    CHECK(cut.positive_count >= cut.negative_count);
    if (!e.is_negative()) {
      CHECK(cut.positive_count == 2);
      CHECK(cut.negative_count == 2);
      ++equilibrated;
    }
  }
  CHECK(equilibrated == 4);
}

TEST_CASE("equilibrated cuts containing an edge") {
  const auto balanced = complete(4, P);
  for (const SignedEdge& e : balanced.edges()) CHECK(equilibrated_cuts_containing(balanced, e.id).empty());
  const auto ms = frustration_index(k4()).minimum_signatures.front();
  for (const SignedEdge& e : ms.edges())
    if (!e.is_negative()) CHECK_FALSE(equilibrated_cuts_containing(ms, e.id).empty());
  CHECK(equilibrated_cuts_containing(negative_loop(), 0).empty());
  CHECK_THROWS_AS(equilibrated_cuts_containing(k4(), 0), GraphError);
}

TEST_CASE("malformed graphs") {
  SignedMultigraph g;
  g.add_vertex(0);
  CHECK_THROWS_AS(g.add_vertex(0), GraphError);
  CHECK_THROWS_AS(g.add_edge_with_id(0, 0, 5, P), GraphError);
  g.add_vertex(1);
  g.add_edge_with_id(4, 0, 1, P);
  CHECK_THROWS_AS(g.add_edge_with_id(4, 1, 0, N), GraphError);
  CHECK_THROWS_AS(g.edge(3), GraphError);
}

TEST_CASE("property: switching is an involution and keeps cycle parities") {
  Rng rng(101);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto g = random_signed_graph(rng, n, n + static_cast<int>(rng() % 6), true, true);
    const auto x = random_subset(rng, g);
    const auto h = switch_at(g, x);
    CHECK(switch_at(h, x) == g);
    CHECK(cycle_parities(g) == cycle_parities(h));
  }
}

TEST_CASE("property: symmetric difference of cuts is a cut") {
  Rng rng(202);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_signed_graph(rng, 7, 13, false, true);
    auto x = random_subset(rng, g);
    auto y = random_subset(rng, g);
    std::vector<VertexId> xy;
    std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(xy));
    auto proper = [&](const std::vector<VertexId>& s) { return !s.empty() && static_cast<int>(s.size()) < g.vertex_count(); };
    if (!proper(x) || !proper(y) || !proper(xy)) continue;
    const auto a = cut_set(g, x);
    const auto b = cut_set(g, y);
    std::set<EdgeId> ab;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(ab, ab.end()));
    CHECK(ab == cut_set(g, xy));
  }
}

TEST_CASE("property: cut test agrees with negative cycle sets") {
  Rng rng(303);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto g = random_signed_graph(rng, n, n + static_cast<int>(rng() % 5), true, true);
    SignedMultigraph h = switch_at(g, random_subset(rng, g));
    if (rng() % 2) {
      const auto& e = h.edges()[rng() % h.edge_count()];
      h = h.with_sign(e.id, flipped(e.sign));
    }
    CHECK(switching_equivalent(g, h) == same_negative_cycles(g, h));
  }
}
