#include <doctest.h>

#include <sstream>

#include "frustra/criticality.hpp"
#include "frustra/enumeration.hpp"
#include "frustra/frustration.hpp"
#include "support.hpp"

using namespace frustra;
using namespace frustra::testing;

namespace {

bool simple(const SignedMultigraph& g) {
  std::set<std::pair<int, int>> seen;
  for (const SignedEdge& e : g.edges())
    if (e.is_loop() || !seen.insert(std::minmax(e.u, e.v)).second) return false;
  return true;
}

SignedMultigraph relabel(const SignedMultigraph& g, Rng& rng) {
  std::vector<VertexId> perm(g.vertices());
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<VertexId, VertexId> to;
  for (std::size_t i = 0; i < perm.size(); ++i) to[g.vertices()[i]] = perm[i] + 100;
  SignedMultigraph h;
  for (VertexId v : g.vertices()) h.add_vertex(to[v]);
  std::vector<SignedEdge> es = g.edges();
  std::shuffle(es.begin(), es.end(), rng);
  for (const SignedEdge& e : es) h.add_edge(to[e.v], to[e.u], e.sign);
  return h;
}

}  // namespace

TEST_CASE("plane cubic generation") {
  const auto maps = generate_plane_cubic(6);
  int n2 = 0;
  std::vector<std::string> simple4;
  std::vector<std::string> simple6;
  for (const auto& m : maps) {
    const auto pe = to_plane_embedding(m);
    if (pe.graph.vertex_count() == 2) ++n2;
    if (!simple(pe.graph)) continue;
    (pe.graph.vertex_count() == 4 ? simple4 : simple6).push_back(canonical_key(pe.graph));
  }
  CHECK(n2 == 1);
  CHECK(simple4 == std::vector<std::string>{canonical_key(k4(P))});
  CHECK(simple6 == std::vector<std::string>{canonical_key(prism())});
  int k4_faces = 0;
  for (const auto& rb : generate_bases(4))
    if (simple(rb.base.graph)) ++k4_faces;
  CHECK(k4_faces == 1);
}

TEST_CASE("property: generator agrees with brute force") {
  const auto maps = generate_plane_cubic(6);
  for (int n = 2; n <= 6; n += 2) {
    std::vector<std::vector<int>> codes;
    for (const auto& m : maps)
      if (m.vertex_count() == n) codes.push_back(map_code(m));
    std::sort(codes.begin(), codes.end());
    CHECK(codes == brute_force_plane_cubic_codes(n));
  }
}

TEST_CASE("bases file") {
  std::istringstream in("4 6; 0 1; 0 2; 0 3; 1 2; 1 3; 2 3; F: 0 1 3\n");
  const auto bases = read_bases(in);
  REQUIRE(bases.size() == 1);
  const auto generated = generate_bases(4);
  CHECK(std::any_of(generated.begin(), generated.end(), [&](const RootedBase& rb) { return rb.code == bases[0].code; }));
  std::istringstream bad("4 6; 0 1; 0 2; 0 3; 1 2; 1 3; 2 9; F: 0 1 3\n");
  CHECK_THROWS_AS(read_bases(bad), GraphError);
}

TEST_CASE("canonical key") {
  Rng rng(61);
  CHECK(canonical_key(cycle(3, {0})) != canonical_key(cycle(3)));
  CHECK(canonical_key(k4()) == canonical_key(switch_at(k4(), std::vector<VertexId>{1})));
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto g = random_signed_graph(rng, n, n + static_cast<int>(rng() % 7), true, true);
    const auto key = canonical_key(g);
    CHECK(canonical_key(switch_at(g, random_subset(rng, g))) == key);
    CHECK(canonical_key(relabel(g, rng)) == key);
    const auto& e = g.edges()[rng() % g.edge_count()];
    const auto h = g.with_sign(e.id, flipped(e.sign));
    if (switching_equivalent(g, h)) CHECK(canonical_key(h) == key);
    if (canonical_key(h) == key) CHECK(frustration_value(h) == frustration_value(g));
  }
}

TEST_CASE("essential 4-edge-connectivity") {
  CHECK(essentially_4_edge_connected(k4(P)));
  CHECK_FALSE(essentially_4_edge_connected(prism()));
  CHECK(essentially_4_edge_connected(cube()));
  CHECK(essentially_4_edge_connected(petersen()));
  Rng rng(67);
  for (int t = 0; t < 150; ++t) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const auto g = t % 2 ? random_cubic(rng, 2 * (n / 2), P) : random_signed_graph(rng, n, n + static_cast<int>(rng() % 10), true, true);
    CHECK(essentially_4_edge_connected(g) == essentially_4_edge_connected_brute(g));
  }
}

TEST_CASE("rediscovery of small catalogs") {
  EnumerationOptions o;
  o.max_base = 6;
  o.k = 1;
  const auto c1 = enumerate_prime(o);
  REQUIRE(c1.entries.size() == 1);
  CHECK(c1.entries[0].key == canonical_key(negative_loop()));
  CHECK(c1.complete);
  o.k = 2;
  const auto c2 = enumerate_prime(o);
  REQUIRE(c2.entries.size() == 1);
  CHECK(c2.entries[0].key == canonical_key(k4()));
  o.k = 3;
  const auto c3 = enumerate_prime(o);
  REQUIRE(c3.entries.size() == 2);
  CHECK(c3.entries[0].graph.vertex_count() == 10);
  CHECK(canonical_key(c3.entries[0].graph.all_positive()) == canonical_key(petersen()));
  CHECK(c3.entries[1].graph.vertex_count() == 12);
  CHECK(c3.complete);
  for (const auto& e : c3.entries) {
    CHECK(frustration_value(e.graph) == 3);
    CHECK(is_prime(e.graph));
  }
}

TEST_CASE("pruning is sound and results do not depend on worker count") {
  EnumerationOptions o;
  o.k = 3;
  o.max_base = 6;
  o.run_verifiers = false;
  o.jobs = 1;
  const auto a = enumerate_prime(o);
  o.jobs = 4;
  const auto b = enumerate_prime(o);
  o.prune = false;
  const auto c = enumerate_prime(o);
  auto keys = [](const Catalog& cat) {
    std::vector<std::string> out;
    for (const auto& e : cat.entries) out.push_back(e.key);
    return out;
  };
  CHECK(keys(a) == keys(b));
  CHECK(keys(a) == keys(c));
  CHECK(c.stats.weightings > a.stats.weightings);
}

TEST_CASE("bases from a file drive the search") {
  std::istringstream in("4 6; 0 1; 0 2; 0 3; 1 2; 1 3; 2 3; F: 0 1 3\n");
  EnumerationOptions o;
  o.k = 3;
  o.max_base = 4;
  o.bases = read_bases(in);
  const auto cat = enumerate_prime(o);
  REQUIRE(cat.entries.size() == 1);
  CHECK(cat.entries[0].graph.vertex_count() == 10);
}

TEST_CASE("k = 4 runs are marked incomplete") {
  EnumerationOptions o;
  o.k = 4;
  o.max_base = 6;
  const auto cat = enumerate_prime(o);
  CHECK_FALSE(cat.complete);
  CHECK_FALSE(cat.notes.empty());
  REQUIRE(cat.bounds.has_value());
  CHECK(cat.bounds->M == 48);
  CHECK(cat.admissible_sequences.value() == 321);
}
