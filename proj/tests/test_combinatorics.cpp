#include <doctest.h>

#include <functional>
#include <numeric>
#include <set>

#include "frustra/combinatorics.hpp"
#include "frustra/signed_graph.hpp"

using namespace frustra;

namespace {

std::vector<std::vector<int>> parts_of(int n) {
  std::vector<std::vector<int>> out;
  const std::vector<int> allowed{1, 2};
  for (const auto& c : enumerate_cyclic_compositions(n, allowed)) out.push_back(c.parts);
  return out;
}

// Independent oracle: every composition, grouped by rotation class.
std::size_t brute_classes(int n) {
  std::set<std::vector<int>> classes;
  std::vector<int> cur;
  std::function<void(int)> grow = [&](int left) {
    if (left == 0) {
      classes.insert(least_rotation(cur));
      return;
    }
    for (int p : {1, 2})
      if (p <= left) {
        cur.push_back(p);
        grow(left - p);
        cur.pop_back();
      }
  };
  grow(n);
  return classes.size();
}

}  // namespace

TEST_CASE("totient") {
  CHECK(totient(1) == 1);
  CHECK(totient(6) == 2);
  CHECK(totient(7) == 6);
  CHECK(totient(36) == 12);
  CHECK_THROWS(totient(0));
}

TEST_CASE("cyclic compositions") {
  CHECK(parts_of(1) == std::vector<std::vector<int>>{{1}});
  CHECK(parts_of(3) == std::vector<std::vector<int>>{{1, 1, 1}, {1, 2}});
  CHECK(parts_of(4) == std::vector<std::vector<int>>{{1, 1, 1, 1}, {1, 1, 2}, {2, 2}});
  const std::vector<int> three{3};
  CHECK(enumerate_cyclic_compositions(9, three).size() == 1);
  CHECK(enumerate_cyclic_compositions(8, three).empty());
}

TEST_CASE("closed form") {
  CHECK(count_cyclic_compositions_closed_form(1) == 1);
  CHECK(count_cyclic_compositions_closed_form(3) == 2);
  CHECK(count_cyclic_compositions_closed_form(4) == 3);
  const auto series = cyclic_composition_series(14);
  const std::vector<int> allowed{1, 2};
  for (int n = 1; n <= 14; ++n) {
    const auto c = count_cyclic_compositions_closed_form(n);
    CHECK(static_cast<std::size_t>(c) == enumerate_cyclic_compositions(n, allowed).size());
    CHECK(static_cast<std::size_t>(c) == brute_classes(n));
    CHECK(series[n].denominator() == 1);
    CHECK(series[n].numerator() == c);
  }
}

TEST_CASE("bounds") {
  CHECK(bounds(4).M == 48);
  CHECK(bounds(4).edge_bound == 183);
  CHECK(bounds(5).M == 3072);
  CHECK(bounds(5).edge_bound == 12279);
  CHECK_THROWS_AS(bounds(3), std::invalid_argument);
}

TEST_CASE("admissible weight sequences") {
  CHECK_FALSE(admissible_weight_sequence(std::vector<int>{2, 2, 1, 1, 1, 1}, 4));
  CHECK_FALSE(admissible_weight_sequence(std::vector<int>{2, 0, 0, 2, 1, 2, 1}, 4));
  CHECK(admissible_weight_sequence(std::vector<int>{2, 0, 2, 0, 2, 0, 2, 0}, 4));
  CHECK(admissible_weight_sequence(std::vector<int>{1, 0, 0, 0, 1, 2, 1, 2, 1, 2}, 5));
  CHECK_FALSE(admissible_weight_sequence(std::vector<int>{1, 0, 0, 0, 0, 1, 2, 1, 2, 1, 2}, 5));

  const auto seqs = admissible_weight_sequences(4);
  CHECK(seqs.size() == 321);
  std::set<std::vector<int>> classes;
  std::set<std::vector<int>> nonzero_classes;
  for (const auto& s : seqs) {
    CHECK(admissible_weight_sequence(s, 4));
    CHECK(least_rotation(s) == s);
    classes.insert(s);
    std::vector<int> nz;
    for (int x : s)
      if (x) nz.push_back(x);
    CHECK(std::accumulate(nz.begin(), nz.end(), 0) == 8);
    nonzero_classes.insert(least_rotation(nz));
  }
  CHECK(classes.size() == seqs.size());
  // Nonzero parts give cyclic compositions of 8 into 1s and 2s (no 2,2 neighbours).
  for (const auto& nz : nonzero_classes) {
    const auto all = parts_of(8);
    CHECK(std::find(all.begin(), all.end(), nz) != all.end());
  }
}

TEST_CASE("admissible sequences for k = 5 are rotation classes") {
  std::int64_t count = 0;
  bool ok = true;
  for_each_admissible_weight_sequence(5, [&](std::span<const int> s) {
    ++count;
    if (count % 997 == 0) ok = ok && admissible_weight_sequence(s, 5) && least_rotation(s) == std::vector<int>(s.begin(), s.end());
  });
  CHECK(ok);
  CHECK(count == count_admissible_weight_sequences(5));
}
