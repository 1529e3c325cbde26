#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace frustra {

using Rational = boost::rational<long long>;

std::int64_t totient(std::int64_t n);

struct CyclicComposition {
  std::vector<int> parts;  // least rotation
  int n = 0;
};

// One representative per rotation class of compositions of n with parts in allowed.
std::vector<CyclicComposition> enumerate_cyclic_compositions(int n, std::span<const int> allowed);

// Least rotation of a sequence.
std::vector<int> least_rotation(std::span<const int> xs);

// Double sum over divisors d of k and 0 <= j <= (k/d)/2 of
// phi(d) C(k/d - j, j) / (k - d j), in exact rationals. Throws
// InternalInconsistency when the total is not an integer.
std::int64_t count_cyclic_compositions_closed_form(int k);

// Coefficients 0..order of sum_m (phi(m)/m) log(1 / (1 - x^m - x^{2m})).
std::vector<Rational> cyclic_composition_series(int order);

struct BoundReport {
  int k = 0;
  int M = 0;
  int edge_bound = 0;  // 4M - 9
};
BoundReport bounds(int k);  // k in {4, 5}

// Longest allowed run of weight-0 boundary edges for a normal embedding.
int zero_run_limit(int k);

// Cyclic sequence over {0,1,2} summing to 2k with no adjacent 2,2 and zero
// runs within zero_run_limit(k), of length at most bounds(k).M.
bool admissible_weight_sequence(std::span<const int> weights, int k);

// Every rotation class once, each given by its least rotation.
void for_each_admissible_weight_sequence(int k, const std::function<void(std::span<const int>)>& visit);
std::vector<std::vector<int>> admissible_weight_sequences(int k);
std::int64_t count_admissible_weight_sequences(int k);

}  // namespace frustra
