#include "frustra/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "frustra/signed_graph.hpp"

namespace frustra {

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// Rotation index of the lexicographically greatest rotation.
bool is_greatest_rotation(const std::vector<int>& xs) {
  const int n = static_cast<int>(xs.size());
  for (int s = 1; s < n; ++s)
    for (int i = 0; i < n; ++i) {
      const int a = xs[(s + i) % n];
      if (a != xs[i]) {
        if (a > xs[i]) return false;
        break;
      }
    }
  return true;
}

}  // namespace

std::int64_t totient(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("totient needs n >= 1");
  std::int64_t out = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    out -= out / p;
  }
  if (n > 1) out -= out / n;
  return out;
}

std::vector<int> least_rotation(std::span<const int> xs) {
  std::vector<int> best(xs.begin(), xs.end());
  std::vector<int> cur = best;
  for (std::size_t s = 1; s < xs.size(); ++s) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

std::vector<CyclicComposition> enumerate_cyclic_compositions(int n, std::span<const int> allowed) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (allowed.empty()) throw std::invalid_argument("allowed parts must be nonempty");
  std::vector<int> parts(allowed.begin(), allowed.end());
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  if (parts.front() < 1) throw std::invalid_argument("parts must be positive");
  std::vector<CyclicComposition> out;
  std::vector<int> cur;
  std::function<void(int)> grow = [&](int left) {
    if (left == 0) {
      if (least_rotation(cur) == cur) out.push_back({cur, n});
      return;
    }
    for (int p : parts) {
      if (p > left) break;
      cur.push_back(p);
      grow(left - p);
      cur.pop_back();
    }
  };
  grow(n);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.parts < b.parts; });
  return out;
}

std::int64_t count_cyclic_compositions_closed_form(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  Rational total = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d) continue;
    const int q = k / d;
    Rational group = 0;
    for (int j = 0; j <= q / 2; ++j) group += Rational(totient(d) * binomial(q - j, j), k - d * j);
    total += group;
  }
  if (total.denominator() != 1)
    throw InternalInconsistency("closed form gave " + std::to_string(total.numerator()) + "/" +
                                std::to_string(total.denominator()));
  return total.numerator();
}

std::vector<Rational> cyclic_composition_series(int order) {
  if (order < 0) throw std::invalid_argument("negative order");
  std::vector<Rational> sum(order + 1, Rational(0));
  for (int m = 1; m <= order; ++m) {
    // log(1/(1 - y - y^2)) = sum_r (y + y^2)^r / r with y = x^m.
    std::vector<Rational> base(order + 1, Rational(0));
    if (m <= order) base[m] = 1;
    if (2 * m <= order) base[2 * m] = 1;
    std::vector<Rational> power = base;
    const Rational scale(totient(m), m);
    for (int r = 1; r * m <= order; ++r) {
      for (int i = 0; i <= order; ++i) sum[i] += scale * power[i] / Rational(r);
      std::vector<Rational> next(order + 1, Rational(0));
      for (int i = 0; i <= order; ++i) {
        if (power[i].numerator() == 0) continue;
        for (int j = 0; i + j <= order; ++j)
          if (base[j].numerator() != 0) next[i + j] += power[i] * base[j];
      }
      power = std::move(next);
    }
  }
  return sum;
}

BoundReport bounds(int k) {
  BoundReport b;
  b.k = k;
  if (k == 4)
    b.M = 3 * 16;
  else if (k == 5)
    b.M = 3 * 1024;
  else
    throw std::invalid_argument("bounds are defined for k = 4 and k = 5 only");
  b.edge_bound = 4 * b.M - 9;
  return b;
}

int zero_run_limit(int k) {
  if (k == 4) return 1;
  if (k == 5) return 3;
  throw std::invalid_argument("zero-run limit is defined for k = 4 and k = 5 only");
}

bool admissible_weight_sequence(std::span<const int> w, int k) {
  const int limit = zero_run_limit(k);
  const int n = static_cast<int>(w.size());
  if (n == 0 || n > bounds(k).M) return false;
  int total = 0;
  for (int x : w) {
    if (x < 0 || x > 2) return false;
    total += x;
  }
  if (total != 2 * k) return false;
  for (int i = 0; i < n; ++i)
    if (n > 1 && w[i] + w[(i + 1) % n] > 3 && w[i] && w[(i + 1) % n]) return false;
  for (int s = 0; s < n; ++s) {
    int run = 0;
    while (run < n && w[(s + run) % n] == 0) ++run;
    if (run > limit) return false;
  }
  return true;
}

void for_each_admissible_weight_sequence(int k, const std::function<void(std::span<const int>)>& visit) {
  const int limit = zero_run_limit(k);
  const int M = bounds(k).M;
  // Nonzero entries p_1..p_r, each followed by a run of g_i zeros; keep the
  // greatest rotation (it starts with a nonzero entry), report the least.
  std::vector<int> seq;
  std::function<void(int)> grow = [&](int left) {
    if (left == 0) {
      if (static_cast<int>(seq.size()) > M) return;
      const int n = static_cast<int>(seq.size());
      if (seq[n - 1] == 2 && seq[0] == 2 && n > 1) return;
      if (!is_greatest_rotation(seq)) return;
      const auto rep = least_rotation(seq);
      visit(rep);
      return;
    }
    for (int p : {1, 2}) {
      if (p > left) continue;
      if (p == 2 && !seq.empty() && seq.back() == 2) continue;
      seq.push_back(p);
      for (int g = 0; g <= limit; ++g) {
        seq.insert(seq.end(), g, 0);
        grow(left - p);
        seq.resize(seq.size() - g);
      }
      seq.pop_back();
    }
  };
  grow(2 * k);
}

std::vector<std::vector<int>> admissible_weight_sequences(int k) {
  std::vector<std::vector<int>> out;
  for_each_admissible_weight_sequence(k, [&](std::span<const int> s) { out.emplace_back(s.begin(), s.end()); });
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t count_admissible_weight_sequences(int k) {
  std::int64_t count = 0;
  for_each_admissible_weight_sequence(k, [&](std::span<const int>) { ++count; });
  return count;
}

}  // namespace frustra
