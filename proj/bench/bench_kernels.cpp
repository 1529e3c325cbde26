// Serial reference vs OpenMP switching scan, plus whole-index timings.
#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "frustra/frustration.hpp"

using namespace frustra;

namespace {

SignedMultigraph random_graph(std::mt19937_64& rng, int n, int m) {
  auto g = SignedMultigraph::with_vertices(n);
  std::bernoulli_distribution neg(0.5);
  for (int v = 1; v < n; ++v) g.add_edge(static_cast<int>(rng() % v), v, neg(rng) ? Sign::Negative : Sign::Positive);
  while (g.edge_count() < m) {
    const int u = static_cast<int>(rng() % n);
    const int v = static_cast<int>(rng() % n);
    if (u != v) g.add_edge(u, v, neg(rng) ? Sign::Negative : Sign::Positive);
  }
  return g;
}

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"switching-scan kernels: serial vs parallel"};
  int min_n = 14;
  int max_n = 22;
  int reps = 3;
  std::uint64_t seed = 1;
  std::vector<int> jobs{1, 2, 4, 8};
  app.add_option("--min-n", min_n)->check(CLI::Range(2, 30));
  app.add_option("--max-n", max_n)->check(CLI::Range(2, 30));
  app.add_option("--reps", reps)->check(CLI::PositiveNumber);
  app.add_option("--seed", seed);
  app.add_option("--jobs", jobs)->delimiter(',')->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(seed);
  std::printf("hardware threads: %d\n", omp_get_max_threads());
  std::printf("%4s %4s %10s", "n", "m", "serial_s");
  for (int j : jobs) std::printf("  %8s  %7s", ("par" + std::to_string(j) + "_s").c_str(), "speedup");
  std::printf("  agree\n");
  for (int n = min_n; n <= max_n; n += 2) {
    const int m = 2 * n;
    const auto g = random_graph(rng, n, m);
    const CompactGraph cg(g);
    const auto free = kernels::free_vertices(cg);
    kernels::SwitchingScan ref;
    const double ts = best_of(reps, [&] { ref = kernels::switching_scan_serial(cg, free, true, 1 << 16); });
    std::printf("%4d %4d %10.4f", n, m, ts);
    bool agree = true;
    for (int j : jobs) {
      kernels::SwitchingScan par;
      const double tp = best_of(reps, [&] { par = kernels::switching_scan_parallel(cg, free, true, 1 << 16, j); });
      agree = agree && par.min_negative == ref.min_negative && par.argmin_masks == ref.argmin_masks;
      std::printf("  %8.4f  %6.2fx", tp, ts / tp);
    }
    std::printf("  %s\n", agree ? "yes" : "NO");
  }
  return 0;
}
