// Benchmark of the OpenMP kernels against their serial reference loops: the
// grid-oracle edge scan and the walk ensemble. Both pairs must agree exactly
// (the parallel schedules are designed to be result-identical), so the run
// doubles as a consistency check and exits nonzero on any mismatch.

#include <chrono>
#include <cstdio>
#include <string>

#include "udg/convex.hpp"
#include "udg/oracle.hpp"
#include "udg/rng.hpp"
#include "udg/walk.hpp"

using namespace udg;

namespace {

template <typename F>
double time_s(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const std::string& kernel, const std::string& size, double serial,
         double parallel) {
  std::printf("%-28s %-22s %9.3f %9.3f %8.2fx\n", kernel.c_str(), size.c_str(),
              serial, parallel, serial / parallel);
}

}  // namespace

int main() {
  std::printf("%-28s %-22s %9s %9s %9s\n", "kernel", "instance", "serial",
              "openmp", "speedup");
  bool ok = true;

  // Grid-oracle edge scan over squares of growing resolution.
  for (const double h : {0.02, 0.01, 0.005}) {
    const ConvexBody sq{Hyperrectangle{{std::sqrt(2.0), std::sqrt(2.0)}}};
    const GridGraph g(sq, h, 2.0 * h);
    std::uint64_t serial_edges = 0, parallel_edges = 0;
    const double ts = time_s([&] { serial_edges = g.edge_count(false); });
    const double tp = time_s([&] { parallel_edges = g.edge_count(true); });
    if (serial_edges != parallel_edges) {
      std::printf("MISMATCH: edge counts differ at h=%g (%llu vs %llu)\n", h,
                  static_cast<unsigned long long>(serial_edges),
                  static_cast<unsigned long long>(parallel_edges));
      ok = false;
    }
    char size[64];
    std::snprintf(size, sizeof(size), "%zu nodes, h=%g", g.node_count(), h);
    row("grid edge scan", size, ts, tp);
  }

  // Walk ensembles; per-run RNG streams make the schedules bit-identical.
  for (const std::size_t runs : {2000, 20000}) {
    WalkConfig cfg;
    cfg.body = ConvexBody(Hyperrectangle{{2.0, 2.0}});
    cfg.start = Point{0.1, 0.1};
    cfg.steps = 50;
    cfg.runs = runs;
    cfg.seed = 42;
    WalkEnsemble serial, parallel;
    const double ts = time_s([&] { serial = run_ensemble(cfg, false); });
    const double tp = time_s([&] { parallel = run_ensemble(cfg, true); });
    if (walk_ensemble_csv(serial) != walk_ensemble_csv(parallel)) {
      std::printf("MISMATCH: walk ensembles differ at runs=%zu\n", runs);
      ok = false;
    }
    row("walk ensemble",
        std::to_string(runs) + " runs x " + std::to_string(cfg.steps) +
            " steps",
        ts, tp);
  }

  if (!ok) {
    std::printf("kernel mismatch detected\n");
    return 1;
  }
  return 0;
}
