// Fixed-step random walk in a bounded convex body: the walker stands at p,
// picks a direction uniformly among the unit steps that stay inside, and
// moves exactly distance one. 2D feasible sets are computed exactly as
// circular-arc intervals (with isolated directions kept as atoms); 3D steps
// are drawn by rejection from the uniform sphere. Runs carry independent
// RNG streams, so ensembles are reproducible and order-insensitive.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "udg/convex.hpp"
#include "udg/geom.hpp"
#include "udg/rng.hpp"

namespace udg {

// ---- feasible directions ------------------------------------------------------

enum class FeasibleKind { continuous_arcs, finite_set, empty };

struct AngleInterval {
  double lo = 0.0, hi = 0.0;  // radians, 0 <= lo <= hi < ~2*pi + lo
  double length() const { return hi - lo; }
};

struct FeasibleDirections {
  FeasibleKind kind = FeasibleKind::empty;
  std::vector<AngleInterval> arcs;  // positive-measure pieces
  std::vector<Vec> atoms;           // isolated unit offsets (intervals < 1e-9)

  double total_measure() const {
    double t = 0.0;
    for (const AngleInterval& a : arcs) t += a.length();
    return t;
  }
};

// Exact 2D feasible set of unit steps from p: the circle S^1(p, 1) clipped
// by every hull edge half-plane, intersected as angle intervals. Intervals
// shorter than 1e-9 radians collapse to atoms (the finite-neighborhood case,
// e.g. the midpoint of the critical square). Throws for p outside the body
// or bodies that are not 2D.
FeasibleDirections feasible_directions(const ConvexBody& body, const Point& p);

// One uniform draw: by arc length over the interval union, or uniform over
// the atoms when the set is finite. Throws on an empty set.
Vec step_sample(const FeasibleDirections& fd, Rng& rng);

// ---- ensembles ------------------------------------------------------------------

struct WalkConfig {
  ConvexBody body;
  Point start;
  std::size_t steps = 0;
  std::size_t runs = 1;
  std::uint64_t seed = 0;
  bool record_trajectories = false;
};

enum class WalkStatus { completed, stuck, stuck_numeric };

std::string to_string(WalkStatus s);

struct WalkEnsemble {
  WalkConfig config;
  std::vector<Vec> final_positions;        // one per run
  std::vector<std::size_t> steps_taken;    // < config.steps only when stuck
  std::vector<WalkStatus> statuses;
  std::vector<std::vector<Vec>> trajectories;  // filled when requested
};

// Runs the ensemble; run k uses rng_stream(seed, k) regardless of schedule,
// so the parallel and serial results are bit-identical. Containment and
// unit step length are asserted for every recorded move. 2D bodies use the
// exact feasible set; 3D bodies use sphere rejection (a run that rejects
// 10^6 consecutive draws ends with status stuck-numeric). Dimensions
// above 3 are rejected.
WalkEnsemble run_ensemble(const WalkConfig& cfg, bool parallel = true);

// CSV rows run,step,x,y(,z),status: trajectories when recorded, otherwise
// one final-position row per run.
std::string walk_ensemble_csv(const WalkEnsemble& ens);

// ---- histograms -----------------------------------------------------------------

struct Histogram2D {
  std::size_t bins = 0;
  Vec origin;          // low corner of the binned square
  double side = 0.0;   // bounding square edge length
  std::vector<std::uint64_t> counts;  // row-major, x fastest
  std::vector<double> freq;           // counts / runs
};

// Bins final positions over the body's bounding square (the larger bbox
// extent on both axes). 2D ensembles only.
Histogram2D histogram2d(const WalkEnsemble& ens, std::size_t bins);

std::string histogram_csv(const Histogram2D& h);

}  // namespace udg
