// Fixed-step random walks: exact 2D feasible sets (arcs and atoms), the
// direction sampler, ensemble determinism across schedules, stuck detection,
// the CSV emitters, and the final-position histogram.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "udg/convex.hpp"
#include "udg/rng.hpp"
#include "udg/walk.hpp"

using namespace udg;

namespace {

const double kS2 = std::sqrt(2.0);

}  // namespace

TEST_CASE("critical square midpoint has exactly the corner steps") {
  const ConvexBody sq{Hyperrectangle{{kS2, kS2}}};
  const Point mid{kS2 / 2, kS2 / 2};
  const FeasibleDirections fd = feasible_directions(sq, mid);
  CHECK(fd.kind == FeasibleKind::finite_set);
  CHECK(fd.arcs.empty());
  REQUIRE(fd.atoms.size() == 4);

  // Each atom is a unit offset landing exactly on a corner.
  for (const Vec& a : fd.atoms) {
    CHECK(std::abs(norm(a) - 1.0) <= 1e-9);
    const Point land = mid + a;
    for (std::size_t i = 0; i < 2; ++i) {
      const double d0 = std::abs(land[i]);
      const double d1 = std::abs(land[i] - kS2);
      CHECK(std::min(d0, d1) <= 1e-9);
    }
  }
}

TEST_CASE("feasible sets across the regimes") {
  // Subcritical square: the center cannot move at all.
  const FeasibleDirections none =
      feasible_directions(ConvexBody(Hyperrectangle{{1.2, 1.2}}), Point{0.6, 0.6});
  CHECK(none.kind == FeasibleKind::empty);
  CHECK(none.total_measure() == 0.0);

  // Roomy square: the full circle from the center, a quarter from a corner.
  const ConvexBody big{Hyperrectangle{{2.0, 2.0}}};
  const FeasibleDirections full = feasible_directions(big, Point{1.0, 1.0});
  CHECK(full.kind == FeasibleKind::continuous_arcs);
  CHECK(full.total_measure() == doctest::Approx(2.0 * M_PI).epsilon(1e-12));

  const FeasibleDirections corner = feasible_directions(big, Point{0.0, 0.0});
  CHECK(corner.total_measure() == doctest::Approx(M_PI / 2).epsilon(1e-12));

  // Degenerate segment: one atom from an end, two from the middle.
  const ConvexBody seg{VPolytope{{Point{0, 0}, Point{2, 0}}}};
  CHECK(feasible_directions(seg, Point{0, 0}).atoms.size() == 1);
  CHECK(feasible_directions(seg, Point{1, 0}).atoms.size() == 2);

  CHECK_THROWS_AS(feasible_directions(big, Point{3.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("step sampler stays feasible") {
  const ConvexBody big{Hyperrectangle{{2.0, 2.0}}};
  const Point corner{0.0, 0.0};
  const FeasibleDirections fd = feasible_directions(big, corner);
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const Vec u = step_sample(fd, rng);
    CHECK(std::abs(norm(u) - 1.0) <= 1e-9);
    CHECK(big.contains(corner + u));
  }

  // Finite sets draw among the atoms only.
  const ConvexBody crit{Hyperrectangle{{kS2, kS2}}};
  const FeasibleDirections atoms =
      feasible_directions(crit, Point{kS2 / 2, kS2 / 2});
  for (int t = 0; t < 50; ++t) {
    const Vec u = step_sample(atoms, rng);
    double best = 1e9;
    for (const Vec& a : atoms.atoms) best = std::min(best, norm(u - a));
    CHECK(best <= 1e-12);
  }

  FeasibleDirections empty;
  CHECK_THROWS_AS(step_sample(empty, rng), std::logic_error);
}

TEST_CASE("ensembles are schedule-independent and seed-stable") {
  WalkConfig cfg;
  cfg.body = ConvexBody(Hyperrectangle{{2.0, 2.0}});
  cfg.start = Point{0.1, 0.1};
  cfg.steps = 5;
  cfg.runs = 8;
  cfg.seed = 99;

  const WalkEnsemble par = run_ensemble(cfg, true);
  const WalkEnsemble ser = run_ensemble(cfg, false);
  REQUIRE(par.final_positions.size() == 8);
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(par.final_positions[k][0] == ser.final_positions[k][0]);
    CHECK(par.final_positions[k][1] == ser.final_positions[k][1]);
    CHECK(par.statuses[k] == WalkStatus::completed);
    CHECK(par.steps_taken[k] == 5);
    CHECK(cfg.body.contains(par.final_positions[k]));
  }
  CHECK(to_string(par.statuses[0]) == "completed");

  // Same seed reproduces, a different seed diverges somewhere.
  const WalkEnsemble again = run_ensemble(cfg, true);
  CHECK(walk_ensemble_csv(again) == walk_ensemble_csv(par));
  WalkConfig other = cfg;
  other.seed = 100;
  CHECK(walk_ensemble_csv(run_ensemble(other)) != walk_ensemble_csv(par));
}

TEST_CASE("stuck walker reports zero progress") {
  WalkConfig cfg;
  cfg.body = ConvexBody(Hyperrectangle{{1.2, 1.2}});
  cfg.start = Point{0.6, 0.6};
  cfg.steps = 3;
  cfg.runs = 2;
  cfg.seed = 1;
  const WalkEnsemble e = run_ensemble(cfg);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(e.statuses[k] == WalkStatus::stuck);
    CHECK(e.steps_taken[k] == 0);
    CHECK(distance(e.final_positions[k], cfg.start) == 0.0);
  }
  CHECK(to_string(WalkStatus::stuck) == "stuck");
  CHECK(walk_ensemble_csv(e).find("stuck") != std::string::npos);
}

TEST_CASE("walk csv shapes") {
  WalkConfig cfg;
  cfg.body = ConvexBody(Hyperrectangle{{2.0, 2.0}});
  cfg.start = Point{0.1, 0.1};
  cfg.steps = 5;
  cfg.runs = 8;
  cfg.seed = 99;

  const std::string finals = walk_ensemble_csv(run_ensemble(cfg));
  CHECK(finals.rfind("run,step,x,y,status", 0) == 0);
  std::size_t lines = 0;
  for (const char c : finals) lines += c == '\n';
  CHECK(lines == 1 + 8);  // header plus one final row per run

  cfg.record_trajectories = true;
  const WalkEnsemble traj = run_ensemble(cfg);
  REQUIRE(traj.trajectories.size() == 8);
  for (const auto& t : traj.trajectories) CHECK(t.size() == 6);
  const std::string tcsv = walk_ensemble_csv(traj);
  lines = 0;
  for (const char c : tcsv) lines += c == '\n';
  CHECK(lines == 1 + 8 * 6);  // header plus step 0..5 per run
}

TEST_CASE("final-position histogram") {
  WalkConfig cfg;
  cfg.body = ConvexBody(Hyperrectangle{{2.0, 2.0}});
  cfg.start = Point{0.1, 0.1};
  cfg.steps = 5;
  cfg.runs = 100;
  cfg.seed = 5;
  const WalkEnsemble e = run_ensemble(cfg);
  const Histogram2D h = histogram2d(e, 4);
  CHECK(h.bins == 4);
  CHECK(h.side == 2.0);
  REQUIRE(h.counts.size() == 16);
  std::uint64_t total = 0;
  for (const std::uint64_t c : h.counts) total += c;
  CHECK(total == 100);
  double fsum = 0.0;
  for (const double f : h.freq) fsum += f;
  CHECK(fsum == doctest::Approx(1.0).epsilon(1e-12));

  // The CSV is a bins x bins frequency matrix, one row per line.
  const std::string csv = histogram_csv(h);
  std::size_t lines = 0, commas = 0;
  for (const char c : csv) {
    lines += c == '\n';
    commas += c == ',';
  }
  CHECK(lines == 4);
  CHECK(commas == 12);
}

TEST_CASE("three dimensions walk by rejection, four are rejected") {
  WalkConfig cfg;
  cfg.body = ConvexBody(Hyperrectangle{{2.0, 2.0, 2.0}});
  cfg.start = Point{1.0, 1.0, 1.0};
  cfg.steps = 3;
  cfg.runs = 2;
  cfg.seed = 4;
  const WalkEnsemble e = run_ensemble(cfg);
  CHECK(e.statuses[0] == WalkStatus::completed);
  CHECK(walk_ensemble_csv(e).rfind("run,step,x,y,z,status", 0) == 0);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(cfg.body.contains(e.final_positions[k]));
  }

  WalkConfig bad = cfg;
  bad.body = ConvexBody(Hyperrectangle{{2, 2, 2, 2}});
  bad.start = Point(std::vector<double>{1, 1, 1, 1});
  CHECK_THROWS_AS(run_ensemble(bad), std::invalid_argument);
}
