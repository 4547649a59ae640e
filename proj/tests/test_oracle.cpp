// Grid oracle: lattice construction, epsilon-edges, components, snapping,
// BFS distances and witnesses, the path validator, and the sampled reports.
// Small hand-countable lattices pin the exact structure; larger ones check
// determinism and the parallel/serial agreement.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "udg/convex.hpp"
#include "udg/oracle.hpp"
#include "udg/path.hpp"

using namespace udg;

TEST_CASE("hand-counted segment lattice") {
  // [0, 2] with spacing 0.4: nodes at 0, 0.4, ..., 2.0. With slack 0.45 the
  // admissible gaps are 0.8 (four pairs) and 1.2 (three pairs).
  const GridGraph g(ConvexBody(Hyperrectangle{{2.0}}), 0.4, 0.45);
  CHECK(g.node_count() == 6);
  CHECK(g.edge_count() == 7);
  CHECK(g.edge_count(false) == 7);
  CHECK(g.component_count() == 1);
  CHECK(g.spacing() == 0.4);
  CHECK(g.edge_slack() == 0.45);
  CHECK(g.dim() == 1);

  // 0 -> 0.4 has no direct edge (gap 0.4); the best route hops via 1.2.
  const auto hops = bfs_distance(g, Point(std::vector<double>{0.0}),
                                 Point(std::vector<double>{0.4}));
  REQUIRE(hops.has_value());
  CHECK(*hops == 2);

  const auto wit = bfs_witness(g, Point(std::vector<double>{0.0}),
                               Point(std::vector<double>{0.4}));
  REQUIRE(wit.has_value());
  CHECK(wit->size() == 3);
  for (std::size_t i = 0; i + 1 < wit->size(); ++i) {
    const double len = distance((*wit)[i], (*wit)[i + 1]);
    CHECK(std::abs(len - 1.0) <= 0.45 + 1e-12);
  }
}

TEST_CASE("isolated center in the subcritical square") {
  // C^2(1.2) has radius 0.6 sqrt(2) < 1: the continuum graph is totally
  // disconnected. On the grid the boundary ring still glues into one big
  // component, but the deep interior points keep empty annuli.
  const GridGraph g(ConvexBody(Hyperrectangle{{1.2, 1.2}}), 0.025, 0.05);
  CHECK(g.node_count() == 2401);
  CHECK(g.component_count() == 62);

  const std::size_t center = g.snap(Point{0.6, 0.6});
  CHECK(distance(g.node(center), Point{0.6, 0.6}) <= 1e-12);
  CHECK(g.neighbors(center).empty());

  const auto labels = g.component_labels();
  std::size_t same = 0;
  for (const std::size_t l : labels) {
    if (l == labels[center]) ++same;
  }
  CHECK(same == 1);  // the center is a singleton component

  CHECK(!bfs_distance(g, Point{0.6, 0.6}, Point{0.0, 0.0}).has_value());
  CHECK(!bfs_witness(g, Point{0.6, 0.6}, Point{0.0, 0.0}).has_value());
}

TEST_CASE("critical square corner distance") {
  const double s2 = std::sqrt(2.0);
  const GridGraph g(ConvexBody(Hyperrectangle{{s2, s2}}), 0.1, 0.15);
  CHECK(g.node_count() == 225);
  const auto hops = bfs_distance(g, Point{0, 0}, Point{s2, s2});
  REQUIRE(hops.has_value());
  CHECK(*hops == 2);

  const auto wit = bfs_witness(g, Point{0, 0}, Point{s2, s2});
  REQUIRE(wit.has_value());
  REQUIRE(wit->size() == 3);
  for (std::size_t i = 0; i + 1 < wit->size(); ++i) {
    CHECK(std::abs(distance((*wit)[i], (*wit)[i + 1]) - 1.0) <= 0.15 + 1e-12);
  }
}

TEST_CASE("snap prefers the lexicographically smallest tie") {
  const GridGraph g(ConvexBody(Hyperrectangle{{1.0, 1.0}}), 0.25, 0.4);
  const std::size_t id = g.snap(Point{0.125, 0.125});
  CHECK(distance(g.node(id), Point{0, 0}) <= 1e-12);

  CHECK_THROWS_AS(g.snap(Point{2.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(g.snap(Point{0.5, 0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("grid construction preconditions") {
  const ConvexBody sq{Hyperrectangle{{1.2, 1.2}}};
  // dimension
  CHECK_THROWS_AS(GridGraph(ConvexBody(Hyperrectangle{{1, 1, 1, 1}}), 0.1, 0.3),
                  std::invalid_argument);
  // spacing
  CHECK_THROWS_AS(GridGraph(sq, 0.0, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(GridGraph(sq, -0.1, 0.3), std::invalid_argument);
  // slack window
  CHECK_THROWS_AS(GridGraph(sq, 0.1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(GridGraph(sq, 0.1, 0.5), std::invalid_argument);
  // node cap
  CHECK_THROWS_AS(GridGraph(sq, 0.025, 0.05, 100), std::runtime_error);
  // no lattice point lands inside a small rotated diamond
  const VPolytope diamond{{Point{0.5, 0.38}, Point{0.62, 0.5}, Point{0.5, 0.62},
                           Point{0.38, 0.5}}};
  CHECK_THROWS_AS(GridGraph(ConvexBody(diamond), 0.3, 0.45),
                  std::runtime_error);
}

TEST_CASE("grid build is deterministic and kernels agree") {
  const ConvexBody sq{Hyperrectangle{{1.2, 1.2}}};
  const GridGraph a(sq, 0.05, 0.08);
  const GridGraph b(sq, 0.05, 0.08);
  REQUIRE(a.node_count() == b.node_count());
  for (std::size_t i = 0; i < a.node_count(); ++i) {
    CHECK(distance(a.node(i), b.node(i)) == 0.0);
  }
  CHECK(a.edge_count(true) == a.edge_count(false));
  CHECK(a.component_count() == b.component_count());

  const GridGraph c = build_grid_graph(sq, 0.05, 0.08);
  CHECK(c.node_count() == a.node_count());
}

TEST_CASE("validator accepts exact paths and localizes violations") {
  const ConvexBody rect{Hyperrectangle{{2.0, 0.6}}};
  const StepPath good = rectangle_wiggle_path(1.0, 0.6, 0.0, 1.0);
  const ValidationReport ok = validate_path(rect, good, 1e-9);
  CHECK(ok.ok);
  CHECK(ok.violations.empty());

  // A stretched step.
  StepPath stretched;
  stretched.points = {Point{0, 0}, Point{1.5, 0}};
  stretched.labels = {"translate"};
  const ValidationReport r1 = validate_path(rect, stretched, 1e-9);
  CHECK(!r1.ok);
  REQUIRE(r1.violations.size() == 1);
  CHECK(r1.violations[0].kind == "step-length");
  CHECK(r1.violations[0].index == 0);
  CHECK(r1.violations[0].magnitude == doctest::Approx(0.5).epsilon(1e-9));

  // A waypoint outside the body (step lengths all exact).
  StepPath escaped;
  escaped.points = {Point{0, 0}, Point{1, 0}, Point{2, 0}, Point{2.5, 0}};
  escaped.labels = {"translate", "translate", "translate"};
  const ValidationReport r2 = validate_path(ConvexBody(Hyperrectangle{{1.2, 1.2}}),
                                            escaped, 1e-9);
  CHECK(!r2.ok);
  bool saw_containment = false;
  for (const PathViolation& v : r2.violations) {
    if (v.kind == "containment") {
      saw_containment = true;
      CHECK(v.index >= 2);
      CHECK(v.magnitude > 0.0);
    }
  }
  CHECK(saw_containment);

  CHECK_THROWS_AS(validate_path(rect, good, -1.0), std::invalid_argument);
}

TEST_CASE("oracle reports are seed-deterministic") {
  const GridGraph g(ConvexBody(Hyperrectangle{{1.2, 1.2}}), 0.025, 0.05);
  const OracleReport r1 = make_oracle_report(g, 8, 13);
  const OracleReport r2 = make_oracle_report(g, 8, 13);
  CHECK(r1.connected_components == 62);
  REQUIRE(r1.pair_distances.size() == 8);
  CHECK(oracle_report_csv(r1) == oracle_report_csv(r2));

  // Seed 13 samples one pair across components.
  std::size_t unreachable = 0;
  for (const PairSample& s : r1.pair_distances) {
    if (!s.hops.has_value()) ++unreachable;
  }
  CHECK(unreachable == 1);

  const std::string csv = oracle_report_csv(r1);
  CHECK(csv.rfind("components,62", 0) == 0);
  CHECK(csv.find("pair,ux,uy,vx,vy,hops") != std::string::npos);
  CHECK(csv.find("unreachable") != std::string::npos);

  // Witness polylines align with the reachable samples.
  REQUIRE(r1.witness_paths.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    if (r1.pair_distances[i].hops.has_value()) {
      CHECK(r1.witness_paths[i].size() == *r1.pair_distances[i].hops + 1);
    } else {
      CHECK(r1.witness_paths[i].empty());
    }
  }
}
