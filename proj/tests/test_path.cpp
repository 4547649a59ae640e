// Path construction: wiggles, corner gadgets, radius graphs, the simplex and
// generic convex routers, box skeleton routes, diameter bounds, and the
// find_path dispatch. Every constructed path is checked against the unit-step
// and containment validator.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "udg/convex.hpp"
#include "udg/oracle.hpp"
#include "udg/path.hpp"
#include "udg/rng.hpp"

using namespace udg;

namespace {

const double kSqrt3 = std::sqrt(3.0);

// Equilateral triangle inscribed in the unit circle around the origin.
Simplex unit_equilateral() {
  return Simplex{{Point{0, 1}, Point{-kSqrt3 / 2, -0.5}, Point{kSqrt3 / 2, -0.5}}};
}

// Regular tetrahedron with circumradius one, first vertex at the origin.
Simplex unit_tetrahedron() {
  const double s = std::sqrt(8.0 / 3.0);
  return Simplex{{Point{0, 0, 0}, Point{s, 0, 0},
                  Point{0.5 * s, s * kSqrt3 / 2.0, 0},
                  Point{0.5 * s, s * kSqrt3 / 6.0, s * std::sqrt(2.0 / 3.0)}}};
}

bool valid(const ConvexBody& body, const StepPath& p) {
  return validate_path(body, p, 1e-9).ok;
}

}  // namespace

// ---- container ---------------------------------------------------------------

TEST_CASE("step path container") {
  StepPath a = single_point_path(Point{1, 2});
  CHECK(a.steps() == 0);
  a.push_step(Point{2, 2}, "arc-hop");
  CHECK(a.steps() == 1);

  StepPath b = single_point_path(Point{2, 2});
  b.push_step(Point{3, 2}, "translate");
  a.append(b);  // seam point dropped
  CHECK(a.points.size() == 3);
  CHECK(a.labels == std::vector<std::string>{"arc-hop", "translate"});

  const StepPath r = a.reversed();
  CHECK(distance(r.points.front(), Point{3, 2}) == 0.0);
  CHECK(distance(r.points.back(), Point{1, 2}) == 0.0);

  StepPath off = single_point_path(Point{9, 9});
  CHECK_THROWS_AS(a.append(off), std::logic_error);

  const std::string j = path_to_json(a);
  CHECK(j.find("\"points\"") != std::string::npos);
  CHECK(j.find("\"labels\"") != std::string::npos);
  CHECK(j.find("\"steps\":2") != std::string::npos);
}

// ---- rectangle wiggle ----------------------------------------------------------

TEST_CASE("rectangle wiggle frozen waypoints") {
  // One cycle: x = 1, h = 0.6, u = 0, v = 0.4 (= qmax).
  const StepPath p = rectangle_wiggle_path(1.0, 0.6, 0.0, 0.4);
  REQUIRE(p.points.size() == 5);
  const Point want[5] = {Point{0, 0}, Point{1, 0}, Point{0.2, 0.6},
                         Point{1.2, 0.6}, Point{0.4, 0}};
  for (int i = 0; i < 5; ++i) {
    CHECK(distance(p.points[i], want[i]) <= 1e-12);
  }
  for (const std::string& l : p.labels) CHECK(l == "wiggle");
  CHECK(valid(ConvexBody(Hyperrectangle{{2.0, 0.6}}), p));
}

TEST_CASE("rectangle wiggle full traverse and tall corridor") {
  const StepPath full = rectangle_wiggle_path(1.0, 0.6, 0.0, 1.0);
  CHECK(full.steps() == 12);
  CHECK(valid(ConvexBody(Hyperrectangle{{2.0, 0.6}}), full));

  // h >= 1: two hops over the apex regardless of the spread.
  const StepPath tall = rectangle_wiggle_path(0.7, 1.0, 0.1, 0.6);
  CHECK(tall.steps() == 2);
  CHECK(valid(ConvexBody(Hyperrectangle{{1.7, 1.0}}), tall));

  const StepPath still = rectangle_wiggle_path(1.0, 0.6, 0.3, 0.3);
  CHECK(still.steps() == 0);
}

TEST_CASE("rectangle wiggle bound") {
  const DiameterBound b = rectangle_wiggle_bound(1.0, 0.6);
  REQUIRE(b.bound.has_value());
  CHECK(*b.bound == 12);
  CHECK(b.formula_id == "rectangle-wiggle");
  REQUIRE(b.parameters.size() == 2);
  CHECK(b.parameters[0] == 1.0);
  CHECK(b.parameters[1] == 0.6);

  CHECK(*rectangle_wiggle_bound(0.4, 0.6).bound == 4);
  CHECK(*rectangle_wiggle_bound(0.8, 1.3).bound == 2);

  const std::string j = bound_to_json(b);
  CHECK(j.find("\"bound\":12") != std::string::npos);
  CHECK(j.find("rectangle-wiggle") != std::string::npos);
}

TEST_CASE("rectangle wiggle rejects bad arguments") {
  CHECK_THROWS_AS(rectangle_wiggle_path(1.2, 0.6, 0.0, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(rectangle_wiggle_path(1.0, 0.0, 0.0, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(rectangle_wiggle_path(0.5, 0.6, 0.0, 0.7),
                  std::invalid_argument);
  CHECK_THROWS_AS(rectangle_wiggle_bound(-0.2, 0.6), std::invalid_argument);
}

// ---- triangle wiggle -----------------------------------------------------------

TEST_CASE("triangle wiggle on the reference triangle") {
  const Simplex T{{Point{0, 0}, Point{1.8, 0}, Point{0.9, 1.2}}};
  const Point A{0.9, std::sqrt(0.19)};  // unit distance from both base corners
  const ConvexBody body{T};

  // Corner reach: both endpoints inside the left gadget radius.
  const StepPath reach = triangle_wiggle_path(T, A, Point{0, 0}, Point{0.05, 0});
  CHECK(reach.steps() == 4);
  for (const std::string& l : reach.labels) CHECK(l == "arc-hop");
  CHECK(valid(body, reach));

  // Window edge: reached through the right corner plus one translation.
  const StepPath edge = triangle_wiggle_path(T, A, Point{0, 0}, Point{0.8, 0});
  CHECK(edge.steps() == 5);
  CHECK(valid(body, edge));

  // Interior pair on the side goes through the wiggle corridor.
  const StepPath mid = triangle_wiggle_path(T, A, Point{0.2, 0}, Point{0.6, 0});
  CHECK(mid.steps() == 7);
  CHECK(valid(body, mid));

  const StepPath none = triangle_wiggle_path(T, A, Point{0.3, 0}, Point{0.3, 0});
  CHECK(none.steps() == 0);
}

TEST_CASE("triangle wiggle rejects off-side endpoints") {
  const Simplex T{{Point{0, 0}, Point{1.8, 0}, Point{0.9, 1.2}}};
  const Point A{0.9, std::sqrt(0.19)};
  CHECK_THROWS_AS(triangle_wiggle_path(T, A, Point{0.9, 0.1}, Point{0.1, 0}),
                  std::invalid_argument);
  // u beyond the corner window [0, |P0 P1| - 1]
  CHECK_THROWS_AS(triangle_wiggle_path(T, A, Point{1.2, 0}, Point{0.1, 0}),
                  std::invalid_argument);
  // A not at unit distance from the side ends
  CHECK_THROWS_AS(triangle_wiggle_path(T, Point{0.9, 0.7}, Point{0, 0},
                                       Point{0.1, 0}),
                  std::invalid_argument);
}

// ---- obtuse triangles ----------------------------------------------------------

TEST_CASE("obtuse triangle routing") {
  const Simplex O{{Point{0, 0}, Point{2, 0}, Point{0.5, 0.3}}};
  const ConvexBody body{O};

  // The center is the base midpoint; the corner sits at distance exactly one.
  const StepPath hop = obtuse_triangle_path(O, Point{1, 0}, Point{0, 0});
  CHECK(hop.steps() == 1);
  CHECK(hop.labels.front() == "arc-hop");
  CHECK(valid(body, hop));

  // Generic interior pair: attach to the base, then corridor motion.
  const StepPath gen =
      obtuse_triangle_path(O, Point{0.3, 0.05}, Point{1.7, 0.05});
  CHECK(gen.steps() > 0);
  CHECK(gen.steps() <= 20000);
  CHECK(gen.labels.front() == "radius-segment");
  CHECK(valid(body, gen));

  const StepPath none = obtuse_triangle_path(O, Point{0.5, 0.1}, Point{0.5, 0.1});
  CHECK(none.steps() == 0);
}

TEST_CASE("obtuse triangle rejects bad inputs") {
  // Equilateral with side 2 has radius 2/sqrt(3), not 1.
  const Simplex E{{Point{0, 0}, Point{2, 0}, Point{1, kSqrt3}}};
  CHECK_THROWS_AS(obtuse_triangle_path(E, Point{1, 0.5}, Point{1, 1}),
                  std::invalid_argument);

  const Simplex O{{Point{0, 0}, Point{2, 0}, Point{0.5, 0.3}}};
  CHECK_THROWS_AS(obtuse_triangle_path(O, Point{1, 1}, Point{0, 0}),
                  std::invalid_argument);
}

// ---- radius graphs -------------------------------------------------------------

TEST_CASE("radius graph frozen structures") {
  // Equilateral: all three vertices on the sphere, pairwise obtuse at C.
  const RadiusGraph k3 = radius_graph(unit_equilateral());
  CHECK(k3.nodes.size() == 3);
  CHECK(k3.edges.size() == 3);
  CHECK(radius_graph_distance(k3, 0, 1) == 1);

  // Regular tetrahedron: complete graph on four sphere vertices.
  const RadiusGraph k4 = radius_graph(unit_tetrahedron());
  CHECK(k4.nodes.size() == 4);
  CHECK(k4.edges.size() == 6);

  // Vertices at angles 0, 80, 200 degrees: only the pairs spanning at least
  // a quarter turn are linked; 0 and 80 meet through 200.
  const double d80 = 80.0 * M_PI / 180.0, d200 = 200.0 * M_PI / 180.0;
  const Simplex arc{{Point{1, 0}, Point{std::cos(d80), std::sin(d80)},
                     Point{std::cos(d200), std::sin(d200)}}};
  const RadiusGraph g = radius_graph(arc);
  REQUIRE(g.nodes.size() == 3);
  CHECK(g.edges.size() == 2);
  CHECK(g.adjacency[0].size() == 1);
  CHECK(g.adjacency[0][0] == 2);
  CHECK(g.adjacency[1].size() == 1);
  CHECK(g.adjacency[1][0] == 2);
  CHECK(radius_graph_distance(g, 0, 1) == 2);

  // Obtuse triangle: only the diametral base corners touch the sphere.
  const RadiusGraph ob =
      radius_graph(Simplex{{Point{0, 0}, Point{2, 0}, Point{0.5, 0.3}}});
  CHECK(ob.nodes.size() == 2);
  CHECK(ob.edges.size() == 1);
  CHECK(radius_graph_distance(ob, 0, 1) == 1);
}

// ---- simplex router ------------------------------------------------------------

TEST_CASE("simplex path on critical simplices") {
  const Simplex eq = unit_equilateral();
  const ConvexBody beq{eq};

  const StepPath vv = simplex_path(eq, eq.vertices[0], eq.vertices[1]);
  CHECK(vv.steps() > 0);
  CHECK(vv.steps() <= 40);
  CHECK(valid(beq, vv));

  // Center to a sphere vertex is a single radius segment.
  const StepPath cv = simplex_path(eq, Point{0, 0}, eq.vertices[0]);
  CHECK(cv.steps() == 1);
  CHECK(cv.labels.front() == "radius-segment");
  CHECK(valid(beq, cv));

  CHECK(simplex_path(eq, Point{0, 0}, Point{0, 0}).steps() == 0);

  const Simplex te = unit_tetrahedron();
  const ConvexBody bte{te};
  const auto& vs = te.vertices;
  const Point fc{(vs[0][0] + vs[1][0] + vs[2][0]) / 3.0,
                 (vs[0][1] + vs[1][1] + vs[2][1]) / 3.0,
                 (vs[0][2] + vs[1][2] + vs[2][2]) / 3.0};
  const StepPath vf = simplex_path(te, vs[3], fc);
  CHECK(vf.steps() <= 30);
  CHECK(valid(bte, vf));
  const StepPath tv = simplex_path(te, vs[0], vs[1]);
  CHECK(tv.steps() <= 30);
  CHECK(valid(bte, tv));
}

TEST_CASE("simplex path demands radius one") {
  const Simplex big{{Point{0, 0}, Point{2, 0}, Point{1, kSqrt3}}};
  CHECK_THROWS_AS(simplex_path(big, Point{1, 0.5}, Point{1, 1}),
                  std::invalid_argument);
}

// ---- generic convex router -------------------------------------------------------

TEST_CASE("convex path on polytopes of radius one") {
  // Rectangle corners: the m.e.b. support spans the diagonal.
  const VPolytope R{{Point{0, 0}, Point{1.6, 0}, Point{1.6, 1.2}, Point{0, 1.2}}};
  const ConvexBody br{R};
  const StepPath corners = convex_path(br, Point{0, 0}, Point{1.6, 1.2});
  CHECK(corners.steps() == 2);
  for (const std::string& l : corners.labels) CHECK(l == "arc-hop");
  CHECK(valid(br, corners));

  // Regular pentagon, radius 1.3: one bridge stage, then the support core.
  std::vector<Point> pv;
  for (int k = 0; k < 5; ++k) {
    const double th = 2.0 * M_PI * k / 5.0 + 0.3;
    pv.push_back(Point{1.3 * std::cos(th), 1.3 * std::sin(th)});
  }
  const ConvexBody pent{VPolytope{pv}};
  const StepPath adj = convex_path(pent, pv[0], pv[1]);
  CHECK(adj.steps() <= 1000);
  CHECK(valid(pent, adj));
  const StepPath opp = convex_path(pent, pv[0], pv[2]);
  CHECK(valid(pent, opp));
}

TEST_CASE("convex path stages scaled equilaterals") {
  for (double lam : {1.1, 1.5}) {
    std::vector<Point> vs = {Point{0, lam}, Point{-lam * kSqrt3 / 2, -0.5 * lam},
                             Point{lam * kSqrt3 / 2, -0.5 * lam}};
    const ConvexBody body{Simplex{vs}};
    const StepPath p = convex_path(body, vs[0], vs[1]);
    REQUIRE(p.steps() == 4);
    CHECK(p.labels == std::vector<std::string>{"scale-lift", "radius-segment",
                                               "radius-segment", "scale-lift"});
    CHECK(valid(body, p));
  }
  // lambda = 2: the core is reached after one unit of shrinkage.
  std::vector<Point> vs = {Point{0, 2}, Point{-kSqrt3, -1}, Point{kSqrt3, -1}};
  const ConvexBody body{Simplex{vs}};
  const StepPath p = convex_path(body, vs[0], vs[1]);
  CHECK(p.steps() <= 60);
  CHECK(valid(body, p));
}

TEST_CASE("convex path demands radius at least one") {
  CHECK_THROWS_AS(convex_path(ConvexBody(Hyperrectangle{{0.5, 0.5}}),
                              Point{0, 0}, Point{0.5, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("scale lift bridge") {
  const double lam = 1.5;
  std::vector<Point> vs = {Point{0, lam}, Point{-lam * kSqrt3 / 2, -0.5 * lam},
                           Point{lam * kSqrt3 / 2, -0.5 * lam}};
  const ConvexBody body{Simplex{vs}};

  // A vertex lies outside the unit-radius core: the bridge exists and sits
  // at unit distance from it.
  const auto R = scale_lift_bridge(body, vs[0]);
  REQUIRE(R.has_value());
  CHECK(std::abs(distance(*R, vs[0]) - 1.0) <= 1e-9);

  StepPath lifted = scale_lift(body, single_point_path(*R), vs[0]);
  CHECK(lifted.steps() == 1);
  CHECK(lifted.labels.back() == "scale-lift");

  // The center is inside the core: no bridge, the core path passes through.
  CHECK(!scale_lift_bridge(body, Point{0, 0}).has_value());
  const StepPath same = scale_lift(body, single_point_path(Point{0, 0}),
                                   Point{0, 0});
  CHECK(same.steps() == 0);
}

// ---- connectivity verdicts -------------------------------------------------------

TEST_CASE("connectivity verdicts") {
  // Single point: radius zero.
  const ConnectivityVerdict pt = is_connected(ConvexBody(VPolytope{{Point{1, 2}}}));
  CHECK(pt.connected);
  CHECK(pt.reason == VerdictReason::radius_zero);
  CHECK(to_string(pt.reason) == "radius-zero");

  // Segment: positive radius but affine dimension one.
  const ConnectivityVerdict seg =
      is_connected(ConvexBody(VPolytope{{Point{0, 0}, Point{3, 0}}}));
  CHECK(!seg.connected);
  CHECK(seg.reason == VerdictReason::affdim_lt_2);
  CHECK(to_string(seg.reason) == "affdim-lt-2");

  // Small square: radius below one, witness at the center.
  const ConnectivityVerdict small =
      is_connected(ConvexBody(Hyperrectangle{{0.5, 0.5}}));
  CHECK(!small.connected);
  CHECK(small.reason == VerdictReason::radius_lt_one);
  REQUIRE(small.witness_point.has_value());
  CHECK(distance(*small.witness_point, Point{0.25, 0.25}) <= 1e-9);
  const std::string js = verdict_to_json(small);
  CHECK(js.find("\"connected\":false") != std::string::npos);
  CHECK(js.find("radius-lt-one") != std::string::npos);
  CHECK(js.find("witness") != std::string::npos);

  // Wide rectangle: connected.
  const ConnectivityVerdict ok =
      is_connected(ConvexBody(Hyperrectangle{{1.6, 1.2}}));
  CHECK(ok.connected);
  CHECK(ok.reason == VerdictReason::radius_ge_one_affdim_ge_2);
  CHECK(to_string(ok.reason) == "radius-ge-one-affdim-ge-2");
  CHECK(verdict_to_json(ok).find("\"connected\":true") != std::string::npos);

  CHECK(to_string(VerdictReason::unbounded_ray) == "unbounded-ray");
}

// ---- critical hypercubes ----------------------------------------------------------

TEST_CASE("hypercube skeleton paths") {
  for (std::size_t d : {std::size_t{2}, std::size_t{4}, std::size_t{8}}) {
    const double s = 2.0 / std::sqrt(static_cast<double>(d));
    Point a(d), b(d);
    for (std::size_t i = 0; i < d; ++i) b[i] = s;
    const StepPath p = hypercube_path(d, a, b);
    CHECK(p.steps() == 2);  // opposite corners via the center
    CHECK(valid(ConvexBody(Hyperrectangle{std::vector<double>(d, s)}), p));
  }

  // Random pairs in the critical 4-cube stay within the 8-step bound.
  Rng rng(7);
  const ConvexBody cube{Hyperrectangle{{1, 1, 1, 1}}};
  for (int t = 0; t < 40; ++t) {
    Point a(4), b(4);
    for (std::size_t i = 0; i < 4; ++i) {
      a[i] = rng.next_range(0.0, 1.0);
      b[i] = rng.next_range(0.0, 1.0);
    }
    const StepPath p = hypercube_path(4, a, b);
    CHECK(p.steps() <= 8);
    CHECK(valid(cube, p));
  }

  Point m(3);
  for (std::size_t i = 0; i < 3; ++i) m[i] = 1.0 / kSqrt3;
  CHECK(hypercube_path(3, m, m).steps() == 0);
}

// ---- rectangles and boxes ----------------------------------------------------------

TEST_CASE("rectangle2d frozen bound") {
  const double l1 = std::sqrt(3.64), l2 = 0.6;
  const DiameterBound b = rectangle2d_bound(l1, l2);
  REQUIRE(b.bound.has_value());
  CHECK(*b.bound == 28);
  CHECK(b.formula_id == "rectangle2d-diam");

  CHECK(*rectangle2d_bound(1.6, 1.2).bound == 8);

  const StepPath corners = rectangle2d_path(l1, l2, Point{0, 0}, Point{l1, l2});
  CHECK(corners.steps() <= 28);
  CHECK(valid(ConvexBody(Hyperrectangle{{l1, l2}}), corners));
}

TEST_CASE("rectangle2d random pairs meet the bound") {
  Rng rng(123);
  for (double l2 : {0.4, 0.7, 1.2}) {
    const double l1 = std::sqrt(4.0 - l2 * l2);
    const ConvexBody body{Hyperrectangle{{l1, l2}}};
    const std::uint64_t cap = *rectangle2d_bound(l1, l2).bound;
    for (int t = 0; t < 25; ++t) {
      const Point u{rng.next_range(0.0, l1), rng.next_range(0.0, l2)};
      const Point v{rng.next_range(0.0, l1), rng.next_range(0.0, l2)};
      const StepPath p = rectangle2d_path(l1, l2, u, v);
      CHECK(p.steps() <= cap);
      CHECK(valid(body, p));
    }
  }
  CHECK(rectangle2d_path(1.6, 1.2, Point{0.3, 0.4}, Point{0.3, 0.4}).steps() == 0);
}

TEST_CASE("rectangle2d rejects bad shapes") {
  CHECK_THROWS_AS(rectangle2d_path(1.2, 1.6, Point{0, 0}, Point{1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(rectangle2d_path(1.5, 0.6, Point{0, 0}, Point{1, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("hyperrectangle bound") {
  const std::vector<double> ones{1, 1, 1, 1};
  const DiameterBound b = hyperrectangle_bound(ones, best_diagonal_split(ones));
  REQUIRE(b.bound.has_value());
  CHECK(*b.bound == 10);
  CHECK(b.formula_id == "hyperrectangle-diam");
  REQUIRE(b.parameters.size() == 2);
  CHECK(std::abs(b.parameters[0] - std::sqrt(2.0)) <= 1e-12);
  CHECK(std::abs(b.parameters[1] - std::sqrt(2.0)) <= 1e-12);

  // Short diagonal: the graph is disconnected, the bound is unbounded.
  const DiameterBound u = hyperrectangle_bound({0.5, 0.5, 0.5}, {0});
  CHECK(!u.bound.has_value());
  CHECK(u.parameters.empty());
  CHECK(bound_to_json(u).find("\"bound\":\"unbounded\"") != std::string::npos);

  // Long diagonal: no closed form is offered.
  CHECK_THROWS_AS(hyperrectangle_bound({1.5, 1.0, 1.0}, {0}),
                  std::invalid_argument);
}

TEST_CASE("best diagonal split") {
  const auto s4 = best_diagonal_split({1, 1, 1, 1});
  CHECK(s4 == std::vector<std::size_t>{0, 1});
  CHECK(best_diagonal_split({1.6, 1.2}) == std::vector<std::size_t>{0});
  CHECK(best_diagonal_split({1.5, 1.0, 1.0}) == std::vector<std::size_t>{0});
}

TEST_CASE("hyperrectangle paths") {
  const std::vector<double> ones{1, 1, 1, 1};
  const ConvexBody cube{Hyperrectangle{ones}};
  Point a(4), b(4);
  for (std::size_t i = 0; i < 4; ++i) b[i] = 1.0;
  const StepPath diag = hyperrectangle_path(ones, a, b);
  CHECK(diag.steps() == 2);
  CHECK(valid(cube, diag));

  // Random pairs stay within the advertised diameter bound of 10.
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    Point u(4), v(4);
    for (std::size_t i = 0; i < 4; ++i) {
      u[i] = rng.next_range(0.0, 1.0);
      v[i] = rng.next_range(0.0, 1.0);
    }
    const StepPath p = hyperrectangle_path(ones, u, v);
    CHECK(p.steps() <= 10);
    CHECK(valid(cube, p));
  }

  // Diagonal above two: stages bridge into the critical concentric box.
  const std::vector<double> lng{1.5, 1.0, 1.0};
  const ConvexBody blng{Hyperrectangle{lng}};
  const StepPath p = hyperrectangle_path(lng, Point{0, 0, 0}, Point{1.5, 1, 1});
  CHECK(p.steps() <= 12);
  CHECK(p.labels.front() == "scale-lift");
  CHECK(p.labels.back() == "scale-lift");
  CHECK(valid(blng, p));

  CHECK_THROWS_AS(
      hyperrectangle_path({0.5, 0.5}, Point{0, 0}, Point{0.5, 0.5}),
      std::invalid_argument);
}

// ---- dispatch ----------------------------------------------------------------------

TEST_CASE("find_path dispatch") {
  const ConvexBody rect{Hyperrectangle{{1.6, 1.2}}};
  const Point u{0.05, 0.07}, v{1.55, 1.13};
  const StepPath p = find_path(rect, u, v);
  CHECK(p.steps() <= 8);  // within the advertised rectangle bound
  CHECK(valid(rect, p));
  // Endpoints are returned bit-exact.
  CHECK(p.points.front()[0] == u[0]);
  CHECK(p.points.front()[1] == u[1]);
  CHECK(p.points.back()[0] == v[0]);
  CHECK(p.points.back()[1] == v[1]);

  // Simplex of radius one dispatches to the simplex router.
  const Simplex eq = unit_equilateral();
  const StepPath sp = find_path(ConvexBody(eq), eq.vertices[0], eq.vertices[1]);
  CHECK(valid(ConvexBody(eq), sp));

  // Polytopes fall back to the generic convex router.
  const VPolytope R{{Point{0, 0}, Point{1.6, 0}, Point{1.6, 1.2}, Point{0, 1.2}}};
  const StepPath vp = find_path(ConvexBody(R), Point{0, 0}, Point{1.6, 1.2});
  CHECK(vp.steps() == 2);
  CHECK(valid(ConvexBody(R), vp));

  // Point bodies carry the trivial path.
  const ConvexBody dot{VPolytope{{Point{1, 2}}}};
  CHECK(find_path(dot, Point{1, 2}, Point{1, 2}).steps() == 0);
}

TEST_CASE("find_path under a rigid placement") {
  Placement pl;
  pl.rotation = {{0.0, -1.0}, {1.0, 0.0}};
  pl.translation = Vec{5.0, -1.0};
  const ConvexBody body{Hyperrectangle{{1.6, 1.2}}, pl};
  const Point u = body.to_world(Point{0.05, 0.07});
  const Point v = body.to_world(Point{1.55, 1.13});
  const StepPath p = find_path(body, u, v);
  CHECK(p.steps() <= 8);
  CHECK(valid(body, p));
  CHECK(distance(p.points.front(), u) == 0.0);
  CHECK(distance(p.points.back(), v) == 0.0);
}

TEST_CASE("find_path rejects infeasible requests") {
  const ConvexBody small{Hyperrectangle{{0.5, 0.5}}};
  CHECK_THROWS_AS(find_path(small, Point{0, 0}, Point{0.5, 0.5}),
                  std::invalid_argument);

  const ConvexBody rect{Hyperrectangle{{1.6, 1.2}}};
  CHECK_THROWS_AS(find_path(rect, Point{-0.5, 0}, Point{1, 1}),
                  std::invalid_argument);

  const ConvexBody dot{VPolytope{{Point{1, 2}}}};
  CHECK_THROWS_AS(find_path(dot, Point{1, 2}, Point{3, 2}),
                  std::invalid_argument);
}
