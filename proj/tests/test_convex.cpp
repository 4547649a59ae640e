// Convex bodies: membership, minimum enclosing balls, the Seidel criterion,
// well-centeredness, affine dimension, scaling, and the JSON descriptors.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "udg/convex.hpp"
#include "udg/rng.hpp"

using namespace udg;

namespace {

std::vector<Point> random_points(Rng& rng, std::size_t n, std::size_t d,
                                 double lo = -3.0, double hi = 3.0) {
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Point p(d);
    for (std::size_t k = 0; k < d; ++k) p[k] = rng.next_range(lo, hi);
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

TEST_CASE("meb of frozen configurations") {
  // Right triangle: the circumcenter is the hypotenuse midpoint.
  const MebResult r1 = meb({Point{0, 0}, Point{2, 0}, Point{1, 1}});
  CHECK(distance(r1.ball.center, Point{1, 0}) <= 1e-9);
  CHECK(r1.ball.radius == doctest::Approx(1.0).epsilon(1e-9));

  // Equilateral triangle on the unit circle.
  const double s32 = std::sqrt(3.0) / 2.0;
  const MebResult r2 = meb({Point{1, 0}, Point{-0.5, s32}, Point{-0.5, -s32}});
  CHECK(distance(r2.ball.center, Point{0, 0}) <= 1e-9);
  CHECK(r2.ball.radius == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r2.support.size() == 3);

  // Rectangle corners: circumscribed ball of radius half the diagonal.
  const MebResult r3 =
      meb({Point{0, 0}, Point{1.6, 0}, Point{0, 1.2}, Point{1.6, 1.2}});
  CHECK(distance(r3.ball.center, Point{0.8, 0.6}) <= 1e-9);
  CHECK(r3.ball.radius == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(meb(std::vector<Point>{}), std::invalid_argument);
}

TEST_CASE("body radius") {
  CHECK(radius(ConvexBody(Hyperrectangle{{1.0, 1.0}})) ==
        doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
  for (std::size_t d = 2; d <= 8; ++d) {
    const double side = 2.0 / std::sqrt(static_cast<double>(d));
    CHECK(radius(ConvexBody(Hyperrectangle{std::vector<double>(d, side)})) ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(radius(ConvexBody(Hyperrectangle{{1.6, 1.2}})) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Seidel criterion") {
  const Ball unit{Point{0, 0}, 1.0};
  CHECK(is_meb_by_seidel({Point{1, 0}, Point{-1, 0}}, unit));
  CHECK_FALSE(is_meb_by_seidel({Point{1, 0}, Point{0, 1}}, unit));

  const double k = 1.0 / std::sqrt(3.0);
  const Ball unit3{Point{0, 0, 0}, 1.0};
  CHECK(is_meb_by_seidel({Point{k, k, k}, Point{k, -k, -k}, Point{-k, k, -k},
                          Point{-k, -k, k}},
                         unit3));
}

TEST_CASE("well-centered simplices") {
  const double s32 = std::sqrt(3.0) / 2.0;
  CHECK(is_well_centered(
      Simplex{{Point{1, 0}, Point{-0.5, s32}, Point{-0.5, -s32}}}));
  // Right triangle: the center lies on the hypotenuse, not the interior.
  CHECK_FALSE(
      is_well_centered(Simplex{{Point{0, 0}, Point{2, 0}, Point{1, 1}}}));
  // Obtuse triangle: the center is the longest-side midpoint.
  CHECK_FALSE(
      is_well_centered(Simplex{{Point{0, 0}, Point{2, 0}, Point{0.5, 0.3}}}));
}

TEST_CASE("affine dimension") {
  CHECK(affine_dimension(ConvexBody(Simplex{{Point{2, 3}}})) == 0);
  CHECK(affine_dimension(ConvexBody(VPolytope{{Point{0, 0}, Point{3, 0}}})) ==
        1);
  CHECK(affine_dimension(ConvexBody(Hyperrectangle{{1.0, 1.0, 1.0}})) == 3);
  // Degenerate vertex clouds flatten correctly.
  CHECK(affine_dimension(ConvexBody(VPolytope{
            {Point{0, 0, 0}, Point{1, 0, 0}, Point{2, 0, 0}}})) == 1);
}

TEST_CASE("scaling bodies") {
  const ConvexBody cube = scale_body(
      ConvexBody(Hyperrectangle{{1.0, 1.0}}), std::sqrt(2.0));
  REQUIRE(cube.as_hyperrectangle() != nullptr);
  CHECK(cube.as_hyperrectangle()->side_lengths[0] ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  const Simplex tri{{Point{0, 0}, Point{2, 0}, Point{1, 1}}};
  const ConvexBody same = scale_body(ConvexBody(tri), 1.0);
  REQUIRE(same.as_simplex() != nullptr);
  CHECK(distance(same.as_simplex()->vertices[2], Point{1, 1}) == 0.0);

  CHECK(radius(scale_body(ConvexBody(Hyperrectangle{{1.6, 1.2}}), 2.0)) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(scale_body(ConvexBody(tri), -0.5), std::invalid_argument);
}

TEST_CASE("meb properties on random point sets") {
  Rng rng(7781);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + rng.next_below(5);
    const std::size_t n = 1 + rng.next_below(12);
    const std::vector<Point> pts = random_points(rng, n, d);
    const MebResult r = meb(pts);

    for (const Point& p : pts) {
      CHECK(distance(p, r.ball.center) <= r.ball.radius + 1e-9);
    }
    for (const Point& s : r.support) {
      CHECK(std::abs(distance(s, r.ball.center) - r.ball.radius) <= 1e-7);
    }
    CHECK(is_meb_by_seidel(r.support, r.ball));

    // Determinism: identical input gives a bit-identical ball.
    const MebResult r2 = meb(pts);
    CHECK(distance(r.ball.center, r2.ball.center) == 0.0);
    CHECK(r.ball.radius == r2.ball.radius);
  }
}

TEST_CASE("radius scales linearly") {
  Rng rng(4242);
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = 2 + rng.next_below(3);
    const std::vector<Point> pts = random_points(rng, 4 + rng.next_below(4), d);
    const ConvexBody body(VPolytope{pts});
    const double r0 = radius(body);
    for (double lambda : {0.0, 0.5, 1.0, std::sqrt(2.0), 10.0}) {
      CHECK(std::abs(radius(scale_body(body, lambda)) - lambda * r0) <= 1e-9);
    }
  }
}

TEST_CASE("simplex meb center stays inside the simplex") {
  Rng rng(1913);
  int built = 0;
  while (built < 100) {
    const std::size_t d = 2 + rng.next_below(3);
    const std::vector<Point> pts = random_points(rng, d + 1, d);
    ConvexBody body(VPolytope{pts});
    if (affine_dimension(body) != static_cast<int>(d)) continue;
    ++built;
    const Simplex s{pts};
    const MebResult r = meb(pts);
    const auto bc = barycentric(s, r.ball.center);
    REQUIRE(bc.has_value());
    for (double c : *bc) CHECK(c >= -1e-9);
  }
}

TEST_CASE("membership") {
  const ConvexBody box(Hyperrectangle{{1.6, 1.2}});
  CHECK(box.contains(Point{0.8, 0.6}));
  CHECK(box.contains(Point{0, 0}));
  CHECK(box.contains(Point{1.6 + 1e-10, 1.2}));  // boundary slack
  CHECK_FALSE(box.contains(Point{1.7, 0.6}));

  const ConvexBody hull(
      VPolytope{{Point{0, 0}, Point{2, 0}, Point{2, 2}, Point{0, 2}}});
  CHECK(hull.contains(Point{1, 1}));
  CHECK(hull.contains(Point{2, 2}));
  CHECK_FALSE(hull.contains(Point{2.01, 1}));

  const ConvexBody tri(Simplex{{Point{0, 0}, Point{2, 0}, Point{0.5, 0.3}}});
  CHECK(tri.contains(Point{0.8, 0.1}));
  CHECK_FALSE(tri.contains(Point{0.5, 0.4}));
}

TEST_CASE("membership oracle agrees with contains") {
  Rng rng(5150);
  const std::vector<ConvexBody> bodies = {
      ConvexBody(Hyperrectangle{{1.3, 0.7, 2.0}}),
      ConvexBody(Simplex{{Point{0, 0}, Point{2, 0}, Point{0.7, 1.4}}}),
      ConvexBody(VPolytope{
          {Point{0, 0}, Point{1, 0}, Point{1.4, 0.9}, Point{0.2, 1.1}}}),
  };
  for (const ConvexBody& body : bodies) {
    const MembershipFn fast = membership_oracle(body);
    for (int t = 0; t < 300; ++t) {
      Point p(body.dim());
      for (std::size_t k = 0; k < body.dim(); ++k)
        p[k] = rng.next_range(-0.5, 2.2);
      CHECK(fast(p, 1e-9) == body.contains(p, 1e-9));
    }
  }
}

TEST_CASE("2d convex hull") {
  const std::vector<Point> pts = {Point{0, 0}, Point{2, 0}, Point{2, 2},
                                  Point{0, 2}, Point{1, 1}};
  const std::vector<std::size_t> hull = convex_hull_2d(pts);
  CHECK(hull.size() == 4);
  double area2 = 0.0;  // shoelace; positive means counterclockwise
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = pts[hull[i]];
    const Point& b = pts[hull[(i + 1) % hull.size()]];
    area2 += a[0] * b[1] - b[0] * a[1];
  }
  CHECK(area2 == doctest::Approx(8.0).epsilon(1e-12));

  const std::vector<std::size_t> seg =
      convex_hull_2d({Point{0, 0}, Point{1, 0}, Point{3, 0}, Point{2, 0}});
  CHECK(seg.size() == 2);
}

TEST_CASE("body JSON descriptors") {
  const ConvexBody box =
      parse_body(R"({"type":"hyperrectangle","l":[1.6,1.2]})");
  REQUIRE(box.as_hyperrectangle() != nullptr);
  CHECK(box.as_hyperrectangle()->side_lengths[0] == 1.6);

  const ConvexBody rt = parse_body(body_to_json(box));
  CHECK(rt.as_hyperrectangle()->side_lengths[1] == 1.2);

  const ConvexBody sim = parse_body(
      R"({"type":"simplex","vertices":[[0,0],[2,0],[0.5,0.3]]})");
  REQUIRE(sim.as_simplex() != nullptr);
  CHECK(sim.as_simplex()->vertices.size() == 3);

  const ConvexBody placed = parse_body(
      R"({"type":"hyperrectangle","l":[2,1],"translate":[5,-1],)"
      R"("rotate":[[0,-1],[1,0]]})");
  CHECK(placed.contains(placed.to_world(Point{1, 0.5})));
  CHECK(distance(placed.to_world(Point{0, 0}), Point{5, -1}) <= 1e-12);

  CHECK_THROWS_AS(parse_body(R"({"type":"bogus"})"), std::invalid_argument);
  CHECK_THROWS_AS(
      parse_body(
          R"({"type":"hyperrectangle","l":[1,1],"rotate":[[1,1],[0,1]]})"),
      std::invalid_argument);
}

TEST_CASE("bounding boxes and vertices") {
  const ConvexBody box(Hyperrectangle{{1.6, 1.2}});
  const auto [lo, hi] = box.bounding_box();
  CHECK(distance(lo, Point{0, 0}) <= 1e-12);
  CHECK(distance(hi, Point{1.6, 1.2}) <= 1e-12);
  CHECK(box.vertices().size() == 4);

  const ConvexBody cube3(Hyperrectangle{{1.0, 1.0, 1.0}});
  CHECK(cube3.vertices().size() == 8);
}

TEST_CASE("convex combination solver") {
  const std::vector<Point> square = {Point{0, 0}, Point{2, 0}, Point{2, 2},
                                     Point{0, 2}};
  const auto inside = convex_combination(square, Point{1, 1});
  REQUIRE(inside.has_value());
  double sum = 0.0;
  Point rec{0, 0};
  for (std::size_t i = 0; i < square.size(); ++i) {
    CHECK((*inside)[i] >= 0.0);
    sum += (*inside)[i];
    rec += square[i] * (*inside)[i];
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(distance(rec, Point{1, 1}) <= 1e-7);

  CHECK_FALSE(convex_combination(square, Point{3, 1}).has_value());
}
