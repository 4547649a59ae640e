// Core geometric primitives for unit-distance constructions: points in R^d,
// balls, spheres, half-spaces, segments, circle arcs, and the intermediate-
// value solvers that find a point at distance exactly one from a query point
// along a segment, polyline, or arc.
//
// Conventions:
//   * everything is dimension-generic (d >= 1) unless stated otherwise,
//   * a "unit point" for x on a curve is a point y on the curve with
//     d(x, y) = 1,
//   * solvers bisect a sign change of d(x, curve(t)) - 1; the caller is
//     responsible for arranging endpoints with opposite signs (the usual
//     radius argument), and gets an exception otherwise.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace udg {

// ---- tolerances -----------------------------------------------------------

// geom_eps is the slack used for membership/equality style predicates;
// bisect_eps is the parameter resolution of the bisection solvers.
// Invariant: 0 < bisect_eps < geom_eps < 1.
struct Tolerances {
  double geom_eps = 1e-9;
  double bisect_eps = 1e-12;
};

// ---- points and vectors ----------------------------------------------------

struct Vec {
  std::vector<double> c;

  Vec() = default;
  explicit Vec(std::size_t dim) : c(dim, 0.0) {}
  Vec(std::initializer_list<double> xs) : c(xs) {}
  explicit Vec(std::vector<double> xs) : c(std::move(xs)) {}

  std::size_t dim() const { return c.size(); }
  double& operator[](std::size_t i) { return c[i]; }
  double operator[](std::size_t i) const { return c[i]; }

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(double s);
};

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator*(double s, Vec a);
Vec operator*(Vec a, double s);

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& v);
double norm(const Vec& v);
double distance(const Vec& a, const Vec& b);

// Returns v / |v|; throws std::invalid_argument on (near-)zero vectors.
Vec normalized(const Vec& v);

// a + t * (b - a)
Vec lerp(const Vec& a, const Vec& b, double t);

using Point = Vec;

// ---- basic shapes ----------------------------------------------------------

struct Ball {
  Point center;
  double radius = 0.0;

  bool contains(const Point& x, double eps = 1e-9) const;
};

struct Sphere {
  Point center;
  double radius = 0.0;
};

// H(base, witness) = { x : (witness - base) . (x - base) <= 0 }, the closed
// half-space through `base` whose outward normal points at `witness`.
struct HalfSpace {
  Point base;
  Point witness;
};

bool halfspace_contains(const HalfSpace& h, const Point& x, double eps = 1e-9);

struct Segment {
  Point a;
  Point b;
};

// A circle arc embedded in R^d: the circle is the slice of `sphere` by the
// 2-plane through its center spanned by (plane_u, plane_v). The arc runs from
// `from` to `to` counterclockwise in that basis (sweep in (0, 2*pi]); for
// antipodal endpoints the basis orientation picks which half-circle is meant.
class Arc {
public:
  Arc(const Sphere& sphere, const Point& from, const Point& to,
      const Vec& plane_u, const Vec& plane_v);

  const Sphere& sphere() const { return sphere_; }
  Point from() const { return at(0.0); }
  Point to() const { return at(sweep_); }
  double sweep() const { return sweep_; }

  // Point at angle t in [0, sweep] measured from `from`.
  Point at(double t) const;

private:
  Sphere sphere_;
  Vec e1_, e2_;  // orthonormal in-plane basis, e1 towards `from`
  double sweep_ = 0.0;
};

// ---- unit-distance solvers -------------------------------------------------

// Point y on [s.a, s.b] with d(x, y) = 1. Endpoints hitting the unit distance
// within tol.geom_eps are returned directly; otherwise d(x, .) - 1 must change
// sign between the endpoints and the crossing is bisected to tol.bisect_eps
// in the segment parameter. Throws std::invalid_argument when no crossing is
// bracketed.
Point unit_point_on_segment(const Point& x, const Segment& s,
                            const Tolerances& tol = {});

// First unit point in scan order along the polyline pts[0] .. pts[n-1]:
// vertices within tol.geom_eps of distance one are returned as they are
// passed, and each segment is checked for an endpoint sign change.
Point unit_point_on_polyline(const Point& x, const std::vector<Point>& pts,
                             const Tolerances& tol = {});

// Unit point on an arc, same endpoint-first / sign-change contract, bisected
// in the angle parameter.
Point unit_point_on_arc(const Point& x, const Arc& arc,
                        const Tolerances& tol = {});

}  // namespace udg
