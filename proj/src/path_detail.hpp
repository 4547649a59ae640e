// Internal scaffolding for the path constructions: embedded 2D frames,
// in-plane triangles, the rectangle-wiggle cycle generator, and the
// corner-arc gadgets that realize three-step reaches near base corners.
//
// All routing here happens in local 2D coordinates. Public operations embed
// their inputs into a frame, route, and lift the waypoints back out; the
// frame is an isometry, so unit steps stay unit steps.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "udg/geom.hpp"
#include "udg/path.hpp"

namespace udg {
namespace pathdetail {

struct P2 {
  double x = 0.0;
  double y = 0.0;
};

double dist2(const P2& a, const P2& b);

// ---- embedded frames --------------------------------------------------------

struct Frame2 {
  Point origin;
  Vec ex, ey;

  Point lift(const P2& p) const;
  P2 drop(const Point& p) const;
};

// Orthonormal frame anchored at `origin`: ex along xdir, ey the unit
// component of ydir orthogonal to ex. Throws when ydir is parallel to xdir.
Frame2 make_frame(const Point& origin, const Vec& xdir, const Vec& ydir);

// ---- plane triangles --------------------------------------------------------

struct Tri2 {
  P2 a, b, c;

  // slack >= 0 admits near-boundary points; a negative slack demands that
  // margin of interior clearance.
  bool contains(const P2& p, double slack) const;

  // Height of the triangle above the base line y = 0 at abscissa x
  // (the triangles used here always have their base on the x axis).
  double height_at(double x) const;
};

// ---- 2D paths ---------------------------------------------------------------

struct Path2 {
  std::vector<P2> pts;
  std::vector<std::string> labels;

  std::size_t steps() const { return pts.empty() ? 0 : pts.size() - 1; }
  void push(const P2& p, const char* label);
  void append(const Path2& tail);  // seam point must match within 1e-12
  Path2 reversed() const;
};

StepPath lift_path(const Frame2& f, const Path2& p);

// ---- rectangle wiggle -------------------------------------------------------

// Path from (u, 0) to (v, 0) through the rectangle
// [x0, x0 + 1 + xext] x [0, h], where u, v lie in [x0, x0 + xext].
// Two steps over an apex when h >= 1, otherwise ceil(|v-u| / qmax) cycles of
// four steps with qmax = 2 (1 - sqrt(1 - h^2)).
Path2 wiggle_route(double x0, double xext, double h, double u, double v);

// Variant for corridors whose admissible height varies along the base
// (triangle interiors): each cycle advances as far as the roof permits at
// the raised pair's abscissae. roof must be concave so endpoint checks
// bound the interior.
Path2 wiggle_route_roof(const std::function<double(double)>& roof, double u,
                        double v);

// ---- corner gadgets ---------------------------------------------------------

// Three-step reach A -> Z -> arc point -> (s, 0) for base targets with
// |s - kx| <= r. Z is the base corner opposite K at unit distance from A;
// the arc is the short piece of S(Z, 1) near A found by the shrinking
// search (start 0.25, halve until 64 samples sit inside the triangle).
struct CornerGadget {
  double kx = 0.0;  // corner abscissa; the corner is (kx, 0)
  double r = 0.0;   // base reach radius around the corner
  P2 A, Z;
  double th_c = 0.0, th_a = 0.0;  // arc bracket angles on S(Z, 1), c end first

  Path2 route(const P2& target) const;
};

CornerGadget make_corner_gadget(const Tri2& tri, const P2& corner, const P2& Z,
                                const P2& A);

// ---- base routing -----------------------------------------------------------

// Routes A -> (s, 0) along the base of a triangle, combining the corner
// gadgets, unit translations of the corner intervals, and rectangle wiggling
// in an inscribed rectangle. Covers both the triangle-wiggle setting
// (A interior, window = len - 1) and the obtuse triangle (A = center on the
// base, window = len).
struct BaseRouter {
  double len = 0.0;     // base is [0, len] x {0}
  double window = 0.0;  // admissible targets: s in [0, window]
  P2 A;
  Tri2 tri;
  CornerGadget left, right;
  double wl = 0.0, wr = 0.0, wh = 0.0;  // wiggle rectangle [wl, wr] x [0, wh]

  Path2 route(double s) const;
};

// Builds the router for the triangle (0,0), (len, 0), apex (clipped into the
// strip 0 <= x <= len when the apex leans out; the corner on the clipping
// line keeps the clipped region a triangle).
BaseRouter make_base_router(double len, const P2& apex, const P2& A,
                            double window);

// ---- obtuse routing ---------------------------------------------------------

// Path between two points of an obtuse triangle in local coordinates
// (base [0, router.len] x {0}, apex above, A = router center): endpoints are
// attached to the base by one unit step each, then routed through A.
Path2 obtuse_route_local(const BaseRouter& router, const P2& from,
                         const P2& to);

// Embedded obtuse triangle route: b0, b1 are the endpoints of the longest
// side (|b0 b1| = 2 r, |r - 1| <= 1e-7), apex the remaining vertex; from/to
// lie in the triangle. Radii above one are bridged into the concentric
// 1/r-scaled copy by one unit step per endpoint.
StepPath obtuse_route_embedded(const Point& b0, const Point& b1,
                               const Point& apex, const Point& from,
                               const Point& to);

// Embedded triangle-wiggle reach: path from A to the point at distance s
// from Q on the segment Q -> P, routed through the triangle conv(Q, P, R).
// Preconditions as in triangle_wiggle_path: d(A, Q) = d(A, P) = 1,
// 1 < |QP| , s <= |QP| - 1, A in the relative interior.
StepPath wiggle_reach_embedded(const Point& Q, const Point& P, const Point& R,
                               const Point& A, double s);

// Snaps the first/last waypoint to the exact endpoint when the lift left
// only floating-point dust (within 1e-10); larger gaps are left alone.
void snap_endpoints(StepPath& path, const Point& u, const Point& v);

}  // namespace pathdetail
}  // namespace udg
