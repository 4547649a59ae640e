// Unit-step path construction: explicit paths realizing the connectivity
// results for convex bodies, the connectivity decision itself, and the
// diameter bounds for boxes.
//
// Every path-producing operation returns a StepPath whose consecutive points
// are at Euclidean distance exactly one (within geom_eps) and whose waypoints
// all lie inside the query body. Paths are built constructively: each
// intermediate-value crossing is bisected, and each waypoint whose existence
// is only argued abstractly is verified before it is emitted.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "udg/convex.hpp"
#include "udg/geom.hpp"

namespace udg {

// ---- path container ---------------------------------------------------------

// labels[i] tags the step points[i] -> points[i+1] with its provenance
// ("wiggle", "arc-hop", "radius-segment", "translate", "scale-lift",
// "skeleton", "diagonal"). A single-point path has no steps.
struct StepPath {
  std::vector<Point> points;
  std::vector<std::string> labels;

  std::size_t steps() const { return points.empty() ? 0 : points.size() - 1; }

  // Concatenates `tail` whose first point must coincide with our last point
  // (within 1e-12); the duplicated seam point is dropped.
  void append(const StepPath& tail);
  void push_step(const Point& p, const std::string& label);

  StepPath reversed() const;
};

StepPath single_point_path(const Point& p);

std::string path_to_json(const StepPath& p);

// ---- connectivity verdict ----------------------------------------------------

enum class VerdictReason {
  radius_zero,
  radius_ge_one_affdim_ge_2,
  unbounded_ray,  // reserved for unbounded covers; no bounded input emits it
  radius_lt_one,
  affdim_lt_2,
};

std::string to_string(VerdictReason r);

struct ConnectivityVerdict {
  bool connected = false;
  VerdictReason reason = VerdictReason::radius_zero;
  std::optional<Point> witness_point;    // e.g. the m.e.b. center when r < 1
  std::optional<StepPath> witness_path;  // set by callers that built one
};

std::string verdict_to_json(const ConnectivityVerdict& v);

// Decides connectedness of the unit-distance graph on the body:
// connected iff r = 0, or r >= 1 and the affine dimension is at least 2.
ConnectivityVerdict is_connected(const ConvexBody& body);

// ---- diameter bounds ---------------------------------------------------------

struct DiameterBound {
  // Empty optional encodes "unbounded" (body not connected).
  std::optional<std::uint64_t> bound;
  std::string formula_id;
  std::vector<double> parameters;
};

std::string bound_to_json(const DiameterBound& b);

// Step bound of the rectangle wiggle: 2 if h >= 1, else
// 4 * ceil(x / (2 (1 - sqrt(1 - h^2)))).
DiameterBound rectangle_wiggle_bound(double x_extent, double h);

// Step bound for the radius-1 rectangle R^2(l1, l2): 8 if l2 >= 1, else
// 4 + 8 * ceil((l1 - 1) / (2 (1 - sqrt(1 - l2^2)))).
DiameterBound rectangle2d_bound(double l1, double l2);

// Step bound for the box R^d(l) with |l| = 2 via the diagonal rectangle of
// the index split I: the 2D bound plus 2. |l| < 2 yields "unbounded";
// |l| > 2 is rejected (no closed-form bound is produced for it).
DiameterBound hyperrectangle_bound(const std::vector<double>& l,
                                   const std::vector<std::size_t>& I);

// Index split minimizing the 2D bound (exhaustive for d <= 20, greedy
// balance beyond), over the critical concentric box scaled to |l| = 2.
std::vector<std::size_t> best_diagonal_split(const std::vector<double>& l);

// ---- wiggle constructions ----------------------------------------------------

// Path from (u, 0) to (v, 0) inside [0, 1 + x_extent] x [0, h], for
// u, v in [0, x_extent] with 0 <= x_extent <= 1. Two steps via an apex when
// h >= 1, otherwise cycles of four steps.
StepPath rectangle_wiggle_path(double x_extent, double h, double u, double v);

// Path between u and v inside the 2D triangle T, where both endpoints lie on
// the side P0 P1 (|P0 P1| = 1 + x > 1) within distance x of P0, and A is a
// relative-interior point at distance one from P0 and P1. The route passes
// through A: corner neighborhoods are reached via small arcs, the rest of
// the side by unit translations and rectangle wiggling.
StepPath triangle_wiggle_path(const Simplex& T, const Point& A,
                              const Point& u, const Point& v);

// Path between any u, v in an obtuse 2D triangle of radius 1: endpoints are
// routed to the longest side first, then connected along it.
StepPath obtuse_triangle_path(const Simplex& T, const Point& u,
                              const Point& v);

// ---- simplex machinery --------------------------------------------------------

// Graph over the sphere-touching vertices of a simplex: edge (i, j) iff
// (P^i - C) . (P^j - C) <= geom_eps. Connected whenever the m.e.b. of the
// node set equals the simplex m.e.b.
struct RadiusGraph {
  Point center;
  std::vector<Point> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> adjacency;
};

RadiusGraph radius_graph(const Simplex& s);

// BFS hop distance in a radius graph; nullopt when disconnected.
std::optional<std::size_t> radius_graph_distance(const RadiusGraph& g,
                                                 std::size_t i,
                                                 std::size_t j);

// Path between u, v in a simplex of radius 1 (within 1e-7) and affine
// dimension >= 2: endpoints are attached to radius segments C V^i by the
// half-space cover, segments are connected along radius-graph hops, and
// in-segment motion goes through the triangle-wiggle machinery.
StepPath simplex_path(const Simplex& s, const Point& u, const Point& v);

// Path between u, v in any convex body with radius >= 1 (within 1e-7) and
// affine dimension >= 2. Radii above one are normalized by unit-step stage
// bridges (one per radius unit), the critical body is routed through the
// support simplex extracted from the m.e.b. support by Caratheodory.
StepPath convex_path(const ConvexBody& body, const Point& u, const Point& v);

// One scale-lift stage: bodyl has radius r >= 1 and is the lambda-scaling
// (about its m.e.b. center) of the core body X with radius max(1, r - 1),
// lambda = r / max(1, r - 1). For x in bodyl \ X the bridge point is
// R = unit point on segment P Q, with P = C + (x - C)/lambda and Q the
// X-vertex farthest from x; core_path must end at R and gets the single
// step R -> x appended. For x already in X, core_path is returned as is.
StepPath scale_lift(const ConvexBody& bodyl, const StepPath& core_path,
                    const Point& x);

// Deterministic bridge point of the scale_lift stage (so callers can build
// core paths ending at it).
std::optional<Point> scale_lift_bridge(const ConvexBody& bodyl,
                                       const Point& x);

// ---- box constructions --------------------------------------------------------

// Path of at most 8 steps between u, v in the critical hypercube
// C^d(2/sqrt(d)), d >= 2, via the 1-skeleton and the equal-coordinate
// bisector points L_P(h).
StepPath hypercube_path(std::size_t d, const Point& u, const Point& v);

// Path between u, v in the rectangle [0, l1] x [0, l2] with
// sqrt(l1^2 + l2^2) = 2 within 1e-7 and l1 >= l2, within the
// rectangle2d_bound step count.
StepPath rectangle2d_path(double l1, double l2, const Point& u,
                          const Point& v);

// Path between u, v in the box [0, l] with |l| >= 2 (within 1e-7): stages
// down to the concentric critical box, attaches both endpoints to the main
// diagonal, and runs rectangle2d_path inside the diagonal rectangle of the
// best index split.
StepPath hyperrectangle_path(const std::vector<double>& l, const Point& u,
                             const Point& v);

// ---- generic dispatch ---------------------------------------------------------

// Routes u -> v in the body using the most specific construction available:
// axis-aligned hyperrectangles go through the diagonal machinery, simplices
// of radius ~1 through simplex_path, everything else through convex_path.
// Throws std::invalid_argument when the body is not connected.
StepPath find_path(const ConvexBody& body, const Point& u, const Point& v);

}  // namespace udg
