// Closed convex bodies given by vertex data, and the enclosing-ball machinery
// built on them.
//
// Three canonical shapes are supported, each optionally carried into world
// coordinates by a rigid placement (orthogonal rotation + translation):
//   * Hyperrectangle: [0, l_1] x ... x [0, l_d], anchored at the origin,
//   * Simplex: affinely independent vertices (n + 1 points, n <= d),
//   * VPolytope: convex hull of an arbitrary finite vertex set.
//
// The minimum enclosing ball (m.e.b.) is computed by Welzl's move-to-front
// recursion over the vertex set with a fixed shuffle seed, so results are
// reproducible run to run. The optimality certificate follows Seidel's
// criterion: a ball through a point set is their m.e.b. iff its center lies
// in the convex hull of the points touching the boundary sphere.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "udg/geom.hpp"

namespace udg {

// ---- shapes ----------------------------------------------------------------

struct Hyperrectangle {
  std::vector<double> side_lengths;
};

struct Simplex {
  std::vector<Point> vertices;
};

struct VPolytope {
  std::vector<Point> vertices;
};

// Rigid motion x -> R x + t. R must be orthogonal (checked to 1e-7).
struct Placement {
  std::vector<std::vector<double>> rotation;
  Vec translation;
};

class ConvexBody {
public:
  ConvexBody() = default;
  ConvexBody(Hyperrectangle h, std::optional<Placement> pl = std::nullopt);
  ConvexBody(Simplex s, std::optional<Placement> pl = std::nullopt);
  ConvexBody(VPolytope v, std::optional<Placement> pl = std::nullopt);

  std::size_t dim() const;
  bool contains(const Point& x, double eps = 1e-9) const;

  // Vertex set in world coordinates. Hyperrectangle corners are enumerated;
  // this throws above 2^16 corners.
  std::vector<Point> vertices() const;

  // Axis-aligned world-frame bounding box (lo, hi).
  std::pair<Vec, Vec> bounding_box() const;

  const Hyperrectangle* as_hyperrectangle() const {
    return std::get_if<Hyperrectangle>(&shape_);
  }
  const Simplex* as_simplex() const { return std::get_if<Simplex>(&shape_); }
  const VPolytope* as_vpolytope() const {
    return std::get_if<VPolytope>(&shape_);
  }
  const std::optional<Placement>& placement() const { return placement_; }

  Point to_world(const Point& local) const;
  Point to_local(const Point& world) const;

private:
  std::variant<Hyperrectangle, Simplex, VPolytope> shape_;
  std::optional<Placement> placement_;
};

// Fast repeated-membership closure: precomputes per-shape data (box bounds,
// 2D hull half-planes, factored barycentric systems) so hot loops such as the
// grid oracle do not pay the generic path per query.
using MembershipFn = std::function<bool(const Point&, double)>;
MembershipFn membership_oracle(const ConvexBody& body);

// ---- enclosing balls -------------------------------------------------------

struct MebResult {
  Ball ball;
  // Input points within 1e-7 of the boundary sphere, in input order.
  std::vector<Point> support;
};

MebResult meb(const std::vector<Point>& points);
MebResult meb(const ConvexBody& body);

// m.e.b. radius of the body (hull of its vertex data).
double radius(const ConvexBody& body);

// Seidel's criterion: every support point sits on the boundary sphere
// (within 1e-7) and the center is a convex combination of them.
bool is_meb_by_seidel(const std::vector<Point>& support, const Ball& ball);

// True iff the m.e.b. center of the simplex lies in its relative interior
// (all barycentric coordinates exceed geom_eps).
bool is_well_centered(const Simplex& s, const Tolerances& tol = {});

// Rank of the vertex difference set, thresholded at 1e-7 relative scale.
int affine_dimension(const ConvexBody& body);

// Scales the canonical shape about the body-frame origin; placement is kept.
ConvexBody scale_body(const ConvexBody& body, double lambda);

// ---- hull / combination utilities ------------------------------------------

// Nonnegative coefficients summing to one with sum_i c_i p_i = target, if
// target lies in the convex hull (within eps, measured as the phase-1
// feasibility residual). The returned solution is basic, so it has at most
// dim + 1 nonzero entries (Caratheodory form); entries below 1e-10 are
// dropped to exact zero.
std::optional<std::vector<double>> convex_combination(
    const std::vector<Point>& points, const Point& target, double eps = 1e-9);

// Barycentric coordinates of x w.r.t. the simplex vertices, or nullopt when
// x is outside the affine hull (residual above eps).
std::optional<std::vector<double>> barycentric(const Simplex& s,
                                               const Point& x,
                                               double eps = 1e-9);

// Indices of the convex hull of a 2D point set, counterclockwise. Collinear
// inputs yield the two extreme points.
std::vector<std::size_t> convex_hull_2d(const std::vector<Point>& pts);

// ---- JSON descriptors ------------------------------------------------------
//
//   {"type":"hyperrectangle","l":[...]}
//   {"type":"simplex","vertices":[[...],...]}
//   {"type":"vpolytope","vertices":[[...],...]}
//
// plus optional "translate":[...] and "rotate":[[...],...] placement keys.

ConvexBody parse_body(const std::string& json_text);
std::string body_to_json(const ConvexBody& body);

}  // namespace udg
