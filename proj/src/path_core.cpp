// StepPath plumbing, the connectivity verdict, JSON serialization of the
// path-layer value types, and the find_path dispatch over body shapes.

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "path_detail.hpp"
#include "udg/convex.hpp"
#include "udg/geom.hpp"
#include "udg/path.hpp"

namespace udg {

namespace {
const Tolerances kTol{};
}

// ---- StepPath ----------------------------------------------------------------

void StepPath::append(const StepPath& tail) {
  if (tail.points.empty()) return;
  if (points.empty()) {
    *this = tail;
    return;
  }
  if (distance(points.back(), tail.points.front()) > 1e-12) {
    throw std::logic_error("path seam mismatch");
  }
  points.insert(points.end(), tail.points.begin() + 1, tail.points.end());
  labels.insert(labels.end(), tail.labels.begin(), tail.labels.end());
}

void StepPath::push_step(const Point& p, const std::string& label) {
  if (points.empty()) {
    throw std::logic_error("push_step on an empty path");
  }
  points.push_back(p);
  labels.push_back(label);
}

StepPath StepPath::reversed() const {
  StepPath out;
  out.points.assign(points.rbegin(), points.rend());
  out.labels.assign(labels.rbegin(), labels.rend());
  return out;
}

StepPath single_point_path(const Point& p) {
  StepPath out;
  out.points.push_back(p);
  return out;
}

std::string path_to_json(const StepPath& p) {
  nlohmann::json j;
  j["points"] = nlohmann::json::array();
  for (const Point& q : p.points) j["points"].push_back(q.c);
  j["labels"] = p.labels;
  j["steps"] = p.steps();
  return j.dump();
}

// ---- verdicts ------------------------------------------------------------------

std::string to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::radius_zero:
      return "radius-zero";
    case VerdictReason::radius_ge_one_affdim_ge_2:
      return "radius-ge-one-affdim-ge-2";
    case VerdictReason::unbounded_ray:
      return "unbounded-ray";
    case VerdictReason::radius_lt_one:
      return "radius-lt-one";
    case VerdictReason::affdim_lt_2:
      return "affdim-lt-2";
  }
  return "radius-zero";
}

std::string verdict_to_json(const ConnectivityVerdict& v) {
  nlohmann::json j;
  j["connected"] = v.connected;
  j["reason"] = to_string(v.reason);
  if (v.witness_path) {
    j["witness"] = nlohmann::json::parse(path_to_json(*v.witness_path));
  } else if (v.witness_point) {
    j["witness"] = v.witness_point->c;
  }
  return j.dump();
}

ConnectivityVerdict is_connected(const ConvexBody& body) {
  ConnectivityVerdict v;
  const MebResult mb = meb(body);
  const double r = mb.ball.radius;
  if (r <= kTol.geom_eps) {
    v.connected = true;
    v.reason = VerdictReason::radius_zero;
    return v;
  }
  if (affine_dimension(body) < 2) {
    v.connected = false;
    v.reason = VerdictReason::affdim_lt_2;
    v.witness_point = mb.ball.center;
    return v;
  }
  if (r < 1.0 - kTol.geom_eps) {
    v.connected = false;
    v.reason = VerdictReason::radius_lt_one;
    v.witness_point = mb.ball.center;
    return v;
  }
  v.connected = true;
  v.reason = VerdictReason::radius_ge_one_affdim_ge_2;
  return v;
}

// ---- bounds ---------------------------------------------------------------------

std::string bound_to_json(const DiameterBound& b) {
  nlohmann::json j;
  if (b.bound) {
    j["bound"] = *b.bound;
  } else {
    j["bound"] = "unbounded";
  }
  j["formula_id"] = b.formula_id;
  j["parameters"] = b.parameters;
  return j.dump();
}

// ---- dispatch -------------------------------------------------------------------

StepPath find_path(const ConvexBody& body, const Point& u, const Point& v) {
  if (!body.contains(u) || !body.contains(v)) {
    throw std::invalid_argument("find_path: endpoint outside the body");
  }
  const ConnectivityVerdict verdict = is_connected(body);
  if (!verdict.connected) {
    throw std::invalid_argument("find_path: body is not connected (" +
                                to_string(verdict.reason) + ")");
  }
  if (verdict.reason == VerdictReason::radius_zero) {
    if (distance(u, v) > 2e-9) {
      throw std::invalid_argument(
          "find_path: distinct endpoints in a single-point body");
    }
    return single_point_path(u);
  }

  if (const Hyperrectangle* h = body.as_hyperrectangle()) {
    StepPath p =
        hyperrectangle_path(h->side_lengths, body.to_local(u), body.to_local(v));
    if (body.placement()) {
      for (Point& q : p.points) q = body.to_world(q);
      pathdetail::snap_endpoints(p, u, v);
    }
    return p;
  }
  if (const Simplex* s = body.as_simplex()) {
    const double r = meb(body).ball.radius;
    if (std::abs(r - 1.0) <= 1e-7) {
      Simplex world;
      world.vertices = body.vertices();
      (void)s;
      return simplex_path(world, u, v);
    }
  }
  return convex_path(body, u, v);
}

}  // namespace udg
