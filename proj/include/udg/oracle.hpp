// Brute-force verification layer: epsilon-approximate unit-distance graphs on
// regular grids over low-dimensional bodies, BFS connectivity and distances,
// and a strict validator for emitted step paths. Grid graphs are evidence for
// connection claims only; disconnection verdicts always come from the
// analytic predicate, never from a missing grid edge.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "udg/convex.hpp"
#include "udg/geom.hpp"
#include "udg/path.hpp"

namespace udg {

// Regular lattice restricted to the body, spacing h, anchored at the bounding
// box minimum; nodes are the in-body lattice points, edges join nodes whose
// distance is within delta of one. On a regular lattice the unit-cell spatial
// hash degenerates to a fixed annulus of integer offsets, which is
// precomputed once and shared by every node. Immutable after construction.
class GridGraph {
 public:
  // Requires h > 0, h * sqrt(d) <= delta < 0.5, dimension <= 3, and a
  // nonempty node set within the cap. Construction scans lattice chunks in
  // parallel; the result is independent of the schedule.
  GridGraph(const ConvexBody& body, double h, double delta,
            std::size_t node_cap = 2'000'000);

  double spacing() const { return h_; }
  double edge_slack() const { return delta_; }
  std::size_t dim() const { return dims_.size(); }
  std::size_t node_count() const { return nodes_.size(); }
  const Point& node(std::size_t id) const { return nodes_[id]; }
  const std::vector<Point>& nodes() const { return nodes_; }
  const ConvexBody& body() const { return body_; }

  // node ids adjacent to id, in stencil order
  std::vector<std::size_t> neighbors(std::size_t id) const;

  // total edge count; the parallel flag switches between the OpenMP kernel
  // and the serial reference loop (identical sums either way)
  std::uint64_t edge_count(bool parallel = true) const;

  std::size_t component_count() const;
  std::vector<std::size_t> component_labels() const;  // node id -> component id

  // nearest in-body grid node, ties broken lexicographically; throws when
  // the query point is outside the body
  std::size_t snap(const Point& p) const;

  std::optional<std::uint64_t> bfs_hops(std::size_t a, std::size_t b) const;
  std::optional<std::vector<Point>> bfs_polyline(std::size_t a,
                                                 std::size_t b) const;

 private:
  std::vector<std::size_t> lattice_coords(std::size_t id) const;

  ConvexBody body_;
  double h_ = 0.0;
  double delta_ = 0.0;
  Vec origin_;                          // bounding box minimum
  std::vector<std::size_t> dims_;      // lattice extent per dimension
  std::vector<Point> nodes_;           // in-body lattice points, row-major
  std::vector<std::int32_t> cell_id_;  // lattice index -> node id or -1
  std::vector<std::size_t> node_cell_;  // node id -> lattice index
  std::vector<std::vector<int>> stencil_;       // annulus offsets
  std::vector<std::vector<int>> half_stencil_;  // lexicographically positive
};

GridGraph build_grid_graph(const ConvexBody& body, double h, double delta);

// BFS hop count between the grid nodes nearest u and v (nullopt when
// unreachable); throws when an endpoint is outside the body.
std::optional<std::uint64_t> bfs_distance(const GridGraph& g, const Point& u,
                                          const Point& v);

// grid polyline realizing bfs_distance, when the endpoints are connected
std::optional<std::vector<Point>> bfs_witness(const GridGraph& g,
                                              const Point& u, const Point& v);

// ---- path validation ---------------------------------------------------------

struct PathViolation {
  std::size_t index = 0;  // step index for step-length, point index otherwise
  std::string kind;       // "step-length" or "containment"
  double magnitude = 0.0;
};

struct ValidationReport {
  bool ok = true;
  std::vector<PathViolation> violations;
};

// Checks every step length against |len - 1| <= tol and every waypoint
// against body membership at slack tol. The magnitude of a containment
// violation is an upper bound on the outward deficit found by doubling.
ValidationReport validate_path(const ConvexBody& body, const StepPath& p,
                               double tol);

// ---- sampled reports -----------------------------------------------------------

struct PairSample {
  Point u, v;
  std::optional<std::uint64_t> hops;
};

struct OracleReport {
  std::size_t connected_components = 0;
  std::vector<PairSample> pair_distances;
  // grid polylines for the connected samples, index-aligned (empty otherwise)
  std::vector<std::vector<Point>> witness_paths;
};

// Samples `pairs` point pairs in the body (deterministic in seed), snaps them
// to the grid, and records BFS distances and witness polylines.
OracleReport make_oracle_report(const GridGraph& g, std::size_t pairs,
                                std::uint64_t seed);

// component count plus one CSV row per sampled pair
std::string oracle_report_csv(const OracleReport& r);

}  // namespace udg
