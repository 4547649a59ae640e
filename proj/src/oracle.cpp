// Grid-graph oracle: lattice construction, annulus stencil edges, BFS
// queries, component labeling, and the strict path validator. The lattice
// never proves disconnection; it only corroborates connection claims.

#include "udg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <queue>
#include <stdexcept>

#include "udg/rng.hpp"

namespace udg {

namespace {

std::string fmt_g(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace

GridGraph::GridGraph(const ConvexBody& body, double h, double delta,
                     std::size_t node_cap)
    : body_(body), h_(h), delta_(delta) {
  const std::size_t d = body.dim();
  if (d < 1 || d > 3) {
    throw std::invalid_argument("grid graph: dimension must be 1, 2, or 3");
  }
  if (!(h > 0.0)) throw std::invalid_argument("grid graph: spacing must be positive");
  if (delta < h * std::sqrt(static_cast<double>(d)) - 1e-12 || delta >= 0.5) {
    throw std::invalid_argument(
        "grid graph: edge slack must satisfy h*sqrt(d) <= delta < 0.5");
  }

  const auto [lo, hi] = body.bounding_box();
  origin_ = lo;
  dims_.resize(d);
  std::size_t lattice = 1;
  for (std::size_t i = 0; i < d; ++i) {
    dims_[i] = static_cast<std::size_t>(std::floor((hi[i] - lo[i]) / h + 1e-9)) + 1;
    lattice *= dims_[i];
    if (lattice > 20'000'000) {
      throw std::runtime_error("grid graph: lattice too large, raise h");
    }
  }

  // membership scan, parallel by lattice chunk; the flag array keeps node
  // ids independent of the thread schedule
  std::vector<char> inside(lattice, 0);
  const std::int64_t ln = static_cast<std::int64_t>(lattice);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t cell = 0; cell < ln; ++cell) {
    std::size_t rest = static_cast<std::size_t>(cell);
    Vec x(d);
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = origin_[i] + h_ * static_cast<double>(rest % dims_[i]);
      rest /= dims_[i];
    }
    inside[static_cast<std::size_t>(cell)] = body_.contains(x) ? 1 : 0;
  }

  cell_id_.assign(lattice, -1);
  for (std::size_t cell = 0; cell < lattice; ++cell) {
    if (!inside[cell]) continue;
    if (nodes_.size() >= node_cap) {
      throw std::runtime_error("grid graph: node cap exceeded, raise h");
    }
    std::size_t rest = cell;
    Vec x(d);
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = origin_[i] + h_ * static_cast<double>(rest % dims_[i]);
      rest /= dims_[i];
    }
    cell_id_[cell] = static_cast<std::int32_t>(nodes_.size());
    node_cell_.push_back(cell);
    nodes_.push_back(x);
  }
  if (nodes_.empty()) {
    throw std::runtime_error("grid graph: no lattice points inside the body");
  }

  // annulus stencil: integer offsets whose lattice distance falls in
  // [1 - delta, 1 + delta]; the edge relation is decided by the offset alone
  const int R = static_cast<int>(std::floor((1.0 + delta_) / h_)) + 1;
  std::vector<int> o(d, 0);
  const int zlo = d > 2 ? -R : 0, zhi = d > 2 ? R : 0;
  const int ylo = d > 1 ? -R : 0, yhi = d > 1 ? R : 0;
  for (int z = zlo; z <= zhi; ++z) {
    for (int y = ylo; y <= yhi; ++y) {
      for (int x = -R; x <= R; ++x) {
        const double n2 = static_cast<double>(x) * x + static_cast<double>(y) * y +
                          static_cast<double>(z) * z;
        const double dist = h_ * std::sqrt(n2);
        if (dist < 1.0 - delta_ - 1e-12 || dist > 1.0 + delta_ + 1e-12) continue;
        o[0] = x;
        if (d > 1) o[1] = y;
        if (d > 2) o[2] = z;
        stencil_.push_back(o);
        const bool positive = x > 0 || (x == 0 && (y > 0 || (y == 0 && z > 0)));
        if (positive) half_stencil_.push_back(o);
      }
    }
  }
}

std::vector<std::size_t> GridGraph::lattice_coords(std::size_t id) const {
  std::size_t rest = node_cell_[id];
  std::vector<std::size_t> k(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    k[i] = rest % dims_[i];
    rest /= dims_[i];
  }
  return k;
}

std::vector<std::size_t> GridGraph::neighbors(std::size_t id) const {
  const std::vector<std::size_t> k = lattice_coords(id);
  const std::size_t d = dims_.size();
  std::vector<std::size_t> out;
  for (const std::vector<int>& o : stencil_) {
    std::size_t cell = 0, stride = 1;
    bool ok = true;
    for (std::size_t i = 0; i < d; ++i) {
      const std::int64_t ki = static_cast<std::int64_t>(k[i]) + o[i];
      if (ki < 0 || ki >= static_cast<std::int64_t>(dims_[i])) {
        ok = false;
        break;
      }
      cell += static_cast<std::size_t>(ki) * stride;
      stride *= dims_[i];
    }
    if (!ok) continue;
    const std::int32_t nb = cell_id_[cell];
    if (nb >= 0) out.push_back(static_cast<std::size_t>(nb));
  }
  return out;
}

std::uint64_t GridGraph::edge_count(bool parallel) const {
  const std::int64_t n = static_cast<std::int64_t>(nodes_.size());
  const std::size_t d = dims_.size();
  auto half_degree = [&](std::int64_t id) {
    const std::vector<std::size_t> k = lattice_coords(static_cast<std::size_t>(id));
    std::uint64_t c = 0;
    for (const std::vector<int>& o : half_stencil_) {
      std::size_t cell = 0, stride = 1;
      bool ok = true;
      for (std::size_t i = 0; i < d; ++i) {
        const std::int64_t ki = static_cast<std::int64_t>(k[i]) + o[i];
        if (ki < 0 || ki >= static_cast<std::int64_t>(dims_[i])) {
          ok = false;
          break;
        }
        cell += static_cast<std::size_t>(ki) * stride;
        stride *= dims_[i];
      }
      if (ok && cell_id_[cell] >= 0) ++c;
    }
    return c;
  };

  std::uint64_t total = 0;
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : total) schedule(static)
#endif
    for (std::int64_t i = 0; i < n; ++i) total += half_degree(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) total += half_degree(i);
  }
  return total;
}

std::vector<std::size_t> GridGraph::component_labels() const {
  const std::size_t n = nodes_.size();
  const std::size_t d = dims_.size();
  std::vector<std::size_t> label(n, static_cast<std::size_t>(-1));
  std::vector<std::size_t> queue;
  std::size_t comp = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (label[root] != static_cast<std::size_t>(-1)) continue;
    label[root] = comp;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t cur = queue[head];
      const std::vector<std::size_t> k = lattice_coords(cur);
      for (const std::vector<int>& o : stencil_) {
        std::size_t cell = 0, stride = 1;
        bool ok = true;
        for (std::size_t i = 0; i < d; ++i) {
          const std::int64_t ki = static_cast<std::int64_t>(k[i]) + o[i];
          if (ki < 0 || ki >= static_cast<std::int64_t>(dims_[i])) {
            ok = false;
            break;
          }
          cell += static_cast<std::size_t>(ki) * stride;
          stride *= dims_[i];
        }
        if (!ok) continue;
        const std::int32_t nb = cell_id_[cell];
        if (nb < 0) continue;
        const std::size_t nid = static_cast<std::size_t>(nb);
        if (label[nid] != static_cast<std::size_t>(-1)) continue;
        label[nid] = comp;
        queue.push_back(nid);
      }
    }
    ++comp;
  }
  return label;
}

std::size_t GridGraph::component_count() const {
  const std::vector<std::size_t> label = component_labels();
  std::size_t m = 0;
  for (std::size_t l : label) m = std::max(m, l + 1);
  return m;
}

std::size_t GridGraph::snap(const Point& p) const {
  const std::size_t d = dims_.size();
  if (p.dim() != d) throw std::invalid_argument("grid snap: dimension mismatch");
  if (!body_.contains(p)) {
    throw std::invalid_argument("grid snap: point outside the body");
  }
  std::vector<std::int64_t> base(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double t = (p[i] - origin_[i]) / h_;
    base[i] = std::min<std::int64_t>(
        static_cast<std::int64_t>(dims_[i]) - 1,
        std::max<std::int64_t>(0, static_cast<std::int64_t>(std::llround(t))));
  }
  std::int64_t max_ring = 0;
  for (std::size_t i = 0; i < d; ++i) {
    max_ring = std::max(max_ring, static_cast<std::int64_t>(dims_[i]));
  }

  std::size_t best = static_cast<std::size_t>(-1);
  double best_d2 = 0.0;
  std::vector<double> best_key;
  auto consider = [&](const std::vector<std::int64_t>& k) {
    std::size_t cell = 0, stride = 1;
    for (std::size_t i = 0; i < d; ++i) {
      if (k[i] < 0 || k[i] >= static_cast<std::int64_t>(dims_[i])) return;
      cell += static_cast<std::size_t>(k[i]) * stride;
      stride *= dims_[i];
    }
    const std::int32_t nb = cell_id_[cell];
    if (nb < 0) return;
    const std::size_t id = static_cast<std::size_t>(nb);
    const Point& q = nodes_[id];
    double d2 = 0.0;
    std::vector<double> key(d);
    for (std::size_t i = 0; i < d; ++i) {
      d2 += (q[i] - p[i]) * (q[i] - p[i]);
      key[i] = q[i];
    }
    if (best == static_cast<std::size_t>(-1) || d2 < best_d2 - 1e-15 ||
        (d2 <= best_d2 + 1e-15 && key < best_key)) {
      best = id;
      best_d2 = d2;
      best_key = key;
    }
  };

  std::vector<std::int64_t> k(d);
  for (std::int64_t ring = 0; ring <= max_ring; ++ring) {
    if (best != static_cast<std::size_t>(-1) &&
        static_cast<double>(ring - 1) * h_ > std::sqrt(best_d2)) {
      break;
    }
    // cells at Chebyshev distance exactly `ring` from the base cell
    const std::int64_t zlo = d > 2 ? -ring : 0, zhi = d > 2 ? ring : 0;
    const std::int64_t ylo = d > 1 ? -ring : 0, yhi = d > 1 ? ring : 0;
    for (std::int64_t z = zlo; z <= zhi; ++z) {
      for (std::int64_t y = ylo; y <= yhi; ++y) {
        for (std::int64_t x = -ring; x <= ring; ++x) {
          const std::int64_t cheb =
              std::max({std::llabs(x), std::llabs(y), std::llabs(z)});
          if (cheb != ring) continue;
          k[0] = base[0] + x;
          if (d > 1) k[1] = base[1] + y;
          if (d > 2) k[2] = base[2] + z;
          consider(k);
        }
      }
    }
  }
  if (best == static_cast<std::size_t>(-1)) {
    throw std::runtime_error("grid snap: no node found");
  }
  return best;
}

std::optional<std::uint64_t> GridGraph::bfs_hops(std::size_t a,
                                                 std::size_t b) const {
  if (a >= nodes_.size() || b >= nodes_.size()) {
    throw std::invalid_argument("grid bfs: node id out of range");
  }
  if (a == b) return 0;
  std::vector<std::uint32_t> dist(nodes_.size(),
                                  std::numeric_limits<std::uint32_t>::max());
  std::vector<std::size_t> queue;
  dist[a] = 0;
  queue.push_back(a);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t cur = queue[head];
    if (cur == b) return dist[b];
    for (std::size_t nb : neighbors(cur)) {
      if (dist[nb] != std::numeric_limits<std::uint32_t>::max()) continue;
      dist[nb] = dist[cur] + 1;
      queue.push_back(nb);
    }
  }
  if (dist[b] == std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  return dist[b];
}

std::optional<std::vector<Point>> GridGraph::bfs_polyline(std::size_t a,
                                                          std::size_t b) const {
  if (a >= nodes_.size() || b >= nodes_.size()) {
    throw std::invalid_argument("grid bfs: node id out of range");
  }
  std::vector<std::int64_t> prev(nodes_.size(), -2);
  std::vector<std::size_t> queue;
  prev[a] = -1;
  queue.push_back(a);
  bool found = a == b;
  for (std::size_t head = 0; head < queue.size() && !found; ++head) {
    const std::size_t cur = queue[head];
    for (std::size_t nb : neighbors(cur)) {
      if (prev[nb] != -2) continue;
      prev[nb] = static_cast<std::int64_t>(cur);
      if (nb == b) {
        found = true;
        break;
      }
      queue.push_back(nb);
    }
  }
  if (!found) return std::nullopt;
  std::vector<Point> out;
  std::size_t cur = b;
  while (true) {
    out.push_back(nodes_[cur]);
    if (prev[cur] == -1) break;
    cur = static_cast<std::size_t>(prev[cur]);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

GridGraph build_grid_graph(const ConvexBody& body, double h, double delta) {
  return GridGraph(body, h, delta);
}

std::optional<std::uint64_t> bfs_distance(const GridGraph& g, const Point& u,
                                          const Point& v) {
  return g.bfs_hops(g.snap(u), g.snap(v));
}

std::optional<std::vector<Point>> bfs_witness(const GridGraph& g,
                                              const Point& u, const Point& v) {
  return g.bfs_polyline(g.snap(u), g.snap(v));
}

// ---- path validation ---------------------------------------------------------

ValidationReport validate_path(const ConvexBody& body, const StepPath& p,
                               double tol) {
  if (tol < 0.0) throw std::invalid_argument("validate: tolerance must be >= 0");
  ValidationReport rep;
  for (std::size_t i = 0; i + 1 < p.points.size(); ++i) {
    const double len = distance(p.points[i], p.points[i + 1]);
    const double err = std::abs(len - 1.0);
    if (err > tol) rep.violations.push_back({i, "step-length", err});
  }
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    if (body.contains(p.points[i], tol)) continue;
    double eps = std::max(tol, 1e-12);
    while (eps < 1e6 && !body.contains(p.points[i], eps)) eps *= 2.0;
    rep.violations.push_back({i, "containment", eps});
  }
  rep.ok = rep.violations.empty();
  return rep;
}

// ---- sampled reports -----------------------------------------------------------

OracleReport make_oracle_report(const GridGraph& g, std::size_t pairs,
                                std::uint64_t seed) {
  const ConvexBody& body = g.body();
  const std::size_t d = body.dim();
  const auto [lo, hi] = body.bounding_box();
  Rng rng = rng_stream(seed, 0);

  auto sample = [&]() -> Point {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      Vec x(d);
      for (std::size_t i = 0; i < d; ++i) x[i] = rng.next_range(lo[i], hi[i]);
      if (body.contains(x)) return x;
    }
    // thin body: fall back to a random convex combination of the vertices
    const std::vector<Point> verts = body.vertices();
    std::vector<double> w(verts.size());
    double tot = 0.0;
    for (double& wi : w) {
      wi = -std::log(1.0 - rng.next_double());
      tot += wi;
    }
    Vec x(d);
    for (std::size_t j = 0; j < verts.size(); ++j) x += verts[j] * (w[j] / tot);
    return x;
  };

  OracleReport rep;
  rep.connected_components = g.component_count();
  for (std::size_t k = 0; k < pairs; ++k) {
    PairSample s;
    s.u = sample();
    s.v = sample();
    const std::size_t a = g.snap(s.u), b = g.snap(s.v);
    s.hops = g.bfs_hops(a, b);
    rep.pair_distances.push_back(s);
    if (s.hops.has_value()) {
      rep.witness_paths.push_back(*g.bfs_polyline(a, b));
    } else {
      rep.witness_paths.emplace_back();
    }
  }
  return rep;
}

std::string oracle_report_csv(const OracleReport& r) {
  std::string out = "components," + std::to_string(r.connected_components) + "\n";
  const std::size_t d =
      r.pair_distances.empty() ? 0 : r.pair_distances.front().u.dim();
  out += "pair";
  const char* axes[3] = {"x", "y", "z"};
  for (std::size_t i = 0; i < d; ++i) out += std::string(",u") + axes[i];
  for (std::size_t i = 0; i < d; ++i) out += std::string(",v") + axes[i];
  out += ",hops\n";
  for (std::size_t k = 0; k < r.pair_distances.size(); ++k) {
    const PairSample& s = r.pair_distances[k];
    out += std::to_string(k);
    for (std::size_t i = 0; i < d; ++i) out += "," + fmt_g(s.u[i]);
    for (std::size_t i = 0; i < d; ++i) out += "," + fmt_g(s.v[i]);
    out += ",";
    out += s.hops.has_value() ? std::to_string(*s.hops) : "unreachable";
    out += "\n";
  }
  return out;
}

}  // namespace udg
