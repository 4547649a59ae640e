// Simplex and general convex-body path construction: radius graphs over the
// sphere-touching vertices, routing along radius segments through H-neighbor
// wiggle triangles and unit arcs, and the scale-lift staging that reduces a
// radius-r body to its critical radius-one copy.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "path_detail.hpp"
#include "udg/convex.hpp"
#include "udg/geom.hpp"
#include "udg/path.hpp"

namespace udg {

namespace {

const Tolerances kTol{};

Point centroid(const std::vector<Point>& pts) {
  Point c(Vec(pts[0].dim()));
  for (const Point& p : pts) c += p;
  return c * (1.0 / static_cast<double>(pts.size()));
}

// Farthest point of the copy of `body` scaled by s about C from x. Boxes are
// answered componentwise in the local frame; other shapes scan their vertices.
Point farthest_scaled_vertex(const ConvexBody& body, const Point& C, double s,
                             const Point& x) {
  if (const Hyperrectangle* h = body.as_hyperrectangle()) {
    const Point probe = body.to_local(C + (x - C) * (1.0 / s));
    Vec corner(h->side_lengths.size());
    for (std::size_t i = 0; i < h->side_lengths.size(); ++i) {
      corner[i] = probe[i] < 0.5 * h->side_lengths[i] ? h->side_lengths[i] : 0.0;
    }
    return C + (body.to_world(corner) - C) * s;
  }
  const std::vector<Point> vs = body.vertices();
  Point best = C + (vs[0] - C) * s;
  double bd = distance(best, x);
  for (const Point& v : vs) {
    const Point w = C + (v - C) * s;
    const double d = distance(w, x);
    if (d > bd) {
      bd = d;
      best = w;
    }
  }
  return best;
}

// x inside the copy of `body` scaled by s about C, tested by blowing x up.
bool scaled_contains(const ConvexBody& body, const Point& C, double s,
                     const Point& x) {
  return body.contains(C + (x - C) * (1.0 / s));
}

double offline_distance(const Point& p, const Point& a, const Point& b) {
  const Vec e = normalized(b - a);
  const Vec d = p - a;
  const double t = dot(d, e);
  return std::sqrt(std::max(0.0, norm2(d) - t * t));
}

std::optional<Point> farthest_offline_vertex(const std::vector<Point>& verts,
                                             const Point& a, const Point& b,
                                             double min_off) {
  std::optional<Point> best;
  double bd = min_off;
  for (const Point& v : verts) {
    const double d = offline_distance(v, a, b);
    if (d > bd) {
      bd = d;
      best = v;
    }
  }
  return best;
}

// ---- radius-segment routing ---------------------------------------------------
//
// The context of the well-centered construction: C is the m.e.b. center,
// `domain` the simplex all waypoints must stay in, `nodes` the touching
// vertices (the radius-segment endpoints), `adj` their H-neighbor relation
// (pairs with nonpositive inner product of the radius directions).

struct WcCtx {
  Point C;
  Simplex domain;
  std::vector<Point> nodes;
  std::vector<std::vector<std::size_t>> adj;
};

bool in_domain(const WcCtx& ctx, const Point& p, double margin) {
  const auto bc = barycentric(ctx.domain, p, 1e-9);
  if (!bc) return false;
  return *std::min_element(bc->begin(), bc->end()) >= margin;
}

// The third vertex of the wiggle triangle over the base Q P: first the
// projection of the node centroid onto the routing plane, then a probe along
// the in-plane bisector away from the base when the projection is unusable.
std::optional<Point> select_wiggle_R(const WcCtx& ctx, const Point& P,
                                     const Point& Q) {
  const Point& C = ctx.C;
  const Vec e1 = normalized(P - C);
  Vec w = (Q - C) - e1 * dot(Q - C, e1);
  const double wn = norm(w);
  if (wn <= 1e-9) return std::nullopt;
  const Vec e2 = w * (1.0 / wn);

  auto drop = [&](const Point& p) {
    return pathdetail::P2{dot(p - C, e1), dot(p - C, e2)};
  };
  const pathdetail::P2 pP = drop(P);
  const pathdetail::P2 pQ = drop(Q);
  auto center_inside = [&](const pathdetail::P2& pR, double margin) {
    const pathdetail::Tri2 tri{pP, pQ, pR};
    return tri.contains(pathdetail::P2{0.0, 0.0}, -margin);
  };

  const Point g = centroid(ctx.nodes);
  Point r0 = C;
  r0 += e1 * dot(g - C, e1);
  r0 += e2 * dot(g - C, e2);
  if (in_domain(ctx, r0, 1e-7) && center_inside(drop(r0), 1e-7)) return r0;

  // bisector probe: in-plane direction away from the base midpoint
  const pathdetail::P2 m{pP.x + pQ.x, pP.y + pQ.y};
  const double mn = std::hypot(m.x, m.y);
  if (mn <= 1e-9) return std::nullopt;
  const Vec what = e1 * (-m.x / mn) + e2 * (-m.y / mn);
  if (!in_domain(ctx, C + what * 1e-6, 0.0)) return std::nullopt;
  double lo = 1e-6, hi = 4.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (in_domain(ctx, C + what * mid, 0.0) ? lo : hi) = mid;
  }
  const Point r = C + what * (0.9 * lo);
  if (!center_inside(drop(r), 1e-9)) return std::nullopt;
  return r;
}

// Unit-step path C -> x for x on the radius segment C -> nodes[a]. Each
// H-neighbor Q of the node supplies a candidate crossing curve (the segment
// Q X plus the arc X -> C on the unit sphere around the node); the first
// neighbor whose crossing point verifies inside the domain wins.
StepPath route_radius_point(const WcCtx& ctx, std::size_t a, const Point& x) {
  const Point& C = ctx.C;
  const Point& P = ctx.nodes[a];
  const double t = distance(C, x);
  StepPath out = single_point_path(C);
  if (t <= 1e-12) return out;
  if (std::abs(t - 1.0) <= kTol.geom_eps) {
    out.push_step(x, "radius-segment");
    return out;
  }

  std::vector<std::size_t> qs = ctx.adj[a];
  std::sort(qs.begin(), qs.end(), [&](std::size_t l, std::size_t r) {
    return dot(P - C, ctx.nodes[l] - C) > dot(P - C, ctx.nodes[r] - C);
  });
  for (std::size_t qi : qs) {
    const Point& Q = ctx.nodes[qi];
    const double L = distance(P, Q);
    try {
      const Point M = (P + Q) * 0.5;
      if (distance(C, M) <= 1e-10) {
        // antipodal partner: route in the obtuse triangle over the diameter
        if (std::abs(0.5 * L - 1.0) > 1e-7) continue;
        const auto W =
            farthest_offline_vertex(ctx.domain.vertices, P, Q, 1e-9);
        if (!W) continue;
        return pathdetail::obtuse_route_embedded(P, Q, *W, C, x);
      }
      if (L <= 1.0 + 1e-9) continue;
      if (distance(x, Q) < 1.0 - kTol.geom_eps) continue;
      const Point X = lerp(Q, P, (L - 1.0) / L);
      if (distance(x, X) <= 1.0) {
        // crossing on the segment Q X: wiggle along the base to it
        const Point y = unit_point_on_segment(x, Segment{Q, X});
        const auto R = select_wiggle_R(ctx, P, Q);
        if (!R) continue;
        StepPath p = pathdetail::wiggle_reach_embedded(Q, P, *R, C,
                                                       distance(Q, y));
        p.push_step(x, "radius-segment");
        return p;
      }
      // crossing on the arc: hop C -> node -> arc point -> x
      const Arc arc(Sphere{P, 1.0}, X, C, X - P, C - P);
      const Point y = unit_point_on_arc(x, arc);
      const auto bc = barycentric(ctx.domain, y, 1e-9);
      if (!bc) continue;
      if (*std::min_element(bc->begin(), bc->end()) < -1e-9) continue;
      out = single_point_path(C);
      out.push_step(P, "arc-hop");
      out.push_step(y, "arc-hop");
      out.push_step(x, "radius-segment");
      return out;
    } catch (const std::exception&) {
      continue;
    }
  }
  throw std::runtime_error("radius segment routing failed");
}

// In-segment move s1 -> s2, both on the radius segment C -> nodes[a].
StepPath wc_move(const WcCtx& ctx, std::size_t a, const Point& s1,
                 const Point& s2) {
  StepPath out = single_point_path(s1);
  const double d = distance(s1, s2);
  if (d <= 1e-12) return out;
  if (std::abs(d - 1.0) <= kTol.geom_eps) {
    out.push_step(s2, "radius-segment");
    return out;
  }
  out = route_radius_point(ctx, a, s1).reversed();
  out.append(route_radius_point(ctx, a, s2));
  return out;
}

struct AttachResult {
  std::size_t node = 0;
  Point y;
  bool stepped = false;
};

// Hooks x onto a radius segment: either x already lies on one, or the
// half-space cover provides a node whose segment crosses the unit sphere
// around x.
AttachResult wc_attach(const WcCtx& ctx, const Point& x) {
  const Point& C = ctx.C;
  for (std::size_t a = 0; a < ctx.nodes.size(); ++a) {
    const Vec e = ctx.nodes[a] - C;
    const double el = norm(e);
    if (el <= 1e-12) continue;
    const double proj = dot(x - C, e) / el;
    const double perp2 = std::max(0.0, norm2(x - C) - proj * proj);
    if (perp2 <= 1e-24 && proj >= -1e-12 && proj <= el + 1e-12) {
      return AttachResult{a, x, false};
    }
  }
  std::size_t best = 0;
  double bd = dot(x - C, ctx.nodes[0] - C);
  for (std::size_t a = 1; a < ctx.nodes.size(); ++a) {
    const double d = dot(x - C, ctx.nodes[a] - C);
    if (d < bd) {
      bd = d;
      best = a;
    }
  }
  if (bd > 1e-7) throw std::runtime_error("radius segment attach failed");
  const Point y = unit_point_on_segment(x, Segment{C, ctx.nodes[best]});
  return AttachResult{best, y, true};
}

std::vector<std::size_t> bfs_hops(
    const std::vector<std::vector<std::size_t>>& adj, std::size_t from,
    std::size_t to) {
  std::vector<std::ptrdiff_t> prev(adj.size(), -2);
  std::queue<std::size_t> q;
  q.push(from);
  prev[from] = -1;
  while (!q.empty()) {
    const std::size_t cur = q.front();
    q.pop();
    if (cur == to) break;
    for (std::size_t nb : adj[cur]) {
      if (prev[nb] != -2) continue;
      prev[nb] = static_cast<std::ptrdiff_t>(cur);
      q.push(nb);
    }
  }
  if (prev[to] == -2) throw std::runtime_error("radius graph disconnected");
  std::vector<std::size_t> hops;
  for (std::ptrdiff_t cur = static_cast<std::ptrdiff_t>(to); cur != -1;
       cur = prev[cur]) {
    hops.push_back(static_cast<std::size_t>(cur));
  }
  std::reverse(hops.begin(), hops.end());
  return hops;
}

// Full well-centered route: attach both endpoints, hop across the radius
// graph, and move within segments through C.
StepPath wc_route(const WcCtx& ctx, const Point& from, const Point& to) {
  const AttachResult au = wc_attach(ctx, from);
  const AttachResult av = wc_attach(ctx, to);
  const std::vector<std::size_t> hops = bfs_hops(ctx.adj, au.node, av.node);

  StepPath out = single_point_path(from);
  if (au.stepped) out.push_step(au.y, "radius-segment");
  Point cur = au.y;
  for (std::size_t i = 1; i < hops.size(); ++i) {
    const std::size_t a = hops[i - 1];
    const std::size_t b = hops[i];
    const Point zb = ctx.C + (ctx.nodes[b] - ctx.C) * 0.5;
    const Point xa = unit_point_on_segment(zb, Segment{ctx.C, ctx.nodes[a]});
    out.append(wc_move(ctx, a, cur, xa));
    out.push_step(zb, "arc-hop");
    cur = zb;
  }
  out.append(wc_move(ctx, hops.back(), cur, av.y));
  if (av.stepped) out.push_step(to, "radius-segment");
  return out;
}

// Core route when the center sits on a diameter: both endpoints are attached
// to the antipodal segment's triangle and connected along its base.
StepPath antipodal_core(const Point& C, const Point& V1, const Point& V2,
                        const Point& Roff, const Point& from, const Point& to) {
  const Simplex tri{{V1, V2, Roff}};
  auto attach = [&](const Point& x) -> std::pair<Point, bool> {
    const auto bc = barycentric(tri, x, 1e-9);
    if (bc && *std::min_element(bc->begin(), bc->end()) >= -1e-9) {
      return {x, false};
    }
    const Point& vi =
        dot(x - C, V1 - C) <= dot(x - C, V2 - C) ? V1 : V2;
    return {unit_point_on_segment(x, Segment{C, vi}), true};
  };
  const auto [yu, su] = attach(from);
  const auto [yv, sv] = attach(to);
  StepPath out = single_point_path(from);
  if (su) out.push_step(yu, "radius-segment");
  out.append(pathdetail::obtuse_route_embedded(V1, V2, Roff, yu, yv));
  if (sv) out.push_step(to, "radius-segment");
  return out;
}

std::vector<std::vector<std::size_t>> node_adjacency(const Point& C,
                                                     const std::vector<Point>& nodes) {
  std::vector<std::vector<std::size_t>> adj(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (dot(nodes[i] - C, nodes[j] - C) <= kTol.geom_eps) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  return adj;
}

}  // namespace

// ---- radius graphs ---------------------------------------------------------------

RadiusGraph radius_graph(const Simplex& s) {
  const MebResult mb = meb(s.vertices);
  RadiusGraph g;
  g.center = mb.ball.center;
  for (const Point& v : s.vertices) {
    if (std::abs(distance(g.center, v) - mb.ball.radius) <= 1e-7) {
      g.nodes.push_back(v);
    }
  }
  g.adjacency = node_adjacency(g.center, g.nodes);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (std::size_t j : g.adjacency[i]) {
      if (i < j) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

std::optional<std::size_t> radius_graph_distance(const RadiusGraph& g,
                                                 std::size_t i, std::size_t j) {
  if (i >= g.nodes.size() || j >= g.nodes.size()) {
    throw std::invalid_argument("radius graph: node index out of range");
  }
  try {
    return bfs_hops(g.adjacency, i, j).size() - 1;
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
}

// ---- simplex paths ------------------------------------------------------------------

StepPath simplex_path(const Simplex& s, const Point& u, const Point& v) {
  if (s.vertices.size() < 3) {
    throw std::invalid_argument("simplex path: affine dimension must be at least two");
  }
  const MebResult mb = meb(s.vertices);
  const Point C = mb.ball.center;
  const double r = mb.ball.radius;
  if (std::abs(r - 1.0) > 1e-7) {
    throw std::invalid_argument("simplex path: radius must be one");
  }
  if (r < 1.0 - 1e-12) {
    throw std::invalid_argument(
        "simplex path: radius below one, unit-distance graph is disconnected");
  }
  if (affine_dimension(ConvexBody{s}) < 2) {
    throw std::invalid_argument("simplex path: affine dimension must be at least two");
  }
  auto inside = [&](const Simplex& sx, const Point& p) {
    const auto bc = barycentric(sx, p, 1e-9);
    return bc && *std::min_element(bc->begin(), bc->end()) >= -1e-9;
  };
  if (!inside(s, u) || !inside(s, v)) {
    throw std::invalid_argument("simplex path: endpoint outside the simplex");
  }
  if (distance(u, v) <= 1e-12) return single_point_path(u);

  // normalize to the concentric radius-one copy; one bridge step per endpoint
  const bool shrink = r > 1.0 + 1e-12;
  Simplex sp = s;
  if (shrink) {
    for (Point& vx : sp.vertices) vx = C + (vx - C) * (1.0 / r);
  }

  StepPath out = single_point_path(u);
  Point ue = u, ve = v;
  if (shrink) {
    auto bridge = [&](const Point& x) -> Point {
      const auto bc = barycentric(sp, x, 1e-9);
      if (bc && *std::min_element(bc->begin(), bc->end()) >= -1e-12) return x;
      const Point pin = C + (x - C) * (1.0 / r);
      Point qf = sp.vertices[0];
      for (const Point& w : sp.vertices) {
        if (distance(w, x) > distance(qf, x)) qf = w;
      }
      return unit_point_on_segment(x, Segment{pin, qf});
    };
    ue = bridge(u);
    if (distance(ue, u) > 1e-12) out.push_step(ue, "scale-lift");
    ve = bridge(v);
  }

  const auto bc = barycentric(sp, C);
  if (!bc) throw std::runtime_error("simplex path: center outside the affine hull");
  std::vector<std::size_t> F;
  for (std::size_t i = 0; i < bc->size(); ++i) {
    if ((*bc)[i] > 1e-9) F.push_back(i);
  }
  if (F.size() < 2) throw std::runtime_error("simplex path: degenerate center face");

  StepPath core;
  if (F.size() == 2) {
    const Point& V1 = sp.vertices[F[0]];
    const Point& V2 = sp.vertices[F[1]];
    const auto W = farthest_offline_vertex(sp.vertices, V1, V2, 1e-9);
    if (!W) throw std::runtime_error("simplex path: no vertex off the diameter");
    core = antipodal_core(C, V1, V2, *W, ue, ve);
  } else {
    WcCtx ctx;
    ctx.C = C;
    ctx.domain = sp;
    for (const Point& vx : sp.vertices) {
      if (std::abs(distance(C, vx) - 1.0) <= 1e-7) ctx.nodes.push_back(vx);
    }
    ctx.adj = node_adjacency(C, ctx.nodes);
    core = wc_route(ctx, ue, ve);
  }
  out.append(core);
  if (shrink && distance(ve, v) > 1e-12) out.push_step(v, "scale-lift");
  pathdetail::snap_endpoints(out, u, v);
  return out;
}

// ---- general convex bodies -------------------------------------------------------------

StepPath convex_path(const ConvexBody& body, const Point& u, const Point& v) {
  const MebResult mb = meb(body);
  const Point C = mb.ball.center;
  const double r = mb.ball.radius;
  if (r < 1.0 - 1e-7) {
    throw std::invalid_argument("convex path: radius must be at least one");
  }
  if (r < 1.0 - 1e-12) {
    throw std::invalid_argument(
        "convex path: radius below one, unit-distance graph is disconnected");
  }
  if (affine_dimension(body) < 2) {
    throw std::invalid_argument("convex path: affine dimension must be at least two");
  }
  if (!body.contains(u) || !body.contains(v)) {
    throw std::invalid_argument("convex path: endpoint outside the body");
  }
  if (distance(u, v) <= 1e-12) return single_point_path(u);

  // stage ladder 1 = r_0 < r_1 < ... < r_m = r, consecutive gaps at most one
  std::vector<double> radii{1.0};
  for (double rk = 2.0; rk < r - 1e-12; rk += 1.0) radii.push_back(rk);
  if (r > 1.0 + 1e-12) radii.push_back(r);

  // one unit bridge step per stage, from the current point into the next
  // smaller concentric copy
  auto descend = [&](const Point& x0) {
    std::pair<StepPath, Point> res{single_point_path(x0), x0};
    for (std::size_t k = radii.size() - 1; k >= 1; --k) {
      const double s_in = radii[k - 1] / r;
      if (scaled_contains(body, C, s_in, res.second)) continue;
      const Point P = C + (res.second - C) * (radii[k - 1] / radii[k]);
      const Point Q = farthest_scaled_vertex(body, C, s_in, res.second);
      const Point R = unit_point_on_segment(res.second, Segment{P, Q});
      res.first.push_step(R, "scale-lift");
      res.second = R;
    }
    return res;
  };
  const auto [chain_u, u0] = descend(u);
  const auto [chain_v, v0] = descend(v);

  // critical core: route through the support simplex of the m.e.b.
  std::vector<Point> s0;
  s0.reserve(mb.support.size());
  for (const Point& sp : mb.support) s0.push_back(C + (sp - C) * (1.0 / r));
  const auto cc = convex_combination(s0, C, 1e-7);
  if (!cc) throw std::runtime_error("convex path: center not in the support hull");
  std::vector<Point> sigma;
  for (std::size_t i = 0; i < s0.size(); ++i) {
    if ((*cc)[i] > 0.0) sigma.push_back(s0[i]);
  }
  if (sigma.size() < 2) throw std::runtime_error("convex path: degenerate support");

  StepPath core;
  if (sigma.size() == 2) {
    if (std::abs(distance(sigma[0], sigma[1]) - 2.0) > 1e-6) {
      throw std::runtime_error("convex path: support pair is not antipodal");
    }
    std::vector<Point> vs0;
    for (const Point& vx : body.vertices()) vs0.push_back(C + (vx - C) * (1.0 / r));
    const auto W = farthest_offline_vertex(vs0, sigma[0], sigma[1], 1e-9);
    if (!W) throw std::runtime_error("convex path: no vertex off the diameter");
    core = antipodal_core(C, sigma[0], sigma[1], *W, u0, v0);
  } else {
    WcCtx ctx;
    ctx.C = C;
    ctx.domain = Simplex{sigma};
    ctx.nodes = sigma;
    ctx.adj = node_adjacency(C, ctx.nodes);
    core = wc_route(ctx, u0, v0);
  }

  StepPath out = chain_u;
  out.append(core);
  out.append(chain_v.reversed());
  pathdetail::snap_endpoints(out, u, v);
  return out;
}

// ---- single-stage scale lift ---------------------------------------------------------

std::optional<Point> scale_lift_bridge(const ConvexBody& bodyl, const Point& x) {
  const MebResult mb = meb(bodyl);
  const double r = mb.ball.radius;
  if (r < 1.0 - 1e-7) {
    throw std::invalid_argument("scale lift: radius must be at least one");
  }
  if (!bodyl.contains(x)) {
    throw std::invalid_argument("scale lift: point outside the body");
  }
  const double lambda = r / std::max(1.0, r - 1.0);
  if (lambda <= 1.0 + 1e-12) return std::nullopt;
  const Point& C = mb.ball.center;
  const double s_in = 1.0 / lambda;
  if (scaled_contains(bodyl, C, s_in, x)) return std::nullopt;
  const Point P = C + (x - C) * s_in;
  const Point Q = farthest_scaled_vertex(bodyl, C, s_in, x);
  return unit_point_on_segment(x, Segment{P, Q});
}

StepPath scale_lift(const ConvexBody& bodyl, const StepPath& core_path,
                    const Point& x) {
  const auto R = scale_lift_bridge(bodyl, x);
  if (!R) return core_path;
  if (core_path.points.empty() ||
      distance(core_path.points.back(), *R) > 1e-10) {
    throw std::invalid_argument("scale lift: core path must end at the bridge point");
  }
  StepPath out = core_path;
  out.points.back() = *R;
  out.push_step(x, "scale-lift");
  return out;
}

}  // namespace udg
