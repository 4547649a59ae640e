// Box path constructions: skeleton routes through the critical hypercube,
// the radius-one rectangle with its wiggle corridor, the diagonal reduction
// for general boxes, and the matching step-count bounds.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "path_detail.hpp"
#include "udg/convex.hpp"
#include "udg/geom.hpp"
#include "udg/path.hpp"

namespace udg {

namespace {

const Tolerances kTol{};

// ---- skeleton routing shared by the cube and the fat rectangle ----------------
//
// Routes p to the center M of the box [0, side_1] x ... x [0, side_d] whose
// corners all sit at unit distance from M: one unit crossing P'' on the corner
// polyline, one bisector point L in the adjacent facet, one corner, then M.
// Requires every "other side" bisector cap to clear one, which the callers
// guarantee (cube sides obey (d-1) l^2 >= 2, the rectangle branch runs only
// with both sides at least one).
StepPath skeleton_route_to_center(const std::vector<double>& side,
                                  const Point& M, const Point& p) {
  const std::size_t d = side.size();
  const double dm = distance(p, M);
  StepPath out = single_point_path(p);
  if (dm <= 1e-12) return single_point_path(M);
  if (std::abs(dm - 1.0) <= kTol.geom_eps) {
    out.push_step(M, "skeleton");
    return out;
  }

  // corner polyline from the nearest corner to its opposite, one dim at a time
  Vec V(d);
  for (std::size_t i = 0; i < d; ++i) V[i] = p[i] <= 0.5 * side[i] ? 0.0 : side[i];
  std::vector<Point> corners{V};
  Vec cur = V;
  for (std::size_t i = 0; i < d; ++i) {
    cur[i] = side[i] - cur[i];
    corners.push_back(cur);
  }
  const Point pp = unit_point_on_polyline(p, corners);

  // locate the skeleton edge carrying pp
  std::size_t edge = d;
  for (std::size_t j = 0; j < d && edge == d; ++j) {
    double off = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      if (i != j) off = std::max(off, std::abs(pp[i] - corners[j][i]));
    }
    const double llo = std::min(corners[j][j], corners[j + 1][j]);
    const double lhi = std::max(corners[j][j], corners[j + 1][j]);
    if (off <= 1e-9 && pp[j] >= llo - 1e-9 && pp[j] <= lhi + 1e-9) edge = j;
  }
  if (edge == d) throw std::runtime_error("skeleton route: crossing off the polyline");

  const Vec& W1 = corners[edge];
  const double a = std::abs(pp[edge] - W1[edge]);
  out.push_step(pp, "skeleton");
  if (a <= 1e-12) {
    out.push_step(M, "skeleton");
    return out;
  }

  // bisector point of W1 and pp, pushed into the box until unit distance:
  // d(L, W1)^2 = a^2/4 + sum of the inward offsets squared
  double h2 = 1.0 - 0.25 * a * a;
  std::size_t inward_dims = d - 1;
  const double h = std::sqrt(std::max(0.0, h2 / static_cast<double>(inward_dims)));
  Vec L = W1;
  L[edge] = W1[edge] + (pp[edge] > W1[edge] ? 0.5 * a : -0.5 * a);
  for (std::size_t i = 0; i < d; ++i) {
    if (i == edge) continue;
    L[i] = W1[i] == 0.0 ? h : W1[i] - h;
  }
  out.push_step(L, "skeleton");
  out.push_step(W1, "skeleton");
  out.push_step(M, "skeleton");
  return out;
}

// componentwise farthest corner of the box [C - half, C + half] from x
Point far_box_corner(const Point& C, const std::vector<double>& half,
                     const Point& x) {
  Vec q(C.dim());
  for (std::size_t i = 0; i < C.dim(); ++i) {
    q[i] = x[i] < C[i] ? C[i] + half[i] : C[i] - half[i];
  }
  return q;
}

bool in_centered_box(const Point& C, const std::vector<double>& half,
                     const Point& x, double eps) {
  for (std::size_t i = 0; i < C.dim(); ++i) {
    if (std::abs(x[i] - C[i]) > half[i] + eps) return false;
  }
  return true;
}

std::uint64_t wiggle_cycles(double span, double h) {
  const double qmax = 2.0 * (1.0 - std::sqrt(1.0 - h * h));
  return static_cast<std::uint64_t>(std::max(1.0, std::ceil(span / qmax - 1e-12)));
}

}  // namespace

// ---- hypercube -------------------------------------------------------------------

StepPath hypercube_path(std::size_t d, const Point& u, const Point& v) {
  if (d < 2) {
    throw std::invalid_argument("hypercube path: dimension must be at least two");
  }
  if (u.dim() != d || v.dim() != d) {
    throw std::invalid_argument("hypercube path: endpoint dimension mismatch");
  }
  const double l = 2.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (u[i] < -1e-9 || u[i] > l + 1e-9 || v[i] < -1e-9 || v[i] > l + 1e-9) {
      throw std::invalid_argument("hypercube path: endpoint outside the cube");
    }
  }
  if (distance(u, v) <= 1e-12) return single_point_path(u);

  const std::vector<double> side(d, l);
  Vec M(d);
  for (std::size_t i = 0; i < d; ++i) M[i] = 0.5 * l;

  StepPath out = skeleton_route_to_center(side, M, u);
  out.append(skeleton_route_to_center(side, M, v).reversed());
  pathdetail::snap_endpoints(out, u, v);
  return out;
}

// ---- radius-one rectangle -----------------------------------------------------------

DiameterBound rectangle2d_bound(double l1, double l2) {
  if (!(l1 >= l2) || l2 <= 0.0) {
    throw std::invalid_argument("rectangle bound: need l1 >= l2 > 0");
  }
  if (std::abs(std::hypot(l1, l2) - 2.0) > 1e-7) {
    throw std::invalid_argument("rectangle bound: diagonal must be two");
  }
  DiameterBound b;
  b.formula_id = "rectangle2d-diam";
  b.parameters = {l1, l2};
  if (l2 >= 1.0) {
    b.bound = 8;
    return b;
  }
  b.bound = 4 + 8 * wiggle_cycles(l1 - 1.0, l2);
  return b;
}

StepPath rectangle2d_path(double l1, double l2, const Point& u, const Point& v) {
  if (!(l1 >= l2) || l2 <= 1e-9) {
    throw std::invalid_argument("rectangle path: need l1 >= l2 > 0");
  }
  const double diag = std::hypot(l1, l2);
  if (std::abs(diag - 2.0) > 1e-7) {
    throw std::invalid_argument("rectangle path: diagonal must be two");
  }
  const double r = 0.5 * diag;
  if (r < 1.0 - 1e-12) {
    throw std::invalid_argument(
        "rectangle path: radius below one, unit-distance graph is disconnected");
  }
  if (u.dim() != 2 || v.dim() != 2) {
    throw std::invalid_argument("rectangle path: endpoints must be planar");
  }
  for (const Point* p : {&u, &v}) {
    if ((*p)[0] < -1e-9 || (*p)[0] > l1 + 1e-9 || (*p)[1] < -1e-9 ||
        (*p)[1] > l2 + 1e-9) {
      throw std::invalid_argument("rectangle path: endpoint outside the rectangle");
    }
  }
  if (distance(u, v) <= 1e-12) return single_point_path(u);

  // critical concentric copy [o, o + m], diagonal exactly two
  const Point C = Vec{0.5 * l1, 0.5 * l2};
  const double m1 = l1 / r;
  const double m2 = l2 / r;
  const Point o = Vec{C[0] - 0.5 * m1, C[1] - 0.5 * m2};
  const std::vector<double> half{0.5 * m1, 0.5 * m2};

  StepPath out = single_point_path(u);
  Point ue = u, ve = v;
  auto bridge = [&](const Point& x) -> Point {
    if (in_centered_box(C, half, x, 1e-12)) return x;
    const Point P = C + (x - C) * (1.0 / r);
    const Point Q = far_box_corner(C, half, x);
    return unit_point_on_segment(x, Segment{P, Q});
  };
  ue = bridge(u);
  if (distance(ue, u) > 1e-12) out.push_step(ue, "scale-lift");
  ve = bridge(v);

  // local frame of the critical copy
  const Vec M = Vec{0.5 * m1, 0.5 * m2};
  auto to_loc = [&](const Point& x) { return x - o; };
  auto to_world = [&](const Point& x) { return o + x; };

  // route M -> p in local coordinates
  auto route = [&](const Point& p) -> StepPath {
    const double dm = distance(p, M);
    if (dm <= 1e-12) return single_point_path(M);
    StepPath res = single_point_path(M);
    if (std::abs(dm - 1.0) <= kTol.geom_eps) {
      res.push_step(p, "skeleton");
      return res;
    }
    if (m2 >= 1.0) {
      return skeleton_route_to_center({m1, m2}, M, p).reversed();
    }
    // thin rectangle: reflect p into the quadrant away from the origin, then
    // cross the base polyline/arc and wiggle to the crossing
    const bool fx = p[0] < M[0];
    const bool fy = p[1] < M[1];
    auto reflect = [&](const Point& x) {
      Vec y = x;
      if (fx) y[0] = m1 - y[0];
      if (fy) y[1] = m2 - y[1];
      return y;
    };
    const Point pr = reflect(p);
    const Point origin = Vec{0.0, 0.0};
    const Point seg_end = Vec{m1 - 1.0, 0.0};
    const Point arc_center = Vec{m1, 0.0};
    StepPath raw = single_point_path(M);
    if (distance(pr, seg_end) - 1.0 <= 0.0) {
      // crossing on the base segment: corner hop, wiggle along the base, hop up
      const Point w = unit_point_on_segment(pr, Segment{origin, seg_end});
      raw.push_step(origin, "skeleton");
      const pathdetail::Path2 wig = pathdetail::wiggle_route(
          0.0, m1 - 1.0, m2, 0.0, std::min(w[0], m1 - 1.0));
      StepPath wigp;
      for (const pathdetail::P2& q : wig.pts) wigp.points.push_back(Vec{q.x, q.y});
      wigp.labels = wig.labels;
      raw.append(wigp);
      raw.push_step(pr, "wiggle");
    } else {
      // crossing on the arc around (m1, 0)
      const Arc arc(Sphere{arc_center, 1.0}, seg_end, M, seg_end - arc_center,
                    M - arc_center);
      const Point w = unit_point_on_arc(pr, arc);
      raw.push_step(arc_center, "skeleton");
      raw.push_step(w, "arc-hop");
      raw.push_step(pr, "arc-hop");
    }
    StepPath res2 = single_point_path(M);
    res2.points.clear();
    for (const Point& q : raw.points) res2.points.push_back(reflect(q));
    res2.labels = raw.labels;
    return res2;
  };

  StepPath core = route(to_loc(ue)).reversed();
  core.append(route(to_loc(ve)));
  StepPath corew = single_point_path(ue);
  corew.points.clear();
  for (const Point& q : core.points) corew.points.push_back(to_world(q));
  corew.labels = core.labels;
  if (!corew.points.empty() && distance(corew.points.front(), ue) <= 1e-10) {
    corew.points.front() = ue;
  }
  if (!corew.points.empty() && distance(corew.points.back(), ve) <= 1e-10) {
    corew.points.back() = ve;
  }
  out.append(corew);
  if (distance(ve, v) > 1e-12) out.push_step(v, "scale-lift");
  pathdetail::snap_endpoints(out, u, v);
  return out;
}

// ---- general boxes ---------------------------------------------------------------------

std::vector<std::size_t> best_diagonal_split(const std::vector<double>& l) {
  const std::size_t d = l.size();
  if (d < 2) throw std::invalid_argument("diagonal split: need at least two sides");
  const double D = std::sqrt(
      std::inner_product(l.begin(), l.end(), l.begin(), 0.0));
  if (D <= 1e-9) throw std::invalid_argument("diagonal split: degenerate box");
  std::vector<double> mass(d);
  std::size_t nontrivial = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const double mi = 2.0 * l[i] / D;
    mass[i] = mi * mi;  // masses sum to four
    if (mass[i] > 1e-18) ++nontrivial;
  }
  if (nontrivial < 2) {
    throw std::invalid_argument("diagonal split: affine dimension below two");
  }

  if (d <= 20) {
    std::uint32_t best_mask = 0;
    std::uint64_t best_bound = std::numeric_limits<std::uint64_t>::max();
    double best_imb = 0.0;
    for (std::uint32_t mask = 1; mask < (1u << d); mask += 2) {
      double a = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        if (mask & (1u << i)) a += mass[i];
      }
      const double b = 4.0 - a;
      const double lo = std::sqrt(std::max(0.0, std::min(a, b)));
      const double hi = std::sqrt(std::max(a, b));
      if (lo <= 1e-9) continue;
      const std::uint64_t bound = *rectangle2d_bound(hi, lo).bound;
      const double imb = std::abs(a - b);
      if (best_mask == 0 || bound < best_bound ||
          (bound == best_bound && imb < best_imb - 1e-15)) {
        best_mask = mask;
        best_bound = bound;
        best_imb = imb;
      }
    }
    if (best_mask == 0) {
      throw std::invalid_argument("diagonal split: no nondegenerate split");
    }
    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < d; ++i) {
      if (best_mask & (1u << i)) I.push_back(i);
    }
    return I;
  }

  // large d: greedy balance of the squared masses
  std::vector<std::size_t> order(d);
  for (std::size_t i = 0; i < d; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return mass[a] > mass[b]; });
  double suma = 0.0, sumb = 0.0;
  std::vector<bool> inA(d, false);
  for (std::size_t i : order) {
    if (suma <= sumb) {
      suma += mass[i];
      inA[i] = true;
    } else {
      sumb += mass[i];
    }
  }
  std::vector<std::size_t> I;
  const bool keepA = inA[0];
  for (std::size_t i = 0; i < d; ++i) {
    if (inA[i] == keepA) I.push_back(i);
  }
  return I;
}

DiameterBound hyperrectangle_bound(const std::vector<double>& l,
                                   const std::vector<std::size_t>& I) {
  const std::size_t d = l.size();
  std::vector<bool> in(d, false);
  for (std::size_t i : I) {
    if (i >= d || in[i]) {
      throw std::invalid_argument("box bound: bad split index");
    }
    in[i] = true;
  }
  const double D = std::sqrt(
      std::inner_product(l.begin(), l.end(), l.begin(), 0.0));
  DiameterBound b;
  b.formula_id = "hyperrectangle-diam";
  if (D < 2.0 - 1e-7) {
    b.bound = std::nullopt;  // diagonal below two: the graph is disconnected
    return b;
  }
  if (D > 2.0 + 1e-7) {
    throw std::invalid_argument(
        "box bound: no closed-form bound above the critical diagonal");
  }
  double a = 0.0, bb = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double mi = 2.0 * l[i] / D;
    (in[i] ? a : bb) += mi * mi;
  }
  const double lo = std::sqrt(std::min(a, bb));
  const double hi = std::sqrt(std::max(a, bb));
  if (lo <= 1e-9) throw std::invalid_argument("box bound: degenerate split");
  const DiameterBound rb = rectangle2d_bound(hi, lo);
  b.bound = *rb.bound + 2;
  b.parameters = {hi, lo};
  return b;
}

StepPath hyperrectangle_path(const std::vector<double>& l, const Point& u,
                             const Point& v) {
  const std::size_t d = l.size();
  if (u.dim() != d || v.dim() != d) {
    throw std::invalid_argument("box path: endpoint dimension mismatch");
  }
  const double D = std::sqrt(
      std::inner_product(l.begin(), l.end(), l.begin(), 0.0));
  if (D < 2.0 - 1e-7) {
    throw std::invalid_argument("box path: diagonal below two, graph is disconnected");
  }
  const double r = 0.5 * D;
  if (r < 1.0 - 1e-12) {
    throw std::invalid_argument("box path: diagonal below two, graph is disconnected");
  }
  std::size_t wide = 0;
  for (double li : l) {
    if (li > 1e-9) ++wide;
  }
  if (wide < 2) {
    throw std::invalid_argument("box path: affine dimension must be at least two");
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (u[i] < -1e-9 || u[i] > l[i] + 1e-9 || v[i] < -1e-9 || v[i] > l[i] + 1e-9) {
      throw std::invalid_argument("box path: endpoint outside the box");
    }
  }
  if (distance(u, v) <= 1e-12) return single_point_path(u);

  Vec C(d);
  for (std::size_t i = 0; i < d; ++i) C[i] = 0.5 * l[i];

  // stage ladder 1 = r_0 < ... < r_m = r, one bridge step per stage
  std::vector<double> radii{1.0};
  for (double rk = 2.0; rk < r - 1e-12; rk += 1.0) radii.push_back(rk);
  if (r > 1.0 + 1e-12) radii.push_back(r);

  auto descend = [&](const Point& x0) {
    std::pair<StepPath, Point> res{single_point_path(x0), x0};
    for (std::size_t k = radii.size() - 1; k >= 1; --k) {
      const double s_in = radii[k - 1] / r;
      std::vector<double> half(d);
      for (std::size_t i = 0; i < d; ++i) half[i] = 0.5 * s_in * l[i];
      if (in_centered_box(C, half, res.second, 1e-12)) continue;
      const Point P = C + (res.second - C) * (radii[k - 1] / radii[k]);
      const Point Q = far_box_corner(C, half, res.second);
      const Point R = unit_point_on_segment(res.second, Segment{P, Q});
      res.first.push_step(R, "scale-lift");
      res.second = R;
    }
    return res;
  };
  const auto [chain_u, u0] = descend(u);
  const auto [chain_v, v0] = descend(v);

  // critical box and its main diagonal
  std::vector<double> m(d);
  double mm2 = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    m[i] = l[i] / r;
    mm2 += m[i] * m[i];
  }
  Vec lo(d), mv(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = C[i] - 0.5 * m[i];
    mv[i] = m[i];
  }
  if (d == 2) {
    // the critical box is its own diagonal rectangle: route inside it
    // directly, no diagonal attachment needed
    const std::size_t a = m[0] >= m[1] ? 0 : 1;
    const std::size_t b = 1 - a;
    StepPath core2 =
        rectangle2d_path(m[a], m[b], Vec{u0[a] - lo[a], u0[b] - lo[b]},
                         Vec{v0[a] - lo[a], v0[b] - lo[b]});
    StepPath core;
    core.points.reserve(core2.points.size());
    for (const Point& q : core2.points) {
      Vec w(2);
      w[a] = lo[a] + q[0];
      w[b] = lo[b] + q[1];
      core.points.push_back(w);
    }
    core.labels = core2.labels;
    if (!core.points.empty()) {
      if (distance(core.points.front(), u0) <= 1e-10) core.points.front() = u0;
      if (distance(core.points.back(), v0) <= 1e-10) core.points.back() = v0;
    }
    StepPath out = chain_u;
    out.append(core);
    out.append(chain_v.reversed());
    pathdetail::snap_endpoints(out, u, v);
    return out;
  }

  const Point A0 = lo;
  const Point A1 = lo + mv;

  auto diag_t = [&](const Point& y) { return dot(y - lo, mv) / mm2; };
  auto attach = [&](const Point& x) -> std::pair<Point, bool> {
    const double t = std::min(1.0, std::max(0.0, diag_t(x)));
    const Point closest = lo + mv * t;
    if (distance(x, closest) <= 1e-12) return {closest, false};
    const Point& far = dot(x - C, A1 - C) <= 0.0 ? A1 : A0;
    return {unit_point_on_segment(x, Segment{C, far}), true};
  };
  const auto [yu, su] = attach(u0);
  const auto [yv, sv] = attach(v0);

  // diagonal rectangle of the split
  std::vector<std::size_t> I = best_diagonal_split(l);
  std::vector<bool> in(d, false);
  for (std::size_t i : I) in[i] = true;
  double a2 = 0.0, b2 = 0.0;
  for (std::size_t i = 0; i < d; ++i) (in[i] ? a2 : b2) += m[i] * m[i];
  if (a2 < b2) {
    std::swap(a2, b2);
    in.flip();
  }
  const double l1p = std::sqrt(a2);
  const double l2p = std::sqrt(b2);
  Vec e1(d), e2(d);
  for (std::size_t i = 0; i < d; ++i) {
    (in[i] ? e1 : e2)[i] = m[i] / (in[i] ? l1p : l2p);
  }
  const double tu = diag_t(yu);
  const double tv = diag_t(yv);
  StepPath core2 = rectangle2d_path(l1p, l2p, Vec{tu * l1p, tu * l2p},
                                    Vec{tv * l1p, tv * l2p});
  StepPath core;
  core.points.reserve(core2.points.size());
  for (const Point& q : core2.points) {
    core.points.push_back(lo + e1 * q[0] + e2 * q[1]);
  }
  core.labels = core2.labels;
  if (!core.points.empty() && distance(core.points.front(), yu) <= 1e-10) {
    core.points.front() = yu;
  }
  if (!core.points.empty() && distance(core.points.back(), yv) <= 1e-10) {
    core.points.back() = yv;
  }

  StepPath out = chain_u;
  if (su) out.push_step(yu, "diagonal");
  out.append(core);
  if (sv) out.push_step(v0, "diagonal");
  out.append(chain_v.reversed());
  pathdetail::snap_endpoints(out, u, v);
  return out;
}

}  // namespace udg
