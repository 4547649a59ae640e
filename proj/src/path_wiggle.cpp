// Wiggle constructions: the rectangle wiggle, the triangle corner-arc
// machinery, and obtuse-triangle routing. These are the base layer the
// simplex and box path builders compose with.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "path_detail.hpp"
#include "udg/convex.hpp"
#include "udg/geom.hpp"
#include "udg/path.hpp"

namespace udg {
namespace pathdetail {

namespace {

const Tolerances kTol{};

double cross2(double ux, double uy, double vx, double vy) {
  return ux * vy - uy * vx;
}

Vec vec2(const P2& p) { return Vec{p.x, p.y}; }

P2 p2of(const Vec& v) { return P2{v[0], v[1]}; }

}  // namespace

double dist2(const P2& a, const P2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// ---- frames -----------------------------------------------------------------

Point Frame2::lift(const P2& p) const {
  Point out = origin;
  out += ex * p.x;
  out += ey * p.y;
  return out;
}

P2 Frame2::drop(const Point& p) const {
  Vec d = p - origin;
  return P2{dot(d, ex), dot(d, ey)};
}

Frame2 make_frame(const Point& origin, const Vec& xdir, const Vec& ydir) {
  Frame2 f;
  f.origin = origin;
  f.ex = normalized(xdir);
  Vec w = ydir - f.ex * dot(ydir, f.ex);
  const double n = norm(w);
  if (n <= 1e-12 * std::max(1.0, norm(ydir))) {
    throw std::invalid_argument("frame: spanning directions are collinear");
  }
  f.ey = w * (1.0 / n);
  return f;
}

// ---- triangles ---------------------------------------------------------------

bool Tri2::contains(const P2& p, double slack) const {
  const P2 vs[3] = {a, b, c};
  const double orient =
      cross2(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y) >= 0.0 ? 1.0 : -1.0;
  for (int i = 0; i < 3; ++i) {
    const P2& q1 = vs[i];
    const P2& q2 = vs[(i + 1) % 3];
    const double ex_ = q2.x - q1.x;
    const double ey_ = q2.y - q1.y;
    const double elen = std::hypot(ex_, ey_);
    if (elen <= 1e-15) return false;
    const double sd =
        orient * cross2(ex_, ey_, p.x - q1.x, p.y - q1.y) / elen;
    if (sd < -slack) return false;
  }
  return true;
}

double Tri2::height_at(double x) const {
  // assumes the canonical layout a = (0,0), b = (len,0), c = apex above
  const double len = b.x;
  if (x < -1e-12 || x > len + 1e-12) return 0.0;
  if (c.x > 1e-12 && x <= c.x) return c.y * (x / c.x);
  if (len - c.x > 1e-12) return c.y * ((len - x) / (len - c.x));
  return c.y;  // apex sits on the far clipping line
}

// ---- 2D paths ----------------------------------------------------------------

void Path2::push(const P2& p, const char* label) {
  pts.push_back(p);
  labels.emplace_back(label);
}

void Path2::append(const Path2& tail) {
  if (tail.pts.empty()) return;
  if (pts.empty()) {
    *this = tail;
    return;
  }
  if (dist2(pts.back(), tail.pts.front()) > 1e-12) {
    throw std::logic_error("path seam mismatch");
  }
  pts.insert(pts.end(), tail.pts.begin() + 1, tail.pts.end());
  labels.insert(labels.end(), tail.labels.begin(), tail.labels.end());
}

Path2 Path2::reversed() const {
  Path2 out;
  out.pts.assign(pts.rbegin(), pts.rend());
  out.labels.assign(labels.rbegin(), labels.rend());
  return out;
}

StepPath lift_path(const Frame2& f, const Path2& p) {
  StepPath out;
  out.points.reserve(p.pts.size());
  for (const P2& q : p.pts) out.points.push_back(f.lift(q));
  out.labels = p.labels;
  return out;
}

void snap_endpoints(StepPath& path, const Point& u, const Point& v) {
  if (path.points.empty()) return;
  if (distance(path.points.front(), u) <= 1e-10) path.points.front() = u;
  if (distance(path.points.back(), v) <= 1e-10) path.points.back() = v;
}

// ---- rectangle wiggle ---------------------------------------------------------

Path2 wiggle_route(double x0, double xext, double h, double u, double v) {
  if (xext < -1e-12 || xext > 1.0 + 1e-9) {
    throw std::invalid_argument("rectangle wiggle: x extent must lie in [0, 1]");
  }
  if (h <= 0.0) {
    throw std::invalid_argument("rectangle wiggle: height must be positive");
  }
  const double lo = x0 - 1e-9, hi = x0 + xext + 1e-9;
  if (u < lo || u > hi || v < lo || v > hi) {
    throw std::invalid_argument("rectangle wiggle: endpoint outside the window");
  }
  Path2 out;
  out.pts.push_back(P2{u, 0.0});
  if (std::abs(u - v) <= 1e-12) return out;
  if (u > v) return wiggle_route(x0, xext, h, v, u).reversed();

  const double D = v - u;
  if (h >= 1.0) {
    // one hop up to the apex of the isoceles unit pair, one hop down
    const double ay = std::sqrt(std::max(0.0, 1.0 - 0.25 * D * D));
    out.push(P2{0.5 * (u + v), ay}, "wiggle");
    out.push(P2{v, 0.0}, "wiggle");
    return out;
  }

  const double qmax = 2.0 * (1.0 - std::sqrt(1.0 - h * h));
  const long long k =
      std::max(1LL, static_cast<long long>(std::ceil(D / qmax - 1e-12)));
  if (k > 2000000LL) {
    throw std::runtime_error("rectangle wiggle: step budget exceeded");
  }
  const double q = D / static_cast<double>(k);
  const double y = std::sqrt(std::max(0.0, 1.0 - (1.0 - 0.5 * q) * (1.0 - 0.5 * q)));
  for (long long i = 0; i < k; ++i) {
    const double p = u + q * static_cast<double>(i);
    const double pn = (i + 1 == k) ? v : u + q * static_cast<double>(i + 1);
    out.push(P2{p + 1.0, 0.0}, "wiggle");
    out.push(P2{p + 0.5 * q, y}, "wiggle");
    out.push(P2{p + 0.5 * q + 1.0, y}, "wiggle");
    out.push(P2{pn, 0.0}, "wiggle");
  }
  return out;
}

Path2 wiggle_route_roof(const std::function<double(double)>& roof, double u,
                        double v) {
  Path2 out;
  out.pts.push_back(P2{u, 0.0});
  if (std::abs(u - v) <= 1e-12) return out;
  if (u > v) return wiggle_route_roof(roof, v, u).reversed();

  long long cycles = 0;
  double p = u;
  while (v - p > 1e-12) {
    if (++cycles > 2000000LL) {
      throw std::runtime_error("rectangle wiggle: step budget exceeded");
    }
    const double cap = std::min(roof(p), roof(p + 1.0));
    double q = v - p;
    if (cap < 1.0) {
      q = std::min(q, 2.0 * (1.0 - std::sqrt(std::max(0.0, 1.0 - cap * cap))));
    }
    double y = 0.0;
    bool fits = false;
    for (int it = 0; it < 200 && !fits; ++it) {
      y = std::sqrt(std::max(0.0, 1.0 - (1.0 - 0.5 * q) * (1.0 - 0.5 * q)));
      fits = y <= roof(p + 0.5 * q) - 1e-12 &&
             y <= roof(p + 0.5 * q + 1.0) - 1e-12;
      if (!fits) q *= 0.5;
    }
    if (!fits) {
      throw std::runtime_error("rectangle wiggle: corridor pinched shut");
    }
    const double pn = (v - (p + q) <= 1e-12) ? v : p + q;
    out.push(P2{p + 1.0, 0.0}, "wiggle");
    out.push(P2{p + 0.5 * q, y}, "wiggle");
    out.push(P2{p + 0.5 * q + 1.0, y}, "wiggle");
    out.push(P2{pn, 0.0}, "wiggle");
    p = pn;
  }
  return out;
}

// ---- corner gadgets -----------------------------------------------------------

CornerGadget make_corner_gadget(const Tri2& tri, const P2& corner, const P2& Z,
                                const P2& A) {
  if (std::abs(dist2(A, Z) - 1.0) > 1e-7) {
    throw std::invalid_argument(
        "corner gadget: A must be at unit distance from the far corner");
  }
  const double tha = std::atan2(A.y - Z.y, A.x - Z.x);
  double eps = 0.25;
  for (int iter = 0; iter < 80; ++iter, eps *= 0.5) {
    const double delta = 2.0 * std::asin(0.5 * eps);
    // the endpoint farther from the corner gives the larger reach; when it
    // leaves the triangle (A on the base) the other side is tried
    double cand[2] = {tha + delta, tha - delta};
    const double d0 = std::hypot(Z.x + std::cos(cand[0]) - corner.x,
                                 Z.y + std::sin(cand[0]) - corner.y);
    const double d1 = std::hypot(Z.x + std::cos(cand[1]) - corner.x,
                                 Z.y + std::sin(cand[1]) - corner.y);
    if (d1 > d0) std::swap(cand[0], cand[1]);
    for (double thc : cand) {
      const P2 c{Z.x + std::cos(thc), Z.y + std::sin(thc)};
      const double r_raw = dist2(c, corner) - 1.0;
      if (r_raw <= 1e-12) continue;
      // 64 samples with a margin covering the sag between samples; the A
      // endpoint itself is excluded because A may sit on the base (degenerate
      // obtuse case) where no interior clearance exists, and its closed
      // containment is the caller's invariant
      const double margin = eps * eps / 1000.0 + 1e-12;
      bool inside = true;
      for (int i = 0; i < 64 && inside; ++i) {
        const double t = static_cast<double>(i) / 64.0;
        const double th = thc + t * (tha - thc);
        inside = tri.contains(P2{Z.x + std::cos(th), Z.y + std::sin(th)},
                              -margin);
      }
      if (!inside) continue;
      CornerGadget g;
      g.kx = corner.x;
      g.r = r_raw;
      g.A = A;
      g.Z = Z;
      g.th_c = thc;
      g.th_a = tha;
      return g;
    }
  }
  throw std::runtime_error("corner gadget: arc search failed");
}

Path2 CornerGadget::route(const P2& target) const {
  auto arc_at = [&](double th) {
    return P2{Z.x + std::cos(th), Z.y + std::sin(th)};
  };
  auto f = [&](double th) { return dist2(target, arc_at(th)) - 1.0; };
  const double fc = f(th_c);
  const double fa = f(th_a);
  double th = th_a;
  if (std::abs(fc) <= kTol.geom_eps) {
    th = th_c;
  } else if (std::abs(fa) > kTol.geom_eps) {
    if (fc < 0.0 || fa > 0.0) {
      throw std::runtime_error("corner gadget: target outside the reach");
    }
    double lo = th_c, hi = th_a;  // f(lo) > 0 > f(hi)
    for (int i = 0; i < 100 && std::abs(hi - lo) > 1e-13; ++i) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) > 0.0 ? lo : hi) = mid;
    }
    th = hi;
  }
  Path2 out;
  out.pts.push_back(A);
  out.push(Z, "arc-hop");
  out.push(arc_at(th), "arc-hop");
  out.push(target, "arc-hop");
  return out;
}

// ---- base router ---------------------------------------------------------------

BaseRouter make_base_router(double len, const P2& apex, const P2& A,
                            double window) {
  P2 ap = apex;
  if (ap.x < 0.0) {
    // clip by x = 0: the corner at the origin keeps the region a triangle
    const double t = len / (len - ap.x);
    ap = P2{0.0, t * ap.y};
  } else if (ap.x > len) {
    const double t = len / ap.x;
    ap = P2{len, t * ap.y};
  }
  if (ap.y <= 1e-12) {
    throw std::invalid_argument("base router: triangle has no interior");
  }
  BaseRouter r;
  r.len = len;
  r.window = window;
  r.A = A;
  r.tri = Tri2{P2{0.0, 0.0}, P2{len, 0.0}, ap};
  if (!r.tri.contains(A, 1e-9)) {
    throw std::invalid_argument("base router: A must lie in the triangle");
  }
  r.left = make_corner_gadget(r.tri, P2{0.0, 0.0}, P2{len, 0.0}, A);
  r.right = make_corner_gadget(r.tri, P2{len, 0.0}, P2{0.0, 0.0}, A);
  r.wl = r.left.r;
  r.wr = len - r.right.r;
  if (r.wr - r.wl > 1.0 + 1e-12) {
    r.wh = std::min(r.tri.height_at(r.wl), r.tri.height_at(r.wr));
  }
  return r;
}

Path2 BaseRouter::route(double s) const {
  if (s < -1e-9 || s > window + 1e-9) {
    throw std::invalid_argument("base router: target outside the window");
  }
  s = std::min(std::max(s, 0.0), window);
  const P2 t{s, 0.0};
  const double dA = dist2(A, t);

  Path2 out;
  if (dA <= 1e-12) {
    out.pts.push_back(A);
    return out;
  }
  if (std::abs(dA - 1.0) <= kTol.geom_eps) {
    out.pts.push_back(A);
    out.push(t, "arc-hop");
    return out;
  }
  if (s <= left.r + 1e-12) return left.route(t);
  if (len - s <= right.r + 1e-12) return right.route(t);
  if ((len - 1.0) - s >= -1e-12 && (len - 1.0) - s <= right.r &&
      s + 1.0 <= len + 1e-9) {
    // reach s + 1 near the right corner, then translate one unit left
    Path2 p = right.route(P2{s + 1.0, 0.0});
    p.push(t, "translate");
    return p;
  }
  if (s - (len - 1.0) >= -1e-12 && s - (len - 1.0) <= left.r &&
      s - 1.0 >= -1e-9) {
    Path2 p = left.route(P2{s - 1.0, 0.0});
    p.push(t, "translate");
    return p;
  }

  const double xext = wr - wl - 1.0;
  if (xext <= 1e-12 || wh <= 1e-12) {
    throw std::runtime_error("base router: target not covered");
  }
  const auto roof = [this](double x) { return tri.height_at(x); };
  if (s <= wr - 1.0 + 1e-12) {
    // wiggle rightwards from the left corner interval
    Path2 p = left.route(P2{wl, 0.0});
    p.append(wiggle_route_roof(roof, wl, std::min(s, wl + xext)));
    return p;
  }
  // mirrored wiggle from the right corner interval
  auto mirror = [&](double x) { return wl + wr - x; };
  Path2 p = right.route(P2{wr, 0.0});
  Path2 w = wiggle_route_roof([&](double x) { return tri.height_at(mirror(x)); },
                              mirror(wr), std::min(std::max(mirror(s), wl), wl + xext));
  for (P2& q : w.pts) q.x = mirror(q.x);
  p.append(w);
  return p;
}

// ---- obtuse routing -------------------------------------------------------------

namespace {

struct Attach {
  bool stepped = false;
  P2 base;  // (s, 0)
};

Attach attach_to_base(const BaseRouter& router, const P2& p) {
  Attach a;
  if (std::abs(p.y) <= 1e-12) {
    a.base = P2{p.x, 0.0};
    return a;
  }
  // IVT along the half of the base on the far side of the center from p:
  // distance to the center is at most one, to the far base corner at least one
  const Vec pv = vec2(p);
  const Vec center = vec2(router.A);
  const Vec far_end =
      p.x <= router.A.x ? Vec{router.len, 0.0} : Vec{0.0, 0.0};
  const Point y = unit_point_on_segment(pv, Segment{center, far_end});
  a.stepped = true;
  a.base = P2{y[0], 0.0};
  return a;
}

}  // namespace

Path2 obtuse_route_local(const BaseRouter& router, const P2& from,
                         const P2& to) {
  Path2 out;
  out.pts.push_back(from);
  if (dist2(from, to) <= 1e-12) return out;

  const Attach af = attach_to_base(router, from);
  const Attach at = attach_to_base(router, to);
  if (af.stepped) out.push(af.base, "radius-segment");
  if (af.stepped && at.stepped && dist2(af.base, at.base) <= 1e-12) {
    out.push(to, "radius-segment");  // both endpoints share the attach point
    return out;
  }
  out.append(router.route(af.base.x).reversed());
  out.append(router.route(at.base.x));
  if (at.stepped) out.push(to, "radius-segment");
  return out;
}

StepPath obtuse_route_embedded(const Point& b0, const Point& b1,
                               const Point& apex, const Point& from,
                               const Point& to) {
  const double L = distance(b0, b1);
  const double r = 0.5 * L;
  if (std::abs(r - 1.0) > 1e-7) {
    throw std::invalid_argument("obtuse triangle: longest side must have length two");
  }
  if (r < 1.0 - 1e-12) {
    throw std::invalid_argument(
        "obtuse triangle: radius below one, unit-distance graph is disconnected");
  }
  const double a2 = norm2(apex - b0);
  const double c2 = norm2(apex - b1);
  if (L * L < a2 + c2 - 1e-9) {
    throw std::invalid_argument("obtuse triangle: apex angle must not be acute");
  }

  const Frame2 frame = make_frame(b0, b1 - b0, apex - b0);
  const P2 apex_loc = frame.drop(apex);
  P2 f_loc = frame.drop(from);
  P2 t_loc = frame.drop(to);
  {
    const Tri2 tri{P2{0.0, 0.0}, P2{L, 0.0}, apex_loc};
    if (!tri.contains(f_loc, 1e-6) || !tri.contains(t_loc, 1e-6)) {
      throw std::invalid_argument("obtuse triangle: endpoint outside the triangle");
    }
  }

  StepPath out;
  if (r > 1.0 + 1e-12) {
    // bridge into the concentric copy of radius exactly one, one unit step
    // per endpoint, then route inside the copy (local x shifted so that the
    // scaled base is [0, 2])
    const double shift = 0.5 * L - 1.0;
    const P2 a2p{1.0, 0.0};
    const P2 apex_s{(apex_loc.x - 0.5 * L) / r + 1.0, apex_loc.y / r};
    const Tri2 tri_s{P2{0.0, 0.0}, P2{2.0, 0.0}, apex_s};
    auto shifted = [&](const P2& p) { return P2{p.x - shift, p.y}; };

    Path2 full;
    P2 f_s = shifted(f_loc);
    P2 t_s = shifted(t_loc);
    full.pts.push_back(f_s);
    P2 f_eff = f_s, t_eff = t_s;
    auto bridge = [&](const P2& p) -> P2 {
      if (tri_s.contains(p, 1e-12)) return p;
      const P2 pin{a2p.x + (p.x - a2p.x) / r, a2p.y + (p.y - a2p.y) / r};
      const P2 verts[3] = {tri_s.a, tri_s.b, tri_s.c};
      P2 far = verts[0];
      for (const P2& w : verts)
        if (dist2(w, p) > dist2(far, p)) far = w;
      const Point R = unit_point_on_segment(vec2(p), Segment{vec2(pin), vec2(far)});
      return p2of(R);
    };
    f_eff = bridge(f_s);
    if (dist2(f_eff, f_s) > 1e-12) full.push(f_eff, "scale-lift");
    t_eff = bridge(t_s);

    const BaseRouter router = make_base_router(2.0, apex_s, a2p, 2.0);
    full.append(obtuse_route_local(router, f_eff, t_eff));
    if (dist2(t_eff, t_s) > 1e-12) full.push(t_s, "scale-lift");

    Frame2 fr_s = frame;
    fr_s.origin = frame.lift(P2{shift, 0.0});
    out = lift_path(fr_s, full);
  } else {
    const BaseRouter router = make_base_router(L, apex_loc, P2{0.5 * L, 0.0}, L);
    out = lift_path(frame, obtuse_route_local(router, f_loc, t_loc));
  }
  snap_endpoints(out, from, to);
  return out;
}

StepPath wiggle_reach_embedded(const Point& Q, const Point& P, const Point& R,
                               const Point& A, double s) {
  const double L = distance(Q, P);
  const double x = L - 1.0;
  if (x <= 1e-12 || x > 1.0 + 1e-9) {
    throw std::invalid_argument("wiggle reach: side length must lie in (1, 2]");
  }
  if (std::abs(distance(A, Q) - 1.0) > 1e-7 ||
      std::abs(distance(A, P) - 1.0) > 1e-7) {
    throw std::invalid_argument("wiggle reach: A must be at unit distance from both ends");
  }
  const Frame2 frame = make_frame(Q, P - Q, A - Q);
  const P2 a_loc = frame.drop(A);
  const P2 r_loc = frame.drop(R);
  if (r_loc.y <= 1e-12) {
    throw std::invalid_argument("wiggle reach: R must lie strictly on A's side");
  }
  const BaseRouter router = make_base_router(L, r_loc, a_loc, x);
  StepPath out = lift_path(frame, router.route(s));
  if (!out.points.empty() && distance(out.points.front(), A) <= 1e-10) {
    out.points.front() = A;
  }
  return out;
}

}  // namespace pathdetail

// ---- public operations -----------------------------------------------------------

StepPath rectangle_wiggle_path(double x_extent, double h, double u, double v) {
  if (x_extent < -1e-9 || x_extent > 1.0 + 1e-9) {
    throw std::invalid_argument("rectangle wiggle: x extent must lie in [0, 1]");
  }
  if (h <= 0.0) {
    throw std::invalid_argument("rectangle wiggle: height must be positive");
  }
  if (u < -1e-9 || u > x_extent + 1e-9 || v < -1e-9 || v > x_extent + 1e-9) {
    throw std::invalid_argument("rectangle wiggle: endpoints must lie in [0, x]");
  }
  const pathdetail::Path2 p =
      pathdetail::wiggle_route(0.0, std::max(0.0, x_extent), h, u, v);
  StepPath out;
  out.points.reserve(p.pts.size());
  for (const pathdetail::P2& q : p.pts) out.points.push_back(Vec{q.x, q.y});
  out.labels = p.labels;
  return out;
}

DiameterBound rectangle_wiggle_bound(double x_extent, double h) {
  if (x_extent < -1e-9 || x_extent > 1.0 + 1e-9) {
    throw std::invalid_argument("rectangle wiggle: x extent must lie in [0, 1]");
  }
  if (h <= 0.0) {
    throw std::invalid_argument("rectangle wiggle: height must be positive");
  }
  DiameterBound b;
  b.formula_id = "rectangle-wiggle";
  b.parameters = {x_extent, h};
  if (h >= 1.0) {
    b.bound = 2;
    return b;
  }
  const double qmax = 2.0 * (1.0 - std::sqrt(1.0 - h * h));
  const auto k = static_cast<std::uint64_t>(
      std::max(1.0, std::ceil(x_extent / qmax - 1e-12)));
  b.bound = 4 * k;
  return b;
}

StepPath triangle_wiggle_path(const Simplex& T, const Point& A, const Point& u,
                              const Point& v) {
  const auto& vs = T.vertices;
  if (vs.size() != 3 || vs[0].dim() != 2 || A.dim() != 2 || u.dim() != 2 ||
      v.dim() != 2) {
    throw std::invalid_argument("triangle wiggle: expects a triangle in the plane");
  }

  // locate the long side P0 P1: A at unit distance from both ends, u and v
  // on the side within distance |P0 P1| - 1 of P0
  int i0 = -1, i1 = -1;
  for (int i = 0; i < 3 && i0 < 0; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      const double L = distance(vs[i], vs[j]);
      if (L <= 1.0 + 1e-9) continue;
      if (std::abs(distance(A, vs[i]) - 1.0) > 1e-7) continue;
      if (std::abs(distance(A, vs[j]) - 1.0) > 1e-7) continue;
      const Vec dir = normalized(vs[j] - vs[i]);
      bool ok = true;
      for (const Point* w : {&u, &v}) {
        const Vec d = *w - vs[i];
        const double t = dot(d, dir);
        const double off = std::sqrt(std::max(0.0, norm2(d) - t * t));
        if (off > 1e-9 || t < -1e-9 || t > L - 1.0 + 1e-9) ok = false;
      }
      if (!ok) continue;
      i0 = i;
      i1 = j;
      break;
    }
  }
  if (i0 < 0) {
    throw std::invalid_argument(
        "triangle wiggle: u, v must lie on the long side within the corner "
        "window and A at unit distance from its endpoints");
  }
  const Point& P0 = vs[i0];
  const Point& P1 = vs[i1];
  const Point& apex = vs[3 - i0 - i1];
  const double L = distance(P0, P1);
  if (L > 2.0 + 1e-9) {
    throw std::invalid_argument("triangle wiggle: long side must not exceed 2");
  }
  if (distance(u, v) <= 1e-12) return single_point_path(u);

  const pathdetail::Frame2 frame = pathdetail::make_frame(P0, P1 - P0, A - P0);
  const pathdetail::P2 apex_loc = frame.drop(apex);
  if (apex_loc.y <= 1e-12) {
    throw std::invalid_argument("triangle wiggle: A must lie in the interior");
  }
  const pathdetail::BaseRouter router =
      pathdetail::make_base_router(L, apex_loc, frame.drop(A), L - 1.0);

  const Vec dir = normalized(P1 - P0);
  pathdetail::Path2 p = router.route(dot(u - P0, dir)).reversed();
  p.append(router.route(dot(v - P0, dir)));
  StepPath out = pathdetail::lift_path(frame, p);
  pathdetail::snap_endpoints(out, u, v);
  return out;
}

StepPath obtuse_triangle_path(const Simplex& T, const Point& u, const Point& v) {
  const auto& vs = T.vertices;
  if (vs.size() != 3 || vs[0].dim() != 2) {
    throw std::invalid_argument("obtuse triangle: expects a triangle in the plane");
  }
  const MebResult mb = meb(T.vertices);
  if (std::abs(mb.ball.radius - 1.0) > 1e-7) {
    throw std::invalid_argument("obtuse triangle: radius must be one");
  }
  const ConvexBody body{T};
  if (!body.contains(u) || !body.contains(v)) {
    throw std::invalid_argument("obtuse triangle: endpoint outside the triangle");
  }
  if (distance(u, v) <= 1e-12) return single_point_path(u);

  int bi = 0, bj = 1;
  double best = -1.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double L = distance(vs[i], vs[j]);
      if (L > best) {
        best = L;
        bi = i;
        bj = j;
      }
    }
  }
  return pathdetail::obtuse_route_embedded(vs[bi], vs[bj], vs[3 - bi - bj], u, v);
}

}  // namespace udg
