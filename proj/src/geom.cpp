#include "udg/geom.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace udg {

static void check_same_dim(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("dimension mismatch");
}

Vec& Vec::operator+=(const Vec& o) {
  check_same_dim(*this, o);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  check_same_dim(*this, o);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

Vec& Vec::operator*=(double s) {
  for (double& x : c) x *= s;
  return *this;
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }
Vec operator*(double s, Vec a) { return a *= s; }
Vec operator*(Vec a, double s) { return a *= s; }

double dot(const Vec& a, const Vec& b) {
  check_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vec& v) { return dot(v, v); }
double norm(const Vec& v) { return std::sqrt(norm2(v)); }

double distance(const Vec& a, const Vec& b) {
  check_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Vec normalized(const Vec& v) {
  const double n = norm(v);
  if (n < 1e-14) throw std::invalid_argument("cannot normalize zero vector");
  return v * (1.0 / n);
}

Vec lerp(const Vec& a, const Vec& b, double t) {
  check_same_dim(a, b);
  Vec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + t * (b[i] - a[i]);
  return r;
}

bool Ball::contains(const Point& x, double eps) const {
  return distance(x, center) <= radius + eps;
}

bool halfspace_contains(const HalfSpace& h, const Point& x, double eps) {
  const Vec n = h.witness - h.base;
  if (norm2(n) == 0.0) {
    throw std::invalid_argument(
        "halfspace_contains: witness coincides with base");
  }
  return dot(n, x - h.base) <= eps;
}

// ---- arcs ------------------------------------------------------------------

Arc::Arc(const Sphere& sphere, const Point& from, const Point& to,
         const Vec& plane_u, const Vec& plane_v)
    : sphere_(sphere) {
  if (sphere.radius <= 0.0)
    throw std::invalid_argument("arc needs a positive sphere radius");
  const Vec fu = from - sphere.center;
  const Vec tu = to - sphere.center;
  if (std::abs(norm(fu) - sphere.radius) > 1e-7 ||
      std::abs(norm(tu) - sphere.radius) > 1e-7)
    throw std::invalid_argument("arc endpoints must lie on the sphere");

  e1_ = normalized(fu);
  // Orthonormalize the plane span against e1; try plane_v first so that the
  // conventional (u, v) = (e_x, e_y) input keeps its counterclockwise sense.
  Vec e2 = plane_v - dot(plane_v, e1_) * e1_;
  if (norm(e2) < 1e-12) e2 = plane_u - dot(plane_u, e1_) * e1_;
  if (norm(e2) < 1e-12)
    throw std::invalid_argument("arc plane is degenerate");
  e2_ = normalized(e2);

  const double x = dot(tu, e1_), y = dot(tu, e2_);
  double ang = std::atan2(y, x);
  if (ang <= 0.0) ang += 2.0 * M_PI;  // sweep in (0, 2*pi]
  sweep_ = ang;
}

Point Arc::at(double t) const {
  Vec p = sphere_.center;
  const double cr = sphere_.radius * std::cos(t);
  const double sr = sphere_.radius * std::sin(t);
  for (std::size_t i = 0; i < p.dim(); ++i)
    p[i] += cr * e1_[i] + sr * e2_[i];
  return p;
}

// ---- unit-distance solvers -------------------------------------------------

namespace {

// Bisects f(t) = d(x, curve(t)) - 1 over [lo, hi] given endpoint values of
// opposite sign. Resolution is in the curve parameter.
template <typename CurveFn>
double bisect_crossing(const CurveFn& at, const Point& x, double lo, double hi,
                       double eps) {
  double a = lo, b = hi;
  double fa = distance(x, at(a)) - 1.0;
  while (b - a > eps) {
    const double m = 0.5 * (a + b);
    const double fm = distance(x, at(m)) - 1.0;
    if ((fa <= 0.0) == (fm <= 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

Point unit_point_on_segment(const Point& x, const Segment& s,
                            const Tolerances& tol) {
  const double fa = distance(x, s.a) - 1.0;
  if (std::abs(fa) <= tol.geom_eps) return s.a;
  const double fb = distance(x, s.b) - 1.0;
  if (std::abs(fb) <= tol.geom_eps) return s.b;
  if ((fa < 0.0) == (fb < 0.0))
    throw std::invalid_argument(
        "unit_point_on_segment: no sign change between segment endpoints");
  const auto at = [&](double t) { return lerp(s.a, s.b, t); };
  const double t = bisect_crossing(at, x, 0.0, 1.0, tol.bisect_eps);
  return at(t);
}

Point unit_point_on_polyline(const Point& x, const std::vector<Point>& pts,
                             const Tolerances& tol) {
  if (pts.size() < 2)
    throw std::invalid_argument("polyline needs at least two points");
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double fa = distance(x, pts[i]) - 1.0;
    if (std::abs(fa) <= tol.geom_eps) return pts[i];
    const double fb = distance(x, pts[i + 1]) - 1.0;
    const bool last = (i + 2 == pts.size());
    if (std::abs(fb) <= tol.geom_eps) {
      if (last) return pts[i + 1];
      // interior vertex at unit distance is picked up by the next iteration
    }
    if ((fa < 0.0) != (fb < 0.0)) {
      const auto at = [&](double t) { return lerp(pts[i], pts[i + 1], t); };
      const double t = bisect_crossing(at, x, 0.0, 1.0, tol.bisect_eps);
      return at(t);
    }
  }
  throw std::invalid_argument(
      "unit_point_on_polyline: no unit-distance crossing along the polyline");
}

Point unit_point_on_arc(const Point& x, const Arc& arc, const Tolerances& tol) {
  const double fa = distance(x, arc.from()) - 1.0;
  if (std::abs(fa) <= tol.geom_eps) return arc.from();
  const double fb = distance(x, arc.to()) - 1.0;
  if (std::abs(fb) <= tol.geom_eps) return arc.to();
  if ((fa < 0.0) == (fb < 0.0))
    throw std::invalid_argument(
        "unit_point_on_arc: no sign change between arc endpoints");
  const auto at = [&](double t) { return arc.at(t); };
  const double t = bisect_crossing(at, x, 0.0, arc.sweep(), tol.bisect_eps);
  return at(t);
}

}  // namespace udg
