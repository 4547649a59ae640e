// Convex body plumbing: shape validation, rigid placements, membership
// closures, Welzl's minimum enclosing ball with Seidel's optimality
// certificate, and the small dense solvers everything above rests on.
//
// The linear algebra here is intentionally hand-rolled and tiny: systems are
// (d+1) x (d+1) at most for the shapes we care about, so a plain Gaussian
// elimination with partial pivoting and a phase-1 tableau simplex beat any
// dependency they would replace.

#include "udg/convex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "udg/rng.hpp"

namespace udg {

namespace {

// Solves A x = b in place (A row-major n x n, solution left in b) with
// partial pivoting. A pivot below 1e-12 of the matrix scale freezes its
// variable at zero instead of dividing; returns false when that happened,
// true for a full-rank solve.
bool gauss_solve(std::vector<double>& a, std::vector<double>& b,
                 std::size_t n) {
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::fabs(v));
  const double tiny = 1e-12 * std::max(1.0, scale);
  bool full_rank = true;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::fabs(a[r * n + k]) > std::fabs(a[piv * n + k])) piv = r;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a[k * n + j], a[piv * n + j]);
      std::swap(b[k], b[piv]);
    }
    if (std::fabs(a[k * n + k]) <= tiny) {
      full_rank = false;
      for (std::size_t j = k; j < n; ++j) a[k * n + j] = 0.0;
      a[k * n + k] = 1.0;
      b[k] = 0.0;
      continue;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = a[r * n + k] / a[k * n + k];
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) a[r * n + j] -= f * a[k * n + j];
      b[r] -= f * b[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[k * n + j] * b[j];
    b[k] = s / a[k * n + k];
  }
  return full_rank;
}

// LU factorization with partial pivoting, kept around so repeated-membership
// closures pay O(n^2) per query instead of refactoring every time. Only used
// on systems validated nonsingular up front; a singular input throws.
struct LuFactor {
  std::size_t n = 0;
  std::vector<double> lu;
  std::vector<std::size_t> piv;

  void factor(std::vector<double> a, std::size_t n_in) {
    n = n_in;
    lu = std::move(a);
    piv.assign(n, 0);
    double scale = 0.0;
    for (double v : lu) scale = std::max(scale, std::fabs(v));
    const double tiny = 1e-12 * std::max(1.0, scale);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      for (std::size_t r = k + 1; r < n; ++r)
        if (std::fabs(lu[r * n + k]) > std::fabs(lu[p * n + k])) p = r;
      piv[k] = p;
      if (p != k)
        for (std::size_t j = 0; j < n; ++j)
          std::swap(lu[k * n + j], lu[p * n + j]);
      if (std::fabs(lu[k * n + k]) <= tiny)
        throw std::invalid_argument("LuFactor: singular system");
      for (std::size_t r = k + 1; r < n; ++r) {
        lu[r * n + k] /= lu[k * n + k];
        for (std::size_t j = k + 1; j < n; ++j)
          lu[r * n + j] -= lu[r * n + k] * lu[k * n + j];
      }
    }
  }

  std::vector<double> solve(std::vector<double> b) const {
    for (std::size_t k = 0; k < n; ++k) std::swap(b[k], b[piv[k]]);
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t j = 0; j < k; ++j) b[k] -= lu[k * n + j] * b[j];
    for (std::size_t k = n; k-- > 0;) {
      for (std::size_t j = k + 1; j < n; ++j) b[k] -= lu[k * n + j] * b[j];
      b[k] /= lu[k * n + k];
    }
    return b;
  }
};

// Rank of {p_i - p_0} by modified Gram-Schmidt with reorthogonalization,
// thresholded at 1e-7 of the difference scale.
int rank_of_diffs(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return 0;
  double scale = 1.0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    scale = std::max(scale, norm(pts[i] - pts[0]));
  const double tol = 1e-7 * scale;

  std::vector<Vec> basis;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Vec w = pts[i] - pts[0];
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& b : basis) w -= dot(w, b) * b;
    if (norm(w) > tol) basis.push_back(normalized(w));
  }
  return static_cast<int>(basis.size());
}

void check_placement(const Placement& pl, std::size_t d) {
  if (pl.translation.dim() != d || pl.rotation.size() != d)
    throw std::invalid_argument("placement: dimension mismatch");
  for (const auto& row : pl.rotation)
    if (row.size() != d)
      throw std::invalid_argument("placement: rotation is not square");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      double s = (i == j) ? -1.0 : 0.0;
      for (std::size_t k = 0; k < d; ++k)
        s += pl.rotation[k][i] * pl.rotation[k][j];
      if (std::fabs(s) > 1e-7)
        throw std::invalid_argument("placement: rotation is not orthogonal");
    }
}

void check_vertex_list(const std::vector<Point>& vs, const char* what) {
  if (vs.empty())
    throw std::invalid_argument(std::string(what) + ": no vertices");
  const std::size_t d = vs[0].dim();
  if (d == 0) throw std::invalid_argument(std::string(what) + ": empty point");
  for (const Point& v : vs) {
    if (v.dim() != d)
      throw std::invalid_argument(std::string(what) +
                                  ": vertex dimension mismatch");
    for (double x : v.c)
      if (!std::isfinite(x))
        throw std::invalid_argument(std::string(what) +
                                    ": non-finite coordinate");
  }
}

double dist_point_segment(const Point& x, const Point& a, const Point& b) {
  const Vec ab = b - a;
  const double len2 = norm2(ab);
  if (len2 <= 0.0) return distance(x, a);
  const double t = std::clamp(dot(x - a, ab) / len2, 0.0, 1.0);
  return distance(x, lerp(a, b, t));
}

// ---- Welzl move-to-front ----------------------------------------------------

// Circumball of up to d+1 affinely independent boundary points: solve the
// Gram system 2 (a_i - a_0) . (c - a_0) = |a_i - a_0|^2. Degenerate boundary
// sets (they occur transiently during the recursion) just zero the redundant
// coordinates. Radius negative means "empty set, contains nothing".
Ball ball_from_boundary(const std::vector<const Point*>& bnd, std::size_t d) {
  if (bnd.empty()) return Ball{Vec(d), -1.0};
  if (bnd.size() == 1) return Ball{*bnd[0], 0.0};

  const Point& a0 = *bnd[0];
  const std::size_t k = bnd.size() - 1;
  std::vector<Vec> u;
  u.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) u.push_back(*bnd[i] - a0);

  std::vector<double> g(k * k), rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) g[i * k + j] = dot(u[i], u[j]);
    rhs[i] = 0.5 * g[i * k + i];
  }
  gauss_solve(g, rhs, k);

  Vec center = a0;
  for (std::size_t i = 0; i < k; ++i) center += rhs[i] * u[i];
  double r = 0.0;
  for (const Point* p : bnd) r = std::max(r, distance(center, *p));
  return Ball{center, r};
}

bool welzl_inside(const Ball& b, const Point& p) {
  if (b.radius < 0.0) return false;
  const double slack = std::max(1e-14, 1e-10 * b.radius * b.radius);
  return norm2(p - b.center) <= b.radius * b.radius + slack;
}

Ball welzl_mtf(std::vector<const Point*>& pts, std::size_t n,
               std::vector<const Point*>& bnd, std::size_t d) {
  Ball ball = ball_from_boundary(bnd, d);
  if (bnd.size() == d + 1) return ball;
  for (std::size_t i = 0; i < n; ++i) {
    if (welzl_inside(ball, *pts[i])) continue;
    bnd.push_back(pts[i]);
    ball = welzl_mtf(pts, i, bnd, d);
    bnd.pop_back();
    std::rotate(pts.begin(), pts.begin() + i, pts.begin() + i + 1);
  }
  return ball;
}

}  // namespace

// ---- ConvexBody -------------------------------------------------------------

ConvexBody::ConvexBody(Hyperrectangle h, std::optional<Placement> pl)
    : shape_(std::move(h)), placement_(std::move(pl)) {
  const auto& sl = std::get<Hyperrectangle>(shape_).side_lengths;
  if (sl.empty())
    throw std::invalid_argument("hyperrectangle: no side lengths");
  for (double l : sl)
    if (!(l >= 0.0) || !std::isfinite(l))
      throw std::invalid_argument(
          "hyperrectangle: side lengths must be nonnegative");
  if (placement_) check_placement(*placement_, sl.size());
}

ConvexBody::ConvexBody(Simplex s, std::optional<Placement> pl)
    : shape_(std::move(s)), placement_(std::move(pl)) {
  const auto& vs = std::get<Simplex>(shape_).vertices;
  check_vertex_list(vs, "simplex");
  const std::size_t d = vs[0].dim();
  if (vs.size() > d + 1)
    throw std::invalid_argument("simplex: too many vertices for dimension");
  if (rank_of_diffs(vs) != static_cast<int>(vs.size()) - 1)
    throw std::invalid_argument("simplex: vertices are affinely dependent");
  if (placement_) check_placement(*placement_, d);
}

ConvexBody::ConvexBody(VPolytope v, std::optional<Placement> pl)
    : shape_(std::move(v)), placement_(std::move(pl)) {
  const auto& vs = std::get<VPolytope>(shape_).vertices;
  check_vertex_list(vs, "vpolytope");
  if (placement_) check_placement(*placement_, vs[0].dim());
}

std::size_t ConvexBody::dim() const {
  if (const auto* h = as_hyperrectangle()) return h->side_lengths.size();
  if (const auto* s = as_simplex()) return s->vertices[0].dim();
  return as_vpolytope()->vertices[0].dim();
}

Point ConvexBody::to_world(const Point& local) const {
  if (!placement_) return local;
  const std::size_t d = local.dim();
  Vec y = placement_->translation;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      y[i] += placement_->rotation[i][j] * local[j];
  return y;
}

Point ConvexBody::to_local(const Point& world) const {
  if (!placement_) return world;
  const std::size_t d = world.dim();
  const Vec s = world - placement_->translation;
  Vec y(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      y[i] += placement_->rotation[j][i] * s[j];
  return y;
}

bool ConvexBody::contains(const Point& x, double eps) const {
  return membership_oracle(*this)(x, eps);
}

std::vector<Point> ConvexBody::vertices() const {
  std::vector<Point> out;
  if (const auto* h = as_hyperrectangle()) {
    const auto& l = h->side_lengths;
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < l.size(); ++i)
      if (l[i] > 0.0) live.push_back(i);
    if (live.size() > 16)
      throw std::invalid_argument(
          "hyperrectangle: too many corners to enumerate");
    const std::size_t count = std::size_t{1} << live.size();
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
      Vec v(l.size());
      for (std::size_t b = 0; b < live.size(); ++b)
        if ((mask >> b) & 1U) v[live[b]] = l[live[b]];
      out.push_back(to_world(v));
    }
    return out;
  }
  const std::vector<Point>& src =
      as_simplex() ? as_simplex()->vertices : as_vpolytope()->vertices;
  out.reserve(src.size());
  for (const Point& p : src) out.push_back(to_world(p));
  return out;
}

std::pair<Vec, Vec> ConvexBody::bounding_box() const {
  if (const auto* h = as_hyperrectangle(); h && !placement_) {
    return {Vec(h->side_lengths.size()), Vec(h->side_lengths)};
  }
  const std::vector<Point> vs = vertices();
  Vec lo = vs[0], hi = vs[0];
  for (const Point& v : vs)
    for (std::size_t i = 0; i < v.dim(); ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  return {lo, hi};
}

// ---- membership -------------------------------------------------------------

MembershipFn membership_oracle(const ConvexBody& body) {
  const std::optional<Placement> pl = body.placement();
  auto local = [pl](const Point& x) -> Point {
    if (!pl) return x;
    const std::size_t d = x.dim();
    const Vec s = x - pl->translation;
    Vec y(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) y[i] += pl->rotation[j][i] * s[j];
    return y;
  };

  if (const auto* h = body.as_hyperrectangle()) {
    const std::vector<double> l = h->side_lengths;
    return [l, local](const Point& x, double eps) {
      if (x.dim() != l.size()) return false;
      const Point q = local(x);
      for (std::size_t i = 0; i < l.size(); ++i)
        if (q[i] < -eps || q[i] > l[i] + eps) return false;
      return true;
    };
  }

  if (body.as_simplex()) {
    // Factor the barycentric normal equations B^T B once (B stacks vertex
    // coordinates on a row of ones); per query we solve for the coordinates,
    // reject points off the affine hull by residual, and require every
    // coordinate >= -eps.
    const std::vector<Point> v = body.vertices();
    const std::size_t k = v.size();
    const std::size_t d = v[0].dim();
    std::vector<double> m(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        m[i * k + j] = dot(v[i], v[j]) + 1.0;
    LuFactor f;
    f.factor(std::move(m), k);
    return [v, f, k, d](const Point& x, double eps) {
      if (x.dim() != d) return false;
      std::vector<double> rhs(k);
      for (std::size_t j = 0; j < k; ++j) rhs[j] = dot(v[j], x) + 1.0;
      const std::vector<double> lam = f.solve(std::move(rhs));
      Vec rec(d);
      double lsum = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        rec += lam[j] * v[j];
        lsum += lam[j];
      }
      const double res =
          std::sqrt(norm2(rec - x) + (lsum - 1.0) * (lsum - 1.0));
      if (res > eps * (1.0 + norm(x))) return false;
      for (double t : lam)
        if (t < -eps) return false;
      return true;
    };
  }

  const std::vector<Point> v = body.vertices();
  const std::size_t d = v[0].dim();
  if (d == 2) {
    const std::vector<std::size_t> hull = convex_hull_2d(v);
    if (hull.size() <= 2) {
      const Point a = v[hull.front()];
      const Point b = v[hull.back()];
      return [a, b](const Point& x, double eps) {
        return x.dim() == 2 && dist_point_segment(x, a, b) <= eps;
      };
    }
    // Inward half-plane per hull edge, normals unit length so eps acts as a
    // true signed distance.
    struct Edge {
      double nx, ny, off;
    };
    std::vector<Edge> edges;
    edges.reserve(hull.size());
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Point& a = v[hull[i]];
      const Point& b = v[hull[(i + 1) % hull.size()]];
      const double ex = b[0] - a[0], ey = b[1] - a[1];
      const double len = std::hypot(ex, ey);
      edges.push_back({-ey / len, ex / len,
                       (-ey * a[0] + ex * a[1]) / len});
    }
    return [edges](const Point& x, double eps) {
      if (x.dim() != 2) return false;
      for (const Edge& e : edges)
        if (e.nx * x[0] + e.ny * x[1] < e.off - eps) return false;
      return true;
    };
  }
  // General position fallback: one small LP per query. The eps is applied to
  // the phase-1 feasibility residual, which is comparable to a distance for
  // the O(1)-sized bodies this library works with.
  return [v, d](const Point& x, double eps) {
    return x.dim() == d && convex_combination(v, x, eps).has_value();
  };
}

// ---- enclosing balls --------------------------------------------------------

MebResult meb(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("meb: empty point set");
  const std::size_t d = points[0].dim();
  for (const Point& p : points)
    if (p.dim() != d) throw std::invalid_argument("meb: dimension mismatch");

  std::vector<const Point*> ptrs;
  ptrs.reserve(points.size());
  for (const Point& p : points) ptrs.push_back(&p);
  Rng rng(0x5eedULL);  // fixed shuffle seed keeps support sets reproducible
  rng.shuffle(ptrs);

  std::vector<const Point*> bnd;
  MebResult res;
  res.ball = welzl_mtf(ptrs, ptrs.size(), bnd, d);
  for (const Point& p : points)
    if (std::fabs(distance(p, res.ball.center) - res.ball.radius) <= 1e-7)
      res.support.push_back(p);
  return res;
}

MebResult meb(const ConvexBody& body) {
  if (const auto* h = body.as_hyperrectangle()) {
    // Analytic: center l/2, radius |l|/2, every corner on the sphere.
    const auto& l = h->side_lengths;
    Vec half(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) half[i] = 0.5 * l[i];
    MebResult res;
    res.ball = Ball{body.to_world(half), norm(half)};
    std::size_t live = 0;
    for (double s : l)
      if (s > 0.0) ++live;
    if (live <= 12) res.support = body.vertices();
    return res;
  }
  return meb(body.vertices());
}

double radius(const ConvexBody& body) { return meb(body).ball.radius; }

bool is_meb_by_seidel(const std::vector<Point>& support, const Ball& ball) {
  if (support.empty()) return false;
  for (const Point& p : support)
    if (std::fabs(distance(p, ball.center) - ball.radius) > 1e-7) return false;
  return convex_combination(support, ball.center, 1e-7).has_value();
}

bool is_well_centered(const Simplex& s, const Tolerances& tol) {
  const MebResult mb = meb(s.vertices);
  const auto bc = barycentric(s, mb.ball.center);
  if (!bc) return false;
  for (double c : *bc)
    if (c <= tol.geom_eps) return false;
  return true;
}

int affine_dimension(const ConvexBody& body) {
  if (const auto* h = body.as_hyperrectangle()) {
    double top = 1.0;
    for (double l : h->side_lengths) top = std::max(top, l);
    int rank = 0;
    for (double l : h->side_lengths)
      if (l > 1e-7 * top) ++rank;
    return rank;
  }
  return rank_of_diffs(body.vertices());
}

ConvexBody scale_body(const ConvexBody& body, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("scale_body: factor must be nonnegative");
  // Scaling a simplex to a point breaks its affine-independence invariant;
  // the collapsed body is the origin of the body frame as a vertex hull.
  if (lambda == 0.0 && body.as_simplex() != nullptr)
    return ConvexBody(VPolytope{{Vec(body.dim())}}, body.placement());
  if (const auto* h = body.as_hyperrectangle()) {
    Hyperrectangle out = *h;
    for (double& l : out.side_lengths) l *= lambda;
    return ConvexBody(std::move(out), body.placement());
  }
  if (const auto* s = body.as_simplex()) {
    Simplex out = *s;
    for (Point& p : out.vertices) p *= lambda;
    return ConvexBody(std::move(out), body.placement());
  }
  VPolytope out = *body.as_vpolytope();
  for (Point& p : out.vertices) p *= lambda;
  return ConvexBody(std::move(out), body.placement());
}

// ---- hull / combination utilities --------------------------------------------

std::optional<std::vector<double>> convex_combination(
    const std::vector<Point>& points, const Point& target, double eps) {
  if (points.empty()) return std::nullopt;
  const std::size_t d = target.dim();
  for (const Point& p : points)
    if (p.dim() != d)
      throw std::invalid_argument("convex_combination: dimension mismatch");

  // Phase-1 simplex. Rows: d coordinate equations plus the sum-to-one row.
  // Columns: one per candidate point, then one artificial per row, then the
  // right-hand side. Bland's rule (always the lowest eligible index) rules
  // out cycling without any perturbation tricks.
  const std::size_t m = d + 1;
  const std::size_t n = points.size();
  const std::size_t cols = n + m + 1;
  std::vector<double> t(m * cols, 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> double& {
    return t[r * cols + c];
  };

  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t j = 0; j < n; ++j) at(r, j) = points[j][r];
    at(r, cols - 1) = target[r];
  }
  for (std::size_t j = 0; j < n; ++j) at(d, j) = 1.0;
  at(d, cols - 1) = 1.0;

  for (std::size_t r = 0; r < m; ++r) {
    if (at(r, cols - 1) < 0.0)
      for (std::size_t c = 0; c < cols; ++c) at(r, c) = -at(r, c);
    at(r, n + r) = 1.0;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

  const double piv_tol = 1e-11;
  const std::size_t iter_cap = 200 * (n + m) + 1000;
  for (std::size_t it = 0; it < iter_cap; ++it) {
    // Reduced cost of column j is c_j minus the sum of its entries over rows
    // whose basic variable is (still) artificial.
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      double z = (j < n) ? 0.0 : 1.0;
      for (std::size_t r = 0; r < m; ++r)
        if (basis[r] >= n) z -= at(r, j);
      if (z < -1e-12) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    double best = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      const double a = at(r, enter);
      if (a <= piv_tol) continue;
      const double ratio = at(r, cols - 1) / a;
      const double slack = 1e-12 * (1.0 + std::fabs(best));
      if (leave == m || ratio < best - slack ||
          (ratio <= best + slack && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) break;

    const double p = at(leave, enter);
    for (std::size_t c = 0; c < cols; ++c) at(leave, c) /= p;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave) continue;
      const double f = at(r, enter);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < cols; ++c) at(r, c) -= f * at(leave, c);
    }
    basis[leave] = enter;
  }

  double infeas = 0.0;
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] >= n) infeas += std::fabs(at(r, cols - 1));
  if (infeas > eps) return std::nullopt;

  // Basic solution: at most m = d + 1 nonzero coefficients (Caratheodory).
  std::vector<double> lam(n, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) lam[basis[r]] = std::max(0.0, at(r, cols - 1));
  double sum = 0.0;
  for (double& c : lam) {
    if (c < 1e-10) c = 0.0;
    sum += c;
  }
  if (sum <= 0.0) return std::nullopt;
  for (double& c : lam) c /= sum;
  return lam;
}

std::optional<std::vector<double>> barycentric(const Simplex& s,
                                               const Point& x, double eps) {
  const std::size_t k = s.vertices.size();
  if (k == 0) throw std::invalid_argument("barycentric: empty simplex");
  const std::size_t d = s.vertices[0].dim();
  if (x.dim() != d)
    throw std::invalid_argument("barycentric: dimension mismatch");

  // Normal equations of B lam = [x; 1] with B = vertices over a ones row;
  // entries of B^T B are vertex dot products plus one.
  std::vector<double> m(k * k), rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      m[i * k + j] = dot(s.vertices[i], s.vertices[j]) + 1.0;
    rhs[i] = dot(s.vertices[i], x) + 1.0;
  }
  if (!gauss_solve(m, rhs, k))
    throw std::invalid_argument("barycentric: affinely dependent vertices");

  Vec rec(d);
  double lsum = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    rec += rhs[j] * s.vertices[j];
    lsum += rhs[j];
  }
  const double res = std::sqrt(norm2(rec - x) + (lsum - 1.0) * (lsum - 1.0));
  if (res > eps * (1.0 + norm(x))) return std::nullopt;
  return rhs;
}

std::vector<std::size_t> convex_hull_2d(const std::vector<Point>& pts) {
  if (pts.empty()) throw std::invalid_argument("convex_hull_2d: no points");
  for (const Point& p : pts)
    if (p.dim() != 2)
      throw std::invalid_argument("convex_hull_2d: points must be 2D");

  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (pts[a][0] != pts[b][0]) return pts[a][0] < pts[b][0];
    if (pts[a][1] != pts[b][1]) return pts[a][1] < pts[b][1];
    return a < b;
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t a, std::size_t b) {
                            return pts[a][0] == pts[b][0] &&
                                   pts[a][1] == pts[b][1];
                          }),
              order.end());
  if (order.size() == 1) return order;

  const auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
    return (pts[a][0] - pts[o][0]) * (pts[b][1] - pts[o][1]) -
           (pts[a][1] - pts[o][1]) * (pts[b][0] - pts[o][0]);
  };

  // Monotone chain; collinear points are dropped, so a flat input yields
  // exactly its two extremes.
  std::vector<std::size_t> hull(2 * order.size());
  std::size_t h = 0;
  for (std::size_t idx : order) {
    while (h >= 2 && cross(hull[h - 2], hull[h - 1], idx) <= 0.0) --h;
    hull[h++] = idx;
  }
  const std::size_t lower = h + 1;
  for (std::size_t i = order.size() - 1; i-- > 0;) {
    const std::size_t idx = order[i];
    while (h >= lower && cross(hull[h - 2], hull[h - 1], idx) <= 0.0) --h;
    hull[h++] = idx;
  }
  hull.resize(h - 1);
  return hull;
}

}  // namespace udg
