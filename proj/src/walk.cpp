// Random-walk simulation: exact 2D feasible arcs via half-plane clipping of
// the unit circle, rejection sampling in 3D, slot-indexed parallel ensembles,
// and the binned summaries behind the heatmap output.

#include "udg/walk.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace udg {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string fmt_g(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double wrap_angle(double th) {
  th = std::fmod(th, kTwoPi);
  if (th < 0.0) th += kTwoPi;
  return th;
}

// intersects the running interval list with [s, s + len] (mod 2*pi)
std::vector<AngleInterval> clip_intervals(const std::vector<AngleInterval>& cur,
                                          double s, double len) {
  std::vector<AngleInterval> pieces;
  s = wrap_angle(s);
  if (s + len <= kTwoPi) {
    pieces.push_back({s, s + len});
  } else {
    pieces.push_back({s, kTwoPi});
    pieces.push_back({0.0, s + len - kTwoPi});
  }
  std::vector<AngleInterval> out;
  for (const AngleInterval& a : cur) {
    for (const AngleInterval& b : pieces) {
      const double lo = std::max(a.lo, b.lo);
      const double hi = std::min(a.hi, b.hi);
      if (hi - lo >= -1e-9) out.push_back({lo, std::max(lo, hi)});
    }
  }
  return out;
}

Vec unit_dir(double th) { return Vec{std::cos(th), std::sin(th)}; }

}  // namespace

std::string to_string(WalkStatus s) {
  switch (s) {
    case WalkStatus::completed: return "completed";
    case WalkStatus::stuck: return "stuck";
    case WalkStatus::stuck_numeric: return "stuck-numeric";
  }
  return "?";
}

FeasibleDirections feasible_directions(const ConvexBody& body, const Point& p) {
  if (body.dim() != 2) {
    throw std::invalid_argument("feasible directions: exact arcs are 2D only");
  }
  if (p.dim() != 2) {
    throw std::invalid_argument("feasible directions: point must be planar");
  }
  if (!body.contains(p)) {
    throw std::invalid_argument("feasible directions: point outside the body");
  }

  FeasibleDirections fd;
  const std::vector<Point> verts = body.vertices();
  const std::vector<std::size_t> hull = convex_hull_2d(verts);

  auto add_atom = [&](const Vec& u) {
    if (!body.contains(p + u, 1e-8)) return;
    for (const Vec& a : fd.atoms) {
      if (distance(a, u) <= 1e-7) return;
    }
    fd.atoms.push_back(u);
  };

  if (hull.size() <= 2) {
    // degenerate body: intersect the unit circle with a point or segment
    const Point& a = verts[hull.front()];
    if (hull.size() == 1) {
      fd.kind = FeasibleKind::empty;
      return fd;
    }
    const Point& b = verts[hull.back()];
    const Vec e = b - a;
    const Vec w = a - p;
    const double A = dot(e, e), B = 2.0 * dot(e, w), C = dot(w, w) - 1.0;
    const double disc = B * B - 4.0 * A * C;
    if (disc >= 0.0 && A > 1e-18) {
      const double sq = std::sqrt(disc);
      for (const double t : {(-B - sq) / (2.0 * A), (-B + sq) / (2.0 * A)}) {
        if (t < -1e-9 || t > 1.0 + 1e-9) continue;
        const Vec u = (a + e * t) - p;
        const double n = norm(u);
        if (std::abs(n - 1.0) > 1e-9 || n <= 0.0) continue;
        add_atom(u * (1.0 / n));
      }
    }
    fd.kind = fd.atoms.empty() ? FeasibleKind::empty : FeasibleKind::finite_set;
    return fd;
  }

  // half-plane clipping of the unit circle around p
  std::vector<AngleInterval> intervals{{0.0, kTwoPi}};
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = verts[hull[i]];
    const Point& b = verts[hull[(i + 1) % hull.size()]];
    const Vec e = b - a;
    const Vec n = Vec{e[1], -e[0]};  // outward for a counterclockwise hull
    const double R = norm(n);
    if (R <= 1e-15) continue;
    const double bnd = dot(n, a) - dot(n, p);
    if (bnd >= R) continue;  // whole circle satisfies this edge
    if (bnd < -R) {
      intervals.clear();
      break;
    }
    const double phi = std::atan2(n[1], n[0]);
    const double alpha = std::acos(std::clamp(bnd / R, -1.0, 1.0));
    intervals = clip_intervals(intervals, phi + alpha, kTwoPi - 2.0 * alpha);
    if (intervals.empty()) break;
  }

  for (const AngleInterval& iv : intervals) {
    if (iv.length() >= 1e-9) {
      fd.arcs.push_back(iv);
    } else {
      add_atom(unit_dir(0.5 * (iv.lo + iv.hi)));
    }
  }
  std::sort(fd.arcs.begin(), fd.arcs.end(),
            [](const AngleInterval& x, const AngleInterval& y) {
              return x.lo < y.lo;
            });
  if (!fd.arcs.empty()) {
    fd.kind = FeasibleKind::continuous_arcs;
  } else if (!fd.atoms.empty()) {
    fd.kind = FeasibleKind::finite_set;
  } else {
    fd.kind = FeasibleKind::empty;
  }
  return fd;
}

Vec step_sample(const FeasibleDirections& fd, Rng& rng) {
  if (fd.kind == FeasibleKind::empty) {
    throw std::logic_error("step sample: empty feasible set");
  }
  if (fd.kind == FeasibleKind::finite_set) {
    return fd.atoms[static_cast<std::size_t>(
        rng.next_below(fd.atoms.size()))];
  }
  const double total = fd.total_measure();
  double t = rng.next_double() * total;
  for (const AngleInterval& iv : fd.arcs) {
    if (t <= iv.length() || &iv == &fd.arcs.back()) {
      return unit_dir(iv.lo + std::min(t, iv.length()));
    }
    t -= iv.length();
  }
  return unit_dir(fd.arcs.back().hi);
}

// ---- ensembles ------------------------------------------------------------------

namespace {

struct RunResult {
  Vec final_pos;
  std::size_t steps_taken = 0;
  WalkStatus status = WalkStatus::completed;
  std::vector<Vec> trajectory;
  std::string error;
};

RunResult simulate_run(const WalkConfig& cfg, std::uint64_t run_index) {
  RunResult res;
  Rng rng = rng_stream(cfg.seed, run_index);
  const std::size_t d = cfg.body.dim();
  Vec pos = cfg.start;
  if (cfg.record_trajectories) res.trajectory.push_back(pos);
  for (std::size_t s = 1; s <= cfg.steps; ++s) {
    Vec u;
    if (d == 2) {
      const FeasibleDirections fd = feasible_directions(cfg.body, pos);
      if (fd.kind == FeasibleKind::empty) {
        res.status = WalkStatus::stuck;
        break;
      }
      u = step_sample(fd, rng);
    } else {
      bool accepted = false;
      for (int tries = 0; tries < 1'000'000; ++tries) {
        Vec g(d);
        double n2 = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
          g[i] = rng.next_gauss();
          n2 += g[i] * g[i];
        }
        if (n2 < 1e-24) continue;
        const double inv = 1.0 / std::sqrt(n2);
        for (std::size_t i = 0; i < d; ++i) g[i] *= inv;
        if (cfg.body.contains(pos + g)) {
          u = g;
          accepted = true;
          break;
        }
      }
      if (!accepted) {
        res.status = WalkStatus::stuck_numeric;
        break;
      }
    }
    // invariants checked as the walk runs, not post hoc
    if (std::abs(norm(u) - 1.0) > 1e-9 || !cfg.body.contains(pos + u, 1e-9)) {
      throw std::runtime_error("walk invariant violated");
    }
    pos += u;
    res.steps_taken = s;
    if (cfg.record_trajectories) res.trajectory.push_back(pos);
  }
  res.final_pos = pos;
  return res;
}

}  // namespace

WalkEnsemble run_ensemble(const WalkConfig& cfg, bool parallel) {
  const std::size_t d = cfg.body.dim();
  if (d < 2 || d > 3) {
    throw std::invalid_argument("walker: body must be 2D or 3D");
  }
  if (cfg.runs < 1) throw std::invalid_argument("walker: need at least one run");
  if (cfg.start.dim() != d) {
    throw std::invalid_argument("walker: start dimension mismatch");
  }
  if (!cfg.body.contains(cfg.start)) {
    throw std::invalid_argument("walker: start outside the body");
  }

  WalkEnsemble ens;
  ens.config = cfg;
  ens.final_positions.resize(cfg.runs);
  ens.steps_taken.resize(cfg.runs);
  ens.statuses.resize(cfg.runs);
  if (cfg.record_trajectories) ens.trajectories.resize(cfg.runs);

  std::vector<std::string> errors(parallel ? cfg.runs : 0);
  const std::int64_t n = static_cast<std::int64_t>(cfg.runs);
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t r = 0; r < n; ++r) {
      try {
        RunResult res = simulate_run(cfg, static_cast<std::uint64_t>(r));
        ens.final_positions[r] = res.final_pos;
        ens.steps_taken[r] = res.steps_taken;
        ens.statuses[r] = res.status;
        if (cfg.record_trajectories) {
          ens.trajectories[r] = std::move(res.trajectory);
        }
      } catch (const std::exception& e) {
        errors[r] = e.what();
      }
    }
    for (const std::string& e : errors) {
      if (!e.empty()) throw std::runtime_error(e);
    }
  } else {
    for (std::int64_t r = 0; r < n; ++r) {
      RunResult res = simulate_run(cfg, static_cast<std::uint64_t>(r));
      ens.final_positions[r] = res.final_pos;
      ens.steps_taken[r] = res.steps_taken;
      ens.statuses[r] = res.status;
      if (cfg.record_trajectories) {
        ens.trajectories[r] = std::move(res.trajectory);
      }
    }
  }
  return ens;
}

std::string walk_ensemble_csv(const WalkEnsemble& ens) {
  const std::size_t d = ens.config.body.dim();
  std::string out = "run,step,x,y";
  if (d > 2) out += ",z";
  out += ",status\n";
  auto row = [&](std::size_t run, std::size_t step, const Vec& p,
                 WalkStatus st) {
    out += std::to_string(run) + "," + std::to_string(step);
    for (std::size_t i = 0; i < d; ++i) out += "," + fmt_g(p[i]);
    out += "," + to_string(st) + "\n";
  };
  for (std::size_t r = 0; r < ens.final_positions.size(); ++r) {
    if (!ens.trajectories.empty()) {
      for (std::size_t s = 0; s < ens.trajectories[r].size(); ++s) {
        row(r, s, ens.trajectories[r][s], ens.statuses[r]);
      }
    } else {
      row(r, ens.steps_taken[r], ens.final_positions[r], ens.statuses[r]);
    }
  }
  return out;
}

Histogram2D histogram2d(const WalkEnsemble& ens, std::size_t bins) {
  if (ens.config.body.dim() != 2) {
    throw std::invalid_argument("histogram: 2D ensembles only");
  }
  if (bins < 1) throw std::invalid_argument("histogram: need at least one bin");
  const auto [lo, hi] = ens.config.body.bounding_box();
  Histogram2D h;
  h.bins = bins;
  h.origin = lo;
  h.side = std::max(hi[0] - lo[0], hi[1] - lo[1]);
  if (h.side <= 0.0) h.side = 1.0;
  h.counts.assign(bins * bins, 0);
  for (const Vec& p : ens.final_positions) {
    std::size_t ix[2];
    for (int i = 0; i < 2; ++i) {
      const double t = (p[i] - lo[i]) / h.side * static_cast<double>(bins);
      ix[i] = static_cast<std::size_t>(
          std::clamp(t, 0.0, static_cast<double>(bins) - 1.0));
    }
    ++h.counts[ix[0] + bins * ix[1]];
  }
  h.freq.resize(h.counts.size());
  const double n = static_cast<double>(ens.final_positions.size());
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    h.freq[i] = static_cast<double>(h.counts[i]) / n;
  }
  return h;
}

std::string histogram_csv(const Histogram2D& h) {
  std::string out;
  for (std::size_t y = 0; y < h.bins; ++y) {
    for (std::size_t x = 0; x < h.bins; ++x) {
      if (x) out += ",";
      out += fmt_g(h.freq[x + h.bins * y]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace udg
