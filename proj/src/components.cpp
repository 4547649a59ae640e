// Small-square component classifier and region map. The case analysis keys
// on the critical side lengths 1/sqrt(2), 2/sqrt(5), sqrt(2); 8/sqrt(65) is
// carried as an informational value only (a chromatic-number transition that
// does not move the component structure).

#include "udg/components.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace udg {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kTwoSqrt5 = 2.0 / std::sqrt(5.0);
const double kEightSqrt65 = 8.0 / std::sqrt(65.0);
const double kSqrt2 = std::sqrt(2.0);
const double kEps = 1e-9;

std::string fmt(double x, const char* spec = "%.6f") {
  char buf[40];
  std::snprintf(buf, sizeof(buf), spec, x);
  return buf;
}

SquareRegime regime_of(double l) {
  if (std::abs(l - kTwoSqrt5) <= kEps) return SquareRegime::at_crit;
  if (l > kTwoSqrt5) return SquareRegime::above_crit;
  if (l >= kInvSqrt2 - kEps) return SquareRegime::between_crit;
  return SquareRegime::below_crit;
}

std::array<Point, 4> square_corners(double l) {
  return {Vec{0.0, 0.0}, Vec{l, 0.0}, Vec{l, l}, Vec{0.0, l}};
}

}  // namespace

std::string to_string(SquareRegime r) {
  switch (r) {
    case SquareRegime::above_crit: return "above-2/sqrt5";
    case SquareRegime::at_crit: return "at-2/sqrt5";
    case SquareRegime::between_crit: return "between-1/sqrt2-and-2/sqrt5";
    case SquareRegime::below_crit: return "below-1/sqrt2";
  }
  return "?";
}

std::string to_string(const ComponentLabel& label) {
  switch (label.component) {
    case ComponentId::big_union: return "big-union";
    case ComponentId::diag_main: return "diag-main";
    case ComponentId::diag_anti: return "diag-anti";
    case ComponentId::arc_frame: return "arc-frame";
    case ComponentId::arc_corner:
      return "arc-corner-" + std::to_string(label.corner_k);
    case ComponentId::isolated: return "isolated";
  }
  return "?";
}

std::vector<CriticalLength> critical_lengths() {
  return {
      {kInvSqrt2, "1/sqrt2", true},
      {kTwoSqrt5, "2/sqrt5", true},
      {kEightSqrt65, "8/sqrt65", false},
      {kSqrt2, "sqrt2", true},
  };
}

ComponentLabel classify_point(double l, const Point& p) {
  if (!(l > 0.0) || l >= kSqrt2) {
    throw std::invalid_argument(
        "classify_point: side must be in (0, sqrt(2)); at sqrt(2) and above "
        "the graph is connected");
  }
  if (p.dim() != 2) {
    throw std::invalid_argument("classify_point: point must be planar");
  }
  if (p[0] < -1e-9 || p[0] > l + 1e-9 || p[1] < -1e-9 || p[1] > l + 1e-9) {
    throw std::invalid_argument("classify_point: point outside the square");
  }

  ComponentLabel label;
  label.regime = regime_of(l);
  label.component = ComponentId::isolated;
  if (label.regime == SquareRegime::below_crit) return label;

  const std::array<Point, 4> corners = square_corners(l);
  std::array<double, 4> dist{};
  for (int k = 0; k < 4; ++k) dist[k] = distance(p, corners[k]);

  // closed-set tie-break: points on a corner circle belong to the arc
  for (int k = 0; k < 4; ++k) {
    if (std::abs(dist[k] - 1.0) > kEps) continue;
    switch (label.regime) {
      case SquareRegime::above_crit:
        label.component = ComponentId::big_union;
        break;
      case SquareRegime::at_crit:
        label.component = ComponentId::arc_frame;
        break;
      default:
        label.component = ComponentId::arc_corner;
        label.corner_k = k + 1;
        break;
    }
    return label;
  }

  // the corners themselves
  for (int k = 0; k < 4; ++k) {
    if (dist[k] > kEps) continue;
    switch (label.regime) {
      case SquareRegime::above_crit:
        label.component = ComponentId::big_union;
        break;
      case SquareRegime::at_crit:
        label.component = ComponentId::arc_frame;
        break;
      default:
        label.component = ComponentId::arc_corner;
        label.corner_k = k + 1;
        break;
    }
    return label;
  }

  if (label.regime == SquareRegime::above_crit) {
    for (int k = 0; k < 4; ++k) {
      if (dist[k] > 1.0 + kEps) {
        label.component = ComponentId::big_union;
        return label;
      }
    }
    return label;  // interior of all four open balls: isolated
  }

  // at and between the critical lengths: the diagonal caps survive
  if (dist[0] > 1.0 + kEps || dist[2] > 1.0 + kEps) {
    label.component = ComponentId::diag_main;
    return label;
  }
  if (dist[1] > 1.0 + kEps || dist[3] > 1.0 + kEps) {
    label.component = ComponentId::diag_anti;
    return label;
  }
  return label;
}

// ---- region map -------------------------------------------------------------

namespace {

// map from the local frame of corner k (axes pointing into the square) to
// world coordinates
Point corner_frame(double l, int k, double a, double b) {
  switch (k) {
    case 0: return Vec{a, b};
    case 1: return Vec{l - a, b};
    case 2: return Vec{l - a, l - b};
    default: return Vec{a, l - b};
  }
}

// arc of S^1(corner_k, 1) inside the square, sampled start to end
std::vector<Point> corner_arc(double l, int k, int samples) {
  const double th_lo = l >= 1.0 ? 0.0 : std::acos(l);
  const double th_hi = l >= 1.0 ? std::asin(1.0) : std::asin(l);
  std::vector<Point> pts;
  if (th_hi < th_lo) return pts;
  for (int i = 0; i <= samples; ++i) {
    const double th = th_lo + (th_hi - th_lo) * i / samples;
    pts.push_back(corner_frame(l, k, std::cos(th), std::sin(th)));
  }
  return pts;
}

// cap {p in the square : d(p, corner_k) >= 1}, as a closed polygon
std::vector<Point> corner_cap(double l, int k, int samples) {
  std::vector<Point> poly = corner_arc(l, k, samples);
  if (poly.empty()) return poly;
  if (l >= 1.0) {
    poly.push_back(corner_frame(l, k, 0.0, l));
    poly.push_back(corner_frame(l, k, l, l));
    poly.push_back(corner_frame(l, k, l, 0.0));
  } else {
    poly.push_back(corner_frame(l, k, l, l));
  }
  return poly;
}

}  // namespace

std::string emit_region_svg(double l) {
  if (!(l > 0.0) || l >= kSqrt2) {
    throw std::invalid_argument("region svg: side must be in (0, sqrt(2))");
  }
  const SquareRegime regime = regime_of(l);
  const double margin = 60.0;
  const double scale = (1000.0 - 2.0 * margin) / l;
  auto px = [&](const Point& p) {
    return std::pair<double, double>{margin + p[0] * scale,
                                     1000.0 - margin - p[1] * scale};
  };
  auto points_attr = [&](const std::vector<Point>& pts) {
    std::string s;
    for (const Point& p : pts) {
      const auto [x, y] = px(p);
      if (!s.empty()) s += " ";
      s += fmt(x) + "," + fmt(y);
    }
    return s;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
  svg += "<desc>Nontrivial components of the unit-distance graph on the square "
         "of side " + fmt(l) + "; regime " + to_string(regime) +
         ". Conjectured component structure; cross-checked numerically against "
         "a grid oracle, not proven.</desc>\n";
  svg += "<style>\n"
         ".outline{fill:none;stroke:#444;stroke-width:2}\n"
         ".big-union{fill:#7fb3d5;fill-opacity:0.65;stroke:#2e86c1;stroke-width:2}\n"
         ".diag-main{fill:#f5b041;fill-opacity:0.70;stroke:#ca6f1e;stroke-width:2}\n"
         ".diag-anti{fill:#82e0aa;fill-opacity:0.70;stroke:#1e8449;stroke-width:2}\n"
         ".arc-frame{fill:none;stroke:#17202a;stroke-width:7;stroke-linecap:round}\n"
         ".arc-c1{fill:none;stroke:#c0392b;stroke-width:7;stroke-linecap:round}\n"
         ".arc-c2{fill:none;stroke:#8e44ad;stroke-width:7;stroke-linecap:round}\n"
         ".arc-c3{fill:none;stroke:#2471a3;stroke-width:7;stroke-linecap:round}\n"
         ".arc-c4{fill:none;stroke:#0e6655;stroke-width:7;stroke-linecap:round}\n"
         ".node-frame{fill:#17202a}\n"
         ".node-c1{fill:#c0392b}\n.node-c2{fill:#8e44ad}\n"
         ".node-c3{fill:#2471a3}\n.node-c4{fill:#0e6655}\n"
         "</style>\n";

  const int samples = 96;

  // shaded caps first (painter's order), then arcs, then corner nodes
  if (regime == SquareRegime::above_crit) {
    for (int k = 0; k < 4; ++k) {
      svg += "<polygon class=\"big-union\" points=\"" +
             points_attr(corner_cap(l, k, samples)) + "\"/>\n";
    }
  } else if (regime != SquareRegime::below_crit) {
    for (int k = 0; k < 4; ++k) {
      const std::vector<Point> cap = corner_cap(l, k, samples);
      if (cap.empty()) continue;
      const char* cls = (k == 0 || k == 2) ? "diag-main" : "diag-anti";
      svg += std::string("<polygon class=\"") + cls + "\" points=\"" +
             points_attr(cap) + "\"/>\n";
    }
  }

  svg += "<rect class=\"outline\" x=\"" + fmt(margin) + "\" y=\"" + fmt(margin) +
         "\" width=\"" + fmt(1000.0 - 2.0 * margin) + "\" height=\"" +
         fmt(1000.0 - 2.0 * margin) + "\"/>\n";

  if (regime == SquareRegime::at_crit || regime == SquareRegime::between_crit) {
    for (int k = 0; k < 4; ++k) {
      const std::vector<Point> arc = corner_arc(l, k, samples);
      if (arc.empty()) continue;
      const std::string cls = regime == SquareRegime::at_crit
                                  ? std::string("arc-frame")
                                  : "arc-c" + std::to_string(k + 1);
      svg += "<polyline class=\"" + cls + "\" points=\"" + points_attr(arc) +
             "\"/>\n";
    }
    for (int k = 0; k < 4; ++k) {
      const auto [x, y] = px(square_corners(l)[k]);
      const std::string cls = regime == SquareRegime::at_crit
                                  ? std::string("node-frame")
                                  : "node-c" + std::to_string(k + 1);
      svg += "<circle class=\"" + cls + "\" cx=\"" + fmt(x) + "\" cy=\"" +
             fmt(y) + "\" r=\"8\"/>\n";
    }
  }

  svg += "</svg>\n";
  return svg;
}

std::string component_grid_csv(double l, std::size_t n) {
  if (n < 2) throw std::invalid_argument("component grid: need n >= 2");
  std::string out =
      "# conjectured component structure; cross-checked numerically against a "
      "grid oracle, not proven\n";
  out += "x,y,regime,component\n";
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const double x = l * static_cast<double>(i) / static_cast<double>(n - 1);
      const double y = l * static_cast<double>(j) / static_cast<double>(n - 1);
      const ComponentLabel lab = classify_point(l, Vec{x, y});
      out += fmt(x, "%.12g");
      out += ",";
      out += fmt(y, "%.12g");
      out += "," + to_string(lab.regime) + "," + to_string(lab) + "\n";
    }
  }
  return out;
}

}  // namespace udg
