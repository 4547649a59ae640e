// Component structure of the unit-distance graph on small squares C^2(l):
// the critical side lengths, the closed-form point classifier, and the SVG
// region map. The component structure is conjectured in the source material
// and cross-checked numerically against the grid oracle here, not proven;
// emitted artifacts carry that caveat in their metadata.
//
// Corners are indexed counterclockwise from the origin:
//   1: (0, 0)   2: (l, 0)   3: (l, l)   4: (0, l)
// so the main diagonal joins corners 1 and 3, the anti diagonal 2 and 4.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "udg/geom.hpp"

namespace udg {

enum class SquareRegime {
  above_crit,    // 2/sqrt(5) < l < sqrt(2): one nontrivial component
  at_crit,       // l = 2/sqrt(5): three nontrivial components
  between_crit,  // 1/sqrt(2) <= l < 2/sqrt(5): six nontrivial components
  below_crit,    // l < 1/sqrt(2): no edges at all
};

enum class ComponentId {
  big_union,   // union over corners v of C^2(l) minus the open ball B(v, 1)
  diag_main,   // points strictly beyond distance 1 from corner 1 or corner 3
  diag_anti,   // likewise for corners 2 and 4
  arc_frame,   // all four corners plus all four arcs S^1(v,1) within the square
  arc_corner,  // one corner plus its own arc (corner_k says which)
  isolated,
};

struct ComponentLabel {
  SquareRegime regime = SquareRegime::below_crit;
  ComponentId component = ComponentId::isolated;
  int corner_k = 0;  // 1..4 for arc_corner, 0 otherwise
};

std::string to_string(SquareRegime r);
std::string to_string(const ComponentLabel& label);  // e.g. "arc-corner-2"

struct CriticalLength {
  double value = 0.0;
  std::string name;
  bool component_transition = true;  // 8/sqrt(65) is informational only
};

// ascending: 1/sqrt(2), 2/sqrt(5), 8/sqrt(65) (informational), sqrt(2)
std::vector<CriticalLength> critical_lengths();

// Classifies p in C^2(l) by the case analysis over l. Points on a corner
// circle (|d(p,v) - 1| <= geom_eps) belong to the arc component, the
// closed-set tie-break. Throws for p outside the square or l >= sqrt(2)
// (the graph is connected there and classification is trivial).
ComponentLabel classify_point(double l, const Point& p);

// Deterministic 1000x1000 region map: shaded diagonal caps, corner arcs as
// strokes, corner nodes as filled dots, styled per component. Requires
// 0 < l < sqrt(2).
std::string emit_region_svg(double l);

// CSV dump of an n x n point grid over the square: x,y,regime,component
std::string component_grid_csv(double l, std::size_t n);

}  // namespace udg
