#pragma once

#include "morrey/quadrature.hpp"

// Reduced grids keep the unit suites fast; the acceptance suite runs the
// defaults.
inline morrey::GridSettings small_grid() {
  morrey::GridSettings gs;
  gs.trunc = 64;
  gs.angular = 256;
  gs.radial_panels = 18;
  gs.inner_panels = 24;
  gs.box_panels = 10;
  gs.depth = 2;
  return gs;
}
