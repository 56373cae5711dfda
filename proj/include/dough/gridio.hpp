#pragma once

#include <string>

#include "dough/heightfield.hpp"
#include "dough/perception.hpp"

namespace dough {

// Portable snapshot format, line-oriented:
//   doughgrid 1
//   <nx> <ny> <resolution> <origin.x> <origin.y>
//   ny rows of nx heights (row 0 first), space-separated
void save_grid(const HeightMap& hm, const std::string& path);
HeightMap load_grid(const std::string& path);

// Top-down scene rendering: dough contour fill, target outline, optional
// planned stroke arrow, metric caption.
std::string svg_scene(const HeightMap& hm, const Disk& target, const Contour* contour,
                      const RollAction* action, double iou_value);
void save_svg(const std::string& svg, const std::string& path);

}  // namespace dough
