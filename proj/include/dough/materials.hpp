#pragma once

#include <string>
#include <vector>

#include "dough/heightfield.hpp"

namespace dough {

// Built-in material presets. These are calibration constants chosen so the
// qualitative behaviors (spread-rate ordering, fracture, rate dependence)
// hold; data/materials.toml ships the same values in file form.
MaterialParams material_preset(const std::string& name);
std::vector<std::string> material_preset_names();
bool is_material_preset(const std::string& name);

inline constexpr int kMaterialFileVersion = 1;

}  // namespace dough
