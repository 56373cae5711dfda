#include "dough/materials.hpp"

#include <array>

#include "dough/errors.hpp"

namespace dough {

namespace {

MaterialParams make(const char* name, double stiffness, double flow_forward,
                    double flow_lateral, double rate_sensitivity,
                    double cohesion_threshold, double press_depth_factor) {
  MaterialParams m;
  m.name = name;
  m.stiffness = stiffness;
  m.flow_forward = flow_forward;
  m.flow_lateral = flow_lateral;
  m.rate_sensitivity = rate_sensitivity;
  m.cohesion_threshold = cohesion_threshold;
  m.press_depth_factor = press_depth_factor;
  return m;
}

const std::array<MaterialParams, 3>& presets() {
  static const std::array<MaterialParams, 3> table = {
      make("kinetic-sand", 600.0, 0.30, 0.15, 3000.0, 0.003, 0.45),
      make("play-doh", 250.0, 0.45, 0.30, 0.0, 0.0, 0.75),
      make("plasticine", 1200.0, 0.40, 0.30, 0.0, 0.0, 0.85),
  };
  return table;
}

}  // namespace

MaterialParams material_preset(const std::string& name) {
  for (const auto& m : presets())
    if (m.name == name) return m;
  raise(ErrorCode::InvalidConfig, "unknown material preset: " + name);
}

std::vector<std::string> material_preset_names() {
  std::vector<std::string> names;
  for (const auto& m : presets()) names.push_back(m.name);
  return names;
}

bool is_material_preset(const std::string& name) {
  for (const auto& m : presets())
    if (m.name == name) return true;
  return false;
}

}  // namespace dough
