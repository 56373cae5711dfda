#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dough/control_loop.hpp"

namespace dough {

enum class PresetKind { Runs, DcdDemo, TactileDemo };

struct ExperimentPreset {
  std::string name;
  PresetKind kind = PresetKind::Runs;
  std::vector<RunConfig> configs;  // empty for the demo kinds
  int repetitions = 3;
};

// Factor matrices for the stock experiments:
//   materials      3 materials x 3 centroid/highest start methods, T4.0
//   start-methods  3 start methods x {play-doh, plasticine}, T4.0, target end
//   end-methods    target vs current, play-doh, highest-point, T4.5
//   shrink         disabled/forward/side, play-doh, highest-point/target, T3.5
//   target-shapes  T3.5/T4.0/T4.5, play-doh, highest-point/target
//   dcd-synthetic  point-cloud deformation demo (no heightfield runs)
//   tactile        press-measurement demo (no heightfield runs)
ExperimentPreset experiment_preset(const std::string& name, std::uint64_t seed);
std::vector<std::string> experiment_preset_names();

}  // namespace dough
