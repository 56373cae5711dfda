#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dough/materials.hpp"
#include "dough/planner.hpp"

namespace dough {

inline constexpr double kInch = 0.0254;
inline constexpr double kWorkspaceDefault = 0.30;
inline constexpr double kResolutionDefault = 0.001;

// Named target outlines ("T3.5", "T4.0", "T4.5": diameter in inches).
Disk named_target(const std::string& name, Vec2 center);

struct DoughInit {
  double diameter = 0.056;
  double height = 0.016;
  Vec2 offset{0.0, 0.0};  // dough center relative to the target center
};

struct RunConfig {
  MaterialParams material;
  Disk target{{kWorkspaceDefault / 2, kWorkspaceDefault / 2}, 0.0508};
  PlanConfig plan;
  DoughInit dough;
  double t_max = 300.0;
  double iou_min = 0.90;
  std::uint64_t seed = 0;
  double action_duration = 20.0;
  double workspace = kWorkspaceDefault;
  double resolution = kResolutionDefault;
  double height_eps = kHeightEps;
  std::string label;  // carried through to reports

  void validate() const;
};

enum class StopReason { TimeLimit, IoUReached, Disconnected, Stalled };
const char* to_string(StopReason r);

struct RunRecord {
  double t = 0.0;
  int iteration = 0;
  std::string action;  // "init" for record 0, "none" for a stalled no-op
  Vec3 s{0, 0, 0};
  Vec3 e{0, 0, 0};
  double iou = 0.0;
  double max_height = 0.0;
  double volume = 0.0;
  int components = 1;
};

struct RunLog {
  RunConfig config;
  std::vector<RunRecord> records;
  StopReason reason = StopReason::TimeLimit;
  double spilled_volume = 0.0;

  double initial_iou() const { return records.front().iou; }
  double final_iou() const { return records.back().iou; }
  double delta_iou() const { return final_iou() - initial_iou(); }
  int actions_executed() const;
};

// Called after every capture; `acted` is the action that produced the state,
// null for the initial capture.
using RunObserver =
    std::function<void(int iteration, const HeightMap& hm, const ShapeState& state,
                       const RollAction* acted)>;

// One full closed-loop shaping run: capture/evaluate/plan, then
// act/capture/evaluate/plan until a stop condition fires.
RunLog run(const RunConfig& cfg);
RunLog run(const RunConfig& cfg, const RunObserver& observe);

// Repetition r of config c runs with seed cfg.seed + r; output is ordered
// config-major, repetition-minor.
std::vector<RunLog> run_batch(const std::vector<RunConfig>& cfgs, int repetitions);

}  // namespace dough
