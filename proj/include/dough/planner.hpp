#pragma once

#include <optional>

#include "dough/heightfield.hpp"
#include "dough/perception.hpp"

namespace dough {

enum class StartMethod { Centroid2D, Centroid3D, HighestPoint, DcdGradient };
enum class EndMethod { Target, Current };
enum class ShrinkMode { Disabled, Forward, Side };

const char* to_string(StartMethod m);
const char* to_string(EndMethod m);
const char* to_string(ShrinkMode m);

struct PlanConfig {
  StartMethod start_method = StartMethod::HighestPoint;
  EndMethod end_method = EndMethod::Target;
  ShrinkMode shrink = ShrinkMode::Disabled;
  double shrink_threshold = 0.003;  // m: target-outline stroke width
  int n_directions = 360;
  // DcdGradient only: roll along the descent direction of the picked point;
  // when false (or the gradient has no xy component) fall back to largest-gap.
  bool dcd_roll_along_gradient = true;
  int dcd_target_points = 2000;
  double dcd_sample_pitch = 0.0;  // m: planning-cloud thinning bucket, 0 = off

  void validate() const;
};

Vec3 plan_start(const PlanConfig& cfg, const ShapeState& state, const HeightMap& hm,
                const Disk& target);

// Scan n_directions rays from S; gap = target-outline hit minus dough-outline
// hit; rays whose dough exit lies outside the target are excluded. Returns the
// gap-maximizing unit direction (ties -> smallest angle index).
Vec2 largest_gap_direction(const PlanConfig& cfg, const ShapeState& state,
                           const Disk& target, Vec2 s);

Vec3 plan_end(const PlanConfig& cfg, const Vec3& s, Vec2 dir, const ShapeState& state,
              const Disk& target);

struct ShrinkPlan {
  Vec3 start;
  Vec3 end;
};

// Engages only when the contour pokes more than `threshold` outside the
// target: start at the worst offender, end on the outline toward the center.
std::optional<ShrinkPlan> shrink_plan(const ShapeState& state, const Disk& target,
                                      double threshold);

RollAction plan(const PlanConfig& cfg, const ShapeState& state, const HeightMap& hm,
                const Disk& target);

}  // namespace dough
