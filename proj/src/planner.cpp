#include "dough/planner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dough/dcd.hpp"
#include "dough/errors.hpp"

namespace dough {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct DcdStart {
  Vec3 point;
  Vec2 descent;   // xy of -gradient at that point (not normalized)
};

// Planning runs on a thinned copy of the cloud: one representative point per
// coarse bucket, each a real surface point. At full grid density the loss
// kernel only ever sees cell-to-cell kinks, and the descent chases scars left
// by the previous stroke instead of regional shape error.
PointCloud thin_cloud(const PointCloud& cloud, double pitch) {
  if (pitch <= 0.0) return cloud;
  std::unordered_map<std::uint64_t, std::size_t> best;
  const double inv = 1.0 / pitch;
  auto bucket_of = [&](const Vec3& p, double& d2) {
    const double bx = std::floor(p.x * inv);
    const double by = std::floor(p.y * inv);
    const double cx = (bx + 0.5) * pitch;
    const double cy = (by + 0.5) * pitch;
    d2 = (p.x - cx) * (p.x - cx) + (p.y - cy) * (p.y - cy);
    const auto ux = static_cast<std::uint64_t>(static_cast<std::int64_t>(bx) + (1u << 20));
    const auto uy = static_cast<std::uint64_t>(static_cast<std::int64_t>(by) + (1u << 20));
    return (ux << 32) | uy;
  };
  for (std::size_t i = 0; i < cloud.pts.size(); ++i) {
    double d2;
    const std::uint64_t key = bucket_of(cloud.pts[i], d2);
    const auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(key, i);
    } else {
      double d2_old;
      bucket_of(cloud.pts[it->second], d2_old);
      if (d2 < d2_old) it->second = i;
    }
  }
  std::vector<std::size_t> keep;
  keep.reserve(best.size());
  for (const auto& [k, i] : best) keep.push_back(i);
  std::sort(keep.begin(), keep.end());
  PointCloud out;
  out.pts.reserve(keep.size());
  for (std::size_t i : keep) out.pts.push_back(cloud.pts[i]);
  return out;
}

DcdStart dcd_start(const PlanConfig& cfg, const ShapeState& state, const HeightMap& hm,
                   const Disk& target) {
  const PointCloud ref = discretize_target(target, cfg.dcd_target_points, hm.total_volume());
  const PointCloud sub = thin_cloud(state.cloud, cfg.dcd_sample_pitch);
  const std::vector<Vec3> g = dcd_gradient(ref, sub, {});
  const std::size_t i = max_grad_point(g);
  return {sub.pts[i], {-g[i].x, -g[i].y}};
}

}  // namespace

const char* to_string(StartMethod m) {
  switch (m) {
    case StartMethod::Centroid2D: return "centroid-2d";
    case StartMethod::Centroid3D: return "centroid-3d";
    case StartMethod::HighestPoint: return "highest-point";
    case StartMethod::DcdGradient: return "dcd-gradient";
  }
  return "unknown";
}

const char* to_string(EndMethod m) {
  return m == EndMethod::Target ? "target" : "current";
}

const char* to_string(ShrinkMode m) {
  switch (m) {
    case ShrinkMode::Disabled: return "disabled";
    case ShrinkMode::Forward: return "forward";
    case ShrinkMode::Side: return "side";
  }
  return "unknown";
}

void PlanConfig::validate() const {
  if (shrink_threshold < 0.0) raise(ErrorCode::InvalidConfig, "shrink_threshold must be >= 0");
  if (n_directions < 8) raise(ErrorCode::InvalidConfig, "n_directions must be >= 8");
  if (dcd_target_points < 16) raise(ErrorCode::InvalidConfig, "dcd_target_points must be >= 16");
}

Vec3 plan_start(const PlanConfig& cfg, const ShapeState& state, const HeightMap& hm,
                const Disk& target) {
  switch (cfg.start_method) {
    case StartMethod::Centroid2D: {
      const Vec2 c = centroid_2d(state.mask);
      return {c.x, c.y, knn_z(state.cloud, c)};
    }
    case StartMethod::Centroid3D:
      return centroid_3d(state.cloud);
    case StartMethod::HighestPoint:
      return highest_point(hm);
    case StartMethod::DcdGradient:
      return dcd_start(cfg, state, hm, target).point;
  }
  raise(ErrorCode::InvalidConfig, "unknown start method");
}

Vec2 largest_gap_direction(const PlanConfig& cfg, const ShapeState& state,
                           const Disk& target, Vec2 s) {
  cfg.validate();
  double best_gap = 0.0;
  int best = -1;
  for (int i = 0; i < cfg.n_directions; ++i) {
    const double th = 2.0 * kPi * i / cfg.n_directions;
    const Vec2 dir{std::cos(th), std::sin(th)};
    const double td = ray_contour_farthest(s, dir, state.contour);
    if (td < 0.0) continue;  // ray never leaves through the dough boundary
    const Vec2 exit_pt = s + dir * td;
    if (!disk_contains(target, exit_pt)) continue;  // dough outside target here
    const double tt = ray_circle_farthest(s, dir, target);
    if (tt < 0.0) continue;
    const double gap = tt - td;
    if (best < 0 || gap > best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  if (best < 0)
    raise(ErrorCode::AllDirectionsExcluded, "dough exits the target along every ray");
  const double th = 2.0 * kPi * best / cfg.n_directions;
  return {std::cos(th), std::sin(th)};
}

Vec3 plan_end(const PlanConfig& cfg, const Vec3& s, Vec2 dir, const ShapeState& state,
              const Disk& target) {
  const Vec2 o = s.xy();
  double t;
  if (cfg.end_method == EndMethod::Target) {
    t = ray_circle_farthest(o, dir, target);
    if (t < 0.0) raise(ErrorCode::NoIntersection, "ray misses the target outline");
  } else {
    t = ray_contour_farthest(o, dir, state.contour);
    if (t < 0.0) raise(ErrorCode::NoIntersection, "ray misses the dough outline");
  }
  const Vec2 e = o + dir * t;
  return {e.x, e.y, s.z};
}

std::optional<ShrinkPlan> shrink_plan(const ShapeState& state, const Disk& target,
                                      double threshold) {
  double worst = 0.0;
  int best = -1;
  for (std::size_t i = 0; i < state.contour.size(); ++i) {
    const Vec2 p = state.contour.pts[i];
    const double r = (p - target.center).norm();
    if (r <= 1e-12) continue;
    const double out = r - target.radius;
    if (best < 0 || out > worst) {
      worst = out;
      best = static_cast<int>(i);
    }
  }
  if (best < 0 || worst <= threshold) return std::nullopt;
  const Vec2 p = state.contour.pts[best];
  const Vec2 u = (p - target.center).normalized();
  const Vec2 e = target.center + u * target.radius;
  return ShrinkPlan{{p.x, p.y, 0.0}, {e.x, e.y, 0.0}};
}

RollAction plan(const PlanConfig& cfg, const ShapeState& state, const HeightMap& hm,
                const Disk& target) {
  cfg.validate();
  RollAction a;
  if (cfg.shrink != ShrinkMode::Disabled) {
    if (const auto sp = shrink_plan(state, target, cfg.shrink_threshold)) {
      a.kind = cfg.shrink == ShrinkMode::Forward ? ActionKind::ForwardShrink
                                                 : ActionKind::SideShrink;
      a.start = sp->start;
      a.end = sp->end;
      return a;
    }
  }
  a.kind = ActionKind::Roll;
  Vec2 dir{0.0, 0.0};
  bool have_dir = false;
  if (cfg.start_method == StartMethod::DcdGradient) {
    const DcdStart ds = dcd_start(cfg, state, hm, target);
    a.start = ds.point;
    if (cfg.dcd_roll_along_gradient && ds.descent.norm_sq() > 1e-24) {
      dir = ds.descent.normalized();
      // A descent roll is a local correction. Running it to the far side of
      // the outline would just relocate the error there, so the stroke stops
      // at the first outline crossing instead.
      const double t = ray_circle_nearest(a.start.xy(), dir, target);
      if (t > 0.0) {
        const Vec2 e = a.start.xy() + dir * t;
        a.end = {e.x, e.y, a.start.z};
        return a;
      }
      have_dir = true;
    }
  } else {
    a.start = plan_start(cfg, state, hm, target);
  }
  if (!have_dir) dir = largest_gap_direction(cfg, state, target, a.start.xy());
  a.end = plan_end(cfg, a.start, dir, state, target);
  return a;
}

}  // namespace dough
