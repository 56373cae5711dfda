#include "dough/control_loop.hpp"

#include <cctype>
#include <cmath>
#include <utility>

#include "dough/errors.hpp"
#include "dough/rng.hpp"

namespace dough {

namespace {

constexpr double kPlacementJitter = 0.002;  // m, per axis

bool is_stall(ErrorCode c) {
  return c == ErrorCode::AllDirectionsExcluded || c == ErrorCode::OriginOutside ||
         c == ErrorCode::NoIntersection;
}

RunRecord snapshot(double t, int iteration, const std::string& action, const Vec3& s,
                   const Vec3& e, const ShapeState& state, const HeightMap& hm,
                   double eps) {
  RunRecord r;
  r.t = t;
  r.iteration = iteration;
  r.action = action;
  r.s = s;
  r.e = e;
  r.iou = state.iou;
  r.max_height = state.max_height;
  r.volume = hm.total_volume();
  r.components = connected_components(hm, eps);
  return r;
}

}  // namespace

Disk named_target(const std::string& name, Vec2 center) {
  std::string n = name;
  for (char& c : n) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  double inches = 0.0;
  if (n == "t3.5") inches = 3.5;
  else if (n == "t4.0") inches = 4.0;
  else if (n == "t4.5") inches = 4.5;
  else raise(ErrorCode::InvalidConfig, "unknown target name: " + name);
  return {center, inches * kInch * 0.5};
}

void RunConfig::validate() const {
  material.validate();
  plan.validate();
  if (target.radius <= 0.0) raise(ErrorCode::InvalidConfig, "target radius must be > 0");
  if (t_max < 0.0) raise(ErrorCode::InvalidConfig, "t_max must be >= 0");
  if (iou_min <= 0.0 || iou_min > 1.0)
    raise(ErrorCode::InvalidConfig, "iou_min must be in (0, 1]");
  if (action_duration <= 0.0)
    raise(ErrorCode::InvalidConfig, "action_duration must be > 0");
  if (workspace <= 0.0 || resolution <= 0.0)
    raise(ErrorCode::InvalidConfig, "workspace and resolution must be > 0");
  if (dough.diameter <= 0.0 || dough.height <= 0.0)
    raise(ErrorCode::InvalidConfig, "dough dimensions must be > 0");
  if (height_eps < 0.0) raise(ErrorCode::InvalidConfig, "height_eps must be >= 0");
}

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::TimeLimit: return "time-limit";
    case StopReason::IoUReached: return "iou-reached";
    case StopReason::Disconnected: return "disconnected";
    case StopReason::Stalled: return "stalled";
  }
  return "unknown";
}

int RunLog::actions_executed() const {
  int n = 0;
  for (const auto& r : records) n += r.action != "init" && r.action != "none";
  return n;
}

RunLog run(const RunConfig& cfg) { return run(cfg, RunObserver{}); }

RunLog run(const RunConfig& cfg, const RunObserver& observe) {
  cfg.validate();
  RunLog log;
  log.config = cfg;

  Rng rng(cfg.seed);
  const Vec2 jitter{rng.uniform(-kPlacementJitter, kPlacementJitter),
                    rng.uniform(-kPlacementJitter, kPlacementJitter)};
  const Vec2 dough_center = cfg.target.center + cfg.dough.offset + jitter;
  HeightMap hm = init_cylinder(cfg.dough.diameter, cfg.dough.height, dough_center,
                               cfg.workspace, cfg.resolution);

  double t = 0.0;
  int iteration = 0;
  ShapeState state = capture(hm, cfg.target, cfg.height_eps);
  log.records.push_back(snapshot(t, iteration, "init", {}, {}, state, hm, cfg.height_eps));
  if (observe) observe(iteration, hm, state, nullptr);

  RollAction next;
  bool have_plan = false;
  try {
    next = plan(cfg.plan, state, hm, cfg.target);
    have_plan = true;
  } catch (const DoughError& e) {
    if (!is_stall(e.code())) throw;
  }

  for (;;) {
    if (state.iou >= cfg.iou_min) {
      log.reason = StopReason::IoUReached;
      break;
    }
    if (t >= cfg.t_max) {
      log.reason = StopReason::TimeLimit;
      break;
    }
    if (!have_plan) {
      // Dead-ended planner: charge one no-op iteration and stop.
      ++iteration;
      t += cfg.action_duration;
      log.records.push_back(snapshot(t, iteration, "none", {}, {}, state, hm, cfg.height_eps));
      log.reason = StopReason::Stalled;
      break;
    }

    const RollAction act = next;
    RollResult res = apply_action(hm, act, cfg.material);
    hm = std::move(res.map);
    log.spilled_volume += res.spilled_volume;
    ++iteration;
    t += cfg.action_duration;

    state = capture(hm, cfg.target, cfg.height_eps);
    log.records.push_back(snapshot(t, iteration, to_string(act.kind), act.start, act.end,
                                   state, hm, cfg.height_eps));
    if (observe) observe(iteration, hm, state, &act);
    if (log.records.back().components > 1) {
      log.reason = StopReason::Disconnected;
      break;
    }

    have_plan = false;
    try {
      next = plan(cfg.plan, state, hm, cfg.target);
      have_plan = true;
    } catch (const DoughError& e) {
      if (!is_stall(e.code())) throw;
    }
  }
  return log;
}

std::vector<RunLog> run_batch(const std::vector<RunConfig>& cfgs, int repetitions) {
  if (repetitions < 1) raise(ErrorCode::InvalidArgument, "repetitions must be >= 1");
  std::vector<RunLog> logs;
  logs.reserve(cfgs.size() * repetitions);
  for (const auto& cfg : cfgs) {
    for (int rep = 0; rep < repetitions; ++rep) {
      RunConfig c = cfg;
      c.seed = cfg.seed + static_cast<std::uint64_t>(rep);
      logs.push_back(run(c));
    }
  }
  return logs;
}

}  // namespace dough
