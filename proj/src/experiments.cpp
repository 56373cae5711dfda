#include "dough/experiments.hpp"

#include "dough/errors.hpp"

namespace dough {

namespace {

RunConfig base_config(std::uint64_t seed) {
  RunConfig cfg;
  cfg.material = material_preset("play-doh");
  cfg.plan.start_method = StartMethod::HighestPoint;
  cfg.plan.end_method = EndMethod::Target;
  cfg.plan.shrink = ShrinkMode::Disabled;
  cfg.seed = seed;
  cfg.iou_min = 0.90;
  const Vec2 c{cfg.workspace / 2, cfg.workspace / 2};
  cfg.target = named_target("T4.0", c);
  return cfg;
}

std::string label3(const std::string& a, const std::string& b, const std::string& c) {
  return a + "/" + b + "/" + c;
}

}  // namespace

ExperimentPreset experiment_preset(const std::string& name, std::uint64_t seed) {
  ExperimentPreset p;
  p.name = name;
  const Vec2 center{kWorkspaceDefault / 2, kWorkspaceDefault / 2};

  if (name == "materials") {
    for (const std::string& mat : material_preset_names()) {
      for (StartMethod m : {StartMethod::Centroid2D, StartMethod::Centroid3D,
                            StartMethod::HighestPoint}) {
        RunConfig cfg = base_config(seed);
        cfg.material = material_preset(mat);
        cfg.plan.start_method = m;
        cfg.label = label3(mat, "T4.0", to_string(m));
        p.configs.push_back(cfg);
      }
    }
  } else if (name == "start-methods") {
    for (const std::string& mat : {std::string("play-doh"), std::string("plasticine")}) {
      for (StartMethod m : {StartMethod::Centroid2D, StartMethod::Centroid3D,
                            StartMethod::HighestPoint}) {
        RunConfig cfg = base_config(seed);
        cfg.material = material_preset(mat);
        cfg.plan.start_method = m;
        cfg.label = label3(mat, "T4.0", to_string(m));
        p.configs.push_back(cfg);
      }
    }
  } else if (name == "end-methods") {
    for (EndMethod m : {EndMethod::Target, EndMethod::Current}) {
      RunConfig cfg = base_config(seed);
      cfg.target = named_target("T4.5", center);
      cfg.plan.end_method = m;
      cfg.label = label3("play-doh", "T4.5", to_string(m));
      p.configs.push_back(cfg);
    }
  } else if (name == "shrink") {
    for (ShrinkMode m : {ShrinkMode::Disabled, ShrinkMode::Forward, ShrinkMode::Side}) {
      RunConfig cfg = base_config(seed);
      cfg.target = named_target("T3.5", center);
      cfg.plan.shrink = m;
      // A tight trigger makes the comparison informative: with the stock
      // outline-width threshold a whole batch can finish without a single
      // shrink ever firing.
      cfg.plan.shrink_threshold = 0.0015;
      cfg.label = label3("play-doh", "T3.5", to_string(m));
      p.configs.push_back(cfg);
    }
  } else if (name == "target-shapes") {
    for (const std::string& t : {std::string("T3.5"), std::string("T4.0"), std::string("T4.5")}) {
      RunConfig cfg = base_config(seed);
      cfg.target = named_target(t, center);
      cfg.label = label3("play-doh", t, "highest-point");
      p.configs.push_back(cfg);
    }
  } else if (name == "dcd-synthetic") {
    p.kind = PresetKind::DcdDemo;
  } else if (name == "tactile") {
    p.kind = PresetKind::TactileDemo;
  } else {
    raise(ErrorCode::InvalidConfig, "unknown experiment preset: " + name);
  }
  return p;
}

std::vector<std::string> experiment_preset_names() {
  return {"materials", "start-methods", "end-methods", "shrink",
          "target-shapes", "dcd-synthetic", "tactile"};
}

}  // namespace dough
