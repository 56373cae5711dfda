#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dough/config.hpp"
#include "dough/dcd.hpp"
#include "dough/errors.hpp"
#include "dough/experiments.hpp"
#include "dough/gridio.hpp"
#include "dough/report.hpp"
#include "dough/tactile.hpp"

namespace fs = std::filesystem;
using namespace dough;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

std::string sanitize(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (c == '/' || c == ' ' || c == ':') c = '-';
  return out;
}

struct CommonOpts {
  std::string out_dir = "out";
  std::string format = "csv";
  long long seed = -1;  // -1: keep the config's seed
  int svg_every = 0;    // 0: no SVG output
  double resolution = 0.0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_run_opts) {
  cmd->add_option("--out", o.out_dir, "Output directory");
  cmd->add_option("--seed", o.seed, "Seed override");
  cmd->add_option("--format", o.format, "Summary format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  if (with_run_opts) {
    cmd->add_option("--svg-every", o.svg_every, "Write a scene SVG every K iterations");
    cmd->add_option("--resolution", o.resolution, "Grid resolution override (m)");
  }
}

void apply_overrides(RunConfig& cfg, const CommonOpts& o) {
  if (o.seed >= 0) cfg.seed = static_cast<std::uint64_t>(o.seed);
  if (o.resolution > 0.0) cfg.resolution = o.resolution;
  cfg.validate();
}

RunObserver svg_observer(const RunConfig& cfg, const std::string& dir,
                         const std::string& stem, int every) {
  if (every <= 0) return {};
  return [=](int iteration, const HeightMap& hm, const ShapeState& state,
             const RollAction* acted) {
    if (iteration % every != 0) return;
    char name[64];
    std::snprintf(name, sizeof name, "%s_iter%03d.svg", stem.c_str(), iteration);
    save_svg(svg_scene(hm, cfg.target, &state.contour, acted, state.iou),
             (fs::path(dir) / name).string());
  };
}

void write_summary(const std::vector<RunLog>& logs, const std::string& dir,
                   const std::string& format) {
  const auto conditions = summarize(logs);
  if (format == "json")
    write_text_file(summary_json(conditions), (fs::path(dir) / "summary.json").string());
  else
    write_text_file(summary_csv(conditions), (fs::path(dir) / "summary.csv").string());
}

int cmd_run(const std::string& config_path, const CommonOpts& o) {
  RunConfig cfg;
  try {
    cfg = run_config_from(load_config(config_path));
    apply_overrides(cfg, o);
  } catch (const DoughError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }
  try {
    fs::create_directories(o.out_dir);
    const std::string stem = sanitize(cfg.label.empty() ? "run" : cfg.label);
    const RunLog log = run(cfg, svg_observer(cfg, o.out_dir, stem, o.svg_every));
    write_text_file(runlog_csv(log), (fs::path(o.out_dir) / (stem + ".csv")).string());
    write_summary({log}, o.out_dir, o.format);
    std::cout << stem << ": " << to_string(log.reason) << ", final iou "
              << log.final_iou() << ", " << log.actions_executed() << " actions\n";
  } catch (const DoughError& e) {
    std::cerr << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}

int run_dcd_demo(const std::string& dir, const std::string& format, int steps, double lr,
                 int points) {
  fs::create_directories(dir);
  const Disk source_disk{{0.15, 0.15}, 0.028};
  const Disk target_disk{{0.15, 0.15}, 0.0508};
  const double volume = 3.9408138246630374e-05;  // 5.6 cm x 1.6 cm cylinder
  const PointCloud source = discretize_target(source_disk, points, volume);
  const PointCloud target = discretize_target(target_disk, points, volume);
  const SgdResult res = sgd_deform(source, target, steps, lr);
  write_text_file(trajectory_csv(res.losses, res.chamfers),
                  (fs::path(dir) / "dcd_trajectory.csv").string());
  if (format == "json") {
    nlohmann::ordered_json j;
    j["steps"] = steps;
    j["lr"] = lr;
    j["points"] = points;
    j["initial_dcd"] = res.losses.front();
    j["final_dcd"] = res.losses.back();
    j["initial_chamfer"] = res.chamfers.front();
    j["final_chamfer"] = res.chamfers.back();
    write_text_file(j.dump(2) + "\n", (fs::path(dir) / "dcd_summary.json").string());
  }
  std::cout << "dcd " << res.losses.front() << " -> " << res.losses.back()
            << " over " << steps << " steps\n";
  return 0;
}

int run_tactile_demo(const std::string& dir, const std::string& format,
                     std::uint64_t seed) {
  fs::create_directories(dir);
  const double delta_x = 0.005, rate = 0.01, noise_sd = 0.1;
  const int reps = 5;
  std::vector<MaterialParams> presets;
  for (const auto& n : material_preset_names()) presets.push_back(material_preset(n));

  std::string csv = "material,delta_x,rate,force,v_out\n";
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  int correct = 0, total = 0;
  std::uint64_t s = seed;
  for (const auto& m : presets) {
    std::vector<PressReading> readings;
    for (int i = 0; i < reps; ++i)
      readings.push_back(press_measure(m, delta_x, rate, noise_sd, s++));
    for (const auto& r : readings) {
      char row[160];
      std::snprintf(row, sizeof row, "%s,%.6g,%.6g,%.10g,%.10g\n", r.material.c_str(),
                    r.delta_x, r.rate, r.force, r.v_out);
      csv += row;
    }
    const std::string label = classify(readings, presets);
    correct += label == m.name;
    ++total;
    double mean_f = 0.0;
    for (const auto& r : readings) mean_f += r.force;
    mean_f /= reps;
    nlohmann::ordered_json e;
    e["material"] = m.name;
    e["mean_force"] = mean_f;
    e["compliance"] = compliance(delta_x, mean_f);
    e["classified_as"] = label;
    j.push_back(e);
  }
  write_text_file(csv, (fs::path(dir) / "tactile.csv").string());
  if (format == "json")
    write_text_file(j.dump(2) + "\n", (fs::path(dir) / "tactile_summary.json").string());
  std::cout << "classification " << correct << "/" << total << " correct\n";
  return 0;
}

int cmd_preset(const std::string& name, const CommonOpts& o, int reps) {
  ExperimentPreset preset;
  try {
    preset = experiment_preset(name, o.seed >= 0 ? static_cast<std::uint64_t>(o.seed) : 0);
    if (reps < 1) raise(ErrorCode::InvalidConfig, "repetitions must be >= 1");
  } catch (const DoughError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }
  try {
    if (preset.kind == PresetKind::DcdDemo)
      return run_dcd_demo(o.out_dir, o.format, 200, 0.2, 1000);
    if (preset.kind == PresetKind::TactileDemo)
      return run_tactile_demo(o.out_dir, o.format,
                              o.seed >= 0 ? static_cast<std::uint64_t>(o.seed) : 0);

    for (auto& cfg : preset.configs) apply_overrides(cfg, o);
    fs::create_directories(o.out_dir);
    const auto logs = run_batch(preset.configs, reps);
    for (std::size_t i = 0; i < logs.size(); ++i) {
      const int rep = static_cast<int>(i % reps);
      const std::string stem = sanitize(logs[i].config.label) + "_rep" + std::to_string(rep);
      write_text_file(runlog_csv(logs[i]), (fs::path(o.out_dir) / (stem + ".csv")).string());
    }
    write_summary(logs, o.out_dir, o.format);
    std::cout << name << ": " << logs.size() << " runs written to " << o.out_dir << "\n";
  } catch (const DoughError& e) {
    std::cerr << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dough-shaping simulation and planning harness"};
  app.require_subcommand(1);

  CommonOpts run_opts;
  std::string config_path;
  CLI::App* runc = app.add_subcommand("run", "Execute one run config file");
  runc->add_option("config", config_path, "Run config (flat key/value file)")->required();
  add_common(runc, run_opts, true);

  CommonOpts preset_opts;
  std::string preset_name;
  int preset_reps = 3;
  CLI::App* presetc = app.add_subcommand("preset", "Expand and run a stock experiment");
  presetc->add_option("name", preset_name, "Preset name")->required();
  presetc->add_option("--reps", preset_reps, "Repetitions per config");
  add_common(presetc, preset_opts, true);

  CommonOpts dcd_opts;
  int dcd_steps = 200, dcd_points = 1000;
  double dcd_lr = 0.2;
  CLI::App* dcdc = app.add_subcommand("dcd-demo", "Point-cloud deformation demo");
  dcdc->add_option("--steps", dcd_steps, "Gradient steps");
  dcdc->add_option("--lr", dcd_lr, "Learning rate");
  dcdc->add_option("--points", dcd_points, "Points per cloud");
  add_common(dcdc, dcd_opts, false);

  CommonOpts tact_opts;
  CLI::App* tactc = app.add_subcommand("tactile-demo", "Press-measurement demo");
  add_common(tactc, tact_opts, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (runc->parsed()) return cmd_run(config_path, run_opts);
    if (presetc->parsed()) return cmd_preset(preset_name, preset_opts, preset_reps);
    if (dcdc->parsed()) {
      if (dcd_steps < 1 || dcd_lr <= 0.0 || dcd_points < 16) {
        std::cerr << "invalid demo parameters\n";
        return kExitConfig;
      }
      return run_dcd_demo(dcd_opts.out_dir, dcd_opts.format, dcd_steps, dcd_lr, dcd_points);
    }
    if (tactc->parsed())
      return run_tactile_demo(tact_opts.out_dir, tact_opts.format,
                              tact_opts.seed >= 0 ? static_cast<std::uint64_t>(tact_opts.seed) : 0);
  } catch (const DoughError& e) {
    std::cerr << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
