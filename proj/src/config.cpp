#include "dough/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dough/errors.hpp"
#include "dough/materials.hpp"

namespace dough {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(const std::string& what) { raise(ErrorCode::InvalidConfig, what); }

}  // namespace

std::string ConfigDoc::get_str(const std::string& key) const {
  const auto it = kv.find(key);
  if (it == kv.end()) bad("missing config key: " + key);
  return it->second;
}

std::string ConfigDoc::get_str(const std::string& key, const std::string& fallback) const {
  const auto it = kv.find(key);
  return it == kv.end() ? fallback : it->second;
}

double ConfigDoc::get_num(const std::string& key) const {
  const std::string v = get_str(key);
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0') bad("not a number: " + key + " = " + v);
  return d;
}

double ConfigDoc::get_num(const std::string& key, double fallback) const {
  return has(key) ? get_num(key) : fallback;
}

long long ConfigDoc::get_int(const std::string& key, long long fallback) const {
  if (!has(key)) return fallback;
  const std::string v = get_str(key);
  char* end = nullptr;
  const long long i = std::strtoll(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0') bad("not an integer: " + key + " = " + v);
  return i;
}

bool ConfigDoc::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const std::string v = get_str(key);
  if (v == "true") return true;
  if (v == "false") return false;
  bad("not a boolean: " + key + " = " + v);
}

ConfigDoc parse_config_text(const std::string& text) {
  ConfigDoc doc;
  std::istringstream in(text);
  std::string line, prefix;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') bad("unterminated section header at line " + std::to_string(lineno));
      prefix = trim(t.substr(1, t.size() - 2));
      if (prefix.empty()) bad("empty section name at line " + std::to_string(lineno));
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) bad("expected key = value at line " + std::to_string(lineno));
    const std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty()) bad("empty key at line " + std::to_string(lineno));
    if (!value.empty() && value.front() == '"') {
      const std::size_t close = value.find('"', 1);
      if (close == std::string::npos)
        bad("unterminated string at line " + std::to_string(lineno));
      const std::string rest = trim(value.substr(close + 1));
      if (!rest.empty() && rest[0] != '#')
        bad("trailing characters after string at line " + std::to_string(lineno));
      value = value.substr(1, close - 1);
    } else {
      const std::size_t hash = value.find('#');
      if (hash != std::string::npos) value = trim(value.substr(0, hash));
      if (value.empty()) bad("empty value at line " + std::to_string(lineno));
    }
    const std::string full = prefix.empty() ? key : prefix + "." + key;
    if (doc.kv.count(full)) bad("duplicate key: " + full);
    doc.kv[full] = value;
  }
  return doc;
}

ConfigDoc load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) raise(ErrorCode::IoError, "cannot open config: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

StartMethod parse_start_method(const std::string& s) {
  if (s == "centroid-2d") return StartMethod::Centroid2D;
  if (s == "centroid-3d") return StartMethod::Centroid3D;
  if (s == "highest-point") return StartMethod::HighestPoint;
  if (s == "dcd-gradient") return StartMethod::DcdGradient;
  bad("unknown start method: " + s);
}

EndMethod parse_end_method(const std::string& s) {
  if (s == "target") return EndMethod::Target;
  if (s == "current") return EndMethod::Current;
  bad("unknown end method: " + s);
}

ShrinkMode parse_shrink_mode(const std::string& s) {
  if (s == "disabled") return ShrinkMode::Disabled;
  if (s == "forward") return ShrinkMode::Forward;
  if (s == "side") return ShrinkMode::Side;
  bad("unknown shrink mode: " + s);
}

RunConfig run_config_from(const ConfigDoc& doc) {
  RunConfig cfg;
  cfg.label = doc.get_str("label", "");

  const std::string mat = doc.get_str("material", "play-doh");
  if (doc.has("materials_file")) {
    const auto table = load_materials(doc.get_str("materials_file"));
    const auto it = table.find(mat);
    if (it == table.end()) bad("material not in file: " + mat);
    cfg.material = it->second;
  } else {
    cfg.material = material_preset(mat);
  }

  cfg.workspace = doc.get_num("run.workspace", kWorkspaceDefault);
  cfg.resolution = doc.get_num("run.resolution", kResolutionDefault);
  const Vec2 center{doc.get_num("target_cx", cfg.workspace / 2),
                    doc.get_num("target_cy", cfg.workspace / 2)};
  if (doc.has("target_radius"))
    cfg.target = {center, doc.get_num("target_radius")};
  else
    cfg.target = named_target(doc.get_str("target", "T4.0"), center);

  cfg.plan.start_method = parse_start_method(doc.get_str("plan.start", "highest-point"));
  cfg.plan.end_method = parse_end_method(doc.get_str("plan.end", "target"));
  cfg.plan.shrink = parse_shrink_mode(doc.get_str("plan.shrink", "disabled"));
  cfg.plan.shrink_threshold = doc.get_num("plan.shrink_threshold", cfg.plan.shrink_threshold);
  cfg.plan.n_directions = static_cast<int>(doc.get_int("plan.n_directions", cfg.plan.n_directions));
  cfg.plan.dcd_roll_along_gradient =
      doc.get_bool("plan.dcd_roll_along_gradient", cfg.plan.dcd_roll_along_gradient);
  cfg.plan.dcd_target_points =
      static_cast<int>(doc.get_int("plan.dcd_target_points", cfg.plan.dcd_target_points));

  cfg.t_max = doc.get_num("run.t_max", cfg.t_max);
  cfg.iou_min = doc.get_num("run.iou_min", cfg.iou_min);
  cfg.seed = static_cast<std::uint64_t>(doc.get_int("run.seed", 0));
  cfg.action_duration = doc.get_num("run.action_duration", cfg.action_duration);
  cfg.height_eps = doc.get_num("run.height_eps", cfg.height_eps);

  cfg.dough.diameter = doc.get_num("dough.diameter", cfg.dough.diameter);
  cfg.dough.height = doc.get_num("dough.height", cfg.dough.height);
  cfg.dough.offset = {doc.get_num("dough.offset_x", 0.0), doc.get_num("dough.offset_y", 0.0)};

  cfg.validate();
  return cfg;
}

std::map<std::string, MaterialParams> load_materials(const std::string& path) {
  const ConfigDoc doc = load_config(path);
  if (doc.get_int("version", -1) != kMaterialFileVersion)
    bad("unsupported materials file version in " + path);
  std::map<std::string, MaterialParams> table;
  const std::string prefix = "material.";
  for (const auto& [key, value] : doc.kv) {
    (void)value;
    if (key.rfind(prefix, 0) != 0) continue;
    const std::size_t dot = key.find('.', prefix.size());
    if (dot == std::string::npos) bad("stray key: " + key);
    table[key.substr(prefix.size(), dot - prefix.size())];  // create entry
  }
  if (table.empty()) bad("no materials in " + path);
  for (auto& [name, m] : table) {
    const std::string p = prefix + name + ".";
    m.name = name;
    m.stiffness = doc.get_num(p + "stiffness");
    m.flow_forward = doc.get_num(p + "flow_forward");
    m.flow_lateral = doc.get_num(p + "flow_lateral");
    m.rate_sensitivity = doc.get_num(p + "rate_sensitivity");
    m.cohesion_threshold = doc.get_num(p + "cohesion_threshold");
    m.press_depth_factor = doc.get_num(p + "press_depth_factor");
    m.validate();
  }
  return table;
}

}  // namespace dough
