#include "dough/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dough/errors.hpp"

namespace dough {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string condition_label(const RunLog& log) {
  if (!log.config.label.empty()) return log.config.label;
  std::ostringstream s;
  s << log.config.material.name << '/' << to_string(log.config.plan.start_method) << '/'
    << to_string(log.config.plan.end_method);
  return s.str();
}

}  // namespace

std::string runlog_csv(const RunLog& log) {
  std::ostringstream s;
  s << "t,iter,action,Sx,Sy,Sz,Ex,Ey,Ez,iou,max_height,volume,components\n";
  for (const auto& r : log.records) {
    s << num(r.t) << ',' << r.iteration << ',' << r.action << ',' << num(r.s.x) << ','
      << num(r.s.y) << ',' << num(r.s.z) << ',' << num(r.e.x) << ',' << num(r.e.y)
      << ',' << num(r.e.z) << ',' << num(r.iou) << ',' << num(r.max_height) << ','
      << num(r.volume) << ',' << r.components << '\n';
  }
  return s.str();
}

std::string trajectory_csv(const std::vector<double>& dcd_losses,
                           const std::vector<double>& chamfer_losses) {
  std::ostringstream s;
  const bool with_chamfer = !chamfer_losses.empty();
  s << (with_chamfer ? "step,dcd,chamfer\n" : "step,dcd\n");
  for (std::size_t i = 0; i < dcd_losses.size(); ++i) {
    s << i << ',' << num(dcd_losses[i]);
    if (with_chamfer)
      s << ',' << num(i < chamfer_losses.size() ? chamfer_losses[i] : 0.0);
    s << '\n';
  }
  return s.str();
}

std::vector<ConditionSummary> summarize(const std::vector<RunLog>& logs) {
  if (logs.empty()) raise(ErrorCode::InvalidArgument, "no logs to summarize");
  std::vector<ConditionSummary> out;
  auto find = [&](const std::string& label) -> ConditionSummary& {
    for (auto& c : out)
      if (c.label == label) return c;
    out.push_back({});
    out.back().label = label;
    return out.back();
  };
  for (const auto& log : logs) {
    ConditionSummary& c = find(condition_label(log));
    const double fi = log.final_iou();
    if (c.runs == 0) {
      c.min_final_iou = fi;
      c.max_final_iou = fi;
    } else {
      c.min_final_iou = std::min(c.min_final_iou, fi);
      c.max_final_iou = std::max(c.max_final_iou, fi);
    }
    ++c.runs;
    c.mean_final_iou += fi;
    c.mean_delta_iou += log.delta_iou();
    c.mean_final_max_height += log.records.back().max_height;
    ++c.reasons[to_string(log.reason)];
    for (const auto& r : log.records)
      if (r.action != "init" && r.action != "none") ++c.action_counts[r.action];
    for (int k = 0; k < 3; ++k) {
      for (const auto& r : log.records)
        if (r.iou >= kIouThresholds[k]) {
          ++c.time_to[k].reached;
          c.time_to[k].mean_t += r.t;
          break;
        }
    }
  }
  for (auto& c : out) {
    c.mean_final_iou /= c.runs;
    c.mean_delta_iou /= c.runs;
    c.mean_final_max_height /= c.runs;
    for (auto& tt : c.time_to)
      if (tt.reached > 0) tt.mean_t /= tt.reached;
  }
  return out;
}

std::string summary_json(const std::vector<ConditionSummary>& conditions) {
  nlohmann::ordered_json root = nlohmann::ordered_json::array();
  for (const auto& c : conditions) {
    nlohmann::ordered_json j;
    j["label"] = c.label;
    j["runs"] = c.runs;
    j["final_iou"] = {{"mean", c.mean_final_iou},
                      {"min", c.min_final_iou},
                      {"max", c.max_final_iou}};
    j["delta_iou_mean"] = c.mean_delta_iou;
    j["final_max_height_mean"] = c.mean_final_max_height;
    j["actions"] = c.action_counts;
    j["reasons"] = c.reasons;
    for (int k = 0; k < 3; ++k) {
      char key[24];
      std::snprintf(key, sizeof key, "time_to_%.1f", kIouThresholds[k]);
      if (c.time_to[k].reached > 0)
        j[key] = {{"reached", c.time_to[k].reached}, {"mean_t", c.time_to[k].mean_t}};
      else
        j[key] = {{"reached", 0}};
    }
    root.push_back(j);
  }
  return root.dump(2) + "\n";
}

std::string summary_csv(const std::vector<ConditionSummary>& conditions) {
  std::ostringstream s;
  s << "label,runs,final_iou_mean,final_iou_min,final_iou_max,delta_iou_mean,"
       "final_max_height_mean,rolls,forward_shrinks,side_shrinks,"
       "t70_reached,t70_mean,t80_reached,t80_mean,t90_reached,t90_mean\n";
  for (const auto& c : conditions) {
    auto count = [&](const char* k) {
      const auto it = c.action_counts.find(k);
      return it == c.action_counts.end() ? 0 : it->second;
    };
    s << c.label << ',' << c.runs << ',' << num(c.mean_final_iou) << ','
      << num(c.min_final_iou) << ',' << num(c.max_final_iou) << ','
      << num(c.mean_delta_iou) << ',' << num(c.mean_final_max_height) << ','
      << count("roll") << ',' << count("forward_shrink") << ',' << count("side_shrink");
    for (int k = 0; k < 3; ++k) {
      s << ',' << c.time_to[k].reached << ',';
      if (c.time_to[k].reached > 0) s << num(c.time_to[k].mean_t);
    }
    s << '\n';
  }
  return s.str();
}

void write_text_file(const std::string& text, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) raise(ErrorCode::IoError, "cannot open for writing: " + path);
  f << text;
  if (!f) raise(ErrorCode::IoError, "write failed: " + path);
}

}  // namespace dough
