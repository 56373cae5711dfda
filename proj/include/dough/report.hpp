#pragma once

#include <map>
#include <string>
#include <vector>

#include "dough/control_loop.hpp"

namespace dough {

inline constexpr double kIouThresholds[3] = {0.7, 0.8, 0.9};

// One CSV row per log record; fixed column order, LF line endings.
std::string runlog_csv(const RunLog& log);

// step,dcd[,chamfer] trajectory for the deformation demo.
std::string trajectory_csv(const std::vector<double>& dcd_losses,
                           const std::vector<double>& chamfer_losses);

struct TimeTo {
  int reached = 0;     // runs that crossed the threshold
  double mean_t = 0.0; // mean first-crossing time over those runs
};

struct ConditionSummary {
  std::string label;
  int runs = 0;
  double mean_final_iou = 0.0;
  double min_final_iou = 0.0;
  double max_final_iou = 0.0;
  double mean_delta_iou = 0.0;
  double mean_final_max_height = 0.0;
  std::map<std::string, int> action_counts;  // kind -> total over runs
  std::map<std::string, int> reasons;        // stop reason -> count
  TimeTo time_to[3];                         // thresholds in kIouThresholds
};

// Group logs by config label (falling back to material/target) and aggregate.
std::vector<ConditionSummary> summarize(const std::vector<RunLog>& logs);

std::string summary_json(const std::vector<ConditionSummary>& conditions);
std::string summary_csv(const std::vector<ConditionSummary>& conditions);

void write_text_file(const std::string& text, const std::string& path);

}  // namespace dough
