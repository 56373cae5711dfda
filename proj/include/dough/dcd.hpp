#pragma once

#include <vector>

#include "dough/geometry.hpp"
#include "dough/perception.hpp"

namespace dough {

struct DcdParams {
  double alpha = 1000.0;  // 1/m — sharpness of the exponential distance kernel
};

// Sample n points uniform-by-area inside the target disk (Fermat spiral), all
// at the flat height that preserves the given dough volume.
PointCloud discretize_target(const Disk& target, int n, double dough_volume);

// Density-aware Chamfer loss in [0, 1): nearest-neighbor matches weighted by
// 1/(hit count), distances through e^{-alpha * d}.
double dcd_loss(const PointCloud& s1, const PointCloud& s2, const DcdParams& p = {});

// d(loss)/d(point) for every point of s2, with the nearest-neighbor
// assignments and hit counts frozen at the current configuration.
std::vector<Vec3> dcd_gradient(const PointCloud& s1, const PointCloud& s2,
                               const DcdParams& p = {});

// Index of the gradient with the largest Euclidean norm; ties -> smallest.
std::size_t max_grad_point(const std::vector<Vec3>& grads);

// Plain symmetric Chamfer distance (squared Euclidean, mean both ways).
double chamfer(const PointCloud& s1, const PointCloud& s2);

struct SgdResult {
  std::vector<double> losses;    // losses[0] is the initial loss, then one per step
  std::vector<double> chamfers;  // plain Chamfer distance alongside each loss
  PointCloud cloud;
};

// Gradient-descend every source point against the fixed target cloud.
SgdResult sgd_deform(const PointCloud& source, const PointCloud& target, int steps,
                     double lr, const DcdParams& p = {});

}  // namespace dough
