#pragma once

#include <vector>

#include "dough/geometry.hpp"
#include "dough/heightfield.hpp"

namespace dough {

// Dough-presence height threshold (meters): cells at or below it read as
// empty, suppressing smear artifacts the way a camera noise floor would.
inline constexpr double kHeightEps = 0.002;
inline constexpr int kKnnDefault = 3;

struct PointCloud {
  std::vector<Vec3> pts;

  std::size_t size() const { return pts.size(); }
  bool empty() const { return pts.empty(); }
};

// Everything extracted from one HeightMap snapshot.
struct ShapeState {
  BinaryMask mask;
  Contour contour;
  PointCloud cloud;
  double iou = 0.0;
  double max_height = 0.0;
};

// Rasterize a disk onto a grid: cells whose area coverage is >= 0.5 are set.
BinaryMask raster_disk(const Disk& d, double resolution, Vec2 origin, int nx, int ny);

// IoU between an occupancy mask and the target disk rasterized on the same grid.
double iou(const BinaryMask& mask, const Disk& target);

ShapeState capture(const HeightMap& hm, const Disk& target, double eps = kHeightEps);

Vec2 centroid_2d(const BinaryMask& mask);
double knn_z(const PointCloud& cloud, Vec2 xy, int k = kKnnDefault);
Vec3 centroid_3d(const PointCloud& cloud);
Vec3 highest_point(const HeightMap& hm);

}  // namespace dough
