#include "dough/perception.hpp"

#include <algorithm>
#include <cmath>

namespace dough {

BinaryMask raster_disk(const Disk& d, double resolution, Vec2 origin, int nx, int ny) {
  BinaryMask m;
  m.resolution = resolution;
  m.origin = origin;
  m.nx = nx;
  m.ny = ny;
  m.cells.assign(static_cast<std::size_t>(nx) * ny, 0);
  const int ix0 = std::max(0, static_cast<int>((d.center.x - d.radius - origin.x) / resolution) - 1);
  const int ix1 = std::min(nx - 1, static_cast<int>((d.center.x + d.radius - origin.x) / resolution) + 1);
  const int iy0 = std::max(0, static_cast<int>((d.center.y - d.radius - origin.y) / resolution) - 1);
  const int iy1 = std::min(ny - 1, static_cast<int>((d.center.y + d.radius - origin.y) / resolution) + 1);
  for (int iy = iy0; iy <= iy1; ++iy) {
    for (int ix = ix0; ix <= ix1; ++ix) {
      const Vec2 corner{origin.x + ix * resolution, origin.y + iy * resolution};
      if (disk_cell_coverage(d, corner, resolution) >= 0.5) m.set(ix, iy, 1);
    }
  }
  return m;
}

double iou(const BinaryMask& mask, const Disk& target) {
  const BinaryMask t = raster_disk(target, mask.resolution, mask.origin, mask.nx, mask.ny);
  std::size_t inter = 0, uni = 0;
  for (std::size_t i = 0; i < mask.cells.size(); ++i) {
    const bool a = mask.cells[i] != 0;
    const bool b = t.cells[i] != 0;
    inter += a && b;
    uni += a || b;
  }
  if (uni == 0) raise(ErrorCode::ZeroUnion, "both shapes are empty");
  return static_cast<double>(inter) / static_cast<double>(uni);
}

ShapeState capture(const HeightMap& hm, const Disk& target, double eps) {
  ShapeState s;
  s.mask = hm.mask_above(eps);
  if (s.mask.count() == 0) raise(ErrorCode::EmptyDough, "no dough above threshold");
  s.contour = largest_contour(s.mask);
  s.cloud.pts.reserve(s.mask.count());
  for (int iy = 0; iy < hm.ny(); ++iy)
    for (int ix = 0; ix < hm.nx(); ++ix)
      if (hm.at(ix, iy) > eps) {
        const Vec2 c = hm.cell_center(ix, iy);
        s.cloud.pts.push_back({c.x, c.y, hm.at(ix, iy)});
      }
  s.iou = iou(s.mask, target);
  s.max_height = hm.max_height();
  return s;
}

Vec2 centroid_2d(const BinaryMask& mask) {
  double sx = 0.0, sy = 0.0;
  std::size_t n = 0;
  for (int iy = 0; iy < mask.ny; ++iy)
    for (int ix = 0; ix < mask.nx; ++ix)
      if (mask.at(ix, iy)) {
        const Vec2 c = mask.cell_center(ix, iy);
        sx += c.x;
        sy += c.y;
        ++n;
      }
  if (n == 0) raise(ErrorCode::EmptyDough, "empty mask has no centroid");
  return {sx / n, sy / n};
}

double knn_z(const PointCloud& cloud, Vec2 xy, int k) {
  if (cloud.empty()) raise(ErrorCode::EmptyCloud, "knn_z on empty cloud");
  if (k < 1) raise(ErrorCode::InvalidArgument, "k must be >= 1");
  std::vector<std::pair<double, std::size_t>> d;
  d.reserve(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const double dx = cloud.pts[i].x - xy.x, dy = cloud.pts[i].y - xy.y;
    d.push_back({dx * dx + dy * dy, i});
  }
  const std::size_t kk = std::min<std::size_t>(k, d.size());
  std::partial_sort(d.begin(), d.begin() + kk, d.end());
  double z = 0.0;
  for (std::size_t i = 0; i < kk; ++i) z += cloud.pts[d[i].second].z;
  return z / static_cast<double>(kk);
}

Vec3 centroid_3d(const PointCloud& cloud) {
  if (cloud.empty()) raise(ErrorCode::EmptyCloud, "centroid of empty cloud");
  double sx = 0.0, sy = 0.0, sz = 0.0;
  for (const Vec3& p : cloud.pts) {
    sx += p.x;
    sy += p.y;
    sz += p.z;
  }
  const double n = static_cast<double>(cloud.size());
  return {sx / n, sy / n, sz / n};
}

Vec3 highest_point(const HeightMap& hm) {
  double best = 0.0;
  double sh = 0.0, sx = 0.0, sy = 0.0;
  for (int iy = 0; iy < hm.ny(); ++iy)
    for (int ix = 0; ix < hm.nx(); ++ix) {
      const double h = hm.at(ix, iy);
      if (h <= 0.0) continue;
      best = std::max(best, h);
      const Vec2 c = hm.cell_center(ix, iy);
      sh += h;
      sx += h * c.x;
      sy += h * c.y;
    }
  if (sh <= 0.0) raise(ErrorCode::EmptyDough, "no dough for highest point");
  // A plateau has many cells at the peak height; the most central of them is
  // the natural summit, so ties resolve toward the mass center of the dough.
  const Vec2 com{sx / sh, sy / sh};
  int bx = -1, by = -1;
  double bd = 0.0;
  for (int iy = 0; iy < hm.ny(); ++iy)
    for (int ix = 0; ix < hm.nx(); ++ix) {
      if (hm.at(ix, iy) < best - 1e-12) continue;
      const Vec2 c = hm.cell_center(ix, iy);
      const double d = (c - com).norm_sq();
      if (bx < 0 || d < bd) {
        bd = d;
        bx = ix;
        by = iy;
      }
    }
  const Vec2 c = hm.cell_center(bx, by);
  return {c.x, c.y, best};
}

}  // namespace dough
