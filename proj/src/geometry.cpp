#include "dough/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace dough {

double Vec2::norm() const { return std::sqrt(x * x + y * y); }

Vec2 Vec2::normalized() const {
  const double n = norm();
  if (n < 1e-15) raise(ErrorCode::InvalidArgument, "cannot normalize near-zero vector");
  return {x / n, y / n};
}

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

bool disk_contains(const Disk& d, const Vec2& p) {
  return (p - d.center).norm_sq() <= d.radius * d.radius;
}

double ray_circle_farthest(const Vec2& origin, const Vec2& dir, const Disk& d) {
  // |origin + t*dir - c|^2 = r^2 with dir unit: t^2 + 2bt + c0 = 0.
  const Vec2 oc = origin - d.center;
  const double b = dir.dot(oc);
  const double c0 = oc.norm_sq() - d.radius * d.radius;
  const double disc = b * b - c0;
  if (disc < 0.0) return -1.0;
  const double t = -b + std::sqrt(disc);
  return t >= 0.0 ? t : -1.0;
}

double ray_circle_nearest(const Vec2& origin, const Vec2& dir, const Disk& d) {
  const Vec2 oc = origin - d.center;
  const double b = dir.dot(oc);
  const double c0 = oc.norm_sq() - d.radius * d.radius;
  const double disc = b * b - c0;
  if (disc < 0.0) return -1.0;
  const double root = std::sqrt(disc);
  const double t0 = -b - root;
  if (t0 >= 0.0) return t0;
  const double t1 = -b + root;
  return t1 >= 0.0 ? t1 : -1.0;
}

Vec2 ray_circle_exit(const Vec2& origin, const Vec2& dir, const Disk& d) {
  if (!disk_contains(d, origin))
    raise(ErrorCode::OriginOutside, "ray origin lies outside the disk");
  const double t = ray_circle_farthest(origin, dir, d);
  // Origin inside guarantees a crossing; t >= 0 by the containment test.
  return origin + dir * t;
}

std::size_t BinaryMask::count() const {
  std::size_t n = 0;
  for (auto c : cells) n += (c != 0);
  return n;
}

double Contour::signed_area() const {
  double s = 0.0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = pts[i];
    const Vec2& b = pts[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return 0.5 * s;
}

double Contour::area() const { return std::abs(signed_area()); }

bool Contour::contains(const Vec2& p) const {
  // Crossing-number test against a +x ray.
  bool inside = false;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = pts[i];
    const Vec2& b = pts[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double xh = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < xh) inside = !inside;
    }
  }
  return inside;
}

double ray_contour_farthest(const Vec2& origin, const Vec2& dir, const Contour& c) {
  double best = -1.0;
  const std::size_t n = c.pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = c.pts[i];
    const Vec2& b = c.pts[(i + 1) % n];
    const Vec2 e = b - a;
    const double denom = dir.cross(e);
    if (std::abs(denom) < 1e-18) continue;  // parallel segment
    const Vec2 ao = a - origin;
    const double t = ao.cross(e) / denom;
    const double u = ao.cross(dir) / denom;
    if (t >= -1e-12 && u >= -1e-12 && u <= 1.0 + 1e-12) best = std::max(best, t);
  }
  return best;
}

Vec2 ray_contour_exit(const Vec2& origin, const Vec2& dir, const Contour& c) {
  const double t = ray_contour_farthest(origin, dir, c);
  if (t < 0.0) raise(ErrorCode::NoIntersection, "ray does not cross the contour");
  return origin + dir * t;
}

namespace {

// Marching squares plumbing. Samples are the mask cells (value at the cell
// center); blocks span 2x2 neighboring samples, extended one sample beyond the
// grid so every region closes. Segment endpoints live on sample-grid edges:
//   H-edge (ix,iy): between samples (ix,iy)-(ix+1,iy)
//   V-edge (ix,iy): between samples (ix,iy)-(ix,iy+1)
// The case table is oriented with the occupied region on the left of travel,
// which makes outer loops counterclockwise.

struct EdgeRef {
  int ix;
  int iy;
  bool vertical;
};

std::int64_t edge_key(const EdgeRef& e, int nx) {
  const std::int64_t row = e.iy + 1;
  const std::int64_t col = e.ix + 1;
  return (row * (nx + 3) + col) * 2 + (e.vertical ? 1 : 0);
}

EdgeRef edge_from_key(std::int64_t key, int nx) {
  EdgeRef e;
  e.vertical = (key & 1) != 0;
  const std::int64_t q = key >> 1;
  e.iy = static_cast<int>(q / (nx + 3)) - 1;
  e.ix = static_cast<int>(q % (nx + 3)) - 1;
  return e;
}

Vec2 edge_midpoint(const EdgeRef& e, const BinaryMask& m) {
  const double res = m.resolution;
  if (e.vertical)
    return {m.origin.x + (e.ix + 0.5) * res, m.origin.y + (e.iy + 1.0) * res};
  return {m.origin.x + (e.ix + 1.0) * res, m.origin.y + (e.iy + 0.5) * res};
}

}  // namespace

std::vector<Contour> extract_contours(const BinaryMask& mask) {
  std::vector<Contour> out;
  if (mask.nx <= 0 || mask.ny <= 0) return out;

  auto sample = [&](int ix, int iy) -> int {
    return mask.in_bounds(ix, iy) && mask.at(ix, iy) ? 1 : 0;
  };

  // Directed segments, keyed by the from-edge. std::map keeps iteration
  // ordered, so loop extraction order is deterministic.
  std::map<std::int64_t, std::int64_t> seg;
  auto emit = [&](const EdgeRef& from, const EdgeRef& to) {
    seg.emplace(edge_key(from, mask.nx), edge_key(to, mask.nx));
  };

  for (int by = -1; by < mask.ny; ++by) {
    for (int bx = -1; bx < mask.nx; ++bx) {
      const int code = sample(bx, by) | (sample(bx + 1, by) << 1) |
                       (sample(bx + 1, by + 1) << 2) | (sample(bx, by + 1) << 3);
      if (code == 0 || code == 15) continue;
      const EdgeRef bottom{bx, by, false};
      const EdgeRef top{bx, by + 1, false};
      const EdgeRef left{bx, by, true};
      const EdgeRef right{bx + 1, by, true};
      switch (code) {
        case 1: emit(bottom, left); break;
        case 2: emit(right, bottom); break;
        case 3: emit(right, left); break;
        case 4: emit(top, right); break;
        case 5: emit(bottom, left); emit(top, right); break;  // saddle
        case 6: emit(top, bottom); break;
        case 7: emit(top, left); break;
        case 8: emit(left, top); break;
        case 9: emit(bottom, top); break;
        case 10: emit(right, bottom); emit(left, top); break;  // saddle
        case 11: emit(right, top); break;
        case 12: emit(left, right); break;
        case 13: emit(bottom, right); break;
        case 14: emit(left, bottom); break;
        default: break;
      }
    }
  }

  std::set<std::int64_t> visited;
  for (const auto& [k0, ignored] : seg) {
    (void)ignored;
    if (visited.count(k0)) continue;
    Contour loop;
    std::int64_t k = k0;
    while (true) {
      visited.insert(k);
      loop.pts.push_back(edge_midpoint(edge_from_key(k, mask.nx), mask));
      const auto it = seg.find(k);
      if (it == seg.end()) break;  // cannot happen on a well-formed field
      k = it->second;
      if (k == k0) break;
    }
    if (loop.pts.size() >= 3) {
      if (loop.signed_area() < 0.0)
        std::reverse(loop.pts.begin(), loop.pts.end());  // holes flip to CCW too
      out.push_back(std::move(loop));
    }
  }
  return out;
}

Contour largest_contour(const BinaryMask& mask) {
  auto loops = extract_contours(mask);
  if (loops.empty()) raise(ErrorCode::EmptyDough, "mask has no occupied cells");
  std::size_t best = 0;
  double best_area = -1.0;
  for (std::size_t i = 0; i < loops.size(); ++i) {
    const double a = loops[i].area();
    if (a > best_area) {
      best_area = a;
      best = i;
    }
  }
  return loops[best];
}

double disk_cell_coverage(const Disk& d, const Vec2& cell_corner, double size) {
  const double r2 = d.radius * d.radius;
  // Quick reject: closest point of the cell to the center.
  const double cx = std::clamp(d.center.x, cell_corner.x, cell_corner.x + size);
  const double cy = std::clamp(d.center.y, cell_corner.y, cell_corner.y + size);
  const double dmin2 = (Vec2{cx, cy} - d.center).norm_sq();
  if (dmin2 > r2) return 0.0;
  // Quick accept: all four corners inside (the disk is convex).
  bool all_in = true;
  for (int i = 0; i < 4 && all_in; ++i) {
    const Vec2 corner{cell_corner.x + (i & 1) * size, cell_corner.y + ((i >> 1) & 1) * size};
    all_in = (corner - d.center).norm_sq() <= r2;
  }
  if (all_in) return 1.0;
  // Rim cell: 32x32 supersample.
  constexpr int kN = 32;
  int hits = 0;
  for (int iy = 0; iy < kN; ++iy) {
    const double py = cell_corner.y + (iy + 0.5) * size / kN;
    for (int ix = 0; ix < kN; ++ix) {
      const double px = cell_corner.x + (ix + 0.5) * size / kN;
      hits += ((Vec2{px, py} - d.center).norm_sq() <= r2);
    }
  }
  return static_cast<double>(hits) / (kN * kN);
}

}  // namespace dough
