#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dough/errors.hpp"

namespace dough {

// All lengths are meters in a fixed workspace frame (x right, y away from the
// viewer, z up). Unit conversions happen at config parse time only.

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
  constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  friend constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }
  constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }
  constexpr double cross(const Vec2& r) const { return x * r.y - y * r.x; }
  constexpr Vec2 perp() const { return {-y, x}; }  // rotated +90 degrees

  double norm() const;
  double norm_sq() const { return x * x + y * y; }
  Vec2 normalized() const;  // throws InvalidArgument on near-zero length
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Vec3 operator+(const Vec3& r) const { return {x + r.x, y + r.y, z + r.z}; }
  constexpr Vec3 operator-(const Vec3& r) const { return {x - r.x, y - r.y, z - r.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  friend constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }
  constexpr double dot(const Vec3& r) const { return x * r.x + y * r.y + z * r.z; }
  constexpr Vec2 xy() const { return {x, y}; }

  double norm() const;
  double norm_sq() const { return x * x + y * y + z * z; }
};

struct Disk {
  Vec2 center;
  double radius = 0.0;  // > 0
};

// Boundary points count as inside.
bool disk_contains(const Disk& d, const Vec2& p);

// Farthest intersection parameter t >= 0 of origin + t*dir with the circle,
// or a negative value when the forward ray misses. Never throws; used by the
// planner's per-direction scan where origins may sit outside the disk.
double ray_circle_farthest(const Vec2& origin, const Vec2& dir, const Disk& d);

// Nearest intersection parameter t >= 0, or a negative value on a miss.
double ray_circle_nearest(const Vec2& origin, const Vec2& dir, const Disk& d);

// Exit point of the ray from an origin inside the disk. Throws OriginOutside.
Vec2 ray_circle_exit(const Vec2& origin, const Vec2& dir, const Disk& d);

struct BinaryMask {
  double resolution = 0.001;       // meters per cell
  Vec2 origin;                     // world position of the (0,0) cell corner
  int nx = 0;
  int ny = 0;
  std::vector<std::uint8_t> cells; // row-major, iy*nx + ix

  bool at(int ix, int iy) const {
    return cells[static_cast<std::size_t>(iy) * nx + ix] != 0;
  }
  void set(int ix, int iy, bool v) {
    cells[static_cast<std::size_t>(iy) * nx + ix] = v ? 1 : 0;
  }
  bool in_bounds(int ix, int iy) const {
    return ix >= 0 && ix < nx && iy >= 0 && iy < ny;
  }
  Vec2 cell_center(int ix, int iy) const {
    return {origin.x + (ix + 0.5) * resolution, origin.y + (iy + 0.5) * resolution};
  }
  std::size_t count() const;
};

// Closed polyline. Vertices are not repeated; the segment (back, front)
// closes the loop.
struct Contour {
  std::vector<Vec2> pts;

  std::size_t size() const { return pts.size(); }
  double signed_area() const;         // shoelace, > 0 for counterclockwise
  double area() const;                // |signed_area|
  bool contains(const Vec2& p) const; // even-odd rule
};

// Farthest intersection of the ray with any contour segment, or negative when
// the forward ray misses. Never throws.
double ray_contour_farthest(const Vec2& origin, const Vec2& dir, const Contour& c);

// Exit point for an origin inside the contour; the farthest hit is taken so
// slightly nonconvex outlines behave. Throws NoIntersection when the ray
// misses every segment.
Vec2 ray_contour_exit(const Vec2& origin, const Vec2& dir, const Contour& c);

// Marching squares over cell-centered samples. Every returned loop is closed,
// simple and counterclockwise; vertices sit on midpoints between neighboring
// cell centers. Saddle blocks resolve to separated blobs.
std::vector<Contour> extract_contours(const BinaryMask& mask);

// Largest-area loop of extract_contours. Throws EmptyDough on an empty mask.
Contour largest_contour(const BinaryMask& mask);

// Fraction of the square cell [corner, corner+size]^2 covered by the disk, in
// [0,1]. Exact for fully inside/outside cells, supersampled on the rim.
double disk_cell_coverage(const Disk& d, const Vec2& cell_corner, double size);

}  // namespace dough
