#pragma once

#include <string>
#include <vector>

#include "dough/geometry.hpp"

namespace dough {

// 2.5-D dough state: one column height per cell, row-major, heights >= 0.
class HeightMap {
 public:
  HeightMap() = default;
  HeightMap(int nx, int ny, double resolution, Vec2 origin = {0.0, 0.0});

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double resolution() const { return res_; }
  const Vec2& origin() const { return origin_; }

  double at(int ix, int iy) const { return h_[idx(ix, iy)]; }
  double& at(int ix, int iy) { return h_[idx(ix, iy)]; }
  bool in_bounds(int ix, int iy) const {
    return ix >= 0 && ix < nx_ && iy >= 0 && iy < ny_;
  }
  Vec2 cell_center(int ix, int iy) const {
    return {origin_.x + (ix + 0.5) * res_, origin_.y + (iy + 0.5) * res_};
  }

  double total_volume() const;  // sum(h) * resolution^2
  double max_height() const;
  BinaryMask mask_above(double eps) const;

  const std::vector<double>& data() const { return h_; }
  std::vector<double>& data() { return h_; }

 private:
  std::size_t idx(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * nx_ + ix;
  }

  int nx_ = 0;
  int ny_ = 0;
  double res_ = 0.001;
  Vec2 origin_;
  std::vector<double> h_;
};

struct MaterialParams {
  std::string name = "custom";
  double stiffness = 250.0;         // N/m, press spring constant
  double flow_forward = 0.6;        // displaced fraction pushed ahead of the pin
  double flow_lateral = 0.2;        // displaced fraction pushed beside the pin
  double rate_sensitivity = 0.0;    // N*s/m, viscous penalty for fast presses
  double cohesion_threshold = 0.0;  // m; sheets thinner than this crumble apart
  double press_depth_factor = 0.5;  // pin bottom = press_depth_factor * start.z

  void validate() const;  // throws InvalidConfig
};

enum class ActionKind { Roll, ForwardShrink, SideShrink };

const char* to_string(ActionKind kind);

struct RollAction {
  ActionKind kind = ActionKind::Roll;
  Vec3 start;
  Vec3 end;
  double pin_radius = 0.0125;  // m
  double pin_length = 0.12;    // m

  void validate() const;  // shrink kinds must touch the plate (z == 0)
};

struct RollResult {
  HeightMap map;
  double spilled_volume = 0.0;  // clipped at the workspace edge, logged upstream
};

// Flat-topped cylinder with an area-fraction anti-aliased rim. Throws
// WorkspaceExceeded when the disk does not fit the grid.
HeightMap init_cylinder(double diameter, double height, Vec2 center,
                        double workspace = 0.30, double resolution = 0.001);

RollResult apply_roll(const HeightMap& hm, const RollAction& a, const MaterialParams& m);
RollResult apply_shrink(const HeightMap& hm, const RollAction& a, const MaterialParams& m);
RollResult apply_action(const HeightMap& hm, const RollAction& a, const MaterialParams& m);

double total_volume(const HeightMap& hm);

// Count of 4-connected components of cells with height > eps.
int connected_components(const HeightMap& hm, double eps = 0.002);

// Simulated pin travel speed; feeds the rate-sensitivity depth reduction.
inline constexpr double kPinSpeed = 0.05;  // m/s
// The pin never squeezes a rolled sheet thinner than this. Keeps rolled
// corridors above the presence threshold for cohesive doughs; crumbly ones
// (cohesion_threshold above the floor) still fracture.
inline constexpr double kMinRollSheet = 0.0025;  // m
// Fraction of displaced volume a forward shrink actually conveys; the rest is
// re-flattened in place, modeling the pin riding over the dough.
inline constexpr double kForwardShrinkTransfer = 0.5;

}  // namespace dough
