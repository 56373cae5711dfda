#include "dough/heightfield.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>

namespace dough {

HeightMap::HeightMap(int nx, int ny, double resolution, Vec2 origin)
    : nx_(nx), ny_(ny), res_(resolution), origin_(origin) {
  if (nx <= 0 || ny <= 0 || resolution <= 0.0)
    raise(ErrorCode::InvalidArgument, "heightmap dimensions must be positive");
  h_.assign(static_cast<std::size_t>(nx) * ny, 0.0);
}

double HeightMap::total_volume() const {
  double s = 0.0;
  for (double v : h_) s += v;
  return s * res_ * res_;
}

double HeightMap::max_height() const {
  double m = 0.0;
  for (double v : h_) m = std::max(m, v);
  return m;
}

BinaryMask HeightMap::mask_above(double eps) const {
  BinaryMask m;
  m.resolution = res_;
  m.origin = origin_;
  m.nx = nx_;
  m.ny = ny_;
  m.cells.resize(h_.size());
  for (std::size_t i = 0; i < h_.size(); ++i) m.cells[i] = h_[i] > eps ? 1 : 0;
  return m;
}

void MaterialParams::validate() const {
  if (stiffness <= 0.0) raise(ErrorCode::InvalidConfig, "stiffness must be > 0");
  if (flow_forward < 0.0 || flow_lateral < 0.0 || flow_forward + flow_lateral > 1.0 + 1e-12)
    raise(ErrorCode::InvalidConfig, "flow fractions must be nonnegative and sum to <= 1");
  if (rate_sensitivity < 0.0) raise(ErrorCode::InvalidConfig, "rate_sensitivity must be >= 0");
  if (cohesion_threshold < 0.0) raise(ErrorCode::InvalidConfig, "cohesion_threshold must be >= 0");
  if (press_depth_factor <= 0.0 || press_depth_factor > 1.0)
    raise(ErrorCode::InvalidConfig, "press_depth_factor must be in (0, 1]");
}

const char* to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::Roll: return "roll";
    case ActionKind::ForwardShrink: return "forward_shrink";
    case ActionKind::SideShrink: return "side_shrink";
  }
  return "unknown";
}

void RollAction::validate() const {
  if (pin_radius <= 0.0 || pin_length <= 0.0)
    raise(ErrorCode::InvalidArgument, "pin geometry must be positive");
  if (start.z < 0.0 || end.z < 0.0)
    raise(ErrorCode::InvalidArgument, "action heights must be >= 0");
  if (kind != ActionKind::Roll && (std::abs(start.z) > 1e-12 || std::abs(end.z) > 1e-12))
    raise(ErrorCode::InvalidArgument, "shrink actions run at plate level (z = 0)");
}

HeightMap init_cylinder(double diameter, double height, Vec2 center,
                        double workspace, double resolution) {
  if (diameter <= 0.0) raise(ErrorCode::InvalidArgument, "diameter must be > 0");
  if (height < 0.0) raise(ErrorCode::InvalidArgument, "height must be >= 0");
  const double r = diameter * 0.5;
  if (center.x - r < 0.0 || center.y - r < 0.0 || center.x + r > workspace ||
      center.y + r > workspace)
    raise(ErrorCode::WorkspaceExceeded, "cylinder does not fit the workspace");

  const int n = static_cast<int>(std::lround(workspace / resolution));
  HeightMap hm(n, n, resolution, {0.0, 0.0});
  const Disk d{center, r};
  const int ix0 = std::max(0, static_cast<int>((center.x - r) / resolution) - 1);
  const int ix1 = std::min(n - 1, static_cast<int>((center.x + r) / resolution) + 1);
  const int iy0 = std::max(0, static_cast<int>((center.y - r) / resolution) - 1);
  const int iy1 = std::min(n - 1, static_cast<int>((center.y + r) / resolution) + 1);
  for (int iy = iy0; iy <= iy1; ++iy) {
    for (int ix = ix0; ix <= ix1; ++ix) {
      const Vec2 corner{hm.origin().x + ix * resolution, hm.origin().y + iy * resolution};
      const double cov = disk_cell_coverage(d, corner, resolution);
      if (cov > 0.0) hm.at(ix, iy) = height * cov;
    }
  }
  return hm;
}

double total_volume(const HeightMap& hm) { return hm.total_volume(); }

int connected_components(const HeightMap& hm, double eps) {
  const int nx = hm.nx(), ny = hm.ny();
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(nx) * ny, 0);
  std::vector<std::pair<int, int>> stack;
  int components = 0;
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const std::size_t id = static_cast<std::size_t>(iy) * nx + ix;
      if (seen[id] || hm.at(ix, iy) <= eps) continue;
      ++components;
      seen[id] = 1;
      stack.push_back({ix, iy});
      while (!stack.empty()) {
        auto [cx, cy] = stack.back();
        stack.pop_back();
        constexpr int dx[4] = {1, -1, 0, 0};
        constexpr int dy[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
          const int px = cx + dx[k], py = cy + dy[k];
          if (px < 0 || px >= nx || py < 0 || py >= ny) continue;
          const std::size_t pid = static_cast<std::size_t>(py) * nx + px;
          if (seen[pid] || hm.at(px, py) <= eps) continue;
          seen[pid] = 1;
          stack.push_back({px, py});
        }
      }
    }
  }
  return components;
}

namespace {

// Redistribution tuning (meters unless noted). Displaced volume spreads as a
// thin skirt around the pressed region: each receiving cell is capped at its
// local pre-action height plus kPileLift, under a global ceiling tied to the
// pre-action maximum, and piles may only start next to cells that are already
// part of the visible body (kGateEps) so cohesive doughs never shed satellites.
constexpr double kStepFrac = 0.5;      // sweep step = resolution * kStepFrac
constexpr double kPileLift = 0.004;    // max rise above the local pre-action surface
constexpr double kGateEps = 0.002;     // directional piles attach above this height
constexpr double kCoveredLift = 0.001; // covered ground levels up gently; fresh ground mounds
constexpr double kPlowLeakScale = 2.0;  // bow-wave carry distance in pin radii
constexpr double kBladeResidue = 0.0015;  // film a scraping blade smears behind itself
constexpr double kCeilingFactor = 0.80;
constexpr double kCeilingLift = 0.001;
constexpr double kTinyVolume = 1e-18;  // m^3
static_assert(kPileLift > kGateEps, "piles must rise above the attach threshold");

struct Frame {
  Vec2 p;    // anchor point (world)
  Vec2 dir;  // unit travel direction
  Vec2 lat;  // unit lateral direction
};

struct IdxRect {
  int x0, x1, y0, y1;  // inclusive, already clamped
  bool empty() const { return x0 > x1 || y0 > y1; }
};

IdxRect grid_rect(const HeightMap& hm, const Frame& fr, double a0, double a1,
                  double l0, double l1) {
  double minx = 1e18, maxx = -1e18, miny = 1e18, maxy = -1e18;
  for (double a : {a0, a1}) {
    for (double l : {l0, l1}) {
      const Vec2 c = fr.p + fr.dir * a + fr.lat * l;
      minx = std::min(minx, c.x);
      maxx = std::max(maxx, c.x);
      miny = std::min(miny, c.y);
      maxy = std::max(maxy, c.y);
    }
  }
  const double res = hm.resolution();
  IdxRect r;
  r.x0 = std::max(0, static_cast<int>(std::floor((minx - hm.origin().x) / res)) - 1);
  r.x1 = std::min(hm.nx() - 1, static_cast<int>(std::floor((maxx - hm.origin().x) / res)) + 1);
  r.y0 = std::max(0, static_cast<int>(std::floor((miny - hm.origin().y) / res)) - 1);
  r.y1 = std::min(hm.ny() - 1, static_cast<int>(std::floor((maxy - hm.origin().y) / res)) + 1);
  return r;
}

struct FloodTask {
  Vec2 origin{};       // cone apex (world); unused when not directional
  Vec2 cone{};         // unit preferred direction; unused when not directional
  bool directional = false;
  bool gate = false;   // only fill cells adjacent to already-visible material
  double lift = kPileLift;  // mound height allowance on fresh ground
};

// Spread `volume` outward from the seed cells in breadth-first rings
// (4-neighborhood). Within a ring, better cone-aligned cells fill first; each
// fill tops the cell up to min(g_ceiling, pre + kPileLift). Directional floods
// never fill against the cone and, when gated, only fill next to cells above
// kGateEps, so the visible footprint grows connected to the existing body.
// Whatever finds no room anywhere on the grid is reported as spill.
void deposit_flood(HeightMap& hm, const HeightMap& pre,
                   const std::vector<std::pair<int, int>>& seeds,
                   const FloodTask& task, double volume, double g_ceiling,
                   double& spilled) {
  if (volume <= kTinyVolume) {
    spilled += std::max(volume, 0.0);
    return;
  }
  if (seeds.empty()) {
    spilled += volume;
    return;
  }
  const int nx = hm.nx(), ny = hm.ny();
  const double cell_area = hm.resolution() * hm.resolution();

  struct Cand {
    int depth;
    double w;
    int iy, ix;
  };
  auto worse = [](const Cand& a, const Cand& b) {
    if (a.depth != b.depth) return a.depth > b.depth;
    if (a.w != b.w) return a.w < b.w;
    if (a.iy != b.iy) return a.iy > b.iy;
    return a.ix > b.ix;
  };
  std::priority_queue<Cand, std::vector<Cand>, decltype(worse)> queue(worse);
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(nx) * ny, 0);

  auto weight = [&](int ix, int iy) {
    if (!task.directional) return 1.0;
    const Vec2 rel = hm.cell_center(ix, iy) - task.origin;
    const double n = rel.norm();
    if (n < 1e-12) return 0.0;
    const double d = rel.dot(task.cone) / n;
    return d > 0.0 ? d * d : 0.0;
  };
  auto push = [&](int ix, int iy, int depth) {
    if (ix < 0 || ix >= nx || iy < 0 || iy >= ny) return;
    std::uint8_t& v = visited[static_cast<std::size_t>(iy) * nx + ix];
    if (v) return;
    v = 1;
    queue.push({depth, weight(ix, iy), iy, ix});
  };

  for (const auto& [ix, iy] : seeds)
    visited[static_cast<std::size_t>(iy) * nx + ix] = 1;
  for (const auto& [ix, iy] : seeds) {
    push(ix + 1, iy, 1);
    push(ix - 1, iy, 1);
    push(ix, iy + 1, 1);
    push(ix, iy - 1, 1);
  }

  while (!queue.empty() && volume > kTinyVolume) {
    const Cand c = queue.top();
    queue.pop();
    bool fillable = !task.directional || c.w > 0.0;
    if (fillable && task.gate) {
      fillable = false;
      constexpr int dx[4] = {1, -1, 0, 0};
      constexpr int dy[4] = {0, 0, 1, -1};
      for (int k = 0; k < 4 && !fillable; ++k) {
        const int px = c.ix + dx[k], py = c.iy + dy[k];
        if (px >= 0 && px < nx && py >= 0 && py < ny && hm.at(px, py) > kGateEps)
          fillable = true;
      }
    }
    if (fillable) {
      double& h = hm.at(c.ix, c.iy);
      const double base = pre.at(c.ix, c.iy);
      // The pile budget is anchored to the lowest pre-action ground nearby:
      // a cell already standing proud of its surroundings takes nothing more,
      // which pushes successive deposits outward instead of growing a wall.
      double floor_nb = base;
      if (c.ix + 1 < nx) floor_nb = std::min(floor_nb, pre.at(c.ix + 1, c.iy));
      if (c.ix - 1 >= 0) floor_nb = std::min(floor_nb, pre.at(c.ix - 1, c.iy));
      if (c.iy + 1 < ny) floor_nb = std::min(floor_nb, pre.at(c.ix, c.iy + 1));
      if (c.iy - 1 >= 0) floor_nb = std::min(floor_nb, pre.at(c.ix, c.iy - 1));
      // Fresh ground takes a bow-wave mound; covered ground only levels up
      // gently, so displaced dough prefers extending the footprint outward.
      const double lift = base > kGateEps ? kCoveredLift : task.lift;
      double cap = std::min(g_ceiling, floor_nb + lift);
      const double room = (cap - h) * cell_area;
      if (room > 0.0) {
        const double add = std::min(room, volume);
        h += add / cell_area;
        volume -= add;
      }
    }
    push(c.ix + 1, c.iy, c.depth + 1);
    push(c.ix - 1, c.iy, c.depth + 1);
    push(c.ix, c.iy + 1, c.depth + 1);
    push(c.ix, c.iy - 1, c.depth + 1);
  }
  spilled += std::max(volume, 0.0);
}

struct SweepSpec {
  double z_bot = 0.0;
  double forward_frac = 0.0;
  double lateral_frac = 0.0;
  double in_place_frac = 0.0;
  bool fracture = false;
  double cohesion = 0.0;
};

RollResult pin_sweep(const HeightMap& in, const RollAction& act, const SweepSpec& spec) {
  RollResult out{in, 0.0};
  HeightMap& hm = out.map;
  const double res = hm.resolution();
  const double cell_area = res * res;
  const double r = act.pin_radius;
  const double hl = act.pin_length * 0.5;
  const double h_cap = in.max_height();
  // Deposits near a tall body are pressed down toward its skirt, but a sweep
  // with a shallow working plane still smears a thin coat ahead of itself.
  const double g_ceiling = std::min(
      h_cap, std::max(kCeilingFactor * h_cap, spec.z_bot + kCeilingLift));

  const Vec2 s = act.start.xy();
  const Vec2 delta = act.end.xy() - s;
  const double len = delta.norm();
  const bool press_only = len < res * kStepFrac;
  const Vec2 dir = press_only ? Vec2{1.0, 0.0} : delta * (1.0 / len);
  const Vec2 lat = dir.perp();

  const double step = res * kStepFrac;
  const int nsteps = press_only ? 1 : static_cast<int>(std::ceil(len / step)) + 1;

  // Carve the whole corridor first; redistribution happens once afterwards.
  std::vector<std::uint8_t> touched(static_cast<std::size_t>(hm.nx()) * hm.ny(), 0);
  std::vector<std::pair<int, int>> contact;
  double removed = 0.0;
  double a_lead = 0.0;  // furthest contact along the travel direction
  for (int k = 0; k < nsteps; ++k) {
    const double along = press_only ? 0.0 : std::min(len, k * step);
    const Frame fr{s + dir * along, dir, lat};
    const IdxRect rect = grid_rect(hm, fr, -r, r, -hl, hl);
    for (int iy = rect.y0; iy <= rect.y1 && !rect.empty(); ++iy) {
      for (int ix = rect.x0; ix <= rect.x1; ++ix) {
        const Vec2 rel = hm.cell_center(ix, iy) - fr.p;
        const double a = rel.dot(dir);
        const double l = rel.dot(lat);
        if (std::abs(a) > r || std::abs(l) > hl) continue;
        const double zs = spec.z_bot + r - std::sqrt(std::max(0.0, r * r - a * a));
        double& h = hm.at(ix, iy);
        if (h > zs) {
          removed += h - zs;
          h = zs;
          std::uint8_t& t = touched[static_cast<std::size_t>(iy) * hm.nx() + ix];
          if (!t) {
            t = 1;
            contact.push_back({ix, iy});
            a_lead = std::max(a_lead, (hm.cell_center(ix, iy) - s).dot(dir));
          }
        }
      }
    }
  }

  if (removed > 0.0) {
    const double vol = removed * cell_area;
    double fwd = vol * spec.forward_frac;
    double side = vol * spec.lateral_frac;
    double inplace = vol * spec.in_place_frac;
    if (press_only) {  // no travel direction: everything spreads around
      fwd = 0.0;
      side = 0.0;
      inplace = 0.0;
    } else {
      // The pin is a leaky plow: over a long stroke most of the bow wave
      // escapes sideways along the corridor, and only what is still carried
      // when the pin stops lands ahead of it.
      const double carried = std::exp(-len / (kPlowLeakScale * r));
      side += fwd * (1.0 - carried);
      fwd *= carried;
    }
    const double ring = vol - fwd - side - inplace;

    if (inplace > 0.0) {
      const double dh = inplace / (static_cast<double>(contact.size()) * cell_area);
      for (auto [ix, iy] : contact) hm.at(ix, iy) += dh;
    }
    if (fwd > 0.0) {
      const double overrun = press_only ? 0.0 : len - a_lead;
      std::vector<std::pair<int, int>> band;
      if (overrun > res) {
        // The pin keeps rolling past the dough's leading edge, dragging the
        // carried wave over bare ground and smearing it into a film along the
        // overrun corridor. A short overrun leaves a thick, visible lip; a
        // long one spreads the same dough too thin to register.
        const Frame fr{s + dir * a_lead, dir, lat};
        const IdxRect rect = grid_rect(hm, fr, 0.0, overrun, -hl, hl);
        for (int iy = rect.y0; iy <= rect.y1 && !rect.empty(); ++iy) {
          for (int ix = rect.x0; ix <= rect.x1; ++ix) {
            const Vec2 rel = hm.cell_center(ix, iy) - fr.p;
            const double a = rel.dot(dir);
            const double l = rel.dot(lat);
            if (a < 0.0 || a > overrun || std::abs(l) > hl) continue;
            band.push_back({ix, iy});
          }
        }
      }
      if (!band.empty()) {
        // The rolling pin rides at the press plane, so the smeared film can
        // never stand taller than that; whatever does not fit under the pin
        // stays carried and mounds against the dough's leading edge.
        const double dh = fwd / (static_cast<double>(band.size()) * cell_area);
        double excess = 0.0;
        for (auto [ix, iy] : band) {
          double& h = hm.at(ix, iy);
          const double add = std::min(dh, std::max(spec.z_bot - h, 0.0));
          h += add;
          excess += dh - add;
        }
        if (excess * cell_area > kTinyVolume) {
          FloodTask task{s + dir * a_lead, dir, true, true};
          deposit_flood(hm, in, contact, task, excess * cell_area, g_ceiling,
                        out.spilled_volume);
        }
      } else {
        // Pin stops at the dough's leading edge: the wave mounds there.
        FloodTask task{s + dir * a_lead, dir, true, true};
        deposit_flood(hm, in, contact, task, fwd, g_ceiling, out.spilled_volume);
      }
    }
    if (side > 0.0) {
      const Vec2 mid = s + dir * (len * 0.5);
      deposit_flood(hm, in, contact, {mid, lat, true, true}, side * 0.5,
                    g_ceiling, out.spilled_volume);
      deposit_flood(hm, in, contact, {mid, lat * -1.0, true, true}, side * 0.5,
                    g_ceiling, out.spilled_volume);
    }
    if (ring > 0.0) {
      deposit_flood(hm, in, contact, FloodTask{}, ring, g_ceiling, out.spilled_volume);
    }
  }

  if (spec.fracture && spec.cohesion > 0.0) {
    // Crumble pass: swept cells left thinner than the cohesion threshold break
    // off; their volume lumps around the swept region (possibly detached).
    double vol_f = 0.0;
    std::vector<std::pair<int, int>> crumbs;
    for (int iy = 0; iy < hm.ny(); ++iy) {
      for (int ix = 0; ix < hm.nx(); ++ix) {
        if (!touched[static_cast<std::size_t>(iy) * hm.nx() + ix]) continue;
        double& h = hm.at(ix, iy);
        if (h <= 0.0 || h >= spec.cohesion) continue;
        vol_f += h * cell_area;
        h = 0.0;
        crumbs.push_back({ix, iy});
      }
    }
    if (vol_f > 0.0)
      deposit_flood(hm, in, crumbs, FloodTask{}, vol_f, g_ceiling, out.spilled_volume);
  }
  return out;
}

RollResult blade_sweep(const HeightMap& in, const RollAction& act) {
  RollResult out{in, 0.0};
  HeightMap& hm = out.map;
  const double res = hm.resolution();
  const double cell_area = res * res;
  const double hl = act.pin_length * 0.5;
  const double h_cap = in.max_height();

  const Vec2 s = act.start.xy();
  const Vec2 delta = act.end.xy() - s;
  const double len = delta.norm();
  const Vec2 dir = len > 1e-12 ? delta * (1.0 / len) : Vec2{1.0, 0.0};
  const Frame fr{s, dir, dir.perp()};

  // Everything in the swept band piles up just past the end line.
  double vol = 0.0;
  double crest = 0.0;
  std::vector<std::pair<int, int>> band;
  const IdxRect rect = grid_rect(hm, fr, -res, len, -hl, hl);
  for (int iy = rect.y0; iy <= rect.y1 && !rect.empty(); ++iy) {
    for (int ix = rect.x0; ix <= rect.x1; ++ix) {
      const Vec2 rel = hm.cell_center(ix, iy) - fr.p;
      const double a = rel.dot(fr.dir);
      const double l = rel.dot(fr.lat);
      if (a < -res || a > len || std::abs(l) > hl) continue;
      double& h = hm.at(ix, iy);
      if (h > 0.0) {
        // A scraping blade never lifts the sheet cleanly off the table; a
        // smeared film stays behind wherever it passes.
        const double keep = std::min(h, kBladeResidue);
        vol += (h - keep) * cell_area;
        crest = std::max(crest, h);
        h = keep;
        band.push_back({ix, iy});
      }
    }
  }
  if (vol > 0.0) {
    // A sideways push does not roll the dough flat; it bulldozes it into a
    // ridge about as tall as the dough it displaced. On a long stroke the bow
    // wave sheds around both ends of the pin, so only part of the load reaches
    // the end line; the rest banks up at the final corners of the blade.
    const double ridge = std::max(kPileLift, crest);
    const double carried = std::exp(-len / (kPlowLeakScale * act.pin_radius));
    const Vec2 lat{-dir.y, dir.x};
    const Vec2 end = s + dir * len;
    FloodTask fwd_task{end, dir, true, true, ridge};
    deposit_flood(hm, in, band, fwd_task, vol * carried, h_cap, out.spilled_volume);
    const double shed = vol * (1.0 - carried) * 0.5;
    if (shed > 0.0) {
      FloodTask corner_a{end + lat * hl, lat, true, true, ridge};
      deposit_flood(hm, in, band, corner_a, shed, h_cap, out.spilled_volume);
      FloodTask corner_b{end - lat * hl, lat * -1.0, true, true, ridge};
      deposit_flood(hm, in, band, corner_b, shed, h_cap, out.spilled_volume);
    }
  }
  return out;
}

}  // namespace

RollResult apply_roll(const HeightMap& hm, const RollAction& a, const MaterialParams& m) {
  a.validate();
  m.validate();
  if (a.kind != ActionKind::Roll)
    raise(ErrorCode::InvalidArgument, "apply_roll requires a Roll action");
  // Pin bottom = start.z * press_depth_factor, with the viscous term shrinking
  // the achieved depth for rate-sensitive materials (identical at rate 0).
  const double rate_factor =
      m.stiffness / (m.stiffness + m.rate_sensitivity * kPinSpeed);
  double z_bot = a.start.z * (1.0 - (1.0 - m.press_depth_factor) * rate_factor);
  z_bot = std::max(z_bot, kMinRollSheet);
  SweepSpec spec;
  spec.z_bot = z_bot;
  spec.forward_frac = m.flow_forward;
  spec.lateral_frac = m.flow_lateral;
  spec.fracture = m.cohesion_threshold > 0.0;
  spec.cohesion = m.cohesion_threshold;
  return pin_sweep(hm, a, spec);
}

RollResult apply_shrink(const HeightMap& hm, const RollAction& a, const MaterialParams& m) {
  a.validate();
  m.validate();
  if (a.kind == ActionKind::SideShrink) return blade_sweep(hm, a);
  if (a.kind == ActionKind::ForwardShrink) {
    SweepSpec spec;
    spec.z_bot = 0.0;
    spec.forward_frac = kForwardShrinkTransfer;
    spec.in_place_frac = 1.0 - kForwardShrinkTransfer;
    spec.fracture = m.cohesion_threshold > 0.0;
    spec.cohesion = m.cohesion_threshold;
    return pin_sweep(hm, a, spec);
  }
  raise(ErrorCode::InvalidArgument, "apply_shrink requires a shrink action");
}

RollResult apply_action(const HeightMap& hm, const RollAction& a, const MaterialParams& m) {
  return a.kind == ActionKind::Roll ? apply_roll(hm, a, m) : apply_shrink(hm, a, m);
}

}  // namespace dough
