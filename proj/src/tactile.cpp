#include "dough/tactile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dough/errors.hpp"
#include "dough/rng.hpp"

namespace dough {

void FsrCircuit::validate() const {
  if (r_ref <= 0.0 || v_cc <= 0.0 || r0 <= 0.0 || f0 <= 0.0)
    raise(ErrorCode::InvalidConfig, "circuit parameters must be > 0");
}

double FsrCircuit::r_fsr(double force) const {
  if (force < 0.0) raise(ErrorCode::InvalidArgument, "force must be >= 0");
  return r0 / (1.0 + force / f0);
}

double v_out(const FsrCircuit& c, double r_fsr) {
  c.validate();
  if (r_fsr < 0.0) raise(ErrorCode::InvalidArgument, "resistance must be >= 0");
  if (std::isinf(r_fsr)) return 0.0;
  return c.r_ref / (c.r_ref + r_fsr) * c.v_cc;
}

PressReading press_measure(const MaterialParams& m, double delta_x, double rate,
                           double noise_sd, std::uint64_t seed, const FsrCircuit& c) {
  m.validate();
  if (delta_x <= 0.0 || rate <= 0.0)
    raise(ErrorCode::InvalidArgument, "press distance and rate must be > 0");
  if (noise_sd < 0.0) raise(ErrorCode::InvalidArgument, "noise_sd must be >= 0");
  PressReading r;
  r.delta_x = delta_x;
  r.rate = rate;
  r.material = m.name;
  double f = (m.stiffness + m.rate_sensitivity * rate) * delta_x;
  if (noise_sd > 0.0) {
    Rng rng(seed);
    f += rng.gaussian(noise_sd);
  }
  r.force = std::max(f, 0.0);
  r.v_out = v_out(c, c.r_fsr(r.force));
  return r;
}

double compliance(double delta_x, double force) {
  if (delta_x <= 0.0) raise(ErrorCode::InvalidArgument, "delta_x must be > 0");
  if (force <= 0.0) raise(ErrorCode::ZeroForce, "compliance undefined at zero force");
  return delta_x / force;
}

std::string classify(const std::vector<PressReading>& readings,
                     const std::vector<MaterialParams>& presets) {
  if (readings.empty()) raise(ErrorCode::InvalidArgument, "need at least one reading");
  if (presets.empty()) raise(ErrorCode::InvalidArgument, "need at least one preset");

  double mean_f = 0.0;
  for (const auto& r : readings) mean_f += r.force;
  mean_f /= static_cast<double>(readings.size());

  std::vector<const MaterialParams*> order;
  for (const auto& p : presets) order.push_back(&p);
  std::sort(order.begin(), order.end(),
            [](const MaterialParams* a, const MaterialParams* b) { return a->name < b->name; });

  std::string best;
  double best_err = std::numeric_limits<double>::infinity();
  for (const MaterialParams* p : order) {
    double expected = 0.0;
    for (const auto& r : readings)
      expected += (p->stiffness + p->rate_sensitivity * r.rate) * r.delta_x;
    expected /= static_cast<double>(readings.size());
    const double err = std::abs(mean_f - expected);
    if (err < best_err) {  // strict: ties keep the alphabetically first name
      best_err = err;
      best = p->name;
    }
  }
  return best;
}

}  // namespace dough
