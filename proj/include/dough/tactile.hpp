#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dough/materials.hpp"

namespace dough {

// Readout chain: press force F lowers the sensor resistance, which a resistive
// divider converts to a voltage.
struct FsrCircuit {
  double r_ref = 10000.0;  // Ω
  double v_cc = 5.0;       // V
  double r0 = 1.0e6;       // Ω: sensor resistance at zero force
  double f0 = 0.02;        // N: force scale of the resistance drop

  // R0 / (1 + F/F0): hyperbolic decay, strictly decreasing in force.
  double r_fsr(double force) const;

  void validate() const;
};

struct PressReading {
  double delta_x = 0.0;  // m, commanded vertical travel
  double rate = 0.0;     // m/s
  double force = 0.0;    // N
  double v_out = 0.0;    // V
  std::string material;  // label, only for bookkeeping in tests/exports
};

// Divider output for a given sensor resistance; R_FSR may be infinite.
double v_out(const FsrCircuit& c, double r_fsr);

// Press a pin a fixed distance into the material at the given rate and read
// the reaction force through the circuit. Noise is seeded and additive.
PressReading press_measure(const MaterialParams& m, double delta_x, double rate,
                           double noise_sd, std::uint64_t seed,
                           const FsrCircuit& c = {});

// Deflection over force (m/N).
double compliance(double delta_x, double force);

// Nearest preset by mean reaction force under the readings' own protocol;
// ties resolve to the lexicographically smallest preset name.
std::string classify(const std::vector<PressReading>& readings,
                     const std::vector<MaterialParams>& presets);

}  // namespace dough
