#pragma once

#include "nanoarray/nanoarray.hpp"

namespace fixtures {

using namespace nanoarray;

inline const PhysicalSetup& setup() {
  static const PhysicalSetup s = make_setup(ExperimentConfig{});
  return s;
}

/// Default parameters, LSPR drive; detunings in units of gamma_i, intensity in W/cm^2.
inline Scenario scenario(int n, double intensity_w_cm2 = 0.0, double d1 = 0.0, double d2 = 0.0, double phi = 0.0,
                         PhaseScope scope = PhaseScope::effective) {
  const ExperimentConfig cfg;
  const double w0 = setup().material.omega_0;
  QdParams qd = setup().qd;
  qd.omega = {w0 + d1 * cfg.gamma_i, w0 + d2 * cfg.gamma_i};
  const DriveField drive = drive_rates(units::w_per_cm2_to_si(intensity_w_cm2), w0, setup().material, qd, phi);
  return make_scenario(setup().material, geometry_for(cfg, n), qd, drive, scope);
}

}  // namespace fixtures
