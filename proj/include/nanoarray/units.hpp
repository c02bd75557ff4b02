#pragma once

// Physical constants (CODATA 2018, exact where SI defines them) and the
// input-unit conversions used across the library. Everything internal is SI:
// angular frequencies in rad/s, lengths in m, dipole moments in C*m,
// intensities in W/m^2.

#include <numbers>

namespace nanoarray::units {

inline constexpr double pi = std::numbers::pi;

inline constexpr double elementary_charge = 1.602176634e-19;   // C
inline constexpr double hbar = 1.054571817e-34;                // J*s
inline constexpr double speed_of_light = 299792458.0;          // m/s
inline constexpr double vacuum_permittivity = 8.8541878128e-12; // F/m

/// 1 eV expressed as an angular frequency: e / hbar (rad/s per eV).
inline constexpr double rad_per_s_per_ev = elementary_charge / hbar;

/// 1 Debye in C*m.
inline constexpr double coulomb_meter_per_debye = 3.33564e-30;

/// 1 W/cm^2 in W/m^2.
inline constexpr double w_per_m2_per_w_per_cm2 = 1.0e4;

inline constexpr double meter_per_nm = 1.0e-9;

constexpr double ev_to_rad_per_s(double ev) { return ev * rad_per_s_per_ev; }
constexpr double rad_per_s_to_ev(double w) { return w / rad_per_s_per_ev; }
constexpr double nm_to_m(double nm) { return nm * meter_per_nm; }
constexpr double m_to_nm(double m) { return m / meter_per_nm; }
constexpr double debye_to_cm(double d) { return d * coulomb_meter_per_debye; }
constexpr double cm_to_debye(double cm) { return cm / coulomb_meter_per_debye; }
constexpr double w_per_cm2_to_si(double i) { return i * w_per_m2_per_w_per_cm2; }
constexpr double si_to_w_per_cm2(double i) { return i / w_per_m2_per_w_per_cm2; }

/// Vacuum wavelength (m) of light with angular frequency `omega` (rad/s).
constexpr double wavelength_of(double omega) { return 2.0 * pi * speed_of_light / omega; }

/// Angular frequency (rad/s) of light with vacuum wavelength `lambda` (m).
constexpr double angular_frequency_of(double lambda) { return 2.0 * pi * speed_of_light / lambda; }

}  // namespace nanoarray::units
