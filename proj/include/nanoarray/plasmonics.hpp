#pragma once

// Single-particle plasmonics of a Drude metal nanoparticle, the geometry of a
// qubit / nanoparticle-array / qubit chain, and the bare rates that enter the
// open-system Hamiltonian: QD-MNP and MNP-MNP dipole couplings, plasmon
// damping, and the laser-driven excitation rates.

#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include "nanoarray/errors.hpp"
#include "nanoarray/units.hpp"

namespace nanoarray {

using cplx = std::complex<double>;

struct DrudeMetal {
  double omega_p = 0.0;  // bulk plasma frequency, rad/s
  double eps_inf = 1.0;  // high-frequency permittivity
  double gamma_p = 0.0;  // free-electron damping, rad/s

  static DrudeMetal from_ev(double omega_p_ev, double eps_inf, double gamma_p_ev) {
    return {units::ev_to_rad_per_s(omega_p_ev), eps_inf, units::ev_to_rad_per_s(gamma_p_ev)};
  }

  void validate() const {
    if (!(omega_p > 0.0) || !std::isfinite(omega_p)) throw DomainError("DrudeMetal: omega_p must be > 0");
    if (!(eps_inf >= 1.0)) throw DomainError("DrudeMetal: eps_inf must be >= 1");
    if (!(gamma_p >= 0.0) || !std::isfinite(gamma_p)) throw DomainError("DrudeMetal: gamma_p must be >= 0");
  }
};

struct HostMedium {
  double eps_m = 1.0;

  void validate() const {
    if (!(eps_m >= 1.0) || !std::isfinite(eps_m)) throw DomainError("HostMedium: eps_m must be >= 1");
  }
};

/// Derived single-nanoparticle quantities. Immutable once built by
/// derive_material() (or re-damped by match_excitation_ratio()).
struct MaterialSystem {
  DrudeMetal metal;
  HostMedium medium;
  double radius = 0.0;    // MNP radius the dipole moment was evaluated for, m
  double omega_0 = 0.0;   // single-particle LSPR, rad/s
  double eta = 0.0;       // rad/s
  double mu_mnp = 0.0;    // plasmon dipole moment, C*m
  double gamma_nr = 0.0;  // non-radiative damping, rad/s
  double gamma_r = 0.0;   // radiative damping, rad/s
  double gamma_0 = 0.0;   // gamma_nr + gamma_r, rad/s
};

/// Dipole radiation rate of a plasmon with moment `mu` at frequency `omega`
/// embedded in a medium of permittivity `eps_m`.
inline double dipole_radiative_damping(double mu, double omega, double eps_m) {
  using namespace units;
  return mu * mu * std::sqrt(eps_m) * omega * omega * omega /
         (3.0 * pi * vacuum_permittivity * hbar * speed_of_light * speed_of_light * speed_of_light);
}

/// Quasi-static Drude sphere: LSPR, oscillator strength, plasmon dipole and
/// damping for an MNP of radius `r`.
inline MaterialSystem derive_material(const DrudeMetal& metal, const HostMedium& medium, double r) {
  metal.validate();
  medium.validate();
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("derive_material: radius must be > 0");

  using namespace units;
  MaterialSystem m;
  m.metal = metal;
  m.medium = medium;
  m.radius = r;
  const double denom = metal.eps_inf + 2.0 * medium.eps_m;
  m.omega_0 = metal.omega_p / std::sqrt(denom);
  m.eta = m.omega_0 / (2.0 * denom);
  m.mu_mnp = 2.0 * medium.eps_m * std::sqrt(3.0 * pi * vacuum_permittivity * hbar * m.eta * r * r * r);
  const double ratio = metal.gamma_p / m.omega_0;
  m.gamma_nr = metal.gamma_p * (1.0 + ratio * ratio);
  m.gamma_r = dipole_radiative_damping(m.mu_mnp, m.omega_0, medium.eps_m);
  m.gamma_0 = m.gamma_nr + m.gamma_r;
  return m;
}

/// Field amplitude (V/m) of a plane wave of intensity `intensity` (W/m^2) in
/// a medium of permittivity `eps_m`.
inline double field_amplitude(double intensity, double eps_m) {
  if (intensity < 0.0) throw DomainError("field_amplitude: intensity must be >= 0");
  using namespace units;
  return std::sqrt(2.0 * intensity / (speed_of_light * std::sqrt(eps_m) * vacuum_permittivity));
}

/// Replaces the radiative damping so that the plasmon excitation ratio
/// Omega_m / gamma_0 equals `ratio` at intensity `intensity` (W/m^2).
/// The non-radiative part is kept. Fails if the requested ratio would need a
/// negative radiative damping.
inline MaterialSystem match_excitation_ratio(const MaterialSystem& mat, double intensity, double ratio) {
  if (!(intensity > 0.0)) throw DomainError("match_excitation_ratio: intensity must be > 0");
  if (!(ratio > 0.0)) throw DomainError("match_excitation_ratio: ratio must be > 0");
  const double omega_m = field_amplitude(intensity, mat.medium.eps_m) * mat.mu_mnp / units::hbar;
  const double gamma_0 = omega_m / ratio;
  if (gamma_0 < mat.gamma_nr) {
    std::ostringstream os;
    os << "match_excitation_ratio: target gamma_0 = " << gamma_0 << " rad/s is below gamma_nr = " << mat.gamma_nr;
    throw DomainError(os.str());
  }
  MaterialSystem out = mat;
  out.gamma_0 = gamma_0;
  out.gamma_r = gamma_0 - mat.gamma_nr;
  return out;
}

struct ArrayGeometry {
  double r = 0.0;    // MNP radius, m
  double r0 = 0.0;   // QD radius, m
  double s = 0.0;    // surface-to-surface gap, m
  int n = 1;         // number of MNPs
  double s_z = 2.0;  // dipole orientation factor
  double d_qn = 0.0;
  double d_nn = 0.0;
  double d_qq = 0.0;

  /// Surface-to-surface qubit separation d_qq - 2 r0.
  double qubit_gap() const { return d_qq - 2.0 * r0; }

  bool qd_mnp_point_dipole_ok() const { return d_qn >= 2.0 * r * (1.0 - 1e-12); }
  bool mnp_mnp_point_dipole_ok() const { return d_nn >= 3.0 * r * (1.0 - 1e-12); }
};

inline ArrayGeometry make_geometry(double r, double r0, double s, int n, double s_z = 2.0) {
  if (!(r > 0.0)) throw DomainError("make_geometry: MNP radius must be > 0");
  if (!(r0 > 0.0)) throw DomainError("make_geometry: QD radius must be > 0");
  if (!(s >= 0.0)) throw DomainError("make_geometry: gap must be >= 0");
  if (n < 1) throw DomainError("make_geometry: need at least one MNP");
  ArrayGeometry g;
  g.r = r;
  g.r0 = r0;
  g.s = s;
  g.n = n;
  g.s_z = s_z;
  g.d_qn = r0 + s + r;
  g.d_nn = s + 2.0 * r;
  g.d_qq = 2.0 * (r * n + r0) + s * (n + 1);
  return g;
}

/// QD transition dipole e * r0.
inline double qd_dipole_from_radius(double r0) {
  if (!(r0 > 0.0)) throw DomainError("qd_dipole_from_radius: r0 must be > 0");
  return units::elementary_charge * r0;
}

struct QdParams {
  double mu_qd = 0.0;                     // C*m
  std::array<double, 2> gamma{0.0, 0.0};  // spontaneous emission, rad/s
  std::array<double, 2> omega{0.0, 0.0};  // transition frequencies, rad/s

  void validate() const {
    if (!(mu_qd >= 0.0)) throw DomainError("QdParams: mu_qd must be >= 0");
    for (double gi : gamma)
      if (!(gi > 0.0)) throw DomainError("QdParams: gamma_i must be > 0");
  }
};

struct BareCouplings {
  double g = 0.0;      // QD-MNP, rad/s
  double kappa = 0.0;  // MNP-MNP nearest neighbour, rad/s
};

/// sqrt(3 r^3 eta / (4 pi eps0 hbar)): converts a dipole over a cubed
/// distance into a coupling rate.
inline double dipole_coupling_factor(double r, double eta) {
  using namespace units;
  return std::sqrt(3.0 * r * r * r * eta / (4.0 * pi * vacuum_permittivity * hbar));
}

inline BareCouplings bare_couplings(const ArrayGeometry& geom, const QdParams& qd, const MaterialSystem& mat) {
  if (!(geom.d_qn > 0.0) || !(geom.d_nn > 0.0)) throw DomainError("bare_couplings: distances must be > 0");
  BareCouplings c;
  const double dqn3 = geom.d_qn * geom.d_qn * geom.d_qn;
  c.g = geom.s_z * qd.mu_qd / dqn3 * dipole_coupling_factor(geom.r, mat.eta);
  const double x = geom.r / geom.d_nn;
  c.kappa = 3.0 * geom.s_z * mat.medium.eps_m * mat.eta * x * x * x;
  if (!std::isfinite(c.g) || !std::isfinite(c.kappa)) throw DomainError("bare_couplings: non-finite coupling");
  return c;
}

struct DriveField {
  double intensity = 0.0;  // W/m^2
  double omega = 0.0;      // driving frequency, rad/s
  double e0 = 0.0;         // V/m
  double phi = 0.0;        // phase of laser 2 relative to laser 1, rad
  std::array<cplx, 2> lambda{};  // bare QD excitation rates; qubit 2 carries e^{i phi}
  double omega_m = 0.0;    // bare MNP excitation rate, rad/s

  /// Weak-excitation diagnostic Omega_m / gamma_0.
  double excitation_ratio(const MaterialSystem& mat) const { return omega_m / mat.gamma_0; }
};

inline DriveField drive_rates(double intensity, double omega, const MaterialSystem& mat, const QdParams& qd,
                              double phi = 0.0) {
  if (!(intensity >= 0.0) || !std::isfinite(intensity)) throw DomainError("drive_rates: intensity must be >= 0");
  DriveField d;
  d.intensity = intensity;
  d.omega = omega;
  d.phi = phi;
  d.e0 = field_amplitude(intensity, mat.medium.eps_m);
  const double lam = d.e0 * qd.mu_qd / units::hbar;
  d.lambda = {cplx(lam, 0.0), lam * std::polar(1.0, phi)};
  d.omega_m = d.e0 * mat.mu_mnp / units::hbar;
  return d;
}

}  // namespace nanoarray
