#pragma once

// Adiabatic elimination of the nanoparticle array. The stationary plasmon
// amplitudes are linear in the qubit coherences through the inverse K of the
// array coupling matrix A; inserting them back gives plasmon-induced
// single-qubit shifts, Purcell rates and drive enhancement, plus mediated
// coherent (G12) and dissipative (Gamma12) qubit-qubit couplings.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "nanoarray/errors.hpp"
#include "nanoarray/numerics/tridiagonal.hpp"
#include "nanoarray/plasmonics.hpp"

namespace nanoarray {

/// Where the inter-laser phase phi enters the model.
enum class PhaseScope {
  effective,             // Lambda~2 = Lambda~1 e^{i phi} (whole effective drive phased)
  bare_qubit,            // only the bare Lambda_2 carries e^{i phi}
  bare_qubit_and_mnp,    // bare Lambda_2 and the MNP next to qubit 2 carry e^{i phi}
};

/// Everything needed to evaluate one operating point of the QD-NA-QD system.
struct Scenario {
  MaterialSystem material;
  ArrayGeometry geometry;
  QdParams qd;
  BareCouplings couplings;
  DriveField drive;
  PhaseScope phase_scope = PhaseScope::effective;

  int n() const { return geometry.n; }
  double omega() const { return drive.omega; }
};

inline Scenario make_scenario(const MaterialSystem& mat, const ArrayGeometry& geom, const QdParams& qd,
                              const DriveField& drive, PhaseScope scope = PhaseScope::effective) {
  qd.validate();
  return {mat, geom, qd, bare_couplings(geom, qd, mat), drive, scope};
}

/// Bare MNP drive vector Omega_v for the given phase scope.
inline Eigen::VectorXcd mnp_drive_vector(const Scenario& sc) {
  Eigen::VectorXcd om = Eigen::VectorXcd::Constant(sc.n(), cplx(sc.drive.omega_m, 0.0));
  if (sc.phase_scope == PhaseScope::bare_qubit_and_mnp && sc.n() > 1)
    om(sc.n() - 1) *= std::polar(1.0, sc.drive.phi);
  return om;
}

struct ComplexPole {
  double detuning_0 = 0.0;                 // omega_0 - omega
  std::array<double, 2> detuning_i{};      // omega_i - omega
  cplx delta;                              // i detuning_0 + gamma_0 / 2
  std::array<cplx, 2> delta_i{};           // i detuning_i + gamma_i / 2
};

inline ComplexPole make_pole(const MaterialSystem& mat, const QdParams& qd, double omega) {
  ComplexPole p;
  p.detuning_0 = mat.omega_0 - omega;
  p.delta = cplx(0.5 * mat.gamma_0, p.detuning_0);
  for (int i = 0; i < 2; ++i) {
    p.detuning_i[i] = qd.omega[i] - omega;
    p.delta_i[i] = cplx(0.5 * qd.gamma[i], p.detuning_i[i]);
  }
  if (!(p.delta.real() > 0.0)) throw DomainError("make_pole: plasmon damping gamma_0 must be > 0");
  return p;
}

inline ComplexPole make_pole(const Scenario& sc) { return make_pole(sc.material, sc.qd, sc.omega()); }

struct CouplingMatrix {
  int n = 0;
  double kappa = 0.0;
  cplx delta;
  numerics::Tridiagonal bands;
  Eigen::MatrixXcd entries;
  Eigen::MatrixXcd inverse_k;
  double residual = 0.0;  // ||K A - I||_F / ||I||_F
};

inline CouplingMatrix build_coupling_matrix(int n, double kappa, cplx delta) {
  if (n < 1) throw DomainError("build_coupling_matrix: n must be >= 1");
  if (!(delta.real() > 0.0)) throw DomainError("build_coupling_matrix: Re(delta) must be > 0");
  CouplingMatrix c;
  c.n = n;
  c.kappa = kappa;
  c.delta = delta;
  const cplx off = cplx(0.0, -kappa) / delta;
  c.bands.diag.assign(n, cplx(1.0, 0.0));
  c.bands.lower.assign(n - 1, off);
  c.bands.upper.assign(n - 1, off);
  c.entries = c.bands.dense();
  c.inverse_k = numerics::tridiagonal_inverse(c.bands);
  c.residual = (c.inverse_k * c.entries - Eigen::MatrixXcd::Identity(n, n)).norm() / std::sqrt(double(n));
  if (!(c.residual < 1e-8)) throw NumericalError("build_coupling_matrix: inverse fails the K A = I check");
  return c;
}

inline CouplingMatrix build_coupling_matrix(const Scenario& sc) {
  return build_coupling_matrix(sc.n(), sc.couplings.kappa, make_pole(sc).delta);
}

struct EffectiveCouplings {
  Eigen::MatrixXcd g_tilde;      // 2 x n: row j holds g~_{jm}
  Eigen::VectorXcd omega_tilde;  // n
};

inline EffectiveCouplings effective_couplings(const Scenario& sc, const CouplingMatrix& k) {
  if (k.n != sc.n()) throw ContractViolation("effective_couplings: coupling matrix size does not match the array");
  const int n = sc.n();
  EffectiveCouplings e;
  // Only the end particles couple to the qubits: g_{11} = g_{2n} = g.
  e.g_tilde.resize(2, n);
  e.g_tilde.row(0) = sc.couplings.g * k.inverse_k.col(0).transpose();
  e.g_tilde.row(1) = sc.couplings.g * k.inverse_k.col(n - 1).transpose();
  e.omega_tilde = k.inverse_k * mnp_drive_vector(sc);
  return e;
}

struct MediatedParams {
  std::array<double, 2> delta_omega_tilde{};  // effective detunings
  std::array<double, 2> gamma_tilde{};        // effective spontaneous emission
  std::array<cplx, 2> lambda_tilde{};         // effective drives
  double g_coh = 0.0;       // G~12
  double g_coh_21 = 0.0;    // G~21
  double gamma_diss = 0.0;  // Gamma~12
  double gamma_diss_21 = 0.0;
  Eigen::MatrixXd v_mat;    // 2 x n
  Eigen::MatrixXd u_mat;    // 2 x n
};

inline MediatedParams mediated_params(const Scenario& sc, const CouplingMatrix& k) {
  const ComplexPole pole = make_pole(sc);
  if (k.n != sc.n() || std::abs(k.kappa - sc.couplings.kappa) > 1e-12 * std::abs(sc.couplings.kappa) ||
      std::abs(k.delta - pole.delta) > 1e-12 * std::abs(pole.delta))
    throw ContractViolation("mediated_params: coupling matrix was built for a different n, kappa or delta");

  const int n = sc.n();
  const EffectiveCouplings e = effective_couplings(sc, k);
  const double d0 = pole.detuning_0;
  const double half_g0 = 0.5 * sc.material.gamma_0;
  const double abs2 = std::norm(pole.delta);
  const double g = sc.couplings.g;

  MediatedParams p;
  p.v_mat.resize(2, n);
  p.u_mat.resize(2, n);
  for (int j = 0; j < 2; ++j)
    for (int m = 0; m < n; ++m) {
      const cplx gt = e.g_tilde(j, m);
      p.v_mat(j, m) = d0 * gt.real() - half_g0 * gt.imag();
      p.u_mat(j, m) = d0 * gt.imag() + half_g0 * gt.real();
    }

  // Column of the MNP each qubit touches.
  const std::array<int, 2> end{0, n - 1};
  for (int i = 0; i < 2; ++i) {
    const int m = end[i];
    p.delta_omega_tilde[i] = pole.detuning_i[i] - g * p.v_mat(i, m) / abs2;
    p.gamma_tilde[i] = sc.qd.gamma[i] + 2.0 * g * p.u_mat(i, m) / abs2;
  }

  const cplx lam1 = sc.drive.lambda[0];
  const cplx lam2_unphased = sc.drive.lambda[1] * std::polar(1.0, -sc.drive.phi);
  const cplx enh1 = g * cplx(0.0, 1.0) * e.omega_tilde(end[0]) / pole.delta;
  const cplx enh2 = g * cplx(0.0, 1.0) * e.omega_tilde(end[1]) / pole.delta;
  p.lambda_tilde[0] = lam1 + enh1;
  if (sc.phase_scope == PhaseScope::effective)
    p.lambda_tilde[1] = (lam2_unphased + enh2) * std::polar(1.0, sc.drive.phi);
  else
    p.lambda_tilde[1] = sc.drive.lambda[1] + enh2;

  p.g_coh = g * p.v_mat(1, end[0]) / abs2;
  p.g_coh_21 = g * p.v_mat(0, end[1]) / abs2;
  p.gamma_diss = 2.0 * g * p.u_mat(1, end[0]) / abs2;
  p.gamma_diss_21 = 2.0 * g * p.u_mat(0, end[1]) / abs2;
  return p;
}

inline MediatedParams mediated_params(const Scenario& sc) { return mediated_params(sc, build_coupling_matrix(sc)); }

/// Collective (Dicke-basis) view of the effective two-qubit model.
///
/// e_plus / e_minus are the diagonal energies of |s> and |a> obtained by
/// rotating the effective Hamiltonian, whose exchange term is
/// -G12 (s1^+ s2 + s2^+ s1): e_plus = delta_plus - G12, e_minus = delta_plus + G12.
struct DickeParams {
  double e_plus = 0.0;
  double e_minus = 0.0;
  double delta_plus = 0.0;   // mean effective detuning
  double delta_minus = 0.0;  // half difference; couples |s> and |a>
  cplx omega_s;
  cplx omega_a;
  double gamma_tilde = 0.0;  // mean effective emission rate
  double gamma_s = 0.0;
  double gamma_a = 0.0;
};

inline DickeParams dicke_params(const MediatedParams& mp) {
  DickeParams d;
  d.delta_plus = 0.5 * (mp.delta_omega_tilde[0] + mp.delta_omega_tilde[1]);
  d.delta_minus = 0.5 * (mp.delta_omega_tilde[0] - mp.delta_omega_tilde[1]);
  d.e_plus = d.delta_plus - mp.g_coh;
  d.e_minus = d.delta_plus + mp.g_coh;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  d.omega_s = (mp.lambda_tilde[0] + mp.lambda_tilde[1]) * inv_sqrt2;
  d.omega_a = (mp.lambda_tilde[0] - mp.lambda_tilde[1]) * inv_sqrt2;
  d.gamma_tilde = 0.5 * (mp.gamma_tilde[0] + mp.gamma_tilde[1]);
  d.gamma_s = d.gamma_tilde + mp.gamma_diss;
  d.gamma_a = d.gamma_tilde - mp.gamma_diss;
  return d;
}

struct SpectrumRow {
  double omega = 0.0;
  double gamma_s = 0.0;
  double gamma_a = 0.0;
  double gamma_tilde = 0.0;
  double g_coh = 0.0;
  double gamma_diss = 0.0;
};

/// Re-targets a scenario to driving frequency `omega`; intensity, phase and
/// qubit transition frequencies are kept.
inline Scenario at_frequency(const Scenario& sc, double omega) {
  Scenario out = sc;
  out.drive.omega = omega;
  return out;
}

inline std::vector<SpectrumRow> decay_spectrum(const std::vector<double>& omega_grid, const Scenario& sc) {
  if (omega_grid.empty()) throw ContractViolation("decay_spectrum: empty frequency grid");
  for (std::size_t k = 1; k < omega_grid.size(); ++k)
    if (!(omega_grid[k] > omega_grid[k - 1]))
      throw ContractViolation("decay_spectrum: frequency grid must be strictly increasing");
  std::vector<SpectrumRow> rows;
  rows.reserve(omega_grid.size());
  for (double w : omega_grid) {
    const MediatedParams mp = mediated_params(at_frequency(sc, w));
    const DickeParams d = dicke_params(mp);
    rows.push_back({w, d.gamma_s, d.gamma_a, d.gamma_tilde, mp.g_coh, mp.gamma_diss});
  }
  return rows;
}

}  // namespace nanoarray
