#pragma once

// Stationary state of the effective two-qubit master equation and its
// entanglement.
//
// Computational basis: |0> = |g1 g2>, |1> = |e1 g2>, |2> = |g1 e2>,
// |3> = |e1 e2>. The stationary state is found from a 16 x 16 real linear
// system over x = [rho_ii (4), Re rho_ij (6), Im rho_ij (6)] with i < j in
// lexicographic order, where the rho_00 equation is replaced by tr(rho) = 1.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include "nanoarray/effective.hpp"
#include "nanoarray/errors.hpp"

namespace nanoarray {

using Matrix4c = Eigen::Matrix<cplx, 4, 4>;
using Matrix16 = Eigen::Matrix<double, 16, 16>;
using Vector16 = Eigen::Matrix<double, 16, 1>;

namespace basis {

/// Lowering operator of qubit 1 or 2 (index 0 or 1) in the computational basis.
inline Matrix4c lowering(int qubit) {
  Matrix4c s = Matrix4c::Zero();
  if (qubit == 0) {
    s(0, 1) = 1.0;  // |e1 g2> -> |g1 g2>
    s(2, 3) = 1.0;  // |e1 e2> -> |g1 e2>
  } else {
    s(0, 2) = 1.0;  // |g1 e2> -> |g1 g2>
    s(1, 3) = 1.0;  // |e1 e2> -> |e1 g2>
  }
  return s;
}

/// sigma_y (x) sigma_y.
inline Matrix4c spin_flip() {
  Matrix4c y = Matrix4c::Zero();
  y(0, 3) = -1.0;
  y(3, 0) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  return y;
}

/// Columns are |g>, |s>, |a>, |e> expressed in the computational basis.
inline Matrix4c dicke_unitary() {
  const double h = 1.0 / std::sqrt(2.0);
  Matrix4c u = Matrix4c::Zero();
  u(0, 0) = 1.0;
  u(1, 1) = h;
  u(2, 1) = h;
  u(1, 2) = h;
  u(2, 2) = -h;
  u(3, 3) = 1.0;
  return u;
}

/// Qubit exchange |1> <-> |2>.
inline Matrix4c swap() {
  Matrix4c p = Matrix4c::Zero();
  p(0, 0) = p(3, 3) = 1.0;
  p(1, 2) = p(2, 1) = 1.0;
  return p;
}

inline constexpr std::array<std::pair<int, int>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Hermitian matrix with coordinates x.
inline Matrix4c from_coordinates(const Vector16& x) {
  Matrix4c rho = Matrix4c::Zero();
  for (int i = 0; i < 4; ++i) rho(i, i) = x(i);
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = pairs[k];
    rho(i, j) = cplx(x(4 + k), x(10 + k));
    rho(j, i) = std::conj(rho(i, j));
  }
  return rho;
}

/// Coordinates of a matrix's Hermitian part.
inline Vector16 to_coordinates(const Matrix4c& m) {
  Vector16 x;
  for (int i = 0; i < 4; ++i) x(i) = m(i, i).real();
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = pairs[k];
    x(4 + k) = m(i, j).real();
    x(10 + k) = m(i, j).imag();
  }
  return x;
}

}  // namespace basis

struct SolveDiagnostics {
  double rcond = 0.0;            // reciprocal condition estimate of the trace-constrained system
  double residual = 0.0;         // ||L x|| / ||L|| over all 16 stationarity equations
  double min_eigenvalue = 0.0;   // before clipping
  bool clipped = false;
  std::vector<std::string> warnings;
};

struct TwoQubitState {
  Matrix4c rho = Matrix4c::Zero();
  SolveDiagnostics diagnostics;

  static TwoQubitState pure(const Eigen::Matrix<cplx, 4, 1>& psi) {
    TwoQubitState s;
    const Eigen::Matrix<cplx, 4, 1> v = psi / psi.norm();
    s.rho = v * v.adjoint();
    return s;
  }
  static TwoQubitState from_matrix(const Matrix4c& rho) {
    TwoQubitState s;
    s.rho = rho;
    return s;
  }
};

/// Generator of the effective dynamics in the real coordinates, with the
/// rho_00 row replaced by the trace constraint. Rates are divided by
/// `rate_scale` so the system is O(1).
struct EvolutionMatrix {
  Matrix16 generator = Matrix16::Zero();  // all 16 stationarity rows, scaled
  Matrix16 m = Matrix16::Zero();          // trace row substituted
  Vector16 b = Vector16::Unit(0);
  double rate_scale = 1.0;                // rad/s per unit
};

/// Effective Hamiltonian (hbar = 1, rad/s).
inline Matrix4c effective_hamiltonian(const MediatedParams& mp) {
  Matrix4c h = Matrix4c::Zero();
  const Matrix4c s1 = basis::lowering(0), s2 = basis::lowering(1);
  const std::array<Matrix4c, 2> s{s1, s2};
  for (int i = 0; i < 2; ++i) {
    h += mp.delta_omega_tilde[i] * s[i].adjoint() * s[i];
    h -= mp.lambda_tilde[i] * s[i].adjoint() + std::conj(mp.lambda_tilde[i]) * s[i];
  }
  h -= mp.g_coh * s1.adjoint() * s2 + mp.g_coh_21 * s2.adjoint() * s1;
  return h;
}

/// Relaxation-rate matrix: gamma~_i on the diagonal, Gamma~_ij off it.
inline Eigen::Matrix2d dissipation_matrix(const MediatedParams& mp) {
  Eigen::Matrix2d g;
  g << mp.gamma_tilde[0], mp.gamma_diss, mp.gamma_diss_21, mp.gamma_tilde[1];
  return g;
}

/// Applies the effective Liouvillian (rad/s) to rho.
inline Matrix4c apply_liouvillian(const Matrix4c& h, const Eigen::Matrix2d& gam, const Matrix4c& rho) {
  const std::array<Matrix4c, 2> s{basis::lowering(0), basis::lowering(1)};
  Matrix4c out = cplx(0.0, -1.0) * (h * rho - rho * h);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (gam(i, j) == 0.0) continue;
      const Matrix4c sij = s[i].adjoint() * s[j];
      out += 0.5 * gam(i, j) * (2.0 * s[j] * rho * s[i].adjoint() - sij * rho - rho * sij);
    }
  return out;
}

inline EvolutionMatrix build_effective_generator(const MediatedParams& mp) {
  for (double gi : mp.gamma_tilde)
    if (!std::isfinite(gi)) throw NumericalError("build_effective_generator: non-finite effective emission rate");

  const Matrix4c h = effective_hamiltonian(mp);
  const Eigen::Matrix2d gam = dissipation_matrix(mp);

  EvolutionMatrix em;
  double scale = std::max({std::abs(gam(0, 0)), std::abs(gam(1, 1)), std::abs(mp.gamma_diss)});
  scale = std::max(scale, h.cwiseAbs().maxCoeff());
  em.rate_scale = scale > 0.0 ? scale : 1.0;

  for (int k = 0; k < 16; ++k) {
    Vector16 e = Vector16::Unit(k);
    const Matrix4c lb = apply_liouvillian(h, gam, basis::from_coordinates(e));
    em.generator.col(k) = basis::to_coordinates(lb) / em.rate_scale;
  }
  em.m = em.generator;
  em.m.row(0).setZero();
  em.m.row(0).head<4>().setOnes();
  em.b = Vector16::Unit(0);
  return em;
}

namespace detail {

inline void enforce_positivity(TwoQubitState& st, double tolerance) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(st.rho);
  const Eigen::Vector4d lam = es.eigenvalues();
  st.diagnostics.min_eigenvalue = lam.minCoeff();
  if (st.diagnostics.min_eigenvalue >= 0.0) return;
  if (st.diagnostics.min_eigenvalue < -tolerance) {
    std::ostringstream os;
    os << "steady state lost positivity: smallest eigenvalue " << st.diagnostics.min_eigenvalue;
    throw NumericalError(os.str());
  }
  const Eigen::Vector4d clipped = lam.cwiseMax(0.0);
  st.rho = es.eigenvectors() * clipped.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
  st.rho /= st.rho.trace().real();
  st.diagnostics.clipped = true;
  std::ostringstream os;
  os << "clipped eigenvalue " << st.diagnostics.min_eigenvalue << " to 0";
  st.diagnostics.warnings.push_back(os.str());
}

}  // namespace detail

inline TwoQubitState solve_steady(const EvolutionMatrix& em, double positivity_tolerance = 1e-9) {
  Eigen::FullPivLU<Matrix16> lu(em.m);
  if (!lu.isInvertible()) {
    std::ostringstream os;
    os << "solve_steady: evolution matrix is singular (rank " << lu.rank() << " of 16, rate scale "
       << em.rate_scale << " rad/s)";
    throw NumericalError(os.str());
  }
  TwoQubitState st;
  st.diagnostics.rcond = lu.rcond();
  if (st.diagnostics.rcond < 1e-12) {
    std::ostringstream os;
    os << "ill-conditioned evolution matrix: rcond = " << st.diagnostics.rcond;
    st.diagnostics.warnings.push_back(os.str());
  }
  const Vector16 x = lu.solve(em.b);
  if (!x.allFinite()) throw NumericalError("solve_steady: non-finite solution");
  const double gnorm = em.generator.norm();
  st.diagnostics.residual = (em.generator * x).norm() / (gnorm > 0.0 ? gnorm : 1.0);
  st.rho = basis::from_coordinates(x);
  detail::enforce_positivity(st, positivity_tolerance);
  return st;
}

inline TwoQubitState steady_state(const MediatedParams& mp) { return solve_steady(build_effective_generator(mp)); }

/// rho (sigma_y x sigma_y) rho* (sigma_y x sigma_y).
inline Matrix4c wootters_product(const Matrix4c& rho) {
  const Matrix4c y = basis::spin_flip();
  return rho * y * rho.conjugate() * y;
}

/// Wootters concurrence. The lambda_i (square roots of the spectrum of
/// rho * rho~) are taken as singular values of W^T (sigma_y x sigma_y) W with
/// rho = W W^dagger. Unlike square-rooting eigenvalues, this keeps rank
/// deficient states accurate to rounding.
inline double concurrence(const TwoQubitState& st) {
  const Matrix4c herm = 0.5 * (st.rho + st.rho.adjoint());
  const Eigen::SelfAdjointEigenSolver<Matrix4c> es(herm);
  if (es.info() != Eigen::Success) throw NumericalError("concurrence: eigendecomposition failed");
  const Eigen::Vector4d w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Matrix4c factor = es.eigenvectors() * w.asDiagonal();
  const Matrix4c m = factor.transpose() * basis::spin_flip() * factor;
  const Eigen::Vector4d lam = Eigen::JacobiSVD<Matrix4c>(m).singularValues();  // descending
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

struct DickePopulations {
  double rho_gg = 0.0;
  double rho_ss = 0.0;
  double rho_aa = 0.0;
  double rho_ee = 0.0;
  cplx rho_sa;
};

inline Matrix4c to_dicke_basis(const Matrix4c& rho) {
  const Matrix4c u = basis::dicke_unitary();
  return u.adjoint() * rho * u;
}

inline DickePopulations dicke_populations(const TwoQubitState& st) {
  const Matrix4c d = to_dicke_basis(st.rho);
  return {d(0, 0).real(), d(1, 1).real(), d(2, 2).real(), d(3, 3).real(), d(1, 2)};
}

/// Closed-form concurrence of a state that is X-shaped in the Dicke basis.
inline double concurrence_x_approx(const DickePopulations& p) {
  const double diff = p.rho_ss - p.rho_aa;
  const double im = p.rho_sa.imag();
  const double gg_ee = std::max(p.rho_gg * p.rho_ee, 0.0);
  return std::max(0.0, std::sqrt(diff * diff + 4.0 * im * im) - 2.0 * std::sqrt(gg_ee));
}

}  // namespace nanoarray
