#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "nanoarray/errors.hpp"

namespace nanoarray::numerics {

/// All eigenvalues of a general complex square matrix (complex Schur / QR).
inline std::vector<std::complex<double>> eig_general(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw ContractViolation("eig_general: matrix must be square");
  if (!m.allFinite()) throw DomainError("eig_general: non-finite entries");
  if (m.rows() == 0) return {};
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NumericalError("eig_general: QR iteration did not converge");
  const Eigen::VectorXcd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace nanoarray::numerics
