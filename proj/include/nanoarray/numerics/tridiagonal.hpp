#pragma once

// Explicit inverse of a complex tridiagonal matrix through the forward and
// backward continuant recurrences (Usmani's formula). O(n) recurrences plus
// O(n^2) to fill the dense inverse.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <sstream>
#include <vector>

#include "nanoarray/errors.hpp"

namespace nanoarray::numerics {

using cplx = std::complex<double>;

/// Tridiagonal matrix stored by its three bands. `lower[k]` is A(k+1,k) and
/// `upper[k]` is A(k,k+1).
struct Tridiagonal {
  std::vector<cplx> diag;
  std::vector<cplx> lower;
  std::vector<cplx> upper;

  int size() const { return static_cast<int>(diag.size()); }

  Eigen::MatrixXcd dense() const {
    const int n = size();
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) a(k, k) = diag[k];
    for (int k = 0; k + 1 < n; ++k) {
      a(k + 1, k) = lower[k];
      a(k, k + 1) = upper[k];
    }
    return a;
  }
};

/// Forward continuants theta_0..theta_n; theta_n is det(A).
inline std::vector<cplx> leading_continuants(const Tridiagonal& t) {
  const int n = t.size();
  std::vector<cplx> theta(n + 1);
  theta[0] = 1.0;
  if (n == 0) return theta;
  theta[1] = t.diag[0];
  for (int k = 2; k <= n; ++k)
    theta[k] = t.diag[k - 1] * theta[k - 1] - t.upper[k - 2] * t.lower[k - 2] * theta[k - 2];
  return theta;
}

inline cplx determinant(const Tridiagonal& t) { return leading_continuants(t).back(); }

/// Dense inverse. Throws NumericalError when the determinant vanishes or the
/// relative residual ||A K - I||_F / sqrt(n) exceeds `residual_tol`.
inline Eigen::MatrixXcd tridiagonal_inverse(const Tridiagonal& t, double residual_tol = 1e-8) {
  const int n = t.size();
  if (n < 1) throw ContractViolation("tridiagonal_inverse: empty matrix");
  if (static_cast<int>(t.lower.size()) != n - 1 || static_cast<int>(t.upper.size()) != n - 1)
    throw ContractViolation("tridiagonal_inverse: band sizes do not match the diagonal");

  const std::vector<cplx> theta = leading_continuants(t);
  // phi[k] (1-based) is the continuant of the trailing block k..n; phi[n+1] = 1.
  std::vector<cplx> phi(n + 2);
  phi[n + 1] = 1.0;
  phi[n] = t.diag[n - 1];
  for (int k = n - 1; k >= 1; --k)
    phi[k] = t.diag[k - 1] * phi[k + 1] - t.upper[k - 1] * t.lower[k - 1] * phi[k + 2];

  const cplx det = theta[n];
  if (det == cplx(0.0) || !std::isfinite(std::abs(det)))
    throw NumericalError("tridiagonal_inverse: matrix is singular (determinant is zero or not finite)");

  Eigen::MatrixXcd inv(n, n);
  for (int i = 1; i <= n; ++i) {
    inv(i - 1, i - 1) = theta[i - 1] * phi[i + 1] / det;
    cplx up = 1.0;  // product of upper bands b_i..b_{j-1}
    cplx lo = 1.0;  // product of lower bands c_i..c_{j-1}
    for (int j = i + 1; j <= n; ++j) {
      up *= -t.upper[j - 2];
      lo *= -t.lower[j - 2];
      inv(i - 1, j - 1) = up * theta[i - 1] * phi[j + 1] / det;
      inv(j - 1, i - 1) = lo * theta[i - 1] * phi[j + 1] / det;
    }
  }

  // Banded product A K costs O(n^2); a large residual means the continuants
  // lost all precision, which only happens close to singularity.
  double res2 = 0.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      cplx v = t.diag[i] * inv(i, j);
      if (i > 0) v += t.lower[i - 1] * inv(i - 1, j);
      if (i + 1 < n) v += t.upper[i] * inv(i + 1, j);
      if (i == j) v -= 1.0;
      res2 += std::norm(v);
    }
  const double residual = std::sqrt(res2 / n);
  if (!(residual <= residual_tol)) {
    std::ostringstream os;
    os << "tridiagonal_inverse: matrix is singular to working precision (residual " << residual << ", n = " << n
       << ")";
    throw NumericalError(os.str());
  }
  return inv;
}

}  // namespace nanoarray::numerics
