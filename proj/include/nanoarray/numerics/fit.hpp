#pragma once

// Small least-squares fits: exponential decay C = C0 exp(-tau x) (fitted in
// log space) and a quadratic a0 + a1 x + a2 x^2.

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "nanoarray/errors.hpp"

namespace nanoarray::numerics {

enum class FitModel { exponential, quadratic };

inline const char* to_string(FitModel m) { return m == FitModel::exponential ? "exponential" : "quadratic"; }

struct FitResult {
  FitModel model = FitModel::quadratic;
  std::vector<double> coefficients;  // exponential: {C0, tau}; quadratic: {a0, a1, a2}
  double rms_residual = 0.0;         // log domain for exponential fits

  double operator()(double x) const {
    if (model == FitModel::exponential) return coefficients[0] * std::exp(-coefficients[1] * x);
    return coefficients[0] + x * (coefficients[1] + x * coefficients[2]);
  }
};

using Point = std::pair<double, double>;

namespace detail {

inline Eigen::VectorXd solve_least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& rhs,
                                           const char* who) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-12);
  if (qr.rank() < design.cols()) throw NumericalError(std::string(who) + ": rank-deficient design matrix");
  return qr.solve(rhs);
}

inline double rms(const Eigen::VectorXd& r) { return r.size() ? std::sqrt(r.squaredNorm() / r.size()) : 0.0; }

}  // namespace detail

inline FitResult fit_exponential_decay(const std::vector<Point>& points) {
  if (points.size() < 2) throw ContractViolation("fit_exponential_decay: need at least two points");
  const int m = static_cast<int>(points.size());
  Eigen::MatrixXd design(m, 2);
  Eigen::VectorXd rhs(m);
  for (int k = 0; k < m; ++k) {
    const auto [x, y] = points[k];
    if (!(y > 0.0)) throw DomainError("fit_exponential_decay: ordinates must be positive");
    design(k, 0) = 1.0;
    design(k, 1) = -x;
    rhs(k) = std::log(y);
  }
  const Eigen::VectorXd beta = detail::solve_least_squares(design, rhs, "fit_exponential_decay");
  FitResult f;
  f.model = FitModel::exponential;
  f.coefficients = {std::exp(beta(0)), beta(1)};
  f.rms_residual = detail::rms(design * beta - rhs);
  return f;
}

inline FitResult fit_quadratic(const std::vector<Point>& points) {
  if (points.size() < 3) throw ContractViolation("fit_quadratic: need at least three points");
  const int m = static_cast<int>(points.size());
  // Centre and scale the abscissa so the normal problem stays well conditioned
  // for data given in metres or micrometres alike.
  double lo = points.front().first, hi = lo;
  for (const auto& p : points) {
    lo = std::min(lo, p.first);
    hi = std::max(hi, p.first);
  }
  const double mid = 0.5 * (lo + hi);
  const double half = hi > lo ? 0.5 * (hi - lo) : 1.0;
  Eigen::MatrixXd design(m, 3);
  Eigen::VectorXd rhs(m);
  for (int k = 0; k < m; ++k) {
    const double t = (points[k].first - mid) / half;
    design(k, 0) = 1.0;
    design(k, 1) = t;
    design(k, 2) = t * t;
    rhs(k) = points[k].second;
  }
  const Eigen::VectorXd c = detail::solve_least_squares(design, rhs, "fit_quadratic");
  // Back to coefficients of the raw abscissa.
  const double a2 = c(2) / (half * half);
  const double a1 = c(1) / half - 2.0 * a2 * mid;
  const double a0 = c(0) - c(1) * mid / half + a2 * mid * mid;
  FitResult f;
  f.model = FitModel::quadratic;
  f.coefficients = {a0, a1, a2};
  f.rms_residual = detail::rms(design * c - rhs);
  return f;
}

}  // namespace nanoarray::numerics
