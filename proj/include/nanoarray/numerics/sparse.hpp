#pragma once

// Sparse complex kernels for composite Hilbert spaces: Kronecker assembly and
// the square linear solve used for superoperator steady states.

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <complex>
#include <initializer_list>
#include <sstream>
#include <vector>

#include "nanoarray/errors.hpp"

namespace nanoarray::numerics {

using SparseC = Eigen::SparseMatrix<std::complex<double>, Eigen::ColMajor>;
using Triplet = Eigen::Triplet<std::complex<double>>;

inline SparseC sparse_identity(Eigen::Index n) {
  SparseC id(n, n);
  id.setIdentity();
  return id;
}

/// A (x) B with the left factor as the slow index.
inline SparseC kron(const SparseC& a, const SparseC& b) {
  SparseC out(a.rows() * b.rows(), a.cols() * b.cols());
  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(a.nonZeros()) * static_cast<std::size_t>(b.nonZeros()));
  for (Eigen::Index ka = 0; ka < a.outerSize(); ++ka)
    for (SparseC::InnerIterator ia(a, ka); ia; ++ia)
      for (Eigen::Index kb = 0; kb < b.outerSize(); ++kb)
        for (SparseC::InnerIterator ib(b, kb); ib; ++ib)
          trips.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                             ia.value() * ib.value());
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

inline SparseC kron(std::initializer_list<SparseC> factors) {
  auto it = factors.begin();
  SparseC out = *it;
  for (++it; it != factors.end(); ++it) out = kron(out, *it);
  return out;
}

enum class SparseBackend { direct, iterative };

struct SparseSolveReport {
  SparseBackend backend = SparseBackend::direct;
  double relative_residual = 0.0;
  int iterations = 0;
};

/// Solves A x = b. Direct sparse LU up to `direct_limit` unknowns, otherwise
/// BiCGSTAB with an incomplete-LU preconditioner. Throws NumericalError if the
/// relative residual misses `tolerance`.
inline Eigen::VectorXcd sparse_solve(const SparseC& a, const Eigen::VectorXcd& b, double tolerance,
                                     Eigen::Index direct_limit, SparseSolveReport* report = nullptr) {
  if (a.rows() != a.cols() || a.rows() != b.size()) throw ContractViolation("sparse_solve: shape mismatch");
  SparseSolveReport rep;
  Eigen::VectorXcd x;
  if (a.rows() <= direct_limit) {
    rep.backend = SparseBackend::direct;
    Eigen::SparseLU<SparseC, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(a);
    if (lu.info() != Eigen::Success)
      throw NumericalError("sparse_solve: LU factorisation failed (" + lu.lastErrorMessage() + ")");
    x = lu.solve(b);
    if (lu.info() != Eigen::Success) throw NumericalError("sparse_solve: LU back-substitution failed");
  } else {
    rep.backend = SparseBackend::iterative;
    // A loose incomplete LU first; a denser one if BiCGSTAB stalls.
    const std::pair<double, int> presets[] = {{1e-3, 10}, {1e-5, 20}};
    for (const auto& [droptol, fill] : presets) {
      Eigen::BiCGSTAB<SparseC, Eigen::IncompleteLUT<std::complex<double>>> solver;
      solver.preconditioner().setDroptol(droptol);
      solver.preconditioner().setFillfactor(fill);
      solver.setTolerance(tolerance * 0.1);
      solver.setMaxIterations(5000);
      solver.compute(a);
      if (solver.info() != Eigen::Success) continue;
      x = solver.solve(b);
      rep.iterations += static_cast<int>(solver.iterations());
      if (solver.info() == Eigen::Success && x.allFinite()) break;
    }
    if (x.size() != b.size()) throw NumericalError("sparse_solve: preconditioner setup failed");
  }
  const double bnorm = b.norm() > 0.0 ? b.norm() : 1.0;
  rep.relative_residual = (a * x - b).norm() / bnorm;
  if (report) *report = rep;
  if (!(rep.relative_residual <= tolerance) || !x.allFinite()) {
    std::ostringstream os;
    os << "sparse_solve: relative residual " << rep.relative_residual << " exceeds " << tolerance
       << (rep.backend == SparseBackend::direct ? " (direct LU)" : " (BiCGSTAB)") << ", unknowns = " << a.rows();
    throw NumericalError(os.str());
  }
  return x;
}

}  // namespace nanoarray::numerics
