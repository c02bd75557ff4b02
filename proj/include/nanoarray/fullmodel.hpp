#pragma once

// Brute-force reference: two qubits and n truncated plasmon oscillators in
// the full Hilbert space, stationary state of the vectorised Lindblad
// equation, then a partial trace back to the qubits.
//
// Tensor ordering is qubit1 (x) qubit2 (x) MNP_1 (x) ... (x) MNP_n, slowest
// index first. Local qubit basis is (|g>, |e>); local oscillator basis is the
// Fock basis |0>..|N-1>. Density matrices are vectorised column by column,
// so vec(A X B) = (B^T (x) A) vec(X).

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "nanoarray/effective.hpp"
#include "nanoarray/errors.hpp"
#include "nanoarray/numerics/sparse.hpp"
#include "nanoarray/steadystate.hpp"

namespace nanoarray {

using numerics::SparseC;

struct FockConfig {
  int n = 1;
  int fock_levels = 4;
  std::uint64_t memory_budget = 8ull << 30;  // bytes
  Eigen::Index direct_limit = 2048;          // superoperator unknowns solved by sparse LU
  double tolerance = 1e-8;

  std::uint64_t mnp_dim() const {
    std::uint64_t d = 1;
    for (int k = 0; k < n; ++k) d *= static_cast<std::uint64_t>(fock_levels);
    return d;
  }
  std::uint64_t dim() const { return 4 * mnp_dim(); }

  void validate() const {
    if (n < 1) throw DomainError("FockConfig: n must be >= 1");
    if (fock_levels < 2) throw DomainError("FockConfig: need at least two Fock levels per MNP");
  }
};

struct CompositeOperator {
  SparseC matrix;
  std::string label;
};

struct CollapseOperator {
  CompositeOperator op;
  double rate = 0.0;  // rad/s; the jump operator is sqrt(rate) * op
};

struct FullSystem {
  FockConfig config;
  CompositeOperator hamiltonian;
  std::vector<CompositeOperator> lowering;      // sigma_1, sigma_2
  std::vector<CompositeOperator> annihilation;  // a_1..a_n
  std::vector<CollapseOperator> collapse;
};

namespace fock {

inline SparseC qubit_lowering() {
  SparseC s(2, 2);
  s.insert(0, 1) = 1.0;
  return s;
}

inline SparseC destroy(int levels) {
  SparseC a(levels, levels);
  for (int k = 1; k < levels; ++k) a.insert(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

/// Embeds `local` at tensor slot `slot` (0, 1: qubits; 2..n+1: MNPs).
inline SparseC embed(const SparseC& local, int slot, const FockConfig& cfg) {
  SparseC out;
  bool first = true;
  for (int k = 0; k < cfg.n + 2; ++k) {
    const Eigen::Index d = k < 2 ? 2 : cfg.fock_levels;
    const SparseC factor = k == slot ? local : numerics::sparse_identity(d);
    out = first ? factor : numerics::kron(out, factor);
    first = false;
  }
  out.makeCompressed();
  return out;
}

}  // namespace fock

/// Rough peak memory of building and factorising the superoperator.
inline std::uint64_t estimate_superoperator_bytes(const FockConfig& cfg, std::uint64_t hamiltonian_nnz,
                                                  std::uint64_t collapse_nnz) {
  const std::uint64_t d = cfg.dim();
  const std::uint64_t nnz = 2 * d * hamiltonian_nnz + 3 * d * collapse_nnz;
  const std::uint64_t per_entry = 16 + 4 + 24;  // value, index, assembly triplet
  const bool direct = d * d <= static_cast<std::uint64_t>(cfg.direct_limit);
  const std::uint64_t fill = direct ? 30 : 20;
  return nnz * per_entry * fill + 8 * d * d * 16;
}

inline FullSystem build_full_system(const Scenario& sc, const FockConfig& cfg) {
  cfg.validate();
  if (cfg.n != sc.n()) throw ContractViolation("build_full_system: FockConfig.n does not match the geometry");
  // The dense estimate d^2 alone must fit before anything is allocated.
  if (cfg.dim() * cfg.dim() * 16 > cfg.memory_budget) {
    std::ostringstream os;
    os << "build_full_system: superoperator side " << cfg.dim() * cfg.dim() << " exceeds the memory budget of "
       << cfg.memory_budget << " bytes";
    throw ResourceLimitError(os.str());
  }

  const ComplexPole pole = make_pole(sc);
  FullSystem fs;
  fs.config = cfg;
  for (int i = 0; i < 2; ++i)
    fs.lowering.push_back({fock::embed(fock::qubit_lowering(), i, cfg), "sigma_" + std::to_string(i + 1)});
  for (int m = 0; m < cfg.n; ++m)
    fs.annihilation.push_back({fock::embed(fock::destroy(cfg.fock_levels), 2 + m, cfg), "a_" + std::to_string(m + 1)});

  const Eigen::VectorXcd om = mnp_drive_vector(sc);
  const double g = sc.couplings.g;
  const double kappa = sc.couplings.kappa;

  SparseC h(cfg.dim(), cfg.dim());
  for (int i = 0; i < 2; ++i) {
    const SparseC& s = fs.lowering[i].matrix;
    const SparseC sd = SparseC(s.adjoint());
    h += pole.detuning_i[i] * (sd * s);
    h -= sc.drive.lambda[i] * sd + std::conj(sc.drive.lambda[i]) * s;
  }
  for (int m = 0; m < cfg.n; ++m) {
    const SparseC& a = fs.annihilation[m].matrix;
    const SparseC ad = SparseC(a.adjoint());
    h += pole.detuning_0 * (ad * a);
    h -= om(m) * ad + std::conj(om(m)) * a;
  }
  for (int m = 0; m + 1 < cfg.n; ++m) {
    const SparseC& a = fs.annihilation[m].matrix;
    const SparseC& b = fs.annihilation[m + 1].matrix;
    h -= kappa * (SparseC(a.adjoint()) * b + a * SparseC(b.adjoint()));
  }
  const std::array<int, 2> end{0, cfg.n - 1};
  for (int i = 0; i < 2; ++i) {
    const SparseC& s = fs.lowering[i].matrix;
    const SparseC& a = fs.annihilation[end[i]].matrix;
    h -= g * (SparseC(s.adjoint()) * a + s * SparseC(a.adjoint()));
  }
  h.prune(cplx(0.0, 0.0));
  h.makeCompressed();
  fs.hamiltonian = {h, "H"};

  for (int i = 0; i < 2; ++i) fs.collapse.push_back({fs.lowering[i], sc.qd.gamma[i]});
  for (int m = 0; m < cfg.n; ++m) fs.collapse.push_back({fs.annihilation[m], sc.material.gamma_0});

  std::uint64_t cnnz = 0;
  for (const auto& c : fs.collapse) cnnz += static_cast<std::uint64_t>(c.op.matrix.nonZeros());
  const std::uint64_t bytes = estimate_superoperator_bytes(cfg, static_cast<std::uint64_t>(h.nonZeros()), cnnz);
  if (bytes > cfg.memory_budget) {
    std::ostringstream os;
    os << "build_full_system: estimated " << bytes << " bytes for n = " << cfg.n << ", N = " << cfg.fock_levels
       << " (dim " << cfg.dim() << ") exceeds the budget of " << cfg.memory_budget << " bytes";
    throw ResourceLimitError(os.str());
  }
  return fs;
}

struct SuperOperator {
  SparseC matrix;           // generator divided by rate_scale
  double rate_scale = 1.0;  // rad/s
  Eigen::Index dim = 0;     // Hilbert-space dimension
};

inline SuperOperator build_superoperator(const FullSystem& fs) {
  const SparseC& h = fs.hamiltonian.matrix;
  const Eigen::Index d = h.rows();
  const SparseC id = numerics::sparse_identity(d);

  double scale = 0.0;
  for (const auto& c : fs.collapse) scale = std::max(scale, c.rate);
  if (!(scale > 0.0)) scale = 1.0;

  const SparseC ht = SparseC(h.transpose());
  SparseC l = cplx(0.0, -1.0 / scale) * (numerics::kron(id, h) - numerics::kron(ht, id));
  for (const auto& c : fs.collapse) {
    if (c.rate == 0.0) continue;
    const SparseC& op = c.op.matrix;
    const SparseC opd = SparseC(op.adjoint());
    const SparseC n = opd * op;
    const SparseC nt = SparseC(n.transpose());
    const SparseC opc = SparseC(op.conjugate());
    const double r = c.rate / scale;
    l += r * numerics::kron(opc, op);
    l -= (0.5 * r) * (numerics::kron(id, n) + numerics::kron(nt, id));
  }
  l.prune(cplx(0.0, 0.0));
  l.makeCompressed();
  return {l, scale, d};
}

struct FullState {
  Eigen::MatrixXcd rho;
  numerics::SparseSolveReport report;
};

/// Stationary state with the rho_00 equation replaced by tr(rho) = 1.
inline FullState steady_state_full(const SuperOperator& sup, double tolerance = 1e-8,
                                   Eigen::Index direct_limit = 2048) {
  const Eigen::Index d = sup.dim;
  const Eigen::Index nn = d * d;
  if (sup.matrix.rows() != nn || sup.matrix.cols() != nn)
    throw ContractViolation("steady_state_full: superoperator shape does not match its dimension");

  std::vector<numerics::Triplet> trips;
  trips.reserve(static_cast<std::size_t>(sup.matrix.nonZeros()) + static_cast<std::size_t>(d));
  for (Eigen::Index k = 0; k < sup.matrix.outerSize(); ++k)
    for (SparseC::InnerIterator it(sup.matrix, k); it; ++it)
      if (it.row() != 0) trips.emplace_back(it.row(), it.col(), it.value());
  for (Eigen::Index k = 0; k < d; ++k) trips.emplace_back(0, k * d + k, cplx(1.0, 0.0));
  SparseC a(nn, nn);
  a.setFromTriplets(trips.begin(), trips.end());
  a.makeCompressed();

  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(nn);
  b(0) = 1.0;
  FullState st;
  const Eigen::VectorXcd x = numerics::sparse_solve(a, b, tolerance, direct_limit, &st.report);
  st.rho = Eigen::Map<const Eigen::MatrixXcd>(x.data(), d, d);
  st.rho = 0.5 * (st.rho + st.rho.adjoint()).eval();
  return st;
}

inline FullState steady_state_full(const FullSystem& fs) {
  return steady_state_full(build_superoperator(fs), fs.config.tolerance, fs.config.direct_limit);
}

/// Partial trace over every MNP, returned in the computational basis
/// |g1g2>, |e1g2>, |g1e2>, |e1e2>.
inline TwoQubitState reduce_to_qubits(const Eigen::MatrixXcd& rho_full, double positivity_tolerance = 1e-9) {
  const Eigen::Index d = rho_full.rows();
  if (d % 4 != 0 || rho_full.cols() != d) throw ContractViolation("reduce_to_qubits: dimension must be 4 * N^n");
  const Eigen::Index env = d / 4;
  // Kronecker index 2*q1 + q2 -> computational index.
  constexpr int to_comp[4] = {0, 2, 1, 3};
  TwoQubitState st;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      cplx acc = 0.0;
      for (Eigen::Index e = 0; e < env; ++e) acc += rho_full(p * env + e, q * env + e);
      st.rho(to_comp[p], to_comp[q]) = acc;
    }
  st.rho = 0.5 * (st.rho + st.rho.adjoint()).eval();
  detail::enforce_positivity(st, positivity_tolerance);
  return st;
}

/// <a_m^dagger a_m> in a full-space state.
inline double mode_occupation(const FullSystem& fs, const Eigen::MatrixXcd& rho_full, int m) {
  const SparseC& a = fs.annihilation.at(m).matrix;
  const SparseC num = SparseC(a.adjoint()) * a;
  cplx acc = 0.0;
  for (Eigen::Index k = 0; k < num.outerSize(); ++k)
    for (SparseC::InnerIterator it(num, k); it; ++it) acc += it.value() * rho_full(it.col(), it.row());
  return acc.real();
}

struct ValidationRow {
  double intensity = 0.0;  // W/m^2
  double c_effective = 0.0;
  double c_full = 0.0;
  double abs_diff = 0.0;
};

struct ValidationTable {
  int n = 0;
  int fock_levels = 0;
  std::vector<ValidationRow> rows;
  double max_abs_diff = 0.0;
};

/// Re-drives `base` at `intensity` (W/m^2) keeping frequency and phase.
inline Scenario with_intensity(const Scenario& base, double intensity) {
  Scenario sc = base;
  sc.drive = drive_rates(intensity, base.drive.omega, base.material, base.qd, base.drive.phi);
  return sc;
}

inline double effective_concurrence(const Scenario& sc) { return concurrence(steady_state(mediated_params(sc))); }

inline double full_concurrence(const Scenario& sc, const FockConfig& cfg) {
  const FullSystem fs = build_full_system(sc, cfg);
  return concurrence(reduce_to_qubits(steady_state_full(fs).rho));
}

inline ValidationTable validate_against_effective(const Scenario& base, const FockConfig& cfg,
                                                  const std::vector<double>& intensities) {
  if (intensities.empty()) throw ContractViolation("validate_against_effective: empty intensity grid");
  ValidationTable t;
  t.n = cfg.n;
  t.fock_levels = cfg.fock_levels;
  for (double i : intensities) {
    const Scenario sc = with_intensity(base, i);
    ValidationRow row;
    row.intensity = i;
    row.c_effective = effective_concurrence(sc);
    row.c_full = full_concurrence(sc, cfg);
    row.abs_diff = std::abs(row.c_full - row.c_effective);
    t.max_abs_diff = std::max(t.max_abs_diff, row.abs_diff);
    t.rows.push_back(row);
  }
  return t;
}

}  // namespace nanoarray
