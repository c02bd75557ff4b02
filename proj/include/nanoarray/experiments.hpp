#pragma once

// Named experiments behind the command-line front-end. Each runner returns
// typed rows; the csv helpers at the bottom turn them into tables.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <locale>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "nanoarray/config.hpp"
#include "nanoarray/effective.hpp"
#include "nanoarray/fullmodel.hpp"
#include "nanoarray/numerics/fit.hpp"
#include "nanoarray/plasmonics.hpp"
#include "nanoarray/steadystate.hpp"

namespace nanoarray {

/// Runs f(0..count-1) on up to `jobs` threads. f must only write to its own slot.
template <class F>
void parallel_for(std::size_t count, int jobs, F&& f) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) f(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          f(k);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

struct PhysicalSetup {
  MaterialSystem material;
  QdParams qd;  // transition frequencies filled per operating point
};

inline PhysicalSetup make_setup(const ExperimentConfig& cfg) {
  PhysicalSetup s;
  const DrudeMetal metal = DrudeMetal::from_ev(cfg.omega_p_ev, cfg.eps_inf, cfg.gamma_p_ev);
  s.material = derive_material(metal, HostMedium{cfg.eps_m}, units::nm_to_m(cfg.r_nm));
  if (cfg.radiative_damping == RadiativeDampingModel::matched)
    s.material = match_excitation_ratio(s.material, units::w_per_cm2_to_si(cfg.reference_intensity_w_cm2),
                                        cfg.excitation_ratio);
  s.qd.mu_qd = cfg.mu_qd_debye ? units::debye_to_cm(*cfg.mu_qd_debye) : qd_dipole_from_radius(units::nm_to_m(cfg.r0_nm));
  s.qd.gamma = {cfg.gamma_i, cfg.gamma_i};
  s.qd.omega = {s.material.omega_0, s.material.omega_0};
  s.qd.validate();
  return s;
}

inline ArrayGeometry geometry_for(const ExperimentConfig& cfg, int n) {
  return make_geometry(units::nm_to_m(cfg.r_nm), units::nm_to_m(cfg.r0_nm), units::nm_to_m(cfg.s_nm), n, cfg.s_z);
}

/// Inter-qubit surface gap d_qq - 2 r0 in micrometres.
inline double qubit_gap_um(const ExperimentConfig& cfg, int n) { return geometry_for(cfg, n).qubit_gap() * 1e6; }

/// Driving frequency for lspr / wavelength modes.
inline double drive_omega(const ExperimentConfig& cfg, const PhysicalSetup& setup) {
  switch (cfg.omega_mode) {
    case OmegaMode::lspr: return setup.material.omega_0;
    case OmegaMode::wavelength: return units::angular_frequency_of(units::nm_to_m(cfg.wavelength_nm));
    case OmegaMode::grid: break;
  }
  throw ConfigError("drive.omega_mode = grid names a frequency sweep, not a single driving frequency");
}

/// Mediated couplings at the LSPR with resonant qubits; independent of the drive.
inline MediatedParams resonant_couplings(const ExperimentConfig& cfg, const PhysicalSetup& setup, int n) {
  const ArrayGeometry geom = geometry_for(cfg, n);
  const DriveField drive = drive_rates(0.0, setup.material.omega_0, setup.material, setup.qd);
  return mediated_params(make_scenario(setup.material, geom, setup.qd, drive));
}

struct DriveScheme {
  DetuningMode detuning = DetuningMode::none;
  double phi = 0.0;
  int delta_sign = 0;  // +-1 restricts optimised detunings to that sign; 0 allows both
};

/// Per-n drive choice. Arrays dominated by coherent coupling get a symmetric
/// drive with detuning on the side of sign(G12); arrays dominated by
/// dissipative coupling are driven on resonance, in phase when Gamma12 < 0
/// and in antiphase otherwise; a single MNP uses antisymmetric detuning.
/// Explicit detuning_mode / phi settings override the automatic choice.
inline DriveScheme drive_scheme(const ExperimentConfig& cfg, const PhysicalSetup& setup, int n) {
  DriveScheme s;
  if (n == 1) {
    s.detuning = DetuningMode::antisymmetric;
  } else {
    const MediatedParams mp = resonant_couplings(cfg, setup, n);
    if (std::abs(mp.g_coh) > std::abs(mp.gamma_diss)) {
      s.detuning = DetuningMode::symmetric;
      s.delta_sign = mp.g_coh < 0.0 ? -1 : 1;
    } else {
      s.detuning = DetuningMode::none;
      s.phi = mp.gamma_diss < 0.0 ? 0.0 : units::pi;
    }
  }
  if (cfg.detuning_mode != DetuningMode::automatic) {
    s.detuning = cfg.detuning_mode;
    s.delta_sign = 0;
  }
  if (cfg.phi) s.phi = *cfg.phi;
  return s;
}

/// Scenario at one operating point. Detuning is measured from the driving
/// frequency in units of gamma_i: qubit 1 sits at omega + delta, qubit 2 at
/// omega + delta (symmetric) or omega - delta (antisymmetric).
inline Scenario operating_point(const ExperimentConfig& cfg, const PhysicalSetup& setup, int n, double omega,
                                double intensity_w_cm2, double delta_over_gamma, const DriveScheme& scheme) {
  QdParams qd = setup.qd;
  const double delta = delta_over_gamma * cfg.gamma_i;
  switch (scheme.detuning) {
    case DetuningMode::symmetric: qd.omega = {omega + delta, omega + delta}; break;
    case DetuningMode::antisymmetric: qd.omega = {omega + delta, omega - delta}; break;
    default: qd.omega = {omega, omega}; break;
  }
  const DriveField drive = drive_rates(units::w_per_cm2_to_si(intensity_w_cm2), omega, setup.material, qd, scheme.phi);
  return make_scenario(setup.material, geometry_for(cfg, n), qd, drive, cfg.phase_scope);
}

/// Detunings searched for a scheme: {0} without detuning, else the grid
/// restricted to `delta_sign` when one is set.
inline std::vector<double> detunings_for(const ExperimentConfig& cfg, const DriveScheme& scheme, bool restrict_sign) {
  if (scheme.detuning == DetuningMode::none) return {0.0};
  std::vector<double> out;
  for (double d : cfg.effective_delta_grid())
    if (!restrict_sign || scheme.delta_sign == 0 || d * scheme.delta_sign > 0.0) out.push_back(d);
  if (out.empty()) throw ConfigError("qd.delta_grid has no detuning with the sign the drive scheme requires");
  return out;
}

// --- couplings -------------------------------------------------------------

struct CouplingRow {
  int n = 0;
  double gap_um = 0.0;
  double g_coh = 0.0;       // rad/s
  double gamma_diss = 0.0;  // rad/s
};

struct SequenceFit {
  std::string sequence;
  std::string quantity;
  numerics::FitResult fit;
  int points = 0;
};

struct CouplingsResult {
  std::vector<CouplingRow> rows;
  std::vector<SequenceFit> fits;
};

/// Label of the n (mod 4) sequence: "1", "2+4k", "3+4k", "4+4k", "5+4k".
inline std::string sequence_label(int n) {
  if (n == 1) return "1";
  switch (n % 4) {
    case 2: return "2+4k";
    case 3: return "3+4k";
    case 0: return "4+4k";
    default: return "5+4k";
  }
}

inline CouplingsResult run_couplings(const ExperimentConfig& cfg) {
  if (cfg.omega_mode != OmegaMode::lspr) throw ConfigError("couplings: requires drive.omega_mode = lspr");
  const PhysicalSetup setup = make_setup(cfg);
  CouplingsResult res;
  for (int n : cfg.n_list) {
    const MediatedParams mp = resonant_couplings(cfg, setup, n);
    res.rows.push_back({n, qubit_gap_um(cfg, n), mp.g_coh, mp.gamma_diss});
  }
  // Quadratic fits of the dominant coupling against distance, per sequence.
  std::map<std::string, std::vector<numerics::Point>> seq;
  for (const auto& r : res.rows) {
    if (r.n == 1) continue;
    const bool even = r.n % 2 == 0;
    seq[sequence_label(r.n)].push_back({r.gap_um, even ? r.g_coh : r.gamma_diss});
  }
  for (const auto& [label, pts] : seq) {
    if (pts.size() < 3) continue;
    const bool even = label == "2+4k" || label == "4+4k";
    res.fits.push_back({label, even ? "G_coh" : "Gamma_diss", numerics::fit_quadratic(pts), int(pts.size())});
  }
  return res;
}

// --- spectra ---------------------------------------------------------------

struct SpectraRow {
  int n = 0;
  double omega = 0.0;
  double lambda_nm = 0.0;
  double gamma_s = 0.0;
  double gamma_a = 0.0;
  double gamma_tilde = 0.0;
  double g_coh = 0.0;
  double gamma_diss = 0.0;
  bool at_omega_0 = false;
};

/// Ascending frequencies of a uniform wavelength grid, with omega_0 inserted.
inline std::vector<double> spectrum_grid(const ExperimentConfig& cfg, double omega_0) {
  if (!(cfg.grid_lambda_max_nm > cfg.grid_lambda_min_nm))
    throw ConfigError("drive.grid_lambda_max_nm must exceed drive.grid_lambda_min_nm");
  std::vector<double> w;
  const double step = (cfg.grid_lambda_max_nm - cfg.grid_lambda_min_nm) / (cfg.grid_points - 1);
  for (int k = 0; k < cfg.grid_points; ++k)
    w.push_back(units::angular_frequency_of(units::nm_to_m(cfg.grid_lambda_min_nm + step * k)));
  w.push_back(omega_0);
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end(), [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::abs(a); }),
          w.end());
  return w;
}

inline std::vector<SpectraRow> run_spectra(const ExperimentConfig& cfg, int jobs = 1) {
  if (cfg.omega_mode != OmegaMode::grid) throw ConfigError("spectra: requires drive.omega_mode = grid");
  const PhysicalSetup setup = make_setup(cfg);
  const double w0 = setup.material.omega_0;
  const std::vector<double> grid = spectrum_grid(cfg, w0);
  std::vector<std::vector<SpectraRow>> per_n(cfg.n_list.size());
  parallel_for(cfg.n_list.size(), jobs, [&](std::size_t k) {
    const int n = cfg.n_list[k];
    const DriveField drive = drive_rates(0.0, w0, setup.material, setup.qd);
    const Scenario sc = make_scenario(setup.material, geometry_for(cfg, n), setup.qd, drive, cfg.phase_scope);
    for (const SpectrumRow& r : decay_spectrum(grid, sc))
      per_n[k].push_back({n, r.omega, units::m_to_nm(units::wavelength_of(r.omega)), r.gamma_s, r.gamma_a,
                          r.gamma_tilde, r.g_coh, r.gamma_diss, std::abs(r.omega - w0) <= 1e-12 * w0});
  });
  std::vector<SpectraRow> rows;
  for (auto& v : per_n) rows.insert(rows.end(), v.begin(), v.end());
  return rows;
}

// --- concurrence sweep and optimiser ---------------------------------------

struct ConcurrencePoint {
  int n = 0;
  double intensity_w_cm2 = 0.0;
  double delta_over_gamma = 0.0;
  double c = 0.0;
  DickePopulations pops;
};

struct Optimum {
  int n = 0;
  double gap_um = 0.0;
  double intensity_w_cm2 = 0.0;
  double delta_over_gamma = 0.0;
  double c = 0.0;
  DriveScheme scheme;
};

struct ConcurrenceSweep {
  std::vector<ConcurrencePoint> points;
  std::vector<Optimum> optima;
};

inline ConcurrencePoint evaluate_point(const ExperimentConfig& cfg, const PhysicalSetup& setup, int n, double omega,
                                       double intensity, double delta, const DriveScheme& scheme) {
  const Scenario sc = operating_point(cfg, setup, n, omega, intensity, delta, scheme);
  const TwoQubitState st = steady_state(mediated_params(sc));
  return {n, intensity, delta, concurrence(st), dicke_populations(st)};
}

/// First maximum in grid order, so ties resolve deterministically.
inline Optimum argmax(const std::vector<ConcurrencePoint>& pts, double gap_um, const DriveScheme& scheme) {
  if (pts.empty()) throw ContractViolation("argmax: empty grid");
  const ConcurrencePoint* best = &pts.front();
  for (const auto& p : pts)
    if (p.c > best->c) best = &p;
  return {best->n, gap_um, best->intensity_w_cm2, best->delta_over_gamma, best->c, scheme};
}

/// Exhaustive grid over intensity x detuning for one n.
inline std::vector<ConcurrencePoint> concurrence_grid(const ExperimentConfig& cfg, const PhysicalSetup& setup, int n,
                                                      const DriveScheme& scheme, const std::vector<double>& deltas,
                                                      int jobs) {
  if (cfg.backend != Backend::effective) throw ConfigError("concurrence sweeps require solver.backend = effective");
  const double omega = drive_omega(cfg, setup);
  const std::vector<double> intensities = cfg.effective_intensity_grid();
  std::vector<ConcurrencePoint> pts(intensities.size() * deltas.size());
  parallel_for(pts.size(), jobs, [&](std::size_t k) {
    pts[k] = evaluate_point(cfg, setup, n, omega, intensities[k / deltas.size()], deltas[k % deltas.size()], scheme);
  });
  return pts;
}

inline ConcurrenceSweep run_concurrence_sweep(const ExperimentConfig& cfg, int jobs = 1) {
  const PhysicalSetup setup = make_setup(cfg);
  ConcurrenceSweep res;
  for (int n : cfg.n_list) {
    const DriveScheme scheme = drive_scheme(cfg, setup, n);
    auto pts = concurrence_grid(cfg, setup, n, scheme, detunings_for(cfg, scheme, false), jobs);
    res.optima.push_back(argmax(pts, qubit_gap_um(cfg, n), scheme));
    res.points.insert(res.points.end(), pts.begin(), pts.end());
  }
  return res;
}

/// Optimal stationary concurrence for one n under its drive scheme.
inline Optimum optimise(const ExperimentConfig& cfg, const PhysicalSetup& setup, int n, int jobs = 1) {
  const DriveScheme scheme = drive_scheme(cfg, setup, n);
  const auto pts = concurrence_grid(cfg, setup, n, scheme, detunings_for(cfg, scheme, true), jobs);
  return argmax(pts, qubit_gap_um(cfg, n), scheme);
}

// --- decay -----------------------------------------------------------------

struct DecayFit {
  std::string sequence;
  int points = 0;
  bool ok = false;
  double c0 = std::nan("");
  double tau = std::nan("");
  double rms_log_residual = std::nan("");
};

struct DecayResult {
  std::vector<Optimum> optima;
  std::vector<DecayFit> fits;

  const DecayFit* fit_for(const std::string& sequence) const {
    for (const auto& f : fits)
      if (f.sequence == sequence) return &f;
    return nullptr;
  }
};

/// Exponential fit C = C0 exp(-tau n) per sequence over its n values with C > 0.
inline std::vector<DecayFit> fit_sequences(const std::vector<Optimum>& optima) {
  std::map<std::string, std::vector<numerics::Point>> seq;
  std::vector<std::string> order;
  for (const auto& o : optima) {
    const std::string label = sequence_label(o.n);
    if (!seq.count(label)) order.push_back(label);
    seq[label];
    if (o.c > 0.0) seq[label].push_back({double(o.n), o.c});
  }
  std::vector<DecayFit> fits;
  for (const auto& label : order) {
    DecayFit f;
    f.sequence = label;
    f.points = int(seq[label].size());
    if (f.points >= 2) {
      const auto r = numerics::fit_exponential_decay(seq[label]);
      f.ok = true;
      f.c0 = r.coefficients[0];
      f.tau = r.coefficients[1];
      f.rms_log_residual = r.rms_residual;
    }
    fits.push_back(f);
  }
  return fits;
}

inline DecayResult run_decay(const ExperimentConfig& cfg, int jobs = 1) {
  const PhysicalSetup setup = make_setup(cfg);
  DecayResult res;
  for (int n : cfg.n_list) res.optima.push_back(optimise(cfg, setup, n, jobs));
  res.fits = fit_sequences(res.optima);
  return res;
}

// --- validation against the full model -------------------------------------

struct ValidateRow {
  int n = 0;
  int fock_levels = 0;
  double intensity_w_cm2 = 0.0;
  double c_effective = std::nan("");
  double c_full = std::nan("");
  double abs_diff = std::nan("");
  std::string status = "ok";
};

struct ValidateSummary {
  int n = 0;
  int fock_levels = 0;
  double max_abs_diff = std::nan("");
  std::string status = "ok";
};

struct ValidateResult {
  std::vector<ValidateRow> rows;
  std::vector<ValidateSummary> summary;
};

/// Detuning used at a fixed operating point: the configured magnitude with
/// the sign the scheme prefers.
inline double fixed_detuning(const ExperimentConfig& cfg, const DriveScheme& scheme) {
  if (scheme.detuning == DetuningMode::none) return 0.0;
  if (scheme.delta_sign != 0) return scheme.delta_sign * std::abs(cfg.delta_over_gamma);
  return cfg.delta_over_gamma;
}

inline ValidateResult run_validate(const ExperimentConfig& cfg, int jobs = 1) {
  const PhysicalSetup setup = make_setup(cfg);
  const double omega = drive_omega(cfg, setup);
  ValidateResult res;
  for (int n : cfg.n_list) {
    ValidateSummary sum{n, cfg.fock_levels};
    if (n > cfg.max_full_n) {
      sum.status = "skipped: n exceeds solver.max_full_n";
      res.rows.push_back({n, cfg.fock_levels, std::nan(""), std::nan(""), std::nan(""), std::nan(""), sum.status});
      res.summary.push_back(sum);
      continue;
    }
    const DriveScheme scheme = drive_scheme(cfg, setup, n);
    const Scenario base = operating_point(cfg, setup, n, omega, 0.0, fixed_detuning(cfg, scheme), scheme);
    FockConfig fc;
    fc.n = n;
    fc.fock_levels = cfg.fock_levels;
    fc.memory_budget = cfg.memory_budget_bytes();
    const auto& grid = cfg.validate_intensity_grid;
    std::vector<ValidateRow> rows(grid.size());
    try {
      // Surface a memory refusal once, before any work is spread out.
      build_full_system(base, fc);
      parallel_for(grid.size(), jobs, [&](std::size_t k) {
        const Scenario sc = with_intensity(base, units::w_per_cm2_to_si(grid[k]));
        ValidateRow r{n, fc.fock_levels, grid[k]};
        r.c_effective = effective_concurrence(sc);
        r.c_full = full_concurrence(sc, fc);
        r.abs_diff = std::abs(r.c_full - r.c_effective);
        rows[k] = r;
      });
      sum.max_abs_diff = 0.0;
      for (const auto& r : rows) sum.max_abs_diff = std::max(sum.max_abs_diff, r.abs_diff);
      res.rows.insert(res.rows.end(), rows.begin(), rows.end());
    } catch (const ResourceLimitError& e) {
      sum.status = std::string("refused: ") + e.what();
      res.rows.push_back({n, fc.fock_levels, std::nan(""), std::nan(""), std::nan(""), std::nan(""), sum.status});
    }
    res.summary.push_back(sum);
  }
  return res;
}

// --- CSV -------------------------------------------------------------------

using Cell = std::variant<double, long, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

inline std::string format_cell(const Cell& c, int precision) {
  if (const auto* s = std::get_if<std::string>(&c)) {
    if (s->find_first_of(",\"\n") == std::string::npos) return *s;
    std::string q = "\"";
    for (char ch : *s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  if (const auto* i = std::get_if<long>(&c)) return std::to_string(*i);
  double v = std::get<double>(c);
  if (std::isnan(v)) return "nan";
  if (v == 0.0) v = 0.0;  // no "-0"
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(precision) << v;
  return os.str();
}

inline void write_csv(std::ostream& out, const Table& t, int precision) {
  for (std::size_t k = 0; k < t.header.size(); ++k) out << (k ? "," : "") << t.header[k];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << format_cell(row[k], precision);
    out << '\n';
  }
}

inline std::string to_csv(const Table& t, int precision = 12) {
  std::ostringstream os;
  write_csv(os, t, precision);
  return os.str();
}

/// "dir/name.csv" + "_fits" -> "dir/name_fits.csv".
inline std::filesystem::path sibling_path(const std::filesystem::path& out, const std::string& suffix) {
  std::filesystem::path p = out;
  const std::string ext = out.has_extension() ? out.extension().string() : std::string(".csv");
  p.replace_filename(out.stem().string() + suffix + ext);
  return p;
}

inline void save_csv(const std::filesystem::path& path, const Table& t, int precision) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigError(path.string() + ": cannot open for writing");
  write_csv(f, t, precision);
  if (!f) throw ConfigError(path.string() + ": write failed");
}

inline Table couplings_table(const CouplingsResult& r) {
  Table t{{"n", "d_qq_minus_2r0_um", "G_coh", "Gamma_diss"}, {}};
  for (const auto& x : r.rows) t.rows.push_back({long(x.n), x.gap_um, x.g_coh, x.gamma_diss});
  return t;
}

inline Table couplings_fit_table(const CouplingsResult& r) {
  Table t{{"sequence", "quantity", "points", "a0", "a1", "a2", "rms_residual"}, {}};
  for (const auto& f : r.fits)
    t.rows.push_back({f.sequence, f.quantity, long(f.points), f.fit.coefficients[0], f.fit.coefficients[1],
                      f.fit.coefficients[2], f.fit.rms_residual});
  return t;
}

inline Table spectra_table(const std::vector<SpectraRow>& rows) {
  Table t{{"n", "omega", "lambda_nm", "gamma_s", "gamma_a", "gamma_tilde", "G_coh", "Gamma_diss", "is_omega0"}, {}};
  for (const auto& x : rows)
    t.rows.push_back({long(x.n), x.omega, x.lambda_nm, x.gamma_s, x.gamma_a, x.gamma_tilde, x.g_coh, x.gamma_diss,
                      long(x.at_omega_0)});
  return t;
}

inline Table concurrence_table(const ConcurrenceSweep& s) {
  Table t{{"n", "intensity", "delta_over_gamma", "C", "rho_gg", "rho_ss", "rho_aa", "rho_ee"}, {}};
  for (const auto& p : s.points)
    t.rows.push_back({long(p.n), p.intensity_w_cm2, p.delta_over_gamma, p.c, p.pops.rho_gg, p.pops.rho_ss,
                      p.pops.rho_aa, p.pops.rho_ee});
  return t;
}

inline const char* to_string(DetuningMode m) {
  switch (m) {
    case DetuningMode::symmetric: return "symmetric";
    case DetuningMode::antisymmetric: return "antisymmetric";
    case DetuningMode::none: return "none";
    default: return "auto";
  }
}

inline Table optimum_table(const std::vector<Optimum>& optima) {
  Table t{{"n", "d_qq_minus_2r0_um", "detuning_mode", "phi", "intensity_opt", "delta_opt_over_gamma", "C_opt"}, {}};
  for (const auto& o : optima)
    t.rows.push_back({long(o.n), o.gap_um, std::string(to_string(o.scheme.detuning)), o.scheme.phi, o.intensity_w_cm2,
                      o.delta_over_gamma, o.c});
  return t;
}

inline Table decay_table(const DecayResult& r) {
  Table t{{"sequence", "n", "d_qq_minus_2r0_um", "C_opt", "intensity_opt", "delta_opt_over_gamma", "fit_C0", "fit_tau"},
          {}};
  for (const auto& o : r.optima) {
    const std::string label = sequence_label(o.n);
    const DecayFit* f = r.fit_for(label);
    t.rows.push_back({label, long(o.n), o.gap_um, o.c, o.intensity_w_cm2, o.delta_over_gamma,
                      f ? f->c0 : std::nan(""), f ? f->tau : std::nan("")});
  }
  return t;
}

inline Table decay_fit_table(const DecayResult& r) {
  Table t{{"sequence", "points", "fit_C0", "fit_tau", "rms_log_residual"}, {}};
  for (const auto& f : r.fits) t.rows.push_back({f.sequence, long(f.points), f.c0, f.tau, f.rms_log_residual});
  return t;
}

inline Table validate_table(const ValidateResult& r) {
  Table t{{"n", "N", "intensity", "C_eff", "C_full", "abs_diff", "status"}, {}};
  for (const auto& x : r.rows)
    t.rows.push_back({long(x.n), long(x.fock_levels), x.intensity_w_cm2, x.c_effective, x.c_full, x.abs_diff, x.status});
  return t;
}

inline Table validate_summary_table(const ValidateResult& r) {
  Table t{{"n", "N", "max_abs_diff", "status"}, {}};
  for (const auto& s : r.summary) t.rows.push_back({long(s.n), long(s.fock_levels), s.max_abs_diff, s.status});
  return t;
}

}  // namespace nanoarray
