#pragma once

// Flat experiment configuration: UTF-8 text, one `section.key = value` per
// line, `#` starts a comment. Unknown keys and out-of-range values are
// rejected with the offending line and key.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nanoarray/effective.hpp"
#include "nanoarray/errors.hpp"
#include "nanoarray/units.hpp"

namespace nanoarray {

enum class DetuningMode { automatic, symmetric, antisymmetric, none };
enum class OmegaMode { lspr, wavelength, grid };
enum class Backend { effective, full };
enum class RadiativeDampingModel { dipole, matched };

struct ExperimentConfig {
  // geometry
  double r_nm = 30.0;
  double r0_nm = 2.0;
  double s_nm = 30.0;
  std::vector<int> n_list = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17};
  double s_z = 2.0;
  // metal
  double omega_p_ev = 8.5472;
  double eps_inf = 5.0;
  double gamma_p_ev = 0.018;
  RadiativeDampingModel radiative_damping = RadiativeDampingModel::matched;
  double excitation_ratio = 0.096;
  double reference_intensity_w_cm2 = 80.0;
  // medium
  double eps_m = 2.98;
  // qd
  double gamma_i = 2.0 * units::pi * 1.0e8;
  std::optional<double> mu_qd_debye;  // default e * r0
  DetuningMode detuning_mode = DetuningMode::automatic;
  double delta_over_gamma = 80.0;
  std::vector<double> delta_grid;  // empty: -200:5:200 when optimising
  // drive
  double intensity_w_cm2 = 10.0;
  std::vector<double> intensity_grid;  // empty: 0.5:0.5:80
  OmegaMode omega_mode = OmegaMode::lspr;
  double wavelength_nm = 480.0;
  double grid_lambda_min_nm = 420.0;
  double grid_lambda_max_nm = 560.0;
  int grid_points = 601;
  std::optional<double> phi;  // empty: chosen per n by the drive scheme
  PhaseScope phase_scope = PhaseScope::effective;
  // solver
  Backend backend = Backend::effective;
  int fock_levels = 4;
  double memory_budget_gib = 8.0;
  int max_full_n = 3;
  std::vector<double> validate_intensity_grid = {0, 0.5, 1, 2, 3, 5, 10, 20, 30, 40, 50, 60, 70, 80};
  // output
  std::string csv_path;
  int precision = 12;

  std::vector<double> effective_delta_grid() const {
    if (!delta_grid.empty()) return delta_grid;
    std::vector<double> g;
    for (int k = -40; k <= 40; ++k) g.push_back(5.0 * k);
    return g;
  }
  std::vector<double> effective_intensity_grid() const {
    if (!intensity_grid.empty()) return intensity_grid;
    std::vector<double> g;
    for (int k = 1; k <= 160; ++k) g.push_back(0.5 * k);
    return g;
  }
  std::uint64_t memory_budget_bytes() const {
    return static_cast<std::uint64_t>(memory_budget_gib * 1024.0 * 1024.0 * 1024.0);
  }
};

namespace config_detail {

inline std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

inline std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

struct Context {
  std::string source;
  int line = 0;
  std::string key;

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << source;
    if (line > 0) os << ":" << line;
    os << ": " << key << ": " << msg;
    throw ConfigError(os.str());
  }
};

inline double parse_double(const std::string& raw, const Context& ctx) {
  const std::string v = lower(trim(raw));
  if (v == "pi") return units::pi;
  if (v == "-pi") return -units::pi;
  double out = 0.0;
  const char* first = v.data();
  const char* last = v.data() + v.size();
  if (!v.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || !std::isfinite(out)) ctx.fail("expected a number, got '" + raw + "'");
  return out;
}

inline int parse_int(const std::string& raw, const Context& ctx) {
  const std::string v = trim(raw);
  int out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) ctx.fail("expected an integer, got '" + raw + "'");
  return out;
}

/// "a:step:b" (inclusive), a comma list, or a single number.
inline std::vector<double> parse_grid(const std::string& raw, const Context& ctx) {
  const std::string v = trim(raw);
  std::vector<double> out;
  if (v.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(v);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) ctx.fail("grid must be start:step:stop");
    const double a = parse_double(parts[0], ctx), step = parse_double(parts[1], ctx), b = parse_double(parts[2], ctx);
    if (!(step > 0.0) || b < a) ctx.fail("grid needs step > 0 and stop >= start");
    const long count = std::lround(std::floor((b - a) / step + 1e-9)) + 1;
    if (count > 1000000) ctx.fail("grid has too many points");
    for (long k = 0; k < count; ++k) out.push_back(a + step * static_cast<double>(k));
    return out;
  }
  std::stringstream ss(v);
  for (std::string p; std::getline(ss, p, ',');) out.push_back(parse_double(p, ctx));
  if (out.empty()) ctx.fail("empty grid");
  return out;
}

/// "a..b", a comma list, or a single integer.
inline std::vector<int> parse_int_list(const std::string& raw, const Context& ctx) {
  const std::string v = trim(raw);
  std::vector<int> out;
  if (const auto pos = v.find(".."); pos != std::string::npos) {
    const int a = parse_int(v.substr(0, pos), ctx), b = parse_int(v.substr(pos + 2), ctx);
    if (b < a) ctx.fail("range end before start");
    for (int k = a; k <= b; ++k) out.push_back(k);
    return out;
  }
  std::stringstream ss(v);
  for (std::string p; std::getline(ss, p, ',');) out.push_back(parse_int(p, ctx));
  if (out.empty()) ctx.fail("empty list");
  return out;
}

inline void require(bool ok, const Context& ctx, const std::string& msg) {
  if (!ok) ctx.fail(msg);
}

}  // namespace config_detail

/// Applies one `key = value` assignment.
inline void apply_setting(ExperimentConfig& c, const std::string& key_raw, const std::string& value,
                          const config_detail::Context& ctx_in) {
  using namespace config_detail;
  Context ctx = ctx_in;
  const std::string key = trim(key_raw);
  ctx.key = key;
  auto num = [&] { return parse_double(value, ctx); };
  auto positive = [&] {
    const double x = num();
    require(x > 0.0, ctx, "must be > 0");
    return x;
  };
  const std::string lv = lower(trim(value));

  if (key == "geometry.r_nm") c.r_nm = positive();
  else if (key == "geometry.r0_nm") c.r0_nm = positive();
  else if (key == "geometry.s_nm") {
    c.s_nm = num();
    require(c.s_nm >= 0.0, ctx, "must be >= 0");
  } else if (key == "geometry.n") {
    const int n = parse_int(value, ctx);
    require(n >= 1 && n <= 200, ctx, "must be in [1, 200]");
    c.n_list = {n};
  } else if (key == "geometry.n_list") {
    c.n_list = parse_int_list(value, ctx);
    for (int n : c.n_list) require(n >= 1 && n <= 200, ctx, "every n must be in [1, 200]");
  } else if (key == "geometry.s_z") {
    c.s_z = num();
    require(c.s_z != 0.0, ctx, "must be non-zero");
  } else if (key == "metal.omega_p_ev") c.omega_p_ev = positive();
  else if (key == "metal.eps_inf") {
    c.eps_inf = num();
    require(c.eps_inf >= 1.0, ctx, "must be >= 1");
  } else if (key == "metal.gamma_p_ev") {
    c.gamma_p_ev = num();
    require(c.gamma_p_ev >= 0.0, ctx, "must be >= 0");
  } else if (key == "metal.radiative_damping") {
    if (lv == "dipole") c.radiative_damping = RadiativeDampingModel::dipole;
    else if (lv == "matched") c.radiative_damping = RadiativeDampingModel::matched;
    else ctx.fail("expected dipole or matched");
  } else if (key == "metal.excitation_ratio") c.excitation_ratio = positive();
  else if (key == "metal.reference_intensity_w_cm2") c.reference_intensity_w_cm2 = positive();
  else if (key == "medium.eps_m") {
    c.eps_m = num();
    require(c.eps_m >= 1.0, ctx, "must be >= 1");
  } else if (key == "qd.gamma_i") c.gamma_i = positive();
  else if (key == "qd.mu_debye") c.mu_qd_debye = positive();
  else if (key == "qd.detuning_mode") {
    if (lv == "auto") c.detuning_mode = DetuningMode::automatic;
    else if (lv == "symmetric") c.detuning_mode = DetuningMode::symmetric;
    else if (lv == "antisymmetric") c.detuning_mode = DetuningMode::antisymmetric;
    else if (lv == "none") c.detuning_mode = DetuningMode::none;
    else ctx.fail("expected auto, symmetric, antisymmetric or none");
  } else if (key == "qd.delta_over_gamma") {
    c.delta_over_gamma = num();
    require(std::abs(c.delta_over_gamma) <= 1e6, ctx, "magnitude must be <= 1e6");
  } else if (key == "qd.delta_grid") {
    c.delta_grid = parse_grid(value, ctx);
    for (double d : c.delta_grid) require(std::abs(d) <= 1e6, ctx, "magnitude must be <= 1e6");
  } else if (key == "drive.intensity_w_cm2") {
    c.intensity_w_cm2 = num();
    require(c.intensity_w_cm2 >= 0.0, ctx, "must be >= 0");
  } else if (key == "drive.intensity_grid") {
    c.intensity_grid = parse_grid(value, ctx);
    for (double i : c.intensity_grid) require(i >= 0.0, ctx, "intensities must be >= 0");
  } else if (key == "drive.omega_mode") {
    if (lv == "lspr") c.omega_mode = OmegaMode::lspr;
    else if (lv == "wavelength_nm") c.omega_mode = OmegaMode::wavelength;
    else if (lv == "grid") c.omega_mode = OmegaMode::grid;
    else ctx.fail("expected lspr, wavelength_nm or grid");
  } else if (key == "drive.wavelength_nm") c.wavelength_nm = positive();
  else if (key == "drive.grid_lambda_min_nm") c.grid_lambda_min_nm = positive();
  else if (key == "drive.grid_lambda_max_nm") c.grid_lambda_max_nm = positive();
  else if (key == "drive.grid_points") {
    c.grid_points = parse_int(value, ctx);
    require(c.grid_points >= 2 && c.grid_points <= 1000000, ctx, "must be in [2, 1e6]");
  } else if (key == "drive.phi") {
    if (lv == "auto") c.phi.reset();
    else c.phi = num();
  } else if (key == "drive.phase_scope") {
    if (lv == "effective") c.phase_scope = PhaseScope::effective;
    else if (lv == "bare_qubit") c.phase_scope = PhaseScope::bare_qubit;
    else if (lv == "bare_qubit_and_mnp") c.phase_scope = PhaseScope::bare_qubit_and_mnp;
    else ctx.fail("expected effective, bare_qubit or bare_qubit_and_mnp");
  } else if (key == "solver.backend") {
    if (lv == "effective") c.backend = Backend::effective;
    else if (lv == "full") c.backend = Backend::full;
    else ctx.fail("expected effective or full");
  } else if (key == "solver.fock_levels") {
    c.fock_levels = parse_int(value, ctx);
    require(c.fock_levels >= 2 && c.fock_levels <= 16, ctx, "must be in [2, 16]");
  } else if (key == "solver.memory_budget_gib") c.memory_budget_gib = positive();
  else if (key == "solver.max_full_n") {
    c.max_full_n = parse_int(value, ctx);
    require(c.max_full_n >= 1 && c.max_full_n <= 4, ctx, "must be in [1, 4]");
  } else if (key == "validate.intensity_grid") {
    c.validate_intensity_grid = parse_grid(value, ctx);
    for (double i : c.validate_intensity_grid) require(i >= 0.0, ctx, "intensities must be >= 0");
  } else if (key == "output.csv") c.csv_path = trim(value);
  else if (key == "output.precision") {
    c.precision = parse_int(value, ctx);
    require(c.precision >= 1 && c.precision <= 17, ctx, "must be in [1, 17]");
  } else {
    ctx.fail("unknown key");
  }
}

/// Parses config text on top of `base`.
inline ExperimentConfig parse_config(const std::string& text, const std::string& source = "<config>",
                                     ExperimentConfig base = {}) {
  std::istringstream in(text);
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = config_detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    config_detail::Context ctx{source, line_no, line};
    if (eq == std::string::npos) ctx.fail("expected 'section.key = value'");
    apply_setting(base, line.substr(0, eq), line.substr(eq + 1), ctx);
  }
  return base;
}

inline ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {}) {
  std::ifstream f(path);
  if (!f) throw ConfigError(path + ": cannot open config file");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), path, std::move(base));
}

/// Applies a command-line override "key=value".
inline void apply_override(ExperimentConfig& c, const std::string& assignment) {
  const auto eq = assignment.find('=');
  config_detail::Context ctx{"--set", 0, assignment};
  if (eq == std::string::npos) ctx.fail("expected key=value");
  apply_setting(c, assignment.substr(0, eq), assignment.substr(eq + 1), ctx);
}

}  // namespace nanoarray
