// nanoarray: batch experiments for qubit pairs entangled through a
// nanoparticle chain. Exit codes: 0 ok, 2 configuration error, 3 numerical
// failure.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "nanoarray/nanoarray.hpp"

namespace na = nanoarray;

namespace {

struct Options {
  std::string config;
  std::string out;
  int jobs = 1;
  std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "experiment config (section.key = value lines)")->check(CLI::ExistingFile);
  cmd->add_option("--out", o.out, "output CSV (stdout when omitted)");
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 1024));
  cmd->add_option("--set", o.overrides, "override a config key, e.g. --set geometry.n=3");
}

na::ExperimentConfig load(const Options& o, na::ExperimentConfig base) {
  na::ExperimentConfig cfg = o.config.empty() ? base : na::load_config(o.config, base);
  for (const auto& s : o.overrides) na::apply_override(cfg, s);
  return cfg;
}

// Main table to --out (or output.csv, or stdout); extra tables go next to it.
void emit(const na::ExperimentConfig& cfg, const Options& o, const na::Table& main,
          const std::vector<std::pair<std::string, na::Table>>& extras) {
  const std::string path = !o.out.empty() ? o.out : cfg.csv_path;
  if (path.empty()) {
    na::write_csv(std::cout, main, cfg.precision);
    for (const auto& [suffix, t] : extras) {
      std::cout << '\n';
      na::write_csv(std::cout, t, cfg.precision);
    }
    return;
  }
  na::save_csv(path, main, cfg.precision);
  for (const auto& [suffix, t] : extras) na::save_csv(na::sibling_path(path, suffix), t, cfg.precision);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state entanglement of two quantum dots coupled through a metal nanoparticle chain"};
  app.require_subcommand(1);

  Options opt;
  auto* couplings = app.add_subcommand("couplings", "mediated couplings G12, Gamma12 at the LSPR versus n");
  auto* spectra = app.add_subcommand("spectra", "collective decay rates versus driving frequency");
  auto* conc = app.add_subcommand("concurrence", "stationary concurrence over intensity x detuning, with argmax");
  auto* decay = app.add_subcommand("decay", "optimal concurrence versus n with per-sequence exponential fits");
  auto* validate = app.add_subcommand("validate", "effective model against the full QD-MNP master equation");
  for (auto* c : {couplings, spectra, conc, decay, validate}) add_common(c, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    na::ExperimentConfig base;
    if (spectra->parsed()) base.omega_mode = na::OmegaMode::grid;
    const na::ExperimentConfig cfg = load(opt, base);

    if (couplings->parsed()) {
      const auto r = na::run_couplings(cfg);
      emit(cfg, opt, na::couplings_table(r), {{"_fits", na::couplings_fit_table(r)}});
    } else if (spectra->parsed()) {
      emit(cfg, opt, na::spectra_table(na::run_spectra(cfg, opt.jobs)), {});
    } else if (conc->parsed()) {
      const auto r = na::run_concurrence_sweep(cfg, opt.jobs);
      emit(cfg, opt, na::concurrence_table(r), {{"_optimum", na::optimum_table(r.optima)}});
    } else if (decay->parsed()) {
      const auto r = na::run_decay(cfg, opt.jobs);
      emit(cfg, opt, na::decay_table(r), {{"_fits", na::decay_fit_table(r)}});
    } else if (validate->parsed()) {
      const auto r = na::run_validate(cfg, opt.jobs);
      emit(cfg, opt, na::validate_table(r), {{"_summary", na::validate_summary_table(r)}});
    }
  } catch (const na::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const na::DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
