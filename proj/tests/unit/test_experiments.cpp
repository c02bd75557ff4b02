#include <gtest/gtest.h>

#include <cstdio>

#include "fixtures.hpp"

using namespace nanoarray;

namespace {

ExperimentConfig small(std::vector<int> ns) {
  ExperimentConfig c;
  c.n_list = std::move(ns);
  c.intensity_grid = {1.0, 3.0, 10.0, 28.0};
  c.delta_grid = {-180.0, -85.0, 0.0, 65.0, 180.0};
  return c;
}

}  // namespace

TEST(Couplings, ParityRowsAndDistances) {
  const CouplingsResult r = run_couplings(ExperimentConfig{});
  ASSERT_EQ(r.rows.size(), 17u);
  EXPECT_NEAR(r.rows[0].gap_um, 0.12, 1e-12);
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    const auto& row = r.rows[k];
    if (row.n % 2 == 0) EXPECT_LE(std::abs(row.gamma_diss), 1e-10 * std::abs(row.g_coh)) << row.n;
    else EXPECT_LE(std::abs(row.g_coh), 1e-10 * std::abs(row.gamma_diss)) << row.n;
    if (k) EXPECT_NEAR(row.gap_um - r.rows[k - 1].gap_um, 0.09, 1e-12);
  }
  ASSERT_EQ(r.fits.size(), 4u);
  for (const auto& f : r.fits) EXPECT_EQ(f.points, 4);
}

TEST(Couplings, RequiresLsprDrive) {
  ExperimentConfig c;
  c.omega_mode = OmegaMode::grid;
  EXPECT_THROW(run_couplings(c), ConfigError);
}

TEST(Spectra, GridContainsResonanceOnce) {
  ExperimentConfig c;
  c.omega_mode = OmegaMode::grid;
  c.n_list = {2, 3};
  c.grid_points = 41;
  const auto rows = run_spectra(c, 2);
  ASSERT_EQ(rows.size(), 2u * 42u);
  int marked = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].at_omega_0) {
      ++marked;
      if (rows[k].n == 2) EXPECT_NEAR(rows[k].gamma_s, rows[k].gamma_a, 1e-10 * rows[k].gamma_s);
      else EXPECT_GT(rows[k].gamma_a, rows[k].gamma_s);
    }
    if (k && rows[k].n == rows[k - 1].n) EXPECT_GT(rows[k].omega, rows[k - 1].omega);
  }
  EXPECT_EQ(marked, 2);
  c.omega_mode = OmegaMode::lspr;
  EXPECT_THROW(run_spectra(c), ConfigError);
}

TEST(DriveSchemes, AutoSelection) {
  const ExperimentConfig c;
  const PhysicalSetup& s = fixtures::setup();
  const DriveScheme s1 = drive_scheme(c, s, 1);
  EXPECT_EQ(s1.detuning, DetuningMode::antisymmetric);
  for (int n : {2, 6}) {
    const DriveScheme d = drive_scheme(c, s, n);
    EXPECT_EQ(d.detuning, DetuningMode::symmetric);
    EXPECT_EQ(d.delta_sign, -1);
  }
  EXPECT_EQ(drive_scheme(c, s, 4).delta_sign, 1);
  for (int n : {3, 7}) {
    EXPECT_EQ(drive_scheme(c, s, n).detuning, DetuningMode::none);
    EXPECT_DOUBLE_EQ(drive_scheme(c, s, n).phi, 0.0);
  }
  for (int n : {5, 9}) EXPECT_DOUBLE_EQ(drive_scheme(c, s, n).phi, units::pi);
}

TEST(DriveSchemes, ConfigOverrides) {
  ExperimentConfig c;
  c.detuning_mode = DetuningMode::symmetric;
  c.phi = 0.5;
  const DriveScheme d = drive_scheme(c, fixtures::setup(), 3);
  EXPECT_EQ(d.detuning, DetuningMode::symmetric);
  EXPECT_DOUBLE_EQ(d.phi, 0.5);
  EXPECT_EQ(d.delta_sign, 0);
}

TEST(DriveSchemes, DetuningGridRestriction) {
  ExperimentConfig c;
  c.delta_grid = {-10, 0, 10};
  DriveScheme d{DetuningMode::symmetric, 0.0, -1};
  EXPECT_EQ(detunings_for(c, d, true), std::vector<double>{-10});
  EXPECT_EQ(detunings_for(c, d, false).size(), 3u);
  d.detuning = DetuningMode::none;
  EXPECT_EQ(detunings_for(c, d, true), std::vector<double>{0.0});
  c.delta_grid = {0, 10};
  d = {DetuningMode::symmetric, 0.0, -1};
  EXPECT_THROW(detunings_for(c, d, true), ConfigError);
}

TEST(OperatingPoint, DetuningModes) {
  const ExperimentConfig c;
  const double w0 = fixtures::setup().material.omega_0;
  const Scenario a = operating_point(c, fixtures::setup(), 1, w0, 5.0, 10.0, {DetuningMode::antisymmetric, 0, 0});
  EXPECT_NEAR(a.qd.omega[0] - w0, 10.0 * c.gamma_i, 1.0);
  EXPECT_NEAR(a.qd.omega[1] - w0, -10.0 * c.gamma_i, 1.0);
  const Scenario n = operating_point(c, fixtures::setup(), 1, w0, 5.0, 10.0, {DetuningMode::none, 0, 0});
  EXPECT_EQ(n.qd.omega[0], w0);
}

TEST(ConcurrenceSweep, GridAndOptimum) {
  const ConcurrenceSweep s = run_concurrence_sweep(small({1, 2, 3}));
  // n = 3 has no detuning, so one row per intensity.
  EXPECT_EQ(s.points.size(), 4u * 5u + 4u * 5u + 4u);
  ASSERT_EQ(s.optima.size(), 3u);
  EXPECT_NEAR(s.optima[0].c, 0.8974715775, 1e-9);
  EXPECT_DOUBLE_EQ(s.optima[0].intensity_w_cm2, 28.0);
  EXPECT_DOUBLE_EQ(s.optima[1].delta_over_gamma, -85.0);
  EXPECT_DOUBLE_EQ(s.optima[1].intensity_w_cm2, 3.0);
  for (const auto& p : s.points) {
    EXPECT_GE(p.c, 0.0);
    EXPECT_NEAR(p.pops.rho_gg + p.pops.rho_ss + p.pops.rho_aa + p.pops.rho_ee, 1.0, 1e-12);
  }
}

TEST(ConcurrenceSweep, RequiresEffectiveBackend) {
  ExperimentConfig c = small({2});
  c.backend = Backend::full;
  EXPECT_THROW(run_concurrence_sweep(c), ConfigError);
}

TEST(ConcurrenceSweep, DeterministicAcrossJobCounts) {
  const ExperimentConfig c = small({2, 5});
  const std::string one = to_csv(concurrence_table(run_concurrence_sweep(c, 1)));
  const std::string four = to_csv(concurrence_table(run_concurrence_sweep(c, 4)));
  EXPECT_EQ(one, four);
  EXPECT_EQ(one, to_csv(concurrence_table(run_concurrence_sweep(c, 1))));
}

TEST(Decay, SequencesAndFits) {
  ExperimentConfig c = small({1, 2, 3, 4, 5, 6, 7});
  c.delta_grid = {-120, -80, -40, 40, 80, 120};
  const DecayResult r = run_decay(c);
  ASSERT_EQ(r.optima.size(), 7u);
  for (const auto& o : r.optima) EXPECT_GT(o.c, 0.0) << o.n;
  // Even n only searched on the side of sign(G12).
  EXPECT_LT(r.optima[1].delta_over_gamma, 0.0);
  EXPECT_GT(r.optima[3].delta_over_gamma, 0.0);
  const DecayFit* f3 = r.fit_for("3+4k");
  ASSERT_NE(f3, nullptr);
  EXPECT_TRUE(f3->ok);
  EXPECT_EQ(f3->points, 2);
  EXPECT_GT(f3->tau, 0.0);
  EXPECT_FALSE(r.fit_for("1")->ok);
  EXPECT_FALSE(r.fit_for("4+4k")->ok);
  EXPECT_EQ(sequence_label(17), "5+4k");
  EXPECT_EQ(sequence_label(16), "4+4k");
}

TEST(Validate, RowsSkipsAndRefusals) {
  ExperimentConfig c;
  c.n_list = {1, 4};
  c.fock_levels = 3;
  c.max_full_n = 3;
  c.delta_over_gamma = -180;
  c.validate_intensity_grid = {0.0, 28.0};
  const ValidateResult r = run_validate(c);
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.rows[0].abs_diff, 0.0);
  EXPECT_LT(r.rows[1].abs_diff, 0.01);
  EXPECT_EQ(r.rows[2].status.rfind("skipped", 0), 0u);
  EXPECT_LT(r.summary[0].max_abs_diff, 0.01);

  c.n_list = {2};
  c.memory_budget_gib = 1e-7;
  const ValidateResult refused = run_validate(c);
  ASSERT_EQ(refused.rows.size(), 1u);
  EXPECT_EQ(refused.rows[0].status.rfind("refused", 0), 0u);
  EXPECT_NE(to_csv(validate_table(refused)).find("refused"), std::string::npos);
}

TEST(Csv, Formatting) {
  EXPECT_EQ(format_cell(1.0 / 3.0, 12), "0.333333333333");
  EXPECT_EQ(format_cell(-0.0, 12), "0");
  EXPECT_EQ(format_cell(std::nan(""), 12), "nan");
  EXPECT_EQ(format_cell(3.92240850743207e15, 12), "3.92240850743e+15");
  EXPECT_EQ(format_cell(long(17), 12), "17");
  EXPECT_EQ(format_cell(std::string("a,b"), 12), "\"a,b\"");
  Table t{{"x", "y"}, {{1.5, std::string("ok")}}};
  EXPECT_EQ(to_csv(t), "x,y\n1.5,ok\n");
}

TEST(Csv, SiblingPathsAndFiles) {
  EXPECT_EQ(sibling_path("dir/run.csv", "_fits").string(), "dir/run_fits.csv");
  EXPECT_EQ(sibling_path("run", "_fits").string(), "run_fits.csv");
  const auto path = std::filesystem::temp_directory_path() / "nanoarray_csv_test.csv";
  save_csv(path, Table{{"a"}, {{1.0}, {2.0}}}, 12);
  std::ifstream f(path, std::ios::binary);
  const std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_EQ(content, "a\n1\n2\n");
  std::filesystem::remove(path);
  EXPECT_THROW(save_csv("/nonexistent/dir/x.csv", Table{{"a"}, {}}, 12), ConfigError);
}

TEST(Parallel, PropagatesFirstException) {
  std::vector<int> out(50, 0);
  parallel_for(out.size(), 4, [&](std::size_t k) { out[k] = int(k); });
  for (int k = 0; k < 50; ++k) EXPECT_EQ(out[k], k);
  EXPECT_THROW(parallel_for(20, 3, [](std::size_t k) {
                 if (k == 7) throw NumericalError("boom");
               }),
               NumericalError);
}
