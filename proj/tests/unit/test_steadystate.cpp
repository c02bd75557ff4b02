#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle_values.hpp"

using namespace nanoarray;
using Vec4 = Eigen::Matrix<cplx, 4, 1>;

namespace {

Vec4 ket(cplx a, cplx b, cplx c, cplx d) {
  Vec4 v;
  v << a, b, c, d;
  return v;
}

Matrix4c werner(double p) {
  const Vec4 phi = ket(1, 0, 0, 1) / std::sqrt(2.0);
  return p * phi * phi.adjoint() + (1.0 - p) * Matrix4c::Identity() / 4.0;
}

Matrix4c random_state(std::mt19937& rng) {
  std::normal_distribution<double> n01;
  Matrix4c a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = cplx(n01(rng), n01(rng));
  Matrix4c rho = a * a.adjoint();
  return rho / rho.trace().real();
}

Eigen::Matrix2cd random_unitary(std::mt19937& rng) {
  std::normal_distribution<double> n01;
  Eigen::Matrix2cd a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = cplx(n01(rng), n01(rng));
  return Eigen::HouseholderQR<Eigen::Matrix2cd>(a).householderQ();
}

/// u1 acts on qubit 1, u2 on qubit 2; index = q1 + 2 q2.
Matrix4c local(const Eigen::Matrix2cd& u1, const Eigen::Matrix2cd& u2) {
  Matrix4c out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out(a, b) = u1(a % 2, b % 2) * u2(a / 2, b / 2);
  return out;
}

double c_of(const Matrix4c& rho) { return concurrence(TwoQubitState::from_matrix(rho)); }

}  // namespace

TEST(Concurrence, BellStatesAreMaximal) {
  const double h = 1.0 / std::sqrt(2.0);
  for (const Vec4& v : {ket(h, 0, 0, h), ket(h, 0, 0, -h), ket(0, h, h, 0), ket(0, h, -h, 0)})
    EXPECT_NEAR(concurrence(TwoQubitState::pure(v)), 1.0, 1e-10);
}

TEST(Concurrence, ProductStatesVanish) {
  EXPECT_NEAR(concurrence(TwoQubitState::pure(ket(1, 0, 0, 0))), 0.0, 1e-10);
  EXPECT_NEAR(concurrence(TwoQubitState::pure(ket(0, 0, 0, 1))), 0.0, 1e-10);
  // (|g> + |e>) (x) (|g> - i|e>) / 2
  EXPECT_NEAR(concurrence(TwoQubitState::pure(ket(1, 1, cplx(0, -1), cplx(0, -1)))), 0.0, 1e-10);
  EXPECT_NEAR(c_of(Matrix4c::Identity() / 4.0), 0.0, 1e-12);
}

TEST(Concurrence, WernerFamilyMatchesOracle) {
  EXPECT_NEAR(c_of(werner(0.2)), oracle::C_werner_200, 1e-10);
  EXPECT_NEAR(c_of(werner(1.0 / 3.0)), oracle::C_werner_333, 1e-10);
  EXPECT_NEAR(c_of(werner(0.5)), oracle::C_werner_500, 1e-10);
  EXPECT_NEAR(c_of(werner(0.8)), oracle::C_werner_800, 1e-10);
  EXPECT_NEAR(c_of(werner(1.0)), oracle::C_werner_1000, 1e-10);
  for (double p = 0.0; p <= 1.0; p += 0.05) EXPECT_NEAR(c_of(werner(p)), std::max(0.0, 1.5 * p - 0.5), 1e-10) << p;
}

TEST(Concurrence, GeneralStateMatchesOracle) {
  Matrix4c a;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) a(j, k) = cplx(std::cos(j + 2 * k + 1), std::sin(3 * j - k));
  Matrix4c rho = a * a.adjoint();
  rho /= rho.trace().real();
  EXPECT_NEAR(c_of(rho), oracle::C_general_state, 1e-10);
}

TEST(Concurrence, PureStateFormula) {
  // C = 2 |ad - bc| for a|00> + b|01> + c|10> + d|11>.
  std::mt19937 rng(1);
  std::normal_distribution<double> n01;
  for (int t = 0; t < 20; ++t) {
    Vec4 v;
    for (int k = 0; k < 4; ++k) v(k) = cplx(n01(rng), n01(rng));
    v /= v.norm();
    EXPECT_NEAR(concurrence(TwoQubitState::pure(v)), 2.0 * std::abs(v(0) * v(3) - v(1) * v(2)), 1e-9);
  }
}

TEST(Concurrence, PropertySwapAndPhaseInvariance) {
  std::mt19937 rng(2);
  const Matrix4c p = basis::swap();
  for (int t = 0; t < 30; ++t) {
    const Matrix4c rho = random_state(rng);
    const double c = c_of(rho);
    EXPECT_NEAR(c_of(p * rho * p), c, 1e-12);
    Vec4 v;
    std::normal_distribution<double> n01;
    for (int k = 0; k < 4; ++k) v(k) = cplx(n01(rng), n01(rng));
    const double cv = concurrence(TwoQubitState::pure(v));
    EXPECT_NEAR(concurrence(TwoQubitState::pure(v * std::polar(1.0, 0.37 * t))), cv, 1e-12);
  }
}

TEST(Concurrence, PropertyLocalUnitaryInvariance) {
  std::mt19937 rng(4);
  for (int t = 0; t < 30; ++t) {
    const Matrix4c rho = random_state(rng);
    const Matrix4c u = local(random_unitary(rng), random_unitary(rng));
    EXPECT_NEAR(c_of(u * rho * u.adjoint()), c_of(rho), 1e-10);
  }
}

TEST(Concurrence, BoundedByOne) {
  std::mt19937 rng(6);
  for (int t = 0; t < 50; ++t) {
    const double c = c_of(random_state(rng));
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 1.0 + 1e-12);
  }
}

TEST(Dicke, BasisIsUnitaryAndMapsBellStates) {
  const Matrix4c u = basis::dicke_unitary();
  EXPECT_TRUE((u.adjoint() * u).isIdentity(1e-15));
  const double h = 1.0 / std::sqrt(2.0);
  const TwoQubitState s = TwoQubitState::pure(ket(0, h, h, 0));
  const DickePopulations p = dicke_populations(s);
  EXPECT_NEAR(p.rho_ss, 1.0, 1e-15);
  EXPECT_NEAR(p.rho_aa, 0.0, 1e-15);
}

TEST(Dicke, XApproximationExactForDickeXStates) {
  // Populations plus an s-a coherence only.
  for (double im : {0.0, 0.05, 0.2}) {
    Matrix4c d = Matrix4c::Zero();
    d(0, 0) = 0.5;
    d(1, 1) = 0.3;
    d(2, 2) = 0.15;
    d(3, 3) = 0.05;
    d(1, 2) = cplx(0.02, im);
    d(2, 1) = std::conj(d(1, 2));
    const Matrix4c u = basis::dicke_unitary();
    const TwoQubitState st = TwoQubitState::from_matrix(u * d * u.adjoint());
    EXPECT_NEAR(concurrence_x_approx(dicke_populations(st)), concurrence(st), 1e-12) << im;
  }
}

TEST(Generator, PropertyTracePreservingAndHermiticityPreserving) {
  std::mt19937 rng(8);
  const MediatedParams mp = mediated_params(fixtures::scenario(3, 20.0, 10.0, -5.0, 0.4));
  const Matrix4c h = effective_hamiltonian(mp);
  EXPECT_TRUE(h.isApprox(h.adjoint(), 1e-14));
  const Eigen::Matrix2d gam = dissipation_matrix(mp);
  for (int t = 0; t < 10; ++t) {
    const Matrix4c rho = random_state(rng);
    const Matrix4c l = apply_liouvillian(h, gam, rho);
    EXPECT_LT(std::abs(l.trace()), 1e-12 * mp.gamma_tilde[0]);
    EXPECT_LT((l - l.adjoint()).norm(), 1e-12 * l.norm());
  }
}

TEST(Generator, CoordinatesRoundTrip) {
  std::mt19937 rng(10);
  const Matrix4c rho = random_state(rng);
  EXPECT_LT((basis::from_coordinates(basis::to_coordinates(rho)) - rho).norm(), 1e-15);
}

TEST(SteadyState, ValidDensityMatrix) {
  for (int n : {1, 2, 3, 4, 5}) {
    const TwoQubitState st = steady_state(mediated_params(fixtures::scenario(n, 15.0, -40.0, -40.0)));
    EXPECT_NEAR(st.rho.trace().real(), 1.0, 1e-12);
    EXPECT_LT((st.rho - st.rho.adjoint()).norm(), 1e-14);
    EXPECT_GE(st.diagnostics.min_eigenvalue, -1e-12);
    EXPECT_LT(st.diagnostics.residual, 1e-12);
    EXPECT_GT(st.diagnostics.rcond, 1e-12);
  }
}

TEST(SteadyState, UndrivenIsGroundState) {
  const TwoQubitState st = steady_state(mediated_params(fixtures::scenario(2, 0.0, -80.0, -80.0)));
  EXPECT_NEAR(st.rho(0, 0).real(), 1.0, 1e-12);
  EXPECT_NEAR(concurrence(st), 0.0, 1e-12);
}

TEST(SteadyState, ConcurrenceMatchesOracle) {
  using fixtures::scenario;
  const double pi = units::pi;
  EXPECT_NEAR(effective_concurrence(scenario(1, 28.0, -180.0, 180.0)), oracle::C_eff_n1_anti, 1e-9);
  EXPECT_NEAR(effective_concurrence(scenario(2, 3.0, -85.0, -85.0)), oracle::C_eff_n2_sym, 1e-9);
  EXPECT_NEAR(effective_concurrence(scenario(3, 29.5)), oracle::C_eff_n3_res, 1e-9);
  EXPECT_NEAR(effective_concurrence(scenario(5, 1.0, 0, 0, pi)), oracle::C_eff_n5_pi, 1e-9);
  EXPECT_NEAR(effective_concurrence(scenario(4, 13.0, 80.0, 80.0)), oracle::C_eff_n4_sym, 1e-9);
}

TEST(SteadyState, SymmetricDriveGivesSwapSymmetricState) {
  const TwoQubitState st = steady_state(mediated_params(fixtures::scenario(3, 10.0, 20.0, 20.0)));
  const Matrix4c p = basis::swap();
  EXPECT_LT((p * st.rho * p - st.rho).norm(), 1e-12);
}

TEST(SteadyState, SwappingQubitParametersSwapsState) {
  const TwoQubitState a = steady_state(mediated_params(fixtures::scenario(2, 10.0, 30.0, -10.0)));
  const TwoQubitState b = steady_state(mediated_params(fixtures::scenario(2, 10.0, -10.0, 30.0)));
  const Matrix4c p = basis::swap();
  EXPECT_LT((p * a.rho * p - b.rho).norm(), 1e-12);
  EXPECT_NEAR(concurrence(a), concurrence(b), 1e-12);
}

TEST(SteadyState, SingularSystemThrows) {
  MediatedParams mp;
  EXPECT_THROW(steady_state(mp), NumericalError);
  mp.gamma_tilde = {std::nan(""), 1.0};
  EXPECT_THROW(steady_state(mp), NumericalError);
}

TEST(SteadyState, PositivityClipAndFailure) {
  EvolutionMatrix em;
  em.m = Matrix16::Identity();
  em.b = basis::to_coordinates(Matrix4c(Eigen::Vector4d(1.0 + 1e-11, 0.0, 0.0, -1e-11).cast<cplx>().asDiagonal()));
  const TwoQubitState clipped = solve_steady(em);
  EXPECT_TRUE(clipped.diagnostics.clipped);
  EXPECT_FALSE(clipped.diagnostics.warnings.empty());
  EXPECT_GE(Eigen::SelfAdjointEigenSolver<Matrix4c>(clipped.rho).eigenvalues().minCoeff(), 0.0);
  em.b = basis::to_coordinates(Matrix4c(Eigen::Vector4d(1.1, 0.0, 0.0, -0.1).cast<cplx>().asDiagonal()));
  EXPECT_THROW(solve_steady(em), NumericalError);
}
