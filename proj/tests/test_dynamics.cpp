#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <sstream>

#include "bqft/dynamics.hpp"
#include "bqft/spinor.hpp"

using namespace bqft::bohm;
using std::complex;

TEST_CASE("polar decomposition basics") {
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(0) = std::exp(complex<double>(0.0, M_PI / 3.0));
  auto pd = polar_decompose(psi);
  CHECK(pd.amplitude == doctest::Approx(1.0));
  CHECK(pd.phase == doctest::Approx(M_PI / 3.0));
  CHECK(std::abs(pd.spinor(0) - 1.0) < 1e-15);

  Eigen::Vector4cd real_u = Eigen::Vector4cd::Zero();
  real_u(0) = 2.5;
  auto pd2 = polar_decompose(real_u);
  CHECK(pd2.phase == doctest::Approx(0.0));
  CHECK(pd2.amplitude == doctest::Approx(2.5));

  CHECK_THROWS_AS((void)polar_decompose(Eigen::Vector4cd::Zero()),
                  std::invalid_argument);
}

TEST_CASE("polar decomposition of a phased boosted spinor") {
  using namespace bqft::spinor;
  const double theta = 0.8;
  Spinor u = boost_spinor(rest_spinor(1), BoostParams(0.6));
  Eigen::Vector4cd psi = u * std::exp(complex<double>(0.0, theta));

  auto pd = polar_decompose(psi);
  CHECK(pd.phase == doctest::Approx(theta));
  // R * phi reassembles the boosted column; phi itself is unit norm.
  CHECK((pd.amplitude * pd.spinor - u).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(pd.spinor.norm() == doctest::Approx(1.0));

  // Reassembly invariant.
  Eigen::Vector4cd back =
      pd.amplitude * std::exp(complex<double>(0.0, pd.phase)) * pd.spinor;
  CHECK((back - psi).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("closed-form family: substitution checks frozen by hand") {
  // w = 0.5, A = 1: q(pi) = exp(-i pi/2) = -i.
  auto t1 = integrate_trajectory({1.0, 0.0}, 0.5, M_PI, 1e-3);
  const complex<double> q_end = t1.samples.back().q;
  CHECK(std::abs(q_end - complex<double>(0.0, -1.0)) < 1e-8);

  // w = 2, A = 1/2: q(pi/2) = -1/2.
  auto t2 = integrate_trajectory({0.5, 0.0}, 2.0, M_PI / 2.0, 1e-4);
  CHECK(std::abs(t2.samples.back().q - complex<double>(-0.5, 0.0)) < 1e-8);
}

TEST_CASE("closed-form verification across frequencies") {
  CHECK(verify_closed_form(1.0, 10.0, 1e-3) < 1e-8);
  CHECK(verify_closed_form(50.0, 1.0, 1e-4) < 1e-6);
}

TEST_CASE("fourth-order convergence") {
  const double e1 = verify_closed_form(1.0, 10.0, 0.01);
  const double e2 = verify_closed_form(1.0, 10.0, 0.005);
  const double e3 = verify_closed_form(1.0, 10.0, 0.0025);
  const double slope1 = std::log2(e1 / e2);
  const double slope2 = std::log2(e2 / e3);
  CHECK(slope1 == doctest::Approx(4.0).epsilon(0.05));
  CHECK(slope2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("amplitude is conserved and the phase winds uniformly on the branch") {
  const double w = 1.3;
  const double a = 1.0 / std::sqrt(2.0 * w);
  const double ten_periods = 10.0 * 2.0 * M_PI / w;
  auto traj = integrate_trajectory({a, 0.0}, w, ten_periods, 1e-3);

  double max_drift = 0.0;
  double max_phase_err = 0.0;
  for (const auto& s : traj.samples) {
    max_drift = std::max(max_drift, std::abs(std::abs(s.q) - a));
    const double expected = -w * s.t;
    double diff = std::arg(s.q) - expected;
    diff = std::remainder(diff, 2.0 * M_PI);
    max_phase_err = std::max(max_phase_err, std::abs(diff));
  }
  CHECK(max_drift < 1e-9);
  CHECK(max_phase_err < 1e-7);
}

TEST_CASE("off-branch initial data: self-convergence against a halved step") {
  // q0 real but != 1/sqrt(2w).  The ODE conserves |q| for any start
  // (d|q|^2/dt = 2 Re(1/2i) = 0); off the branch the circle is traced at
  // rate -1/(2|q0|^2) instead of -w.  Self-convergence is the oracle.
  const double w = 1.0, horizon = 5.0;
  auto coarse = integrate_trajectory({1.0, 0.0}, w, horizon, 5e-3);
  auto fine = integrate_trajectory({1.0, 0.0}, w, horizon, 2.5e-3);
  const complex<double> qc = coarse.samples.back().q;
  const complex<double> qf = fine.samples.back().q;
  CHECK(std::abs(qc - qf) < 1e-8);

  for (const auto& s : coarse.samples)
    CHECK(std::abs(std::abs(s.q) - 1.0) < 1e-10);

  const double rate = -1.0 / 2.0;  // -1/(2 r^2) with r = 1
  const double expected_phase = rate * horizon;
  CHECK(std::arg(qc) == doctest::Approx(std::remainder(expected_phase, 2 * M_PI))
                            .epsilon(1e-7));
  CHECK(std::abs(rate - (-w)) > 0.4);  // genuinely off the paper's branch
}

TEST_CASE("precondition and singularity guards") {
  CHECK_THROWS_AS((void)integrate_trajectory({1e-7, 0.0}, 1.0, 1.0, 1e-4),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)integrate_trajectory({1.0, 0.0}, 1.0, 1.0, 0.1),
                  std::invalid_argument);
}

TEST_CASE("trajectory CSV format") {
  auto traj = integrate_trajectory({1.0, 0.0}, 0.5, 1.0, 1e-3);
  std::ostringstream os;
  write_csv(traj, os);
  const std::string text = os.str();
  CHECK(text.rfind("t,re_q,im_q,abs_q,arg_q\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') ==
        static_cast<long>(traj.samples.size()) + 1);
}

TEST_CASE("guidance ODE is structurally unchanged by the eta -> q map") {
  auto grass = trajectory_ode(VariableKind::Grassmann);
  auto boson = trajectory_ode(VariableKind::Boson);
  CHECK(grass.rhs == "1/(2*i*conj(eta_k))");
  CHECK(boson.rhs == "1/(2*i*conj(q_k))");

  auto mapped = to_boson(grass);
  CHECK(mapped == boson);

  // Numeric RHS agrees with the closed-form derivative on the branch.
  const double w = 0.7;
  const double a = 1.0 / std::sqrt(2.0 * w);
  const complex<double> q = a * std::exp(complex<double>(0.0, -w * 0.3));
  const complex<double> qdot = complex<double>(0.0, -w) * q;
  CHECK(std::abs(boson.eval(q) - qdot) < 1e-14);
}
