#include "bqft/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace bqft::bohm {

PolarDecomposition polar_decompose(const Eigen::Vector4cd& psi) {
  const double norm = psi.norm();
  if (norm == 0.0)
    throw std::invalid_argument("bohm: zero spinor has no polar phase");

  int lead = 0;
  double best = std::abs(psi(0));
  for (int i = 1; i < 4; ++i) {
    const double a = std::abs(psi(i));
    if (a > best) {
      best = a;
      lead = i;
    }
  }
  PolarDecomposition out;
  out.phase = std::arg(psi(lead));
  out.amplitude = norm;
  out.spinor = psi * std::exp(Complex(0.0, -out.phase)) / norm;
  return out;
}

namespace {

Complex guidance_rhs(Complex q) {
  return 1.0 / (Complex(0.0, 2.0) * std::conj(q));
}

}  // namespace

ModeTrajectory integrate_trajectory(Complex q0, double omega, double horizon,
                                    double dt) {
  if (std::abs(q0) < 1e-6)
    throw std::invalid_argument("bohm: initial amplitude below 1e-6");
  if (!(dt > 0.0) || dt > horizon / 1000.0)
    throw std::invalid_argument("bohm: step must satisfy 0 < dt <= horizon/1000");

  ModeTrajectory traj;
  traj.omega = omega;
  traj.step = dt;
  const auto steps = static_cast<std::size_t>(std::ceil(horizon / dt - 1e-9));
  traj.samples.reserve(steps + 1);

  Complex q = q0;
  double t = 0.0;
  traj.samples.push_back({t, q});
  for (std::size_t i = 0; i < steps; ++i) {
    const double h = std::min(dt, horizon - t);
    const Complex k1 = guidance_rhs(q);
    const Complex k2 = guidance_rhs(q + 0.5 * h * k1);
    const Complex k3 = guidance_rhs(q + 0.5 * h * k2);
    const Complex k4 = guidance_rhs(q + h * k3);
    q += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = (i + 1 < steps) ? t + h : horizon;
    if (std::abs(q) < 1e-8)
      throw std::runtime_error("bohm: trajectory hit the q = 0 singularity");
    traj.samples.push_back({t, q});
  }
  return traj;
}

double verify_closed_form(double omega, double horizon, double dt) {
  if (!(omega > 0.0)) throw std::invalid_argument("bohm: omega must be positive");
  const double a = 1.0 / std::sqrt(2.0 * omega);
  const ModeTrajectory traj = integrate_trajectory(Complex(a, 0.0), omega, horizon, dt);
  double max_err = 0.0;
  for (const auto& s : traj.samples) {
    const Complex exact = a * std::exp(Complex(0.0, -omega * s.t));
    max_err = std::max(max_err, std::abs(s.q - exact));
  }
  return max_err;
}

void write_csv(const ModeTrajectory& traj, std::ostream& os) {
  os << "t,re_q,im_q,abs_q,arg_q\n";
  char line[160];
  for (const auto& s : traj.samples) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,%.17g\n", s.t,
                  s.q.real(), s.q.imag(), std::abs(s.q), std::arg(s.q));
    os << line;
  }
}

Complex TrajectoryOde::eval(Complex q) const { return guidance_rhs(q); }

TrajectoryOde trajectory_ode(VariableKind kind) {
  const std::string var = kind == VariableKind::Grassmann ? "eta_k" : "q_k";
  return {kind, var, "1/(2*i*conj(" + var + "))"};
}

TrajectoryOde to_boson(const TrajectoryOde& ode) {
  if (ode.kind == VariableKind::Boson) return ode;
  TrajectoryOde mapped = ode;
  mapped.kind = VariableKind::Boson;
  const std::string from = "eta_k", to = "q_k";
  mapped.variable = to;
  std::string rhs = ode.rhs;
  if (auto pos = rhs.find(from); pos != std::string::npos)
    rhs.replace(pos, from.size(), to);
  mapped.rhs = rhs;
  return mapped;
}

}  // namespace bqft::bohm
