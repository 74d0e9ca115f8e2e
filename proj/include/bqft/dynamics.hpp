#pragma once

// Polar split of spinor field values and the guided mode-amplitude dynamics
// qdot = 1 / (2i conj(q)), integrated with classical fixed-step RK4 and
// verified against the closed form q(t) = A exp(-i w t), A = 1/sqrt(2w).

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bqft::bohm {

using Complex = std::complex<double>;

struct PolarDecomposition {
  double amplitude = 0.0;          // R >= 0 (Euclidean norm)
  double phase = 0.0;              // S, common scalar phase
  Eigen::Vector4cd spinor;         // unit-norm factor with zero common phase
};

// S is the phase of the largest-magnitude component (ties: lowest index).
// Throws std::invalid_argument for psi = 0.
PolarDecomposition polar_decompose(const Eigen::Vector4cd& psi);

struct TrajectorySample {
  double t;
  Complex q;
};

struct ModeTrajectory {
  double omega = 0.0;
  double step = 0.0;
  std::vector<TrajectorySample> samples;
};

// Fixed-step RK4 for qdot = 1/(2i conj(q)).  Requires |q0| >= 1e-6 and
// dt <= horizon/1000; throws std::runtime_error if |q| drops below 1e-8
// (the right-hand side is singular at q = 0).
ModeTrajectory integrate_trajectory(Complex q0, double omega, double horizon,
                                    double dt);

// Integrates from q0 = 1/sqrt(2w) and returns the max deviation from the
// closed form over all samples.
double verify_closed_form(double omega, double horizon, double dt = 1e-3);

// CSV with header t,re_q,im_q,abs_q,arg_q.
void write_csv(const ModeTrajectory& traj, std::ostream& os);

// The generated right-hand side of the guidance equation, before and after
// the eta -> q relabeling.  The map must be the identity on the structure.
enum class VariableKind { Grassmann, Boson };

struct TrajectoryOde {
  VariableKind kind;
  std::string variable;      // "eta_k" or "q_k"
  std::string rhs;           // rendered as 1/(2*i*conj(<variable>))

  Complex eval(Complex q) const;  // numeric RHS (meaningful after the map)

  bool operator==(const TrajectoryOde&) const = default;
};

TrajectoryOde trajectory_ode(VariableKind kind);
TrajectoryOde to_boson(const TrajectoryOde& ode);

}  // namespace bqft::bohm
