#pragma once

// Dirac-representation alpha/beta matrices, the momentum-space free
// Hamiltonian h(k) = alpha.k + beta m, its spectral projectors, the vacuum
// covariance in both sign conventions, and z-axis Lorentz boosts of spinors.
// Units c = hbar = 1; velocities are fractions of c.

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace bqft::spinor {

using Matrix4 = Eigen::Matrix4cd;
using Spinor = Eigen::Vector4cd;
using Vec3 = Eigen::Vector3d;

Matrix4 alpha(int axis);  // axis 0..2
Matrix4 beta();

// Rest-frame basis spinors u^1..u^4 (a = 1..4) are the unit vectors.
Spinor rest_spinor(int a);

// h(k) = alpha.k + beta m  (Hermitian).
Matrix4 hamiltonian_k(const Vec3& k, double m);

// Checks h(k)^2 = (k^2 + m^2) I entrywise to `tol`.
bool square_check(const Vec3& k, double m, double tol = 1e-12);

// P_pm = (I pm h/|E|)/2 with |E| = sqrt(k^2 + m^2).
// Throws std::invalid_argument for the degenerate point k = 0, m = 0.
std::pair<Matrix4, Matrix4> energy_projectors(const Vec3& k, double m);

enum class OmegaSign {
  Paper,             // +h/omega, the printed matrix
  EnergyConsistent,  // -h/omega = P_minus - P_plus; annihilators kill the vacuum
};

Matrix4 covariance_k(const Vec3& k, double m, OmegaSign sign);

class BoostParams {
 public:
  // Velocity along z in (-1, 1); throws std::invalid_argument otherwise.
  explicit BoostParams(double velocity);

  double velocity() const { return velocity_; }
  double rapidity() const { return std::abs(signed_rapidity_); }
  // Sign follows the velocity, so successive boosts add rapidities.
  double signed_rapidity() const { return signed_rapidity_; }
  double gamma() const { return std::cosh(signed_rapidity_); }

 private:
  double velocity_;
  double signed_rapidity_;
};

// Spinor boost taking a rest spinor to the spinor of a particle moving with
// +velocity along z: S = cosh(w/2) I + sinh(w/2) alpha_z for signed
// rapidity w.  S(u^1) = sqrt((E+m)/2m) [1, 0, p/(E+m), 0]^T with E = gamma m,
// p = gamma m v.
Matrix4 boost_operator(const BoostParams& b);
Spinor boost_spinor(const Spinor& u, const BoostParams& b);

}  // namespace bqft::spinor
