#include "bqft/spinor.hpp"

#include <cmath>
#include <stdexcept>

namespace bqft::spinor {

namespace {

Eigen::Matrix2cd pauli(int axis) {
  Eigen::Matrix2cd s;
  const std::complex<double> i{0.0, 1.0};
  switch (axis) {
    case 0: s << 0, 1, 1, 0; break;
    case 1: s << 0, -i, i, 0; break;
    case 2: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("spinor: axis must be 0..2");
  }
  return s;
}

}  // namespace

Matrix4 alpha(int axis) {
  Matrix4 a = Matrix4::Zero();
  a.topRightCorner<2, 2>() = pauli(axis);
  a.bottomLeftCorner<2, 2>() = pauli(axis);
  return a;
}

Matrix4 beta() {
  Matrix4 b = Matrix4::Zero();
  b.diagonal() << 1, 1, -1, -1;
  return b;
}

Spinor rest_spinor(int a) {
  if (a < 1 || a > 4) throw std::invalid_argument("spinor: basis index must be 1..4");
  Spinor u = Spinor::Zero();
  u(a - 1) = 1.0;
  return u;
}

Matrix4 hamiltonian_k(const Vec3& k, double m) {
  if (m < 0) throw std::invalid_argument("spinor: mass must be non-negative");
  Matrix4 h = beta() * m;
  for (int i = 0; i < 3; ++i) h += alpha(i) * k(i);
  return h;
}

bool square_check(const Vec3& k, double m, double tol) {
  const Matrix4 h = hamiltonian_k(k, m);
  const Matrix4 expected = Matrix4::Identity() * (k.squaredNorm() + m * m);
  return ((h * h) - expected).cwiseAbs().maxCoeff() <= tol;
}

std::pair<Matrix4, Matrix4> energy_projectors(const Vec3& k, double m) {
  const double e = std::sqrt(k.squaredNorm() + m * m);
  if (e == 0.0)
    throw std::invalid_argument("spinor: degenerate spectrum at k = 0, m = 0");
  const Matrix4 h = hamiltonian_k(k, m);
  const Matrix4 p_plus = 0.5 * (Matrix4::Identity() + h / e);
  const Matrix4 p_minus = 0.5 * (Matrix4::Identity() - h / e);
  return {p_plus, p_minus};
}

Matrix4 covariance_k(const Vec3& k, double m, OmegaSign sign) {
  const double e = std::sqrt(k.squaredNorm() + m * m);
  if (e == 0.0)
    throw std::invalid_argument("spinor: degenerate spectrum at k = 0, m = 0");
  const Matrix4 h_over_e = hamiltonian_k(k, m) / e;
  return sign == OmegaSign::Paper ? h_over_e : Matrix4(-h_over_e);
}

BoostParams::BoostParams(double velocity) : velocity_(velocity) {
  if (!(std::abs(velocity) < 1.0))
    throw std::invalid_argument("spinor: |v| must be < 1");
  signed_rapidity_ = std::atanh(velocity);
}

Matrix4 boost_operator(const BoostParams& b) {
  const double half = 0.5 * b.signed_rapidity();
  return std::cosh(half) * Matrix4::Identity() + std::sinh(half) * alpha(2);
}

Spinor boost_spinor(const Spinor& u, const BoostParams& b) {
  return boost_operator(b) * u;
}

}  // namespace bqft::spinor
