#include "bqft/vacuum.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace bqft::vacuum {

using grassmann::Algebra;
using grassmann::Element;
using grassmann::GeneratorIndex;
using grassmann::Kind;
using grassmann::Mask;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Symbolic bodies above this size are not desk-scale any more.
constexpr int kMaxSymbolicModes = 12;

}  // namespace

ModeBasis ModeBasis::dirac_box(double box_length, double mass,
                               const std::vector<Eigen::Vector3d>& kpoints) {
  if (box_length <= 0) throw std::invalid_argument("vacuum: box length must be positive");
  ModeBasis basis;
  basis.box_length = box_length;
  basis.volume = box_length * box_length * box_length;
  const double step = kTwoPi / box_length;
  for (const auto& k : kpoints) {
    for (int i = 0; i < 3; ++i) {
      const double n = k(i) / step;
      if (std::abs(n - std::round(n)) > 1e-9)
        throw std::invalid_argument("vacuum: momentum off the 2 pi / L grid");
    }
    const double omega = std::sqrt(k.squaredNorm() + mass * mass);
    if (omega <= 0)
      throw std::invalid_argument("vacuum: massless zero mode has no positive omega");
    for (int s = 0; s < 4; ++s)
      basis.modes.push_back({k, s, s < 2 ? Branch::Particle : Branch::Antiparticle, omega});
  }
  return basis;
}

ModeBasis ModeBasis::from_energies(const std::vector<double>& signed_energies) {
  ModeBasis basis;
  for (double e : signed_energies) {
    if (e == 0.0) throw std::invalid_argument("vacuum: mode energy must be nonzero");
    basis.modes.push_back({Eigen::Vector3d::Zero(), 0,
                           e > 0 ? Branch::Particle : Branch::Antiparticle,
                           std::abs(e)});
  }
  return basis;
}

grassmann::Element apply_field(const grassmann::Element& x, int mode) {
  Algebra alg(x.modes());
  const GeneratorIndex eta{Kind::Plain, mode};
  const GeneratorIndex eta_dag{Kind::Conjugate, mode};
  Element out = alg.generator(eta) * x;
  out += functional_derivative(x, eta_dag);
  out *= 1.0 / std::sqrt(2.0);
  return out;
}

grassmann::Element apply_field_dagger(const grassmann::Element& x, int mode) {
  Algebra alg(x.modes());
  const GeneratorIndex eta{Kind::Plain, mode};
  const GeneratorIndex eta_dag{Kind::Conjugate, mode};
  Element out = alg.generator(eta_dag) * x;
  out += functional_derivative(x, eta);
  out *= 1.0 / std::sqrt(2.0);
  return out;
}

FunctionalState build_vacuum(const ModeBasis& basis, const Eigen::MatrixXcd& omega) {
  const int n = static_cast<int>(basis.modes.size());
  if (omega.rows() != n || omega.cols() != n)
    throw std::invalid_argument("vacuum: covariance dimension does not match basis");
  if (n > kMaxSymbolicModes)
    throw std::invalid_argument("vacuum: symbolic vacuum limited to 12 modes");

  FunctionalState state;
  Algebra alg(n);
  state.body = alg.gaussian(omega);
  state.covariance = omega;
  state.volume = basis.volume;

  // E0 = (1/2) Tr[diag(E)(1 + Omega)] over the declared modes.
  std::complex<double> e0 = 0.0;
  for (int i = 0; i < n; ++i)
    e0 += 0.5 * basis.modes[i].energy() * (1.0 + omega(i, i));
  state.e0 = e0.real();
  return state;
}

bool annihilation_check(const FunctionalState& state, const ModeBasis& basis,
                        int mode, double tol) {
  if (mode < 0 || mode >= static_cast<int>(basis.modes.size()))
    throw std::invalid_argument("vacuum: mode index out of range");
  const Element out = basis.modes[mode].branch == Branch::Particle
                          ? apply_field(state.body, mode)
                          : apply_field_dagger(state.body, mode);
  return out.max_abs_coeff() < tol;
}

ExcitationResult create_excitation(const FunctionalState& state,
                                   const ModeBasis& basis, int mode) {
  if (mode < 0 || mode >= static_cast<int>(basis.modes.size()))
    throw std::invalid_argument("vacuum: mode index out of range");
  ExcitationResult result;
  result.state = state;
  result.state.body = apply_field_dagger(state.body, mode);
  result.state.body *= 1.0 / std::sqrt(basis.volume);
  result.pauli_blocked = result.state.body.is_zero();
  return result;
}

double vacuum_energy(const ModeBasis& basis, double mass) {
  double by_sum = 0.0;
  for (const auto& mode : basis.modes) by_sum -= 0.5 * mode.omega;

  // Matrix route: group the entries by momentum, (1/2) Tr[h Omega] each.
  double by_trace = 0.0;
  std::vector<Eigen::Vector3d> seen;
  for (const auto& mode : basis.modes) {
    bool dup = false;
    for (const auto& k : seen)
      if ((k - mode.k).norm() < 1e-12) { dup = true; break; }
    if (dup) continue;
    seen.push_back(mode.k);
    int count = 0;
    for (const auto& other : basis.modes)
      if ((other.k - mode.k).norm() < 1e-12) ++count;
    if (count != 4) continue;  // abstract bases have no 4x4 structure
    const auto h = spinor::hamiltonian_k(mode.k, mass);
    const auto w = spinor::covariance_k(mode.k, mass, spinor::OmegaSign::EnergyConsistent);
    by_trace += 0.5 * (h * w).trace().real();
  }
  if (seen.size() * 4 == basis.modes.size() && !basis.modes.empty()) {
    if (std::abs(by_trace - by_sum) > 1e-10 * std::max(1.0, std::abs(by_sum)))
      throw std::runtime_error("vacuum: energy trace and eigenvalue sum disagree");
  }
  return by_sum;
}

poly::Polynomial bosonize(const grassmann::Element& x) {
  const int n = x.modes();
  poly::Polynomial out(n);
  for (const auto& [mask, c] : x.terms()) {
    poly::Monomial mono(2 * n, 0);
    for (int s = 0; s < 2 * n; ++s)
      if (mask & (Mask{1} << s)) mono[s] = 1;
    out.add_term(mono, c);
  }
  return out;
}

BosonState bosonize(const FunctionalState& state) {
  return {bosonize(state.body), state.covariance, state.e0, state.volume};
}

grassmann::Element multilinear_to_grassmann(const poly::Polynomial& p) {
  const int n = p.modes();
  Element out(n);
  for (const auto& [mono, c] : p.terms()) {
    Mask mask = 0;
    for (int s = 0; s < 2 * n; ++s) {
      if (mono[s] == 0) continue;
      if (mono[s] > 1)
        throw std::invalid_argument("vacuum: polynomial is not multilinear");
      mask |= Mask{1} << s;
    }
    out.add_term(mask, c);
  }
  return out;
}

poly::Polynomial bosonic_overlap_kernel() {
  using poly::Polynomial;
  const int n = 2;  // mode 0 unprimed, mode 1 primed
  // Basis functionals 1, Qd, q, Qd q paired with the conjugates of their
  // primed counterparts; commuting products, all signs positive.
  Polynomial one = Polynomial::scalar(n, 1.0);
  Polynomial qd = Polynomial::q_dagger(n, 0), q = Polynomial::q(n, 0);
  Polynomial qdp = Polynomial::q_dagger(n, 1), qp = Polynomial::q(n, 1);
  return one + qd * qp + q * qdp + qd * q * qdp * qp;
}

}  // namespace bqft::vacuum
