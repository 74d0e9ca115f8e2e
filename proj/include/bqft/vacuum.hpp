#pragma once

// Gaussian vacuum functionals over a truncated mode set: the field-operator
// representation psi = (eta + d/d eta-dag)/sqrt(2), creation/annihilation on
// the Gaussian body, the vacuum-energy trace, and the eta -> q bosonization.

#include <vector>

#include <Eigen/Dense>

#include "bqft/grassmann.hpp"
#include "bqft/polynomial.hpp"
#include "bqft/spinor.hpp"

namespace bqft::vacuum {

enum class Branch { Particle, Antiparticle };

// One spinor-mode state: a box momentum, a spinor component, and the branch
// that fixes the sign of its energy.
struct Mode {
  Eigen::Vector3d k = Eigen::Vector3d::Zero();
  int spinor_index = 0;  // 0..3
  Branch branch = Branch::Particle;
  double omega = 0.0;    // sqrt(k^2 + m^2) > 0

  double energy() const { return branch == Branch::Particle ? omega : -omega; }
};

struct ModeBasis {
  std::vector<Mode> modes;
  double box_length = 1.0;
  double volume = 1.0;

  // Four spinor-mode entries per momentum: components 0,1 on the particle
  // branch, 2,3 on the antiparticle branch.  Momenta must sit on the
  // 2 pi / L grid.
  static ModeBasis dirac_box(double box_length, double mass,
                             const std::vector<Eigen::Vector3d>& kpoints);

  // Abstract single-component modes for symbolic checks: one entry per
  // signed energy, unit box.
  static ModeBasis from_energies(const std::vector<double>& signed_energies);
};

struct FunctionalState {
  grassmann::Element body;       // vacuum: exp(eta-dag Omega eta); N = 1
  Eigen::MatrixXcd covariance;
  double e0 = 0.0;
  double volume = 1.0;

  double phase(double t) const { return -e0 * t; }
};

// Mode-indexed Schrodinger field operators acting on wave functionals:
//   psi_n      = (eta_n      + d/d eta-dag_n) / sqrt(2)
//   psi-dag_n  = (eta-dag_n  + d/d eta_n)     / sqrt(2)
grassmann::Element apply_field(const grassmann::Element& x, int mode);
grassmann::Element apply_field_dagger(const grassmann::Element& x, int mode);

// Gaussian state with phase -E0 t, E0 = (1/2) Tr[diag(E)(1 + Omega)].
// Throws std::invalid_argument on dimension mismatch.
FunctionalState build_vacuum(const ModeBasis& basis, const Eigen::MatrixXcd& omega);

// Applies the branch's annihilator (psi for particle modes, psi-dag for
// antiparticle modes) and reports whether the result is the zero element.
bool annihilation_check(const FunctionalState& state, const ModeBasis& basis,
                        int mode, double tol = 1e-12);

struct ExcitationResult {
  FunctionalState state;
  bool pauli_blocked = false;  // creation hit an occupied mode, body = 0
};

// (1/sqrt V) psi-dag_n applied to the state; on the vacuum this produces the
// one-particle functional sqrt(2/V) eta-dag_n exp(eta-dag Omega eta).
ExcitationResult create_excitation(const FunctionalState& state,
                                   const ModeBasis& basis, int mode);

// -(1/2) sum over modes of sqrt(k^2 + m^2), cross-checked per momentum
// against (1/2) Tr[h(k) Omega(k)] with the energy-consistent covariance.
double vacuum_energy(const ModeBasis& basis, double mass);

// eta -> q map: every Grassmann monomial becomes the commuting monomial with
// the same generator content and the identical coefficient.
poly::Polynomial bosonize(const grassmann::Element& x);

struct BosonState {
  poly::Polynomial body;
  Eigen::MatrixXcd covariance;
  double e0 = 0.0;
  double volume = 1.0;
};

BosonState bosonize(const FunctionalState& state);

// Inverse of bosonize on multilinear polynomials (all exponents 0/1).
// Throws std::invalid_argument if an exponent exceeds 1.
grassmann::Element multilinear_to_grassmann(const poly::Polynomial& p);

// The commuting two-mode overlap kernel built from the monomial table:
// 1 + Qd0 q1 + q0 Qd1 + Qd0 q0 Qd1 q1  (mode 0 unprimed, mode 1 primed).
poly::Polynomial bosonic_overlap_kernel();

}  // namespace bqft::vacuum
