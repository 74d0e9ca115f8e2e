#pragma once

// Emergent-profile synthesis: angular average of plane waves over the
// momentum shell |k| = mu (Gauss-Legendre x uniform azimuth), the box-lattice
// shell sum it must converge to, the closed-form rest profile
// u^1 (1/sqrt(2 V w)) (1/2pi^2) sin(mu r)/r theta(t) sin(w t), its z-boosted
// image under substitution z' = gamma(z - v t), t' = gamma(t - v z), and a
// central-difference Klein-Gordon residual probe.

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "bqft/spinor.hpp"

namespace bqft::synth {

using Complex = std::complex<double>;

struct SpacetimePoint {
  double x = 0.0, y = 0.0, z = 0.0, t = 0.0;
};

struct ShellSpec {
  double mu = 1.0;            // shell radius = mass (units c = hbar = 1)
  double omega = 0.0;         // mode frequency; consistent value sqrt(2) mu
  int quadrature_order = 32;  // >= 8
  double box_length = 60.0;
  double volume = 216000.0;

  // omega = sqrt(mu^2 + mu^2), the Klein-Gordon-consistent dispersion on
  // the |k| = mu shell.
  static ShellSpec make(double mu, double box_length, int order = 32);
  // Same spec with an explicit omega (e.g. the wrong-dispersion control).
  ShellSpec with_omega(double w) const;
};

enum class ProfileVariant {
  Eq37,  // prefactor 1/(2 pi^2), temporal factor sin(w t)
  Eq35,  // extra mu/omega bookkeeping: mu/(2 pi^2) and sin(w t)/omega
};

enum class BoostVariant {
  Substitution,  // gamma^2 (z - v t)^2 under the radical, a true Lorentz map
  Literal,       // gamma^1 (z - v t)^2 as printed; fails the KG probe
};

struct BoostedFrame {
  explicit BoostedFrame(double velocity);  // v in [0, 1)
  double v = 0.0;
  double gamma = 1.0;
};

// Average of e^{i k.x} over directions of |k| = mu; equals sin(mu r)/(mu r).
double shell_average(double mu, const Eigen::Vector3d& x, int order);

// Average of e^{i k.x} over box modes k = (2 pi / L) n with ||k| - mu| <= delta.
// Throws std::runtime_error when the band holds fewer than 50 modes.
Complex lattice_shell_sum(double mu, double delta, double L,
                          const Eigen::Vector3d& x);

Eigen::Vector4cd closed_form_profile(const ShellSpec& spec, const SpacetimePoint& p,
                                     ProfileVariant variant = ProfileVariant::Eq37);

Eigen::Vector4cd boost_profile(const ShellSpec& spec, const BoostedFrame& frame,
                               const SpacetimePoint& p,
                               ProfileVariant variant = ProfileVariant::Eq37,
                               BoostVariant boost_variant = BoostVariant::Substitution);

// Scalar component-0 field as a function of the point, for residual probes.
std::function<Complex(const SpacetimePoint&)> profile_scalar(
    const ShellSpec& spec, ProfileVariant variant = ProfileVariant::Eq37);
std::function<Complex(const SpacetimePoint&)> boosted_profile_scalar(
    const ShellSpec& spec, const BoostedFrame& frame,
    ProfileVariant variant = ProfileVariant::Eq37,
    BoostVariant boost_variant = BoostVariant::Substitution);

struct Region {
  SpacetimePoint lo, hi;
  std::array<int, 4> samples = {4, 4, 4, 4};
};

// Smoothness guards: true iff the point is clear of the theta wavefront and
// of the 3h ball around the (possibly boosted) spatial origin.
using SmoothGuard = std::function<bool(const SpacetimePoint&)>;
using GuardFactory = std::function<SmoothGuard(double h)>;

SmoothGuard rest_smooth_guard(double h);
SmoothGuard boosted_smooth_guard(const BoostedFrame& frame, double h);

// Max over the region of |phi_tt - lap(phi) + mass^2 phi| by central second
// differences with step h.  Every stencil point must pass smooth_ok; a
// violation throws std::invalid_argument.
double kg_residual(const std::function<Complex(const SpacetimePoint&)>& phi,
                   double mass, double h, const Region& region,
                   const SmoothGuard& smooth_ok);

struct ResidualLevel {
  double h;
  double max_residual;
};

struct ResidualReport {
  std::vector<ResidualLevel> levels;
  double slope = 0.0;  // least-squares slope of log(residual) vs log(h)
};

ResidualReport residual_convergence(
    const std::function<Complex(const SpacetimePoint&)>& phi, double mass,
    const Region& region, const GuardFactory& guard, double h0, int levels);

// Canonical probe regions used by the verification suite and the CLI.
Region default_rest_region();
Region default_boosted_region(const BoostedFrame& frame);

}  // namespace bqft::synth
