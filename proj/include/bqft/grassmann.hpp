#pragma once

// Finite complex Grassmann algebra over 2n anti-commuting generators:
// n conjugate generators E0..E{n-1} (eta-dagger) and n plain generators
// e0..e{n-1} (eta).  Elements are stored as sparse coefficient maps keyed
// by generator subsets; products carry the graded parity sign.
//
// Conventions pinned here and consulted everywhere:
//   * Canonical monomial order: every conjugate generator precedes every
//     plain generator; within a block, ascending mode index.
//   * Berezin integration is the left derivative (so integral(eta) = 1,
//     integral(1) = 0).  Iterated integrals consume the variable list
//     right to left: integrate(a, {Ed, e}) computes the measure D(eta-dag)
//     D(eta) with the innermost (rightmost) differential acting first.
//   * Coefficients below 1e-14 in magnitude are pruned, so exact algebraic
//     zeros stay exactly zero.

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bqft::grassmann {

using Complex = std::complex<double>;
using Mask = std::uint64_t;

enum class Kind { Conjugate, Plain };

struct GeneratorIndex {
  Kind kind;
  int mode;
};

// Defining rules of the Berezin integral and the iterated-measure order.
// One convention for the whole library; the Gaussian identities are tested
// against brute-force expansion under exactly this convention.
struct BerezinConvention {
  static constexpr double prune_eps = 1e-14;
};

class Element {
 public:
  Element() = default;
  explicit Element(int n_modes) : n_(n_modes) {}

  int modes() const { return n_; }
  bool is_zero() const { return terms_.empty(); }

  const std::map<Mask, Complex>& terms() const { return terms_; }

  Complex scalar_part() const;
  Complex coeff(Mask m) const;
  double max_abs_coeff() const;

  void add_term(Mask m, Complex c);
  void prune();

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(Complex c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, Complex c) { return a *= c; }
  friend Element operator*(Complex c, Element a) { return a *= c; }

 private:
  int n_ = 0;
  std::map<Mask, Complex> terms_;
};

class Algebra {
 public:
  explicit Algebra(int n_modes);

  int modes() const { return n_; }
  int generators() const { return 2 * n_; }

  // Bit position of a generator in the subset mask (conjugates first).
  int slot(GeneratorIndex g) const;

  Element zero() const { return Element(n_); }
  Element scalar(Complex c) const;
  Element one() const { return scalar(1.0); }
  Element generator(GeneratorIndex g) const;

  // exp(sum_ij eta-dag_i Omega_ij eta_j), expanded exactly.
  Element gaussian(const Eigen::MatrixXcd& omega) const;

  BerezinConvention convention;

 private:
  int n_;
};

// Graded product; throws std::invalid_argument on mismatched mode count.
Element operator*(const Element& a, const Element& b);

// Antilinear antiautomorphism: coefficients conjugated, each monomial
// reversed with eta <-> eta-dagger swapped, re-sorted with parity.
Element conjugate(const Element& a);

// Truncated power series; the scalar part is exponentiated separately and
// the nilpotent remainder terminates by grade counting.
Element grassmann_exp(const Element& a);

enum class Side { Left, Right };

Element functional_derivative(const Element& a, GeneratorIndex g,
                              Side side = Side::Left);

// Iterated Berezin integral; vars are consumed right to left.
// Throws on repeated or out-of-range generators.
Element berezin_integrate(const Element& a, std::span<const GeneratorIndex> vars);
Element berezin_integrate(const Element& a, std::initializer_list<GeneratorIndex> vars);

struct GaussianDual {
  Complex prefactor;        // det(-Omega-dag) under this library's measure
  Eigen::MatrixXcd exponent;  // (Omega-dag)^{-1}
};

// Dual of the Gaussian state exp(eta-dag Omega eta), computed both by the
// closed formula and by explicit Berezin integration of the overlap kernel;
// throws std::runtime_error if the two routes disagree, std::invalid_argument
// for singular Omega.
GaussianDual gaussian_dual(const Eigen::MatrixXcd& omega);

// <Psi|Psi> of the Gaussian state: det(1 + Omega-dag Omega) checked against
// the explicit integral of Psi* Psi.
double state_norm(const Eigen::MatrixXcd& omega);

// Sorted "generators -> coefficient" text lines for golden tests.
// Conjugate generators print as E<k>, plain generators as e<k>.
std::string dump(const Element& a);

}  // namespace bqft::grassmann
