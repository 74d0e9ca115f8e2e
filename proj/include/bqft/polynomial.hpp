#pragma once

// Commuting counterpart of the Grassmann algebra: polynomials in generators
// Qd0..Qd{n-1} (q-dagger) and q0..q{n-1}.  Products merge exponents with no
// parity sign and no nilpotency, so Qd q = q Qd and q^2 survives.

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace bqft::poly {

using Complex = std::complex<double>;

// Exponent vector of length 2n: [Qd_0..Qd_{n-1}, q_0..q_{n-1}].
using Monomial = std::vector<int>;

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int n_modes) : n_(n_modes) {}

  int modes() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Complex>& terms() const { return terms_; }

  Complex coeff(const Monomial& m) const;
  void add_term(const Monomial& m, Complex c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(Complex c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(Polynomial a, Complex c) { return a *= c; }
  friend Polynomial operator*(Complex c, Polynomial a) { return a *= c; }

  static Polynomial scalar(int n_modes, Complex c);
  static Polynomial q(int n_modes, int mode);
  static Polynomial q_dagger(int n_modes, int mode);

 private:
  int n_ = 0;
  std::map<Monomial, Complex> terms_;
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);

double max_abs_diff(const Polynomial& a, const Polynomial& b);

std::string dump(const Polynomial& a);

}  // namespace bqft::poly
