#include "bqft/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bqft::poly {

namespace {
constexpr double kPrune = 1e-14;
}

Complex Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

void Polynomial::add_term(const Monomial& m, Complex c) {
  if (static_cast<int>(m.size()) != 2 * n_)
    throw std::invalid_argument("poly: monomial length mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPrune) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (n_ != other.n_) throw std::invalid_argument("poly: mode count mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator*=(Complex c) {
  if (std::abs(c) < kPrune) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::scalar(int n_modes, Complex c) {
  Polynomial p(n_modes);
  p.add_term(Monomial(2 * n_modes, 0), c);
  return p;
}

Polynomial Polynomial::q(int n_modes, int mode) {
  Polynomial p(n_modes);
  Monomial m(2 * n_modes, 0);
  m[n_modes + mode] = 1;
  p.add_term(m, 1.0);
  return p;
}

Polynomial Polynomial::q_dagger(int n_modes, int mode) {
  Polynomial p(n_modes);
  Monomial m(2 * n_modes, 0);
  m[mode] = 1;
  p.add_term(m, 1.0);
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.modes() != b.modes()) throw std::invalid_argument("poly: mode count mismatch");
  Polynomial out(a.modes());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma;
      for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

double max_abs_diff(const Polynomial& a, const Polynomial& b) {
  Polynomial d = a;
  d += -1.0 * b;
  double m = 0.0;
  for (const auto& [mono, c] : d.terms()) m = std::max(m, std::abs(c));
  return m;
}

std::string dump(const Polynomial& a) {
  std::ostringstream os;
  os.precision(16);
  const int n = a.modes();
  for (const auto& [mono, c] : a.terms()) {
    bool first = true;
    for (int i = 0; i < 2 * n; ++i) {
      if (mono[i] == 0) continue;
      if (!first) os << " ";
      first = false;
      os << (i < n ? "Qd" : "q") << (i % n);
      if (mono[i] > 1) os << "^" << mono[i];
    }
    if (first) os << "1";
    os << " -> (" << c.real() << "," << c.imag() << ")\n";
  }
  return os.str();
}

}  // namespace bqft::poly
