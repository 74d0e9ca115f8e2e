#include "bqft/grassmann.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bqft::grassmann {

namespace {

// Parity sign for merging two ascending monomials: each generator of b is
// moved left past every generator of a with a larger slot.
int merge_sign(Mask a, Mask b) {
  int swaps = 0;
  Mask bb = b;
  while (bb) {
    const int bit = std::countr_zero(bb);
    bb &= bb - 1;
    const Mask above = (bit + 1 < 64) ? (a >> (bit + 1)) : 0;
    swaps += std::popcount(above);
  }
  return (swaps & 1) ? -1 : 1;
}

void check_same_algebra(const Element& a, const Element& b) {
  if (a.modes() != b.modes()) {
    throw std::invalid_argument("grassmann: elements from different algebras (n=" +
                                std::to_string(a.modes()) + " vs n=" +
                                std::to_string(b.modes()) + ")");
  }
}

}  // namespace

Complex Element::scalar_part() const { return coeff(0); }

Complex Element::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

double Element::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [mask, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

void Element::add_term(Mask m, Complex c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < BerezinConvention::prune_eps) terms_.erase(it);
}

void Element::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < BerezinConvention::prune_eps)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Element& Element::operator+=(const Element& other) {
  check_same_algebra(*this, other);
  for (const auto& [mask, c] : other.terms_) add_term(mask, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  check_same_algebra(*this, other);
  for (const auto& [mask, c] : other.terms_) add_term(mask, -c);
  return *this;
}

Element& Element::operator*=(Complex c) {
  if (std::abs(c) < BerezinConvention::prune_eps) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, v] : terms_) v *= c;
  prune();
  return *this;
}

Algebra::Algebra(int n_modes) : n_(n_modes) {
  if (n_modes < 0 || 2 * n_modes > 62)
    throw std::invalid_argument("grassmann: mode count out of range");
}

int Algebra::slot(GeneratorIndex g) const {
  if (g.mode < 0 || g.mode >= n_)
    throw std::invalid_argument("grassmann: generator mode out of range");
  return g.kind == Kind::Conjugate ? g.mode : n_ + g.mode;
}

Element Algebra::scalar(Complex c) const {
  Element e(n_);
  e.add_term(0, c);
  return e;
}

Element Algebra::generator(GeneratorIndex g) const {
  Element e(n_);
  e.add_term(Mask{1} << slot(g), 1.0);
  return e;
}

Element Algebra::gaussian(const Eigen::MatrixXcd& omega) const {
  if (omega.rows() != n_ || omega.cols() != n_)
    throw std::invalid_argument("grassmann: covariance dimension mismatch");
  Element expo = zero();
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (std::abs(omega(i, j)) < BerezinConvention::prune_eps) continue;
      // eta-dag_i eta_j is already in canonical order, sign +1.
      const Mask m = (Mask{1} << i) | (Mask{1} << (n_ + j));
      expo.add_term(m, omega(i, j));
    }
  }
  return grassmann_exp(expo);
}

Element operator*(const Element& a, const Element& b) {
  check_same_algebra(a, b);
  Element out(a.modes());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;  // repeated generator vanishes
      out.add_term(ma | mb, ca * cb * static_cast<double>(merge_sign(ma, mb)));
    }
  }
  return out;
}

Element conjugate(const Element& a) {
  const int n = a.modes();
  Element out(n);
  for (const auto& [mask, c] : a.terms()) {
    const int grade = std::popcount(mask);
    // Reversal of a grade-p monomial costs p(p-1)/2 transpositions.
    int swaps = grade * (grade - 1) / 2;
    // Swap the conjugate and plain halves of the mask.
    const Mask conj_half = mask & ((Mask{1} << n) - 1);
    const Mask plain_half = mask >> n;
    const Mask swapped = (plain_half) | (conj_half << n);
    // Kind-swapping maps slot k <-> slot n+k; sorting the relabeled
    // sequence back to ascending order costs the crossings between the
    // two halves (every old-conjugate now sits above every old-plain).
    swaps += std::popcount(conj_half) * std::popcount(plain_half);
    const double sign = (swaps & 1) ? -1.0 : 1.0;
    out.add_term(swapped, std::conj(c) * sign);
  }
  return out;
}

Element grassmann_exp(const Element& a) {
  const int n = a.modes();
  Algebra alg(n);
  const Complex s = a.scalar_part();
  Element nil = a;
  nil.add_term(0, -s);

  Element sum = alg.one();
  Element power = alg.one();
  for (int k = 1; k <= 2 * n; ++k) {
    power = power * nil;
    if (power.is_zero()) break;
    Element term = power;
    term *= Complex(1.0 / std::tgamma(static_cast<double>(k) + 1.0));
    sum += term;
  }
  sum *= std::exp(s);
  return sum;
}

Element functional_derivative(const Element& a, GeneratorIndex g, Side side) {
  Algebra alg(a.modes());
  const int slot = alg.slot(g);
  const Mask gbit = Mask{1} << slot;
  Element out(a.modes());
  for (const auto& [mask, c] : a.terms()) {
    if (!(mask & gbit)) continue;
    const int crossings =
        side == Side::Left
            ? std::popcount(mask & (gbit - 1))                   // slots below g
            : std::popcount(mask & ~(gbit | (gbit - 1)));        // slots above g
    const double sign = (crossings & 1) ? -1.0 : 1.0;
    out.add_term(mask & ~gbit, c * sign);
  }
  return out;
}

Element berezin_integrate(const Element& a, std::span<const GeneratorIndex> vars) {
  Algebra alg(a.modes());
  Mask seen = 0;
  for (const auto& v : vars) {
    const Mask bit = Mask{1} << alg.slot(v);
    if (seen & bit)
      throw std::invalid_argument("grassmann: repeated integration variable");
    seen |= bit;
  }
  Element cur = a;
  // Rightmost differential acts first.
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    cur = functional_derivative(cur, *it, Side::Left);
  return cur;
}

Element berezin_integrate(const Element& a, std::initializer_list<GeneratorIndex> vars) {
  return berezin_integrate(a, std::span<const GeneratorIndex>(vars.begin(), vars.size()));
}

namespace {

// Measure D^2eta = prod_k D(eta-dag_k) D(eta_k), innermost first, built as
// the variable list {Ed_0, e_0, Ed_1, e_1, ...}.
std::vector<GeneratorIndex> full_measure(const std::vector<int>& modes) {
  std::vector<GeneratorIndex> vars;
  vars.reserve(2 * modes.size());
  for (int m : modes) {
    vars.push_back({Kind::Conjugate, m});
    vars.push_back({Kind::Plain, m});
  }
  return vars;
}

// Dual integrand in the doubled algebra: outer modes 0..n-1, inner n..2n-1.
//   exp( sum_i [theta-dag_i xi_i - xi-dag_i theta_i] + theta-dag Omega-dag theta )
Element dual_integrand(const Algebra& dual, int n, const Eigen::MatrixXcd& omega) {
  Element expo = dual.zero();
  const int nn = dual.modes();  // 2n
  const Eigen::MatrixXcd omega_dag = omega.adjoint();
  for (int i = 0; i < n; ++i) {
    // theta-dag_i xi_i : slots (n+i, nn+i), canonical order, sign +1.
    expo.add_term((Mask{1} << (n + i)) | (Mask{1} << (nn + i)), 1.0);
    // -xi-dag_i theta_i : slots (i, nn+n+i).
    expo.add_term((Mask{1} << i) | (Mask{1} << (nn + n + i)), -1.0);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (std::abs(omega_dag(i, j)) < BerezinConvention::prune_eps) continue;
      expo.add_term((Mask{1} << (n + i)) | (Mask{1} << (nn + n + j)), omega_dag(i, j));
    }
  return grassmann_exp(expo);
}

Element dual_by_integration(const Algebra& dual, int n, const Eigen::MatrixXcd& omega) {
  std::vector<int> inner(n);
  for (int i = 0; i < n; ++i) inner[i] = n + i;
  const auto vars = full_measure(inner);
  return berezin_integrate(dual_integrand(dual, n, omega),
                           std::span<const GeneratorIndex>(vars));
}

}  // namespace

GaussianDual gaussian_dual(const Eigen::MatrixXcd& omega) {
  const int n = static_cast<int>(omega.rows());
  if (omega.cols() != n) throw std::invalid_argument("grassmann: Omega must be square");
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(omega);
  if (!lu.isInvertible())
    throw std::invalid_argument("grassmann: singular covariance has no Gaussian dual");

  const Eigen::MatrixXcd omega_dag = omega.adjoint();
  GaussianDual result;
  result.prefactor = Eigen::MatrixXcd(-omega_dag).determinant();
  result.exponent = omega_dag.inverse();

  // Brute-force route in the doubled algebra; the outer modes play eta.
  Algebra dual(2 * n);
  Element integrated = dual_by_integration(dual, n, omega);

  // Closed form rebuilt over the outer modes of the doubled algebra.
  Eigen::MatrixXcd expanded = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  expanded.topLeftCorner(n, n) = result.exponent;
  Element closed = dual.gaussian(expanded);
  closed *= result.prefactor;

  Element diff = integrated - closed;
  const double scale = std::max(1.0, closed.max_abs_coeff());
  if (diff.max_abs_coeff() > 1e-10 * scale)
    throw std::runtime_error("grassmann: Gaussian dual routes disagree");
  return result;
}

double state_norm(const Eigen::MatrixXcd& omega) {
  const int n = static_cast<int>(omega.rows());
  if (omega.cols() != n) throw std::invalid_argument("grassmann: Omega must be square");

  const Eigen::MatrixXcd gram =
      Eigen::MatrixXcd::Identity(n, n) + omega.adjoint() * omega;
  const double by_formula = gram.determinant().real();

  // Explicit route: Psi* from the dual integral (valid for singular Omega
  // too), then integrate Psi* Psi over the outer modes.
  Algebra dual(2 * n);
  Element psi_star = dual_by_integration(dual, n, omega);
  Eigen::MatrixXcd expanded = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  expanded.topLeftCorner(n, n) = omega;
  Element psi = dual.gaussian(expanded);

  std::vector<int> outer(n);
  for (int i = 0; i < n; ++i) outer[i] = i;
  const auto vars = full_measure(outer);
  Element norm_el = berezin_integrate(psi_star * psi,
                                      std::span<const GeneratorIndex>(vars));

  const Complex by_integration = norm_el.scalar_part();
  const double scale = std::max(1.0, std::abs(by_formula));
  if (std::abs(by_integration - Complex(by_formula)) > 1e-10 * scale)
    throw std::runtime_error("grassmann: state norm routes disagree");
  return by_formula;
}

std::string dump(const Element& a) {
  std::ostringstream os;
  os.precision(16);
  const int n = a.modes();
  for (const auto& [mask, c] : a.terms()) {
    if (mask == 0) {
      os << "1";
    } else {
      bool first = true;
      for (int s = 0; s < 2 * n; ++s) {
        if (!(mask & (Mask{1} << s))) continue;
        if (!first) os << " ";
        first = false;
        if (s < n)
          os << "E" << s;
        else
          os << "e" << (s - n);
      }
    }
    os << " -> (" << c.real() << "," << c.imag() << ")\n";
  }
  return os.str();
}

}  // namespace bqft::grassmann
