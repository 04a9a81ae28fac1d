#include "peakon/solution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "peakon/detail/dual.hpp"
#include "peakon/detail/roots.hpp"
#include "peakon/error.hpp"

namespace peakon {

const char* to_string(Side s) noexcept { return s == Side::left ? "left" : "right"; }

namespace {

using detail::Dual;

using detail::is_finite;
bool is_finite(double x) { return std::isfinite(x); }
bool is_finite(const std::complex<double>& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }
bool is_finite(const Polynomial& p) {
  return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                     [](double c) { return std::isfinite(c); });
}

// f = a e^{x/2} + b e^{-x/2}; skips exact zeros so e^{x/2} overflow cannot poison them.
template <class S>
S combine(const S& a, const S& b, double e_plus, double e_minus) {
  S out = S(0.0);
  if (!(a == S(0.0))) out = out + a * e_plus;
  if (!(b == S(0.0))) out = out + b * e_minus;
  return out;
}

// Crossing an atom: f is continuous and f'(x+) - f'(x-) = -z w f(x).
template <class S>
std::vector<GapCoefficients<S>> transfer(std::span<const Atom> atoms, Side side, const S& z) {
  const std::size_t n = atoms.size();
  std::vector<GapCoefficients<S>> gaps(n + 1, GapCoefficients<S>{S(0.0), S(0.0)});
  auto check = [&](const GapCoefficients<S>& g, std::size_t k) {
    if (!is_finite(g.a) || !is_finite(g.b)) {
      std::ostringstream msg;
      msg << "transfer coefficients overflow after the atom at x = " << atoms[k].x;
      fail(ErrorKind::overflow, msg.str());
    }
  };

  if (side == Side::right) {
    gaps[n] = {S(0.0), S(1.0)};
    for (std::size_t k = n; k-- > 0;) {
      const double ep = std::exp(0.5 * atoms[k].x);
      const double em = std::exp(-0.5 * atoms[k].x);
      const auto& g = gaps[k + 1];
      const S t = z * (combine(g.a, g.b, ep, em) * atoms[k].w);
      gaps[k] = {g.a + t * em, g.b - t * ep};
      check(gaps[k], k);
    }
  } else {
    gaps[0] = {S(1.0), S(0.0)};
    for (std::size_t k = 0; k < n; ++k) {
      const double ep = std::exp(0.5 * atoms[k].x);
      const double em = std::exp(-0.5 * atoms[k].x);
      const auto& g = gaps[k];
      const S t = z * (combine(g.a, g.b, ep, em) * atoms[k].w);
      gaps[k + 1] = {g.a - t * em, g.b + t * ep};
      check(gaps[k + 1], k);
    }
  }
  return gaps;
}

std::size_t count_below(std::span<const Atom> atoms, double c) {
  return static_cast<std::size_t>(
      std::lower_bound(atoms.begin(), atoms.end(), c, [](const Atom& a, double v) { return a.x < v; }) -
      atoms.begin());
}

std::size_t count_at_or_below(std::span<const Atom> atoms, double c) {
  return static_cast<std::size_t>(
      std::upper_bound(atoms.begin(), atoms.end(), c, [](double v, const Atom& a) { return v < a.x; }) -
      atoms.begin());
}

// phi_pm(z, c) or phi_pm'(z, c-) from the gap representation. Values of phi_+
// use the gap right of c (atoms > c), values of phi_- the gap left of c
// (atoms < c); derivatives take the left limit.
template <class S>
S boundary_value(std::span<const Atom> atoms, const std::vector<GapCoefficients<S>>& gaps, double c,
                 Side side, BoundaryKind kind) {
  const double ep = std::exp(0.5 * c);
  const double em = std::exp(-0.5 * c);
  if (kind == BoundaryKind::dirichlet) {
    const std::size_t k = side == Side::right ? count_at_or_below(atoms, c) : count_below(atoms, c);
    return combine(gaps[k].a, gaps[k].b, ep, em);
  }
  const std::size_t k = count_below(atoms, c);
  return combine(gaps[k].a, gaps[k].b * -1.0, 0.5 * ep, 0.5 * em);
}


// Sample of complex points spread over the scale of the given roots.
std::vector<std::complex<double>> sample_points(const std::vector<double>& roots) {
  double scale = 1.0;
  for (double r : roots) scale = std::max(scale, std::abs(r));
  std::vector<std::complex<double>> zs;
  for (int k = 1; k <= 6; ++k) {
    const double s = scale * k / 4.0;
    zs.emplace_back(0.0, s);
    zs.emplace_back(s * 0.5, s);
    zs.emplace_back(-s, 0.25 * s);
  }
  return zs;
}

}  // namespace

template <class S>
BasicPiecewiseSolution<S>::BasicPiecewiseSolution(Side side, S z, std::vector<double> breakpoints,
                                                  std::vector<double> masses,
                                                  std::vector<GapCoefficients<S>> gaps)
    : side_(side), z_(z), breakpoints_(std::move(breakpoints)), masses_(std::move(masses)), gaps_(std::move(gaps)) {}

template <class S>
std::size_t BasicPiecewiseSolution<S>::gap_index(double x) const noexcept {
  return static_cast<std::size_t>(std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x) -
                                  breakpoints_.begin());
}

template <class S>
PointValue<S> BasicPiecewiseSolution<S>::eval(double x) const {
  const std::size_t k = gap_index(x);
  const auto& g = gaps_[k];
  const double ep = std::exp(0.5 * x);
  const double em = std::exp(-0.5 * x);
  PointValue<S> out;
  out.value = combine(g.a, g.b, ep, em);
  out.derivative = combine(g.a, g.b * -1.0, 0.5 * ep, 0.5 * em);
  out.jump = S(0.0);
  if (k < breakpoints_.size() && breakpoints_[k] == x) {
    out.at_breakpoint = true;
    out.jump = -z_ * masses_[k] * out.value;
  }
  return out;
}

template class BasicPiecewiseSolution<double>;
template class BasicPiecewiseSolution<std::complex<double>>;

PiecewiseSolution propagate(const DiscreteMeasure& omega, Side side, double z) {
  return PiecewiseSolution(side, z, omega.positions(), omega.masses(), transfer<double>(omega.atoms(), side, z));
}

ComplexPiecewiseSolution propagate(const DiscreteMeasure& omega, Side side, std::complex<double> z) {
  return ComplexPiecewiseSolution(side, z, omega.positions(), omega.masses(),
                                  transfer<std::complex<double>>(omega.atoms(), side, z));
}

double wronskian(const DiscreteMeasure& omega, double z) {
  return transfer<double>(omega.atoms(), Side::right, z).front().b;
}

std::complex<double> wronskian(const DiscreteMeasure& omega, std::complex<double> z) {
  return transfer<std::complex<double>>(omega.atoms(), Side::right, z).front().b;
}

ValueAndDerivative wronskian_with_derivative(const DiscreteMeasure& omega, double z) {
  const Dual w = transfer<Dual>(omega.atoms(), Side::right, Dual(z, 1.0)).front().b;
  return {w.v, w.d};
}

Polynomial wronskian_poly(const DiscreteMeasure& omega) {
  if (omega.size() > kExactPolynomialMaxAtoms) {
    fail(ErrorKind::numerics, "exact polynomial path is limited to 16 atoms");
  }
  return transfer<Polynomial>(omega.atoms(), Side::right, Polynomial{0.0, 1.0}).front().b;
}

Polynomial shifted_char(const DiscreteMeasure& omega, double c, Side side, BoundaryKind kind) {
  if (omega.size() > kExactPolynomialMaxAtoms) {
    fail(ErrorKind::numerics, "exact polynomial path is limited to 16 atoms");
  }
  const auto gaps = transfer<Polynomial>(omega.atoms(), side, Polynomial{0.0, 1.0});
  return boundary_value(omega.atoms(), gaps, c, side, kind);
}

ValueAndDerivative shifted_char_value(const DiscreteMeasure& omega, double c, Side side, BoundaryKind kind,
                                      double z) {
  const auto gaps = transfer<Dual>(omega.atoms(), side, Dual(z, 1.0));
  const Dual v = boundary_value(omega.atoms(), gaps, c, side, kind);
  return {v.v, v.d};
}

double hadamard_check(const DiscreteMeasure& omega, double c, Side side, BoundaryKind kind) {
  const Polynomial p = shifted_char(omega, c, side, kind);
  const std::vector<double> roots = detail::shifted_roots(omega, c, side, kind);
  const double sign = side == Side::right ? -1.0 : 1.0;
  // phi_pm(0, c) = e^{-+c/2}, phi_pm'(0, c) = -+ e^{-+c/2} / 2.
  double base = std::exp(sign * 0.5 * c);
  if (kind == BoundaryKind::neumann) base *= 0.5 * sign;

  double worst = 0.0;
  for (const auto& z : sample_points(roots)) {
    std::complex<double> prod = base;
    for (double mu : roots) prod *= 1.0 - z / mu;
    const std::complex<double> direct = p(z);
    worst = std::max(worst, std::abs(direct - prod) / std::max(std::abs(direct), std::abs(prod)));
  }
  return worst;
}

double wronskian_product_check(const DiscreteMeasure& omega) {
  const Polynomial w = wronskian_poly(omega);
  const std::vector<double> roots = detail::wronskian_roots(omega);
  double worst = 0.0;
  for (const auto& z : sample_points(roots)) {
    std::complex<double> prod = 1.0;
    for (double lambda : roots) prod *= 1.0 - z / lambda;
    const std::complex<double> direct = w(z);
    worst = std::max(worst, std::abs(direct - prod) / std::max(std::abs(direct), std::abs(prod)));
  }
  return worst;
}


double wronskian_scale(const DiscreteMeasure& omega, double abs_z) {
  // The right transfer with every term taken in absolute value: bounds the
  // magnitude of the terms whose sum is W.
  double a = 0.0, b = 1.0;
  for (std::size_t k = omega.size(); k-- > 0;) {
    const double ep = std::exp(0.5 * omega[k].x);
    const double em = std::exp(-0.5 * omega[k].x);
    const double t = abs_z * std::abs(omega[k].w) * ((a == 0.0 ? 0.0 : a * ep) + b * em);
    a += t * em;
    b += t * ep;
  }
  return b;
}

namespace {

// The spectrum is real. A real z hits it when the Newton step to the nearest
// zero of W is below working precision.
bool near_eigenvalue(const DiscreteMeasure& omega, std::complex<double> z) {
  if (std::abs(z.imag()) > 1e-12 * std::abs(z)) return false;
  const ValueAndDerivative w = wronskian_with_derivative(omega, z.real());
  if (w.value == 0.0) return true;
  return std::abs(w.value) <= 1e-12 * std::abs(z.real()) * std::abs(w.derivative);
}

template <class S>
S green_impl(const DiscreteMeasure& omega, S z, double x, double y) {
  const auto right = transfer<S>(omega.atoms(), Side::right, z);
  const auto left = transfer<S>(omega.atoms(), Side::left, z);
  const S w = right.front().b;

  if (near_eigenvalue(omega, z)) {
    std::ostringstream msg;
    msg << "z = " << z << " is an eigenvalue to working precision (|W(z)| = " << std::abs(w) << ")";
    fail(ErrorKind::eigenvalue_hit, msg.str());
  }

  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  const std::vector<double> pos = omega.positions();
  const std::vector<double> mass = omega.masses();
  const BasicPiecewiseSolution<S> phi_minus(Side::left, z, pos, mass, left);
  const BasicPiecewiseSolution<S> phi_plus(Side::right, z, pos, mass, right);
  return phi_minus.eval(lo).value * phi_plus.eval(hi).value / w;
}

}  // namespace

double green(const DiscreteMeasure& omega, double z, double x, double y) { return green_impl<double>(omega, z, x, y); }

std::complex<double> green(const DiscreteMeasure& omega, std::complex<double> z, double x, double y) {
  return green_impl<std::complex<double>>(omega, z, x, y);
}

namespace detail {

std::vector<double> wronskian_roots(const DiscreteMeasure& omega) {
  const auto estimates = pencil_roots(omega.positions(), omega.masses(), LeftEnd::decay, 0.0);
  return polish_real_roots(estimates, [&](double z) { return wronskian_with_derivative(omega, z); }, "eigenvalues");
}

std::vector<double> shifted_roots(const DiscreteMeasure& omega, double c, Side side, BoundaryKind kind) {
  // The half-line beyond c: atoms > c for phi_+ values, >= c for phi_+'(c-),
  // atoms < c for phi_-. The left side is handled in mirrored coordinates.
  std::vector<double> x, w;
  for (const auto& a : omega.atoms()) {
    const bool keep = side == Side::right ? (kind == BoundaryKind::neumann ? a.x >= c : a.x > c) : a.x < c;
    if (keep) {
      x.push_back(side == Side::right ? a.x : -a.x);
      w.push_back(a.w);
    }
  }
  if (side == Side::left) {
    std::reverse(x.begin(), x.end());
    std::reverse(w.begin(), w.end());
  }
  const LeftEnd end = kind == BoundaryKind::dirichlet ? LeftEnd::dirichlet : LeftEnd::neumann;
  const auto estimates = pencil_roots(x, w, end, side == Side::right ? c : -c);
  return polish_real_roots(
      estimates, [&](double z) { return shifted_char_value(omega, c, side, kind, z); }, "shifted spectrum");
}

}  // namespace detail

}  // namespace peakon
