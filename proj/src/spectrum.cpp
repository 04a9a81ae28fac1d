#include "peakon/spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "peakon/detail/roots.hpp"
#include "peakon/error.hpp"

namespace peakon {

namespace {

void require_eigenvalue(const DiscreteMeasure& omega, double lambda) {
  const double w = wronskian(omega, lambda);
  if (!(std::abs(w) <= 1e-8 * wronskian_scale(omega, std::abs(lambda)))) {
    std::ostringstream msg;
    msg << lambda << " is not an eigenvalue (|W| = " << std::abs(w) << ")";
    fail(ErrorKind::not_an_eigenvalue, msg.str());
  }
}

// Values at the atoms solve T f = lambda W f, T the symmetric tridiagonal form of
// -f'' + f/4 with the gap solutions eliminated.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // off[i] couples atoms i and i+1
};

Tridiagonal gap_form(const DiscreteMeasure& omega) {
  const std::size_t n = omega.size();
  Tridiagonal t{std::vector<double>(n, 0.0), std::vector<double>(n > 0 ? n - 1 : 0, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i == 0 ? 1.0 : 1.0 / std::tanh(0.5 * (omega[i].x - omega[i - 1].x));
    const double right = i + 1 == n ? 1.0 : 1.0 / std::tanh(0.5 * (omega[i + 1].x - omega[i].x));
    t.diag[i] = 0.5 * (left + right);
    if (i + 1 < n) t.off[i] = -0.5 / std::sinh(0.5 * (omega[i + 1].x - omega[i].x));
  }
  return t;
}

// Inverse iteration for the eigenvector at a known eigenvalue, max |f_i| = 1.
std::vector<double> eigenvector(const DiscreteMeasure& omega, double lambda) {
  const std::size_t n = omega.size();
  const auto idx = static_cast<Eigen::Index>(n);
  const Tridiagonal t = gap_form(omega);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(idx, idx);
  for (Eigen::Index i = 0; i < idx; ++i) {
    a(i, i) = t.diag[i] - lambda * omega[i].w;
    if (i + 1 < idx) a(i, i + 1) = a(i + 1, i) = t.off[i];
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  Eigen::VectorXd f(idx);
  for (Eigen::Index i = 0; i < idx; ++i) f(i) = 1.0 + 0.1 * static_cast<double>(i % 7);
  int good = 0;
  double nudge = 4e-16;
  for (int attempt = 0; attempt < 8 && good < 3; ++attempt) {
    Eigen::VectorXd rhs(idx);
    for (Eigen::Index i = 0; i < idx; ++i) rhs(i) = omega[i].w * f(i);
    Eigen::VectorXd next = lu.solve(rhs);
    if (!next.allFinite() || next.cwiseAbs().maxCoeff() == 0.0) {
      // lambda is exact to working precision; nudge it off the singular point.
      for (Eigen::Index i = 0; i < idx; ++i) a(i, i) -= nudge * lambda * omega[i].w;
      nudge *= 4.0;
      lu.compute(a);
      continue;
    }
    f = next / next.cwiseAbs().maxCoeff();
    ++good;
  }
  if (good < 3) fail(ErrorKind::numerics, "eigenvector iteration did not converge");
  return {f.data(), f.data() + idx};
}

// A solution of -f'' + f/4 = 0 off the atoms, from its values at the atoms.
double between_atoms(const DiscreteMeasure& omega, const std::vector<double>& f, double x) {
  const std::size_t n = omega.size();
  if (x <= omega[0].x) return f[0] * std::exp(0.5 * (x - omega[0].x));
  if (x >= omega[n - 1].x) return f[n - 1] * std::exp(-0.5 * (x - omega[n - 1].x));
  std::size_t i = 0;
  while (omega[i + 1].x < x) ++i;
  const double a = omega[i].x;
  const double b = omega[i + 1].x;
  return (f[i] * std::sinh(0.5 * (b - x)) + f[i + 1] * std::sinh(0.5 * (x - a))) / std::sinh(0.5 * (b - a));
}

double sum_inverse(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += 1.0 / x;
  return s;
}

}  // namespace

SpectralData::SpectralData(Side side, std::vector<SpectralEntry> entries) : side_(side), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (!std::isfinite(e.lambda) || !std::isfinite(e.gamma2)) {
      fail(ErrorKind::invalid_argument, "spectral entries must be finite");
    }
    if (e.lambda == 0.0) fail(ErrorKind::invalid_argument, "zero is never an eigenvalue");
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const SpectralEntry& a, const SpectralEntry& b) { return 1.0 / a.lambda > 1.0 / b.lambda; });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    const double a = entries_[i - 1].lambda;
    const double b = entries_[i].lambda;
    if (a == b) {
      fail(ErrorKind::invalid_argument, "eigenvalues must be distinct");
    }
  }
}

std::vector<double> SpectralData::eigenvalues() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.lambda);
  return out;
}

bool SpectralData::is_positive() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const SpectralEntry& e) { return e.lambda > 0; });
}

bool SpectralData::is_negative() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const SpectralEntry& e) { return e.lambda < 0; });
}

bool SpectralData::has_positive_energies() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const SpectralEntry& e) { return e.lambda * e.gamma2 > 0; });
}

SpectralData SpectralData::restricted(double cutoff) const {
  std::vector<SpectralEntry> kept;
  for (const auto& e : entries_) {
    if (std::abs(e.lambda) <= cutoff) kept.push_back(e);
  }
  return SpectralData(side_, std::move(kept));
}

void sort_by_speed(std::vector<double>& lambdas) {
  std::sort(lambdas.begin(), lambdas.end(), [](double a, double b) { return 1.0 / a > 1.0 / b; });
}

std::vector<double> kernel_matrix_eigenvalues(const DiscreteMeasure& omega) {
  const auto atoms = omega.atoms();
  const auto n = static_cast<Eigen::Index>(atoms.size());
  if (n == 0) return {};
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      k(i, j) = std::exp(-0.5 * std::abs(atoms[i].x - atoms[j].x)) * atoms[j].w;
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(k, false);
  if (solver.info() != Eigen::Success) fail(ErrorKind::numerics, "kernel matrix eigenvalues failed");
  std::vector<double> out;
  out.reserve(atoms.size());
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(1.0 / solver.eigenvalues()[i].real());
  sort_by_speed(out);
  return out;
}

std::vector<double> eigenvalues(const DiscreteMeasure& omega) {
  if (omega.empty()) return {};
  auto f = [&](double z) { return wronskian_with_derivative(omega, z); };

  std::vector<double> roots = detail::wronskian_roots(omega);
  for (double lambda : roots) {
    const double residual = std::abs(f(lambda).value);
    if (residual > 1e-10 * wronskian_scale(omega, std::abs(lambda))) {
      std::ostringstream msg;
      msg << "eigenvalue " << lambda << " has residual |W| = " << residual;
      fail(ErrorKind::numerics, msg.str());
    }
  }
  sort_by_speed(roots);
  return roots;
}

std::vector<double> eigenfunction_values(const DiscreteMeasure& omega, double lambda, Side side) {
  require_eigenvalue(omega, lambda);
  std::vector<double> f = eigenvector(omega, lambda);
  // phi_+ = e^{-x/2} right of the last atom, phi_- = e^{x/2} left of the first.
  const std::size_t k = side == Side::right ? f.size() - 1 : 0;
  if (f[k] == 0.0) fail(ErrorKind::numerics, "eigenfunction vanishes at an outer atom");
  const double s = (side == Side::right ? std::exp(-0.5 * omega[k].x) : std::exp(0.5 * omega[k].x)) / f[k];
  for (double& v : f) v *= s;
  return f;
}

double norming_constant(const DiscreteMeasure& omega, double lambda, Side side) {
  const auto phi = eigenfunction_values(omega, lambda, side);
  double g = 0.0;
  for (std::size_t i = 0; i < omega.size(); ++i) g += phi[i] * phi[i] * omega[i].w;
  return g;
}

double energy(const DiscreteMeasure& omega, double lambda, Side side) {
  const auto f = eigenfunction_values(omega, lambda, side);
  const std::size_t n = f.size();
  // Outer gaps carry f^2/2; an inner gap of length d carries
  // ((a - b)^2 + (a^2 + b^2)(cosh(d/2) - 1)) / (2 sinh(d/2)).
  double e = 0.5 * (f.front() * f.front() + f.back() * f.back());
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double a = f[i];
    const double b = f[i + 1];
    const double h = 0.5 * (omega[i + 1].x - omega[i].x);
    const double sh = std::sinh(0.5 * h);
    e += ((a - b) * (a - b) + (a * a + b * b) * 2.0 * sh * sh) / (2.0 * std::sinh(h));
  }
  return e;
}

CouplingEntry coupling(const DiscreteMeasure& omega, double lambda) {
  require_eigenvalue(omega, lambda);
  const auto f = eigenvector(omega, lambda);
  // phi_+ = c_plus phi_- evaluated at the outer atoms.
  const double c_plus = std::exp(-0.5 * (omega[0].x + omega[omega.size() - 1].x)) * f.front() / f.back();
  if (!(std::abs(c_plus) > 0.0) || !std::isfinite(c_plus)) {
    std::ostringstream msg;
    msg << "degenerate coupling at lambda = " << lambda << " (c_plus = " << c_plus << ")";
    fail(ErrorKind::numerics, msg.str());
  }
  return {lambda, c_plus, 1.0 / c_plus};
}

std::vector<CouplingEntry> coupling_table(const DiscreteMeasure& omega) {
  std::vector<CouplingEntry> out;
  for (double lambda : eigenvalues(omega)) out.push_back(coupling(omega, lambda));
  return out;
}

SpectralData spectral_data(const DiscreteMeasure& omega, Side side) {
  std::vector<SpectralEntry> entries;
  for (double lambda : eigenvalues(omega)) entries.push_back({lambda, norming_constant(omega, lambda, side)});
  return SpectralData(side, std::move(entries));
}

TraceReport trace_report(const DiscreteMeasure& omega) {
  const auto lambdas = eigenvalues(omega);
  const Totals t = totals(omega);
  TraceReport r{0.0, 0.0, t.signed_mass, t.total_variation};
  for (double lambda : lambdas) {
    r.sum_inverse += 1.0 / lambda;
    r.sum_abs_inverse += 1.0 / std::abs(lambda);
  }
  return r;
}

std::vector<double> shifted_spectrum(const DiscreteMeasure& omega, double c, Side side, BoundaryKind kind) {
  return detail::shifted_roots(omega, c, side, kind);
}

double u_three_spectra(const DiscreteMeasure& omega, double x) {
  return sum_inverse(eigenvalues(omega)) - sum_inverse(shifted_spectrum(omega, x, Side::left)) -
         sum_inverse(shifted_spectrum(omega, x, Side::right));
}

double norming_three_spectra(const DiscreteMeasure& omega, double c, double lambda, Side side) {
  const std::vector<double> sigma = eigenvalues(omega);
  const std::vector<double> same = shifted_spectrum(omega, c, side);
  const std::vector<double> other = shifted_spectrum(omega, c, opposite(side));

  const double tol = 1e-8 * std::abs(lambda);
  auto collide = [&](const std::vector<double>& a, const std::vector<double>& b) {
    for (double p : a) {
      for (double q : b) {
        if (std::abs(p - q) <= tol) return true;
      }
    }
    return false;
  };
  if (collide(sigma, same) || collide(sigma, other) || collide(same, other)) {
    std::ostringstream msg;
    msg << "spectra of T, T_{c,-}, T_{c,+} meet at c = " << c;
    fail(ErrorKind::disjointness_violated, msg.str());
  }

  auto nearest = std::min_element(sigma.begin(), sigma.end(), [&](double a, double b) {
    return std::abs(a - lambda) < std::abs(b - lambda);
  });
  if (nearest == sigma.end() || std::abs(*nearest - lambda) > 1e-8 * std::abs(lambda)) {
    fail(ErrorKind::not_an_eigenvalue, "lambda is not in the spectrum");
  }

  const double sign = side == Side::right ? -1.0 : 1.0;
  double g = std::exp(sign * c) / lambda;
  for (auto it = sigma.begin(); it != sigma.end(); ++it) {
    if (it != nearest) g *= 1.0 - lambda / *it;
  }
  for (double mu : same) g *= 1.0 - lambda / mu;
  for (double mu : other) g /= 1.0 - lambda / mu;
  return g;
}

std::vector<double> transform(const DiscreteMeasure& omega, Side side, std::span<const double> f,
                              std::span<const double> lambdas) {
  if (f.size() != omega.size()) fail(ErrorKind::invalid_argument, "transform needs one value per atom");
  std::vector<double> out;
  out.reserve(lambdas.size());
  for (double lambda : lambdas) {
    const auto phi = eigenfunction_values(omega, lambda, side);
    double s = 0.0;
    for (std::size_t i = 0; i < omega.size(); ++i) s += phi[i] * f[i] * omega[i].w;
    out.push_back(s);
  }
  return out;
}

std::vector<double> transform(const DiscreteMeasure& omega, Side side, std::span<const double> f) {
  const auto lambdas = eigenvalues(omega);
  return transform(omega, side, f, lambdas);
}

double weyl_transform_check(const DiscreteMeasure& omega, double z) {
  const auto lambdas = eigenvalues(omega);
  const double w = wronskian(omega, z);
  double worst = 0.0;
  for (Side side : {Side::left, Side::right}) {
    const auto other = propagate(omega, opposite(side), z);
    for (double lambda : lambdas) {
      const auto phi = eigenfunction_values(omega, lambda, side);
      double s = 0.0, abs_s = 0.0;
      for (std::size_t i = 0; i < omega.size(); ++i) {
        const double term = phi[i] * other.eval(omega[i].x).value * omega[i].w;
        s += term;
        abs_s += std::abs(term);
      }
      const double target = w / (lambda - z);
      worst = std::max(worst, std::abs(s - target) / std::max(std::abs(target), abs_s));
    }
  }
  return worst;
}

double green_transform_check(const DiscreteMeasure& omega, double z, double x) {
  const auto lambdas = eigenvalues(omega);
  double worst = 0.0;
  for (Side side : {Side::left, Side::right}) {
    for (double lambda : lambdas) {
      const auto phi = eigenfunction_values(omega, lambda, side);
      double s = 0.0, abs_s = 0.0;
      for (std::size_t i = 0; i < omega.size(); ++i) {
        const double term = green(omega, z, x, omega[i].x) * phi[i] * omega[i].w;
        s += term;
        abs_s += std::abs(term);
      }
      const double target = between_atoms(omega, phi, x) / (lambda - z);
      worst = std::max(worst, std::abs(s - target) / std::max(std::abs(target), abs_s));
    }
  }
  return worst;
}

double parseval_residual(const DiscreteMeasure& omega, Side side, std::span<const double> f,
                         std::span<const double> g) {
  const auto data = spectral_data(omega, side);
  const auto lambdas = data.eigenvalues();
  const auto ff = transform(omega, side, f, lambdas);
  const auto fg = transform(omega, side, g, lambdas);
  double lhs = 0.0, abs_lhs = 0.0;
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    const double term = ff[j] * fg[j] / data.entries()[j].gamma2;
    lhs += term;
    abs_lhs += std::abs(term);
  }
  double rhs = 0.0, abs_rhs = 0.0;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    rhs += f[i] * g[i] * omega[i].w;
    abs_rhs += std::abs(f[i] * g[i] * omega[i].w);
  }
  return std::abs(lhs - rhs) / std::max({abs_rhs, abs_lhs, 1e-300});
}

}  // namespace peakon
