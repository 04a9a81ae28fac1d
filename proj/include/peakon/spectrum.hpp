#pragma once

#include <complex>
#include <span>
#include <vector>

#include "peakon/measure.hpp"
#include "peakon/solution.hpp"

namespace peakon {

struct SpectralEntry {
  double lambda;
  double gamma2;

  friend bool operator==(const SpectralEntry&, const SpectralEntry&) = default;
};

/// Eigenvalues with one side's norming constants; rho = sum gamma^{-2} delta_lambda.
/// Entries are sorted by 1/lambda descending so flow speeds t/(2 lambda) are
/// monotone. Eigenvalues must be finite and nonzero, without repeats; positivity of
/// lambda * gamma2 is a realizability condition checked by the inverse.
class SpectralData {
 public:
  SpectralData() = default;
  SpectralData(Side side, std::vector<SpectralEntry> entries);

  Side side() const noexcept { return side_; }
  const std::vector<SpectralEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  std::vector<double> eigenvalues() const;

  bool is_positive() const noexcept;
  bool is_negative() const noexcept;
  bool is_sign_definite() const noexcept { return is_positive() || is_negative(); }
  /// lambda * gamma2 > 0 for every entry.
  bool has_positive_energies() const noexcept;

  /// Keeps the entries with |lambda| <= cutoff.
  SpectralData restricted(double cutoff) const;

  friend bool operator==(const SpectralData&, const SpectralData&) = default;

 private:
  Side side_ = Side::right;
  std::vector<SpectralEntry> entries_;
};

/// Orders values by 1/lambda descending.
void sort_by_speed(std::vector<double>& lambdas);

/// Roots of W, sorted by 1/lambda descending. Initial estimates come from the
/// tridiagonal energy pencil and are Newton-polished on the transfer evaluation.
std::vector<double> eigenvalues(const DiscreteMeasure& omega);

/// Eigenvalues of T^{-1} as the matrix [e^{-|x_i - x_j|/2} w_j], inverted.
/// Independent of the transfer machinery.
std::vector<double> kernel_matrix_eigenvalues(const DiscreteMeasure& omega);

/// phi_pm(lambda, x_i) at every atom for an eigenvalue lambda, by inverse
/// iteration on the tridiagonal pencil linking neighbouring atom values.
/// Shooting from one end loses the small components at large |lambda|.
std::vector<double> eigenfunction_values(const DiscreteMeasure& omega, double lambda, Side side);

/// gamma^2_{lambda,pm} = sum_i phi_pm(lambda, x_i)^2 w_i.
/// Throws Error(not_an_eigenvalue) if W(lambda) does not vanish.
double norming_constant(const DiscreteMeasure& omega, double lambda, Side side);

/// 1/4 int phi^2 + int phi'^2 in closed form, gap by gap, from the atom values.
double energy(const DiscreteMeasure& omega, double lambda, Side side);

/// phi_+(lambda, .) = c_plus phi_-(lambda, .), phi_-(lambda, .) = c_minus phi_+(lambda, .).
struct CouplingEntry {
  double lambda;
  double c_plus;
  double c_minus;
};

CouplingEntry coupling(const DiscreteMeasure& omega, double lambda);
std::vector<CouplingEntry> coupling_table(const DiscreteMeasure& omega);

SpectralData spectral_data(const DiscreteMeasure& omega, Side side);

struct TraceReport {
  double sum_inverse;         // sum 1/lambda
  double sum_abs_inverse;     // sum 1/|lambda|
  double signed_mass;         // int d omega
  double total_variation;     // int d|omega|
};

TraceReport trace_report(const DiscreteMeasure& omega);

/// Zeros of phi_pm(., c) (dirichlet) or phi_pm'(., c-) (neumann), ascending.
std::vector<double> shifted_spectrum(const DiscreteMeasure& omega, double c, Side side,
                                     BoundaryKind kind = BoundaryKind::dirichlet);

/// int e^{-|x-s|} d omega(s) = 2u(x) from sigma(T), sigma(T_{x,-}), sigma(T_{x,+}).
double u_three_spectra(const DiscreteMeasure& omega, double x);

/// Norming constant of lambda rebuilt from the three spectra at c. Throws
/// Error(disjointness_violated) if two of the spectra meet within 1e-8 |lambda|.
double norming_three_spectra(const DiscreteMeasure& omega, double c, double lambda, Side side);

/// (F_pm f)(lambda) = sum_i phi_pm(lambda, x_i) f_i w_i for each eigenvalue given.
std::vector<double> transform(const DiscreteMeasure& omega, Side side, std::span<const double> f,
                              std::span<const double> lambdas);
std::vector<double> transform(const DiscreteMeasure& omega, Side side, std::span<const double> f);

/// Max relative deviation of F_pm phi_-+(z, .)(lambda) from W(z)/(lambda - z)
/// over the spectrum and both sides.
double weyl_transform_check(const DiscreteMeasure& omega, double z);

/// Max relative deviation of F_pm G(z, x, .)(lambda) from phi_pm(lambda, x)/(lambda - z).
double green_transform_check(const DiscreteMeasure& omega, double z, double x);

/// |<F f, F g>_rho - sum f_i g_i w_i| relative to sum |f_i g_i w_i|.
double parseval_residual(const DiscreteMeasure& omega, Side side, std::span<const double> f,
                         std::span<const double> g);

}  // namespace peakon
