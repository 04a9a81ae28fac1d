#pragma once

#include <utility>

#include "peakon/measure.hpp"
#include "peakon/polynomial.hpp"
#include "peakon/spectrum.hpp"

namespace peakon {

struct RationalFunction {
  Polynomial numerator;
  Polynomial denominator;

  RationalFunction(Polynomial num, Polynomial den);

  double operator()(double z) const { return numerator(z) / denominator(z); }
};

enum class Precision { standard, extended };

/// Reads PEAKON_PRECISION (double|extended); anything else is standard.
Precision precision_from_env();

/// m(z) = 1/2 + sum_j (1/(2 gamma2_j)) (1/(z - lambda_j) + 1/lambda_j), the
/// entries read as right-side data. Denominator prod (1 - z/lambda_j).
/// Throws Error(indefinite_not_supported) for mixed-sign eigenvalues.
RationalFunction weyl_function(const SpectralData& d);

/// Peels gaps and masses off 1/m from the y = +1 end. Throws
/// Error(not_realizable) when the fraction does not describe a string:
/// a nonpositive gap or mass, or a total length other than 2.
StringData stieltjes_extract(const RationalFunction& m, std::size_t n,
                             Precision precision = Precision::standard);

enum class InverseMethod {
  /// Continued-fraction coefficients from Hankel determinants of the
  /// spectral moments, expanded as positive subset sums in log space.
  moments,
  /// weyl_function followed by stieltjes_extract.
  continued_fraction,
};

/// Above this many eigenvalues the moments method takes the determinants from
/// a Lanczos recursion instead of subset sums (whose cost grows like 2^n).
inline constexpr std::size_t kMomentsMaxEigenvalues = 18;

/// Results of the Lanczos and continued-fraction routes are mapped forward
/// again; a relative mismatch above this raises Error(numerics).
inline constexpr double kConfirmTolerance = 1e-6;

/// The unique sign-definite measure with spectral data d (left-side data are
/// reconstructed through the reflected measure). Throws
/// Error(indefinite_not_supported) for mixed signs and Error(not_realizable)
/// when lambda * gamma2 <= 0 or extraction fails.
DiscreteMeasure reconstruct(const SpectralData& d, InverseMethod method = InverseMethod::moments,
                            Precision precision = Precision::standard);

/// (int e^{+-x} d omega, sum gamma_{+-}^{-2} / lambda^2), + for the right side.
std::pair<double, double> limit_circle_balance(const DiscreteMeasure& omega, Side side);

}  // namespace peakon
