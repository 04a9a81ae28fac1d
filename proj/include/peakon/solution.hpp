#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "peakon/measure.hpp"
#include "peakon/polynomial.hpp"

namespace peakon {

/// Which decaying solution: left is phi_- (~ e^{x/2} at -inf), right is
/// phi_+ (~ e^{-x/2} at +inf).
enum class Side { left, right };

inline Side opposite(Side s) noexcept { return s == Side::left ? Side::right : Side::left; }
const char* to_string(Side s) noexcept;

enum class BoundaryKind { dirichlet, neumann };

/// The exact polynomial path (coefficient propagation) is limited to this many
/// atoms; beyond it only pointwise evaluation is used.
inline constexpr std::size_t kExactPolynomialMaxAtoms = 16;

/// f(x) = a e^{x/2} + b e^{-x/2} on one gap.
template <class S>
struct GapCoefficients {
  S a;
  S b;
};

template <class S>
struct PointValue {
  S value;
  /// Left-limit derivative f'(x-) at a breakpoint.
  S derivative;
  bool at_breakpoint = false;
  /// f'(x+) - f'(x-) = -z w f(x); zero away from breakpoints.
  S jump{};
};

/// phi_+(z, .) or phi_-(z, .) for one fixed z, stored gap by gap. Gap 0 is
/// (-inf, x_1), gap n is (x_n, inf).
template <class S>
class BasicPiecewiseSolution {
 public:
  BasicPiecewiseSolution(Side side, S z, std::vector<double> breakpoints, std::vector<double> masses,
                         std::vector<GapCoefficients<S>> gaps);

  Side side() const noexcept { return side_; }
  const S& z() const noexcept { return z_; }
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  const std::vector<GapCoefficients<S>>& gaps() const noexcept { return gaps_; }

  /// Gap containing x; a breakpoint belongs to the gap on its left.
  std::size_t gap_index(double x) const noexcept;

  PointValue<S> eval(double x) const;

 private:
  Side side_;
  S z_;
  std::vector<double> breakpoints_;
  std::vector<double> masses_;
  std::vector<GapCoefficients<S>> gaps_;
};

using PiecewiseSolution = BasicPiecewiseSolution<double>;
using ComplexPiecewiseSolution = BasicPiecewiseSolution<std::complex<double>>;

/// Transfers the normalized solution across every atom. Throws
/// Error(overflow) if a coefficient stops being finite.
PiecewiseSolution propagate(const DiscreteMeasure& omega, Side side, double z);
ComplexPiecewiseSolution propagate(const DiscreteMeasure& omega, Side side, std::complex<double> z);

struct ValueAndDerivative {
  double value;
  double derivative;  // d/dz
};

/// W(z) = phi_+ phi_-' - phi_+' phi_-, read off as the e^{-x/2} coefficient
/// of phi_+ on the leftmost gap.
double wronskian(const DiscreteMeasure& omega, double z);
std::complex<double> wronskian(const DiscreteMeasure& omega, std::complex<double> z);
ValueAndDerivative wronskian_with_derivative(const DiscreteMeasure& omega, double z);

/// Size of the largest terms summed into W(z): the transfer run with every
/// term in absolute value. At least 1.
double wronskian_scale(const DiscreteMeasure& omega, double abs_z);

/// Exact coefficients of W. Requires omega.size() <= kExactPolynomialMaxAtoms.
Polynomial wronskian_poly(const DiscreteMeasure& omega);

/// z -> phi_pm(z, c) (dirichlet) or z -> phi_pm'(z, c-) (neumann) as a polynomial.
Polynomial shifted_char(const DiscreteMeasure& omega, double c, Side side, BoundaryKind kind);
ValueAndDerivative shifted_char_value(const DiscreteMeasure& omega, double c, Side side,
                                      BoundaryKind kind, double z);

/// Max relative deviation, over a sample of complex z, between shifted_char
/// and e^{-+c/2} prod (1 - z/mu) over its computed roots.
double hadamard_check(const DiscreteMeasure& omega, double c, Side side,
                      BoundaryKind kind = BoundaryKind::dirichlet);

/// Same comparison for W(z) against prod (1 - z/lambda) over the eigenvalues.
double wronskian_product_check(const DiscreteMeasure& omega);

/// G(z, x, y) = phi_-(z, min) phi_+(z, max) / W(z). Throws
/// Error(eigenvalue_hit) when W(z) vanishes to working precision.
double green(const DiscreteMeasure& omega, double z, double x, double y);
std::complex<double> green(const DiscreteMeasure& omega, std::complex<double> z, double x, double y);

}  // namespace peakon
