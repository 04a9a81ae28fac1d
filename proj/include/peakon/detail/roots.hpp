#pragma once

#include <functional>
#include <span>
#include <vector>

#include "peakon/solution.hpp"

namespace peakon::detail {

/// Newton polish of real roots of f starting from the given estimates.
/// Throws Error(numerics) with the residuals if an iterate fails to settle or
/// two estimates collapse onto the same root.
std::vector<double> polish_real_roots(const std::vector<double>& estimates,
                                      const std::function<ValueAndDerivative(double)>& f,
                                      const char* what);

/// Condition at the left end of a half-line problem; the right end always decays.
enum class LeftEnd { decay, dirichlet, neumann };

/// Estimates of the z with T f = z W f, T the symmetric tridiagonal energy form
/// of -f'' + f/4 on atoms at x (ascending, all > c except possibly x[0] == c
/// for neumann) and W = diag(w). Reduced to a symmetric eigenproblem through
/// the Cholesky factor of T, so every estimate is real.
std::vector<double> pencil_roots(std::span<const double> x, std::span<const double> w, LeftEnd end, double c);

/// Zeros of W, ascending: pencil estimates polished on the transfer.
std::vector<double> wronskian_roots(const DiscreteMeasure& omega);

/// Zeros of z -> phi_pm(z, c) or phi_pm'(z, c-), ascending, found the same way
/// on the half-line beyond c.
std::vector<double> shifted_roots(const DiscreteMeasure& omega, double c, Side side, BoundaryKind kind);

}  // namespace peakon::detail
