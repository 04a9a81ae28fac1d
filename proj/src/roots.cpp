#include "peakon/detail/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "peakon/error.hpp"

namespace peakon::detail {

std::vector<double> polish_real_roots(const std::vector<double>& estimates,
                                      const std::function<ValueAndDerivative(double)>& f,
                                      const char* what) {
  constexpr int kMaxIterations = 60;
  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<double> roots;
  roots.reserve(estimates.size());

  for (double z : estimates) {
    bool settled = false;
    double last_step = 0.0;
    for (int it = 0; it < kMaxIterations; ++it) {
      const auto vd = f(z);
      if (vd.value == 0.0) {
        settled = true;
        break;
      }
      if (vd.derivative == 0.0 || !std::isfinite(vd.derivative)) break;
      const double step = vd.value / vd.derivative;
      z -= step;
      last_step = std::abs(step);
      if (last_step <= 4.0 * eps * std::abs(z)) {
        settled = true;
        break;
      }
    }
    if (!settled && last_step > 1e-10 * std::abs(z)) {
      std::ostringstream msg;
      msg << what << ": Newton polish did not converge near z = " << z << " (last step " << last_step
          << ", residual " << f(z).value << ")";
      fail(ErrorKind::numerics, msg.str());
    }
    roots.push_back(z);
  }

  std::sort(roots.begin(), roots.end());
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (std::abs(roots[i] - roots[i - 1]) <= 1e-12 * std::max(std::abs(roots[i]), std::abs(roots[i - 1]))) {
      std::ostringstream msg;
      msg << what << ": two root estimates converged to the same root " << roots[i];
      fail(ErrorKind::numerics, msg.str());
    }
  }
  return roots;
}

std::vector<double> pencil_roots(std::span<const double> x, std::span<const double> w, LeftEnd end, double c) {
  const auto n = static_cast<Eigen::Index>(x.size());
  if (n == 0) return {};
  auto coth = [](double d) { return 1.0 / std::tanh(0.5 * d); };
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double left = 1.0;
    if (i > 0) {
      left = coth(x[i] - x[i - 1]);
    } else if (end == LeftEnd::dirichlet) {
      left = coth(x[0] - c);
    } else if (end == LeftEnd::neumann) {
      left = std::tanh(0.5 * (x[0] - c));
    }
    const double right = i + 1 == n ? 1.0 : coth(x[i + 1] - x[i]);
    t(i, i) = 0.5 * (left + right);
    if (i + 1 < n) t(i, i + 1) = t(i + 1, i) = -0.5 / std::sinh(0.5 * (x[i + 1] - x[i]));
  }
  const Eigen::LLT<Eigen::MatrixXd> llt(t);
  if (llt.info() != Eigen::Success) fail(ErrorKind::numerics, "energy form is not positive definite");
  // M = L^{-1} W L^{-T}; its eigenvalues are the reciprocals 1/z.
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = w[static_cast<std::size_t>(i)];
  const auto l = llt.matrixL();
  m = l.solve(m);
  m = l.solve(m.transpose()).eval();
  m = 0.5 * (m + m.transpose()).eval();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) fail(ErrorKind::numerics, "pencil eigenvalue iteration failed");
  std::vector<double> out;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double nu = solver.eigenvalues()[i];
    if (nu == 0.0) fail(ErrorKind::numerics, "pencil root estimate at infinity");
    out.push_back(1.0 / nu);
  }
  return out;
}

}  // namespace peakon::detail
