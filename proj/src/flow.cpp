#include "peakon/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "peakon/error.hpp"

namespace peakon {

namespace {

// W'(lambda_j) from the product representation of W.
double wronskian_slope(const std::vector<double>& lambdas, std::size_t j) {
  double p = -1.0 / lambdas[j];
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    if (k != j) p *= 1.0 - lambdas[j] / lambdas[k];
  }
  return p;
}

bool same_eigenvalue(double a, double b) { return std::abs(a - b) <= 1e-10 * std::max(std::abs(a), std::abs(b)); }

}  // namespace

FlowState::FlowState(SpectralData right, SpectralData left, double t0)
    : right_(std::move(right)), left_(std::move(left)), t0_(t0) {
  if (right_.side() != Side::right || left_.side() != Side::left) {
    fail(ErrorKind::invalid_argument, "flow state needs right and left data in that order");
  }
  if (right_.size() != left_.size()) fail(ErrorKind::invalid_argument, "left and right data differ in size");
  for (std::size_t i = 0; i < right_.size(); ++i) {
    if (!same_eigenvalue(right_.entries()[i].lambda, left_.entries()[i].lambda)) {
      fail(ErrorKind::invalid_argument, "left and right data have different eigenvalues");
    }
  }
}

FlowState::FlowState(const SpectralData& one_side, double t0) : t0_(t0) {
  const auto lambdas = one_side.eigenvalues();
  std::vector<SpectralEntry> other;
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    const double slope = wronskian_slope(lambdas, j);
    other.push_back({lambdas[j], slope * slope / one_side.entries()[j].gamma2});
  }
  SpectralData derived(opposite(one_side.side()), std::move(other));
  if (one_side.side() == Side::right) {
    right_ = one_side;
    left_ = std::move(derived);
  } else {
    left_ = one_side;
    right_ = std::move(derived);
  }
}

FlowState make_flow_state(const DiscreteMeasure& omega, double t0) {
  return FlowState(spectral_data(omega, Side::right), spectral_data(omega, Side::left), t0);
}

SpectralData evolve(const FlowState& s, double t, Side side) {
  const double sign = side == Side::right ? -1.0 : 1.0;
  std::vector<SpectralEntry> out;
  for (const auto& e : s.data(side).entries()) {
    out.push_back({e.lambda, std::exp(sign * (t - s.t0()) / (2.0 * e.lambda)) * e.gamma2});
  }
  return SpectralData(side, std::move(out));
}

FlowState advance(const FlowState& s, double t) {
  return FlowState(evolve(s, t, Side::right), evolve(s, t, Side::left), t);
}

DiscreteMeasure solve_ch(const DiscreteMeasure& omega0, double t, InverseMethod method, Precision precision) {
  if (!omega0.is_sign_definite()) {
    fail(ErrorKind::indefinite_not_supported, "the flow is only reconstructed for sign-definite measures");
  }
  if (t == 0.0 || omega0.empty()) return omega0;
  const FlowState s(spectral_data(omega0, Side::right));
  return reconstruct(evolve(s, t, Side::right), method, precision);
}

std::vector<PhaseShift> phase_shifts(const FlowState& s) {
  const auto lambdas = s.eigenvalues();
  const std::size_t n = lambdas.size();
  for (std::size_t i = 1; i < n; ++i) {
    const double a = 1.0 / lambdas[i - 1];
    const double b = 1.0 / lambdas[i];
    if (std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b))) {
      std::ostringstream msg;
      msg << "eigenvalues " << lambdas[i - 1] << " and " << lambdas[i] << " travel at the same speed";
      fail(ErrorKind::speed_collision, msg.str());
    }
  }

  std::vector<PhaseShift> out;
  for (std::size_t j = 0; j < n; ++j) {
    const double lambda = lambdas[j];
    const double gp = s.data(Side::right).entries()[j].gamma2;
    const double gm = s.data(Side::left).entries()[j].gamma2;
    if (!(lambda * gp > 0) || !(lambda * gm > 0)) {
      std::ostringstream msg;
      msg << "no real phase shift at lambda = " << lambda << ": lambda gamma2 is not positive";
      fail(ErrorKind::invalid_argument, msg.str());
    }
    // log e^{+eta}: faster peakons (1/kappa > 1/lambda); log e^{-eta}: slower ones.
    double plus = std::log(lambda * gp) + s.t0() / (2.0 * lambda);
    double minus = std::log(lambda * gm) - s.t0() / (2.0 * lambda);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      const double factor = -2.0 * std::log(std::abs(1.0 - lambda / lambdas[k]));
      if (1.0 / lambdas[k] > 1.0 / lambda) {
        plus += factor;
      } else {
        minus += factor;
      }
    }
    out.push_back({lambda, plus, -minus});
  }
  return out;
}

double asymptotic_profile(std::span<const PhaseShift> shifts, double x, double t) {
  double s = 0.0;
  for (const auto& p : shifts) s += std::exp(-std::abs(x - t / (2.0 * p.lambda) + p.eta)) / p.lambda;
  return s;
}

DiscreteMeasure multipeakon_approx(const SpectralData& d, double cutoff, InverseMethod method, Precision precision) {
  return reconstruct(d.restricted(cutoff), method, precision);
}

double projective_distance(double tau1, double tau2) {
  auto angle = [](double tau) { return std::isinf(tau) ? std::numbers::pi / 2 : std::atan(tau); };
  const double arc = std::abs(angle(tau2) - angle(tau1));
  return std::min(arc, std::numbers::pi - arc);
}

double lipschitz_metric(const SpectralData& d1, const SpectralData& d2, std::span<const double> sigma) {
  if (d1.side() != d2.side()) fail(ErrorKind::invalid_argument, "metric compares data of one side");
  const double side_sign = d1.side() == Side::right ? -1.0 : 1.0;
  auto tau = [&](const SpectralData& d, double lambda) {
    for (const auto& e : d.entries()) {
      if (!same_eigenvalue(e.lambda, lambda)) continue;
      if (!(lambda * e.gamma2 > 0)) fail(ErrorKind::invalid_argument, "lambda gamma2 must be positive");
      return side_sign * (lambda > 0 ? 1.0 : -1.0) * std::log(lambda * e.gamma2);
    }
    return std::numeric_limits<double>::infinity();
  };
  double total = 0.0;
  for (double lambda : sigma) total += projective_distance(tau(d1, lambda), tau(d2, lambda)) / std::abs(lambda);
  return total;
}

}  // namespace peakon
