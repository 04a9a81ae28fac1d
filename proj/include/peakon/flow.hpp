#pragma once

#include <span>
#include <vector>

#include "peakon/inverse.hpp"
#include "peakon/measure.hpp"
#include "peakon/spectrum.hpp"

namespace peakon {

/// Eigenvalues with both sides' norming constants at the reference time t0.
class FlowState {
 public:
  FlowState() = default;
  /// Both sides given; entries must list the same eigenvalues.
  FlowState(SpectralData right, SpectralData left, double t0 = 0.0);
  /// One side given; the other follows from gamma2_+ gamma2_- = W'(lambda)^2
  /// with W'(lambda) = -(1/lambda) prod_{kappa != lambda} (1 - lambda/kappa).
  explicit FlowState(const SpectralData& one_side, double t0 = 0.0);

  double t0() const noexcept { return t0_; }
  const SpectralData& data(Side side) const noexcept { return side == Side::right ? right_ : left_; }
  std::vector<double> eigenvalues() const { return right_.eigenvalues(); }

 private:
  SpectralData right_{Side::right, {}};
  SpectralData left_{Side::left, {}};
  double t0_ = 0.0;
};

FlowState make_flow_state(const DiscreteMeasure& omega, double t0 = 0.0);

/// gamma2_{lambda,+-}(t) = e^{-+(t - t0)/(2 lambda)} gamma2_{lambda,+-}(t0).
SpectralData evolve(const FlowState& s, double t, Side side = Side::right);

/// The same state rebased at time t.
FlowState advance(const FlowState& s, double t);

/// omega(., t) for sign-definite omega0: forward map, then reconstruction of the evolved data.
/// Throws Error(indefinite_not_supported) for signed data.
DiscreteMeasure solve_ch(const DiscreteMeasure& omega0, double t, InverseMethod method = InverseMethod::moments,
                         Precision precision = Precision::standard);

struct PhaseShift {
  double lambda;
  /// From the right data.
  double eta;
  /// The same shift from the left data; agrees with eta for consistent states.
  double eta_from_left;
};

/// Asymptotic offsets of the peakon train, ordered like the eigenvalues.
/// Throws Error(speed_collision) if two speeds 1/lambda coincide and
/// Error(invalid_argument) if some lambda gamma2 is not positive.
std::vector<PhaseShift> phase_shifts(const FlowState& s);

/// sum (1/lambda) e^{-|x - t/(2 lambda) + eta|}; compare with the kernel integral 2u.
double asymptotic_profile(std::span<const PhaseShift> shifts, double x, double t);

/// Reconstruction from the data with |lambda| <= cutoff.
DiscreteMeasure multipeakon_approx(const SpectralData& d, double cutoff, InverseMethod method = InverseMethod::moments,
                                   Precision precision = Precision::standard);

/// Metric on the projectively extended line: the arctan-length of the shorter
/// arc between tau1 and tau2 (infinity maps to pi/2).
double projective_distance(double tau1, double tau2);

/// sum_{lambda in sigma} (1/|lambda|) d(-+sgn(lambda) ln(lambda gamma2_1), -+sgn(lambda) ln(lambda gamma2_2)),
/// the sign - for right data. An eigenvalue missing from a data set contributes
/// ln(lambda gamma2) = infinity. Both data sets must be on the same side.
double lipschitz_metric(const SpectralData& d1, const SpectralData& d2, std::span<const double> sigma);

}  // namespace peakon
