#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "../support/oracles.hpp"
#include "peakon/error.hpp"
#include "peakon/inverse.hpp"
#include "peakon/spectrum.hpp"

using namespace peakon;

namespace {

SpectralData random_spectral(std::mt19937& rng, std::size_t n, double sign, Side side = Side::right) {
  std::uniform_real_distribution<double> ul(std::log(0.2), std::log(6.0));
  std::uniform_real_distribution<double> ug(-3.0, 3.0);
  std::vector<SpectralEntry> e;
  while (e.size() < n) {
    const double lambda = sign * std::exp(ul(rng));
    bool close = false;
    for (const auto& x : e) close = close || std::abs(x.lambda / lambda - 1) < 0.05;
    if (close) continue;
    e.push_back({lambda, std::exp(ug(rng)) / lambda});
  }
  return SpectralData(side, std::move(e));
}

void expect_same_measure(const DiscreteMeasure& a, const DiscreteMeasure& b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(a[i].x, b[i].x, tol * std::max(1.0, std::abs(b[i].x)));
    EXPECT_NEAR(a[i].w, b[i].w, tol * std::abs(b[i].w));
  }
}

void expect_same_data(const SpectralData& a, const SpectralData& b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(a.entries()[i].lambda, b.entries()[i].lambda, tol * std::abs(b.entries()[i].lambda));
    EXPECT_NEAR(a.entries()[i].gamma2, b.entries()[i].gamma2, tol * std::abs(b.entries()[i].gamma2));
  }
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::numerics;
}

}  // namespace

TEST(Inverse, WeylFunctionExamples) {
  const auto empty = weyl_function(SpectralData(Side::right, {}));
  EXPECT_EQ(empty(0.0), 0.5);
  EXPECT_EQ(empty(7.0), 0.5);

  const auto m = weyl_function(SpectralData(Side::right, {{1.0, 1.0}}));
  EXPECT_NEAR(m(0.0), 0.5, 1e-15);
  for (double z : {-2.0, 0.3, 3.0}) EXPECT_NEAR(m(z), 1 + 0.5 / (z - 1), 1e-14);
}

TEST(Inverse, WeylResiduesMatchForwardData) {
  std::mt19937 rng(41);
  const auto omega = oracle::random_measure(rng, 5, oracle::Sign::positive);
  const auto d = spectral_data(omega, Side::right);
  const auto m = weyl_function(d);
  EXPECT_NEAR(m(0.0), 0.5, 1e-14);
  for (const auto& e : d.entries()) {
    const double h = 1e-7 * e.lambda;
    const double residue = 0.5 * h * (m(e.lambda + h) - m(e.lambda - h));
    EXPECT_NEAR(residue, 1 / (2 * e.gamma2), 1e-5 / e.gamma2);
  }
}

TEST(Inverse, WeylRejectsMixedSigns) {
  EXPECT_EQ(kind_of([] { weyl_function(SpectralData(Side::right, {{1.0, 1.0}, {-1.0, -1.0}})); }),
            ErrorKind::indefinite_not_supported);
}

TEST(Inverse, StieltjesExamples) {
  const auto bare = stieltjes_extract(weyl_function(SpectralData(Side::right, {})), 0);
  ASSERT_EQ(bare.gaps.size(), 1u);
  EXPECT_NEAR(bare.gaps[0], 2.0, 1e-15);
  EXPECT_TRUE(bare.masses.empty());

  const auto one = stieltjes_extract(weyl_function(SpectralData(Side::right, {{1.0, 1.0}})), 1);
  ASSERT_EQ(one.gaps.size(), 2u);
  EXPECT_NEAR(one.gaps[0], 1.0, 1e-14);
  EXPECT_NEAR(one.gaps[1], 1.0, 1e-14);
  EXPECT_NEAR(one.masses[0], 2.0, 1e-14);
}

TEST(Inverse, StieltjesMatchesStringData) {
  std::mt19937 rng(42);
  for (int k = 0; k < 20; ++k) {
    // A well separated spectrum keeps the double precision fraction stable.
    const auto omega = oracle::random_measure(rng, 1 + k % 4, oracle::Sign::positive, 2.0, 0.4);
    const auto s = to_string_data(omega);
    const auto e = stieltjes_extract(weyl_function(spectral_data(omega, Side::right)), omega.size(),
                                     Precision::extended);
    ASSERT_EQ(e.masses.size(), s.masses.size());
    for (std::size_t i = 0; i < s.gaps.size(); ++i) EXPECT_NEAR(e.gaps[i], s.gaps[i], 1e-8);
    for (std::size_t i = 0; i < s.masses.size(); ++i) EXPECT_NEAR(e.masses[i], s.masses[i], 1e-8 * s.masses[i]);
  }
}

TEST(Inverse, ReconstructExamples) {
  expect_same_measure(reconstruct(SpectralData(Side::right, {{1.0, 1.0}})), make_measure({{0, 1}}), 1e-14);
  expect_same_measure(reconstruct(SpectralData(Side::right, {{-1.0, -1.0}})), make_measure({{0, -1}}), 1e-14);
  EXPECT_TRUE(reconstruct(SpectralData(Side::right, {})).empty());

  std::mt19937 rng(43);
  std::uniform_real_distribution<double> uc(0.1, 3.0), ux(-4.0, 4.0);
  for (int k = 0; k < 20; ++k) {
    const double c = uc(rng), x0 = ux(rng);
    const double lambda = 1 / (2 * c);
    for (auto method : {InverseMethod::moments, InverseMethod::continued_fraction}) {
      const auto om = reconstruct(SpectralData(Side::right, {{lambda, std::exp(-x0) * 2 * c}}), method);
      expect_same_measure(om, make_measure({{x0, 2 * c}}), 1e-12);
    }
    const auto left = reconstruct(SpectralData(Side::left, {{lambda, std::exp(x0) * 2 * c}}));
    expect_same_measure(left, make_measure({{x0, 2 * c}}), 1e-12);
  }
}

TEST(Inverse, RoundTripMeasures) {
  std::mt19937 rng(44);
  for (int k = 0; k < 60; ++k) {
    const auto sign = k % 2 ? oracle::Sign::positive : oracle::Sign::negative;
    const auto omega = oracle::random_measure(rng, 1 + k % 10, sign);
    for (Side side : {Side::right, Side::left}) {
      expect_same_measure(reconstruct(spectral_data(omega, side)), omega, 1e-8);
    }
  }
}

TEST(Inverse, RoundTripData) {
  std::mt19937 rng(45);
  for (int k = 0; k < 60; ++k) {
    const auto d = random_spectral(rng, 1 + k % 10, k % 2 ? 1.0 : -1.0, k % 3 ? Side::right : Side::left);
    expect_same_data(spectral_data(reconstruct(d), d.side()), d, 1e-8);
  }
}

TEST(Inverse, ContinuedFractionSmallCases) {
  std::mt19937 rng(46);
  for (int k = 0; k < 20; ++k) {
    const auto omega = oracle::random_measure(rng, 1 + k % 4, oracle::Sign::positive, 2.0, 0.4);
    expect_same_measure(
        reconstruct(spectral_data(omega, Side::right), InverseMethod::continued_fraction, Precision::extended), omega,
        1e-8);
  }
}

TEST(Inverse, ExtendedPrecisionAgrees) {
  std::mt19937 rng(47);
  const auto omega = oracle::random_measure(rng, 8, oracle::Sign::positive);
  expect_same_measure(reconstruct(spectral_data(omega, Side::right), InverseMethod::moments, Precision::extended),
                      omega, 1e-10);
}

TEST(Inverse, LeftRightConsistency) {
  std::mt19937 rng(48);
  for (int k = 0; k < 20; ++k) {
    const auto omega = oracle::random_measure(rng, 1 + k % 8, oracle::Sign::positive);
    const auto a = reconstruct(spectral_data(omega, Side::right));
    const auto b = reconstruct(spectral_data(omega, Side::left));
    expect_same_measure(a, b, 1e-8);
  }
}

TEST(Inverse, Errors) {
  EXPECT_EQ(kind_of([] { reconstruct(SpectralData(Side::right, {{1.0, 1.0}, {-2.0, -1.0}})); }),
            ErrorKind::indefinite_not_supported);
  EXPECT_EQ(kind_of([] { reconstruct(SpectralData(Side::right, {{1.0, -1.0}})); }), ErrorKind::not_realizable);
  EXPECT_EQ(kind_of([] { reconstruct(SpectralData(Side::right, {{1.0, 1.0}, {2.0, -0.5}})); }),
            ErrorKind::not_realizable);
  EXPECT_EQ(exit_code(ErrorKind::indefinite_not_supported), 4);
  EXPECT_EQ(exit_code(ErrorKind::not_realizable), 5);
}

TEST(Inverse, LimitCircleBalance) {
  const auto unit = make_measure({{0, 1}});
  for (Side side : {Side::right, Side::left}) {
    const auto [lhs, rhs] = limit_circle_balance(unit, side);
    EXPECT_NEAR(lhs, 1.0, 1e-15);
    EXPECT_NEAR(rhs, 1.0, 1e-14);
  }
  const auto peakon = make_measure({{0.7, 1.6}});
  EXPECT_NEAR(limit_circle_balance(peakon, Side::right).first, std::exp(0.7) * 1.6, 1e-14);
  EXPECT_NEAR(limit_circle_balance(peakon, Side::right).second, std::exp(0.7) * 1.6, 1e-13);
  EXPECT_NEAR(limit_circle_balance(peakon, Side::left).second, std::exp(-0.7) * 1.6, 1e-13);

  std::mt19937 rng(49);
  for (int k = 0; k < 20; ++k) {
    const auto omega = oracle::random_measure(rng, 1 + k % 10, k % 2 ? oracle::Sign::positive : oracle::Sign::negative);
    for (Side side : {Side::right, Side::left}) {
      const auto [lhs, rhs] = limit_circle_balance(omega, side);
      EXPECT_NEAR(lhs, rhs, 1e-10 * std::abs(lhs));
    }
  }
}

TEST(Inverse, CutoffConvergence) {
  std::mt19937 rng(50);
  const auto omega = oracle::random_measure(rng, 6, oracle::Sign::positive);
  const auto d = spectral_data(omega, Side::right);
  std::vector<double> grid;
  for (int i = 0; i <= 200; ++i) grid.push_back(-8 + 0.08 * i);
  double previous = INFINITY;
  for (const auto& e : d.entries()) {
    const double dist = u_distance(reconstruct(d.restricted(e.lambda)), omega, grid);
    EXPECT_LE(dist, previous * (1 + 1e-12));
    previous = dist;
  }
  EXPECT_LT(previous, 1e-10);
}

TEST(Inverse, LargeSpectraUseLanczos) {
  std::mt19937 rng(51);
  for (std::size_t n : {19u, 24u, 30u}) {
    const auto omega = oracle::random_measure(rng, n, oracle::Sign::positive);
    expect_same_measure(reconstruct(spectral_data(omega, Side::right)), omega, 1e-8);
    expect_same_measure(reconstruct(spectral_data(omega.negated(), Side::left)), omega.negated(), 1e-8);
  }
}

TEST(Inverse, ContinuedFractionNeverFailsSilently) {
  // In double precision the fraction loses digits quickly as n grows; whatever
  // comes back must either match or be reported.
  std::mt19937 rng(52);
  int reported = 0;
  for (int k = 0; k < 20; ++k) {
    const auto omega = oracle::random_measure(rng, 6 + k % 6, oracle::Sign::positive);
    try {
      const auto back = reconstruct(spectral_data(omega, Side::right), InverseMethod::continued_fraction);
      EXPECT_LT(oracle::measure_distance(back, omega), 1e-5);
    } catch (const Error& e) {
      EXPECT_TRUE(e.kind() == ErrorKind::numerics || e.kind() == ErrorKind::not_realizable ||
                  e.kind() == ErrorKind::not_representable)
          << e.what();
      ++reported;
    }
  }
  RecordProperty("reported", reported);
}
