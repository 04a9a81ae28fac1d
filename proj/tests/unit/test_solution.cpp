#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "../support/oracles.hpp"
#include "peakon/error.hpp"
#include "peakon/solution.hpp"

using namespace peakon;

TEST(Solution, SinglePeakonTransfer) {
  const auto omega = make_measure({{0, 1}});
  for (double z : {-2.0, 0.3, 1.0, 5.0}) {
    const auto phi = propagate(omega, Side::right, z);
    ASSERT_EQ(phi.gaps().size(), 2u);
    EXPECT_EQ(phi.gaps()[1].a, 0.0);
    EXPECT_EQ(phi.gaps()[1].b, 1.0);
    EXPECT_NEAR(phi.gaps()[0].a, z, 1e-15);
    EXPECT_NEAR(phi.gaps()[0].b, 1 - z, 1e-15);
    EXPECT_NEAR(wronskian(omega, z), 1 - z, 1e-15);
  }
}

TEST(Solution, EmptyMeasure) {
  const auto phi = propagate(DiscreteMeasure{}, Side::left, 7.0);
  ASSERT_EQ(phi.gaps().size(), 1u);
  EXPECT_EQ(phi.gaps()[0].a, 1.0);
  EXPECT_EQ(phi.gaps()[0].b, 0.0);
  EXPECT_EQ(wronskian(DiscreteMeasure{}, 3.0), 1.0);
  EXPECT_EQ(wronskian_poly(DiscreteMeasure{}).degree(), 0);

  const auto v = propagate(DiscreteMeasure{}, Side::right, 0.0).eval(2.0);
  EXPECT_NEAR(v.value, std::exp(-1.0), 1e-16);
  EXPECT_NEAR(v.derivative, -std::exp(-1.0) / 2, 1e-16);
}

TEST(Solution, ZeroSpectralParameter) {
  std::mt19937 rng(21);
  const auto omega = oracle::random_measure(rng, 6, oracle::Sign::mixed);
  const auto phi = propagate(omega, Side::right, 0.0);
  for (const auto& g : phi.gaps()) {
    EXPECT_EQ(g.a, 0.0);
    EXPECT_EQ(g.b, 1.0);
  }
  EXPECT_EQ(wronskian(omega, 0.0), 1.0);
  EXPECT_EQ(wronskian_poly(omega).coeff(0), 1.0);
}

TEST(Solution, EvalAtBreakpointAndBeyond) {
  const auto omega = make_measure({{0, 1}});
  const auto phi = propagate(omega, Side::right, 1.0);
  const auto v = phi.eval(-3.0);
  EXPECT_NEAR(v.value, std::exp(-1.5), 1e-16);
  EXPECT_NEAR(v.derivative, std::exp(-1.5) / 2, 1e-16);

  const auto at = phi.eval(0.0);
  EXPECT_TRUE(at.at_breakpoint);
  EXPECT_NEAR(at.value, 1.0, 1e-15);
  EXPECT_NEAR(at.derivative, 0.5, 1e-15);  // left limit
  EXPECT_NEAR(at.jump, -1.0, 1e-15);
}

TEST(Solution, JumpRelationHolds) {
  std::mt19937 rng(22);
  for (int k = 0; k < 10; ++k) {
    const auto omega = oracle::random_measure(rng, 1 + k % 7, oracle::Sign::mixed);
    for (Side side : {Side::left, Side::right}) {
      const double z = 0.37 + k;
      const auto phi = propagate(omega, side, z);
      for (std::size_t i = 0; i < omega.size(); ++i) {
        const double x = omega[i].x;
        const auto& l = phi.gaps()[i];
        const auto& r = phi.gaps()[i + 1];
        const double ep = std::exp(x / 2), em = std::exp(-x / 2);
        const double fl = l.a * ep + l.b * em, fr = r.a * ep + r.b * em;
        const double dl = (l.a * ep - l.b * em) / 2, dr = (r.a * ep - r.b * em) / 2;
        const double scale = std::abs(l.a * ep) + std::abs(l.b * em) + 1;
        EXPECT_NEAR(fl, fr, 1e-12 * scale);
        EXPECT_NEAR(dr - dl, -z * omega[i].w * fl, 1e-11 * scale * (1 + std::abs(z * omega[i].w)));
      }
    }
  }
}

TEST(Solution, TwoPeakonWronskian) {
  const double wp = 1.3, wm = 0.7, eps = 0.4;
  const auto omega = make_measure({{eps, wp}, {-eps, -wm}});
  const auto w = wronskian_poly(omega);
  ASSERT_EQ(w.degree(), 2);
  EXPECT_NEAR(w.coeff(0), 1.0, 1e-15);
  EXPECT_NEAR(w.coeff(1), -(wp - wm), 1e-14);
  EXPECT_NEAR(w.coeff(2), -wp * wm * (1 - std::exp(-2 * eps)), 1e-14);
}

TEST(Solution, WronskianMatchesPolynomialAndDeterminant) {
  std::mt19937 rng(23);
  for (int k = 0; k < 20; ++k) {
    const auto omega = oracle::random_measure(rng, 1 + k % 9, oracle::Sign::mixed);
    const auto poly = wronskian_poly(omega);
    EXPECT_LE(poly.degree(), static_cast<int>(omega.size()));
    for (double z : {-1.5, 0.2, 0.9, 2.4}) {
      const double direct = wronskian(omega, z);
      EXPECT_NEAR(direct, poly(z), 1e-12 * poly.max_term(z));
      EXPECT_NEAR(direct, oracle::fredholm_det(omega, z), 1e-10 * wronskian_scale(omega, std::abs(z)));
    }
    const std::complex<double> zc(0.3, 0.8);
    EXPECT_LT(std::abs(wronskian(omega, zc) - poly(zc)), 1e-12 * poly.max_term(std::abs(zc)));
  }
}

TEST(Solution, WronskianDerivativeByDifference) {
  std::mt19937 rng(24);
  const auto omega = oracle::random_measure(rng, 5, oracle::Sign::positive);
  const double z = 0.8, h = 1e-6;
  const double fd = (wronskian(omega, z + h) - wronskian(omega, z - h)) / (2 * h);
  EXPECT_NEAR(wronskian_with_derivative(omega, z).derivative, fd, 1e-6 * std::abs(fd) + 1e-9);
}

TEST(Solution, ShiftedCharExamples) {
  const auto omega = make_measure({{0, 1}});
  const auto p = shifted_char(omega, 1.0, Side::right, BoundaryKind::dirichlet);
  EXPECT_EQ(p.degree(), 0);
  EXPECT_NEAR(p.coeff(0), std::exp(-0.5), 1e-16);

  const auto q = shifted_char(omega, -1.0, Side::right, BoundaryKind::dirichlet);
  for (double z : {-1.0, 0.5, 2.0}) {
    EXPECT_NEAR(q(z), z * std::exp(-0.5) + (1 - z) * std::exp(0.5), 1e-14);
  }

  std::mt19937 rng(25);
  const auto r = oracle::random_measure(rng, 5, oracle::Sign::mixed);
  for (double c : {-2.0, 0.1, 3.0}) {
    EXPECT_NEAR(shifted_char(r, c, Side::right, BoundaryKind::dirichlet).coeff(0), std::exp(-c / 2), 1e-14);
    EXPECT_NEAR(shifted_char(r, c, Side::left, BoundaryKind::dirichlet).coeff(0), std::exp(c / 2), 1e-14);
    EXPECT_NEAR(shifted_char(r, c, Side::right, BoundaryKind::neumann).coeff(0), -std::exp(-c / 2) / 2, 1e-14);
    EXPECT_NEAR(shifted_char(r, c, Side::left, BoundaryKind::neumann).coeff(0), std::exp(c / 2) / 2, 1e-14);
  }
}

TEST(Solution, ShiftedCharAgreesWithEvaluation) {
  std::mt19937 rng(26);
  const auto omega = oracle::random_measure(rng, 6, oracle::Sign::mixed);
  for (double c : {omega[0].x - 0.5, omega[2].x + 0.01, omega[5].x + 1.0}) {
    for (Side side : {Side::left, Side::right}) {
      for (BoundaryKind kind : {BoundaryKind::dirichlet, BoundaryKind::neumann}) {
        const auto p = shifted_char(omega, c, side, kind);
        for (double z : {-0.7, 1.3}) {
          const auto v = propagate(omega, side, z).eval(c);
          const double expect = kind == BoundaryKind::dirichlet ? v.value : v.derivative;
          EXPECT_NEAR(p(z), expect, 1e-11 * p.max_term(z));
          EXPECT_NEAR(shifted_char_value(omega, c, side, kind, z).value, expect, 1e-11 * p.max_term(z));
        }
      }
    }
  }
}

TEST(Solution, ProductRepresentations) {
  EXPECT_EQ(hadamard_check(DiscreteMeasure{}, 0.3, Side::right), 0.0);
  EXPECT_EQ(hadamard_check(DiscreteMeasure{}, 0.3, Side::left), 0.0);
  std::mt19937 rng(27);
  for (int k = 0; k < 10; ++k) {
    const auto omega = oracle::random_measure(rng, 1 + k % 8, oracle::Sign::positive);
    EXPECT_LT(wronskian_product_check(omega), 1e-10);
    for (Side side : {Side::left, Side::right}) {
      EXPECT_LT(hadamard_check(omega, 0.5 * (omega[0].x + omega[omega.size() - 1].x) + 0.01, side), 1e-10);
      EXPECT_LT(hadamard_check(omega, omega[0].x + 0.01, side, BoundaryKind::neumann), 1e-10);
    }
  }
}

TEST(Solution, GreenFunction) {
  const auto omega = make_measure({{0, 1}});
  // Away from the spectrum G(z, x, y) = phi_-(min) phi_+(max) / W.
  const double z = 0.5;
  const double g = green(omega, z, -1.0, 2.0);
  // phi_-(z, -1) = e^{-1/2}; phi_+(z, 2) = e^{-1}.
  EXPECT_NEAR(g, std::exp(-0.5) * std::exp(-1.0) / (1 - z), 1e-15);
  EXPECT_DOUBLE_EQ(green(omega, z, 2.0, -1.0), g);
  EXPECT_NEAR(green(DiscreteMeasure{}, 3.0, 1.0, 1.0), 1.0, 1e-15);
  EXPECT_THROW(green(omega, 1.0, 0.0, 0.0), Error);
  try {
    green(omega, 1.0, 0.0, 0.0);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::eigenvalue_hit);
  }
  const auto gc = green(omega, std::complex<double>(0.5, 0.0), -1.0, 2.0);
  EXPECT_NEAR(gc.real(), g, 1e-15);
}

TEST(Solution, OverflowIsReported) {
  const auto omega = make_measure({{-690, 1e300}, {690, 1e300}});
  try {
    wronskian(omega, 1e300);
    FAIL() << "expected overflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::overflow);
  }
}
