#include "peakon/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>

#include "peakon/error.hpp"
#include "peakon/inverse.hpp"
#include "peakon/io.hpp"
#include "peakon/spectrum.hpp"

namespace peakon {

bool RunReport::pass() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const Residual& r) { return r.pass; });
}

namespace {

class Collector {
 public:
  explicit Collector(std::optional<double> tol) : override_(tol) {}

  void residual(const std::string& name, double value, double tol) {
    const double t = override_.value_or(tol);
    out_.push_back({name, value, t, false, value <= t});
  }
  void margin(const std::string& name, double value) { out_.push_back({name, value, 0.0, true, value > 0.0}); }

  std::vector<Residual> take() { return std::move(out_); }

 private:
  std::optional<double> override_;
  std::vector<Residual> out_;
};

double abs_kernel(const DiscreteMeasure& omega, double x) {
  double s = 0.0;
  for (const auto& a : omega.atoms()) s += std::exp(-std::abs(x - a.x)) * std::abs(a.w);
  return s;
}

double rel(double a, double b, double scale) { return std::abs(a - b) / std::max(scale, 1e-300); }

// Sample points: the atoms and gap midpoints, plus one unit beyond either end.
std::vector<double> sample_points(const DiscreteMeasure& omega) {
  std::vector<double> xs;
  const std::size_t n = omega.size();
  if (n == 0) return {0.0};
  xs.push_back(omega[0].x - 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    xs.push_back(omega[i].x);
    if (i + 1 < n) xs.push_back(0.5 * (omega[i].x + omega[i + 1].x));
  }
  xs.push_back(omega[n - 1].x + 1.0);
  return xs;
}

std::vector<double> gap_points(const DiscreteMeasure& omega) {
  std::vector<double> xs;
  const std::size_t n = omega.size();
  if (n == 0) return {0.0};
  xs.push_back(omega[0].x - 1.0);
  for (std::size_t i = 0; i + 1 < n; ++i) xs.push_back(0.5 * (omega[i].x + omega[i + 1].x));
  xs.push_back(omega[n - 1].x + 1.0);
  return xs;
}

// W'(lambda_j) from the product over the spectrum.
double product_slope(const std::vector<double>& lambdas, std::size_t j) {
  double p = -1.0 / lambdas[j];
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    if (k != j) p *= 1.0 - lambdas[j] / lambdas[k];
  }
  return p;
}

// Spectral points where the resolvent is sampled, kept away from the spectrum.
std::vector<double> resolvent_points(const std::vector<double>& lambdas) {
  std::vector<double> zs;
  for (double z : {-0.5, -3.0, 0.37}) {
    const bool clear = std::none_of(lambdas.begin(), lambdas.end(),
                                    [&](double l) { return std::abs(l - z) < 1e-3 * std::max(1.0, std::abs(l)); });
    if (clear) zs.push_back(z);
  }
  return zs;
}

}  // namespace

RunReport verify(const DiscreteMeasure& omega, std::optional<double> tolerance) {
  RunReport report{"verify", measure_digest(omega), {}, std::nullopt};
  Collector c(tolerance);
  const std::size_t n = omega.size();
  const Totals tot = totals(omega);
  const std::vector<double> lambdas = eigenvalues(omega);
  const bool exact = n <= kExactPolynomialMaxAtoms;

  // Trace relations.
  double sum_inv = 0.0, sum_abs_inv = 0.0;
  for (double l : lambdas) {
    sum_inv += 1.0 / l;
    sum_abs_inv += 1.0 / std::abs(l);
  }
  c.residual("trace_signed", rel(sum_inv, tot.signed_mass, tot.total_variation), 1e-10);
  if (omega.is_sign_definite()) {
    c.residual("trace_abs", rel(sum_abs_inv, tot.total_variation, tot.total_variation), 1e-10);
  } else {
    c.margin("trace_abs_strict", (tot.total_variation - sum_abs_inv) / tot.total_variation);
  }

  if (n == 0) {
    report.residuals = c.take();
    return report;
  }

  const SpectralData right = spectral_data(omega, Side::right);
  const SpectralData left = spectral_data(omega, Side::left);

  // -W'(lambda) = c_- gamma2_+, gamma2_+ gamma2_- = W'(lambda)^2, energy identity.
  double wdot = 0.0, wdot_product = 0.0, product = 0.0, en = 0.0;
  double min_energy = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    const double lambda = lambdas[j];
    const double gp = right.entries()[j].gamma2;
    const double gm = left.entries()[j].gamma2;
    const double d = wronskian_with_derivative(omega, lambda).derivative;
    const double slope = product_slope(lambdas, j);
    const CouplingEntry cp = coupling(omega, lambda);
    wdot = std::max(wdot, rel(-d, cp.c_minus * gp, std::abs(d)));
    wdot_product = std::max(wdot_product, rel(d, slope, std::abs(slope)));
    product = std::max(product, rel(gp * gm, slope * slope, slope * slope));
    for (Side side : {Side::right, Side::left}) {
      const double g = side == Side::right ? gp : gm;
      const double e = energy(omega, lambda, side);
      en = std::max(en, rel(lambda * g, e, e));
      min_energy = std::min(min_energy, lambda * g);
    }
  }
  c.residual("wronskian_derivative", wdot, 1e-8);
  c.residual("wronskian_derivative_product", wdot_product, 1e-8);
  c.residual("norming_product", product, 1e-8);
  c.residual("energy", en, 1e-10);
  c.margin("energy_positive", min_energy);

  // Limit-circle balance on both sides.
  for (Side side : {Side::right, Side::left}) {
    const auto [lhs, rhs] = limit_circle_balance(omega, side);
    double abs_scale = 0.0;
    for (const auto& a : omega.atoms()) abs_scale += std::exp(side == Side::right ? a.x : -a.x) * std::abs(a.w);
    c.residual(std::string("limit_circle_") + to_string(side), rel(lhs, rhs, abs_scale), 1e-10);
  }

  // Parseval on fixed test vectors.
  {
    std::vector<double> f(n), g(n);
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = std::cos(static_cast<double>(i) + 1.0);
      g[i] = std::sin(2.0 * static_cast<double>(i) + 1.0);
    }
    c.residual("parseval", std::max(parseval_residual(omega, Side::right, f, g), parseval_residual(omega, Side::left, f, g)),
               1e-9);
  }

  // Transforms of the Weyl solutions and the Green function.
  {
    double weyl = 0.0, gr = 0.0;
    const double mid = 0.5 * (omega[0].x + omega[n - 1].x);
    for (double z : resolvent_points(lambdas)) {
      weyl = std::max(weyl, weyl_transform_check(omega, z));
      gr = std::max(gr, green_transform_check(omega, z, mid));
    }
    c.residual("transform_weyl", weyl, 1e-9);
    c.residual("transform_green", gr, 1e-9);
  }

  // d/dz G(z, x, x) at z = 0 is the kernel integral.
  {
    const double h = 1e-5;
    double worst = 0.0;
    for (double x : sample_points(omega)) {
      const double fd = (green(omega, h, x, x) - green(omega, -h, x, x)) / (2.0 * h);
      worst = std::max(worst, rel(fd, kernel_integral(omega, x), abs_kernel(omega, x)));
    }
    c.residual("green_expansion", worst, 1e-6);
  }

  // Fredholm determinant: W(z) = det(I - z K).
  {
    const auto k = kernel_matrix_eigenvalues(omega);
    double worst = 0.0;
    if (k.size() == lambdas.size()) {
      for (std::size_t j = 0; j < k.size(); ++j) worst = std::max(worst, rel(k[j], lambdas[j], std::abs(lambdas[j])));
    } else {
      worst = std::numeric_limits<double>::infinity();
    }
    c.residual("fredholm", worst, 1e-9);
  }

  if (exact) {
    c.residual("wronskian_product", wronskian_product_check(omega), 1e-9);
    double had = 0.0;
    for (double x : gap_points(omega)) {
      for (Side side : {Side::right, Side::left}) had = std::max(had, hadamard_check(omega, x, side));
    }
    c.residual("hadamard", had, 1e-9);
  }

  {
    double three = 0.0;
    for (double x : sample_points(omega)) {
      three = std::max(three, rel(u_three_spectra(omega, x), kernel_integral(omega, x), abs_kernel(omega, x)));
    }
    c.residual("three_spectra_u", three, 1e-9);

    // Only generic c: the product formula divides by 1 - lambda/mu, so spectra
    // that nearly meet amplify rounding without bound.
    double gamma = 0.0;
    for (double x : gap_points(omega)) {
      std::vector<double> all = lambdas;
      for (Side side : {Side::right, Side::left}) {
        const auto mu = shifted_spectrum(omega, x, side);
        all.insert(all.end(), mu.begin(), mu.end());
      }
      std::sort(all.begin(), all.end());
      bool generic = true;
      for (std::size_t i = 1; i < all.size(); ++i) {
        generic = generic && std::abs(all[i] - all[i - 1]) > 1e-4 * std::max(std::abs(all[i]), std::abs(all[i - 1]));
      }
      if (!generic) continue;
      for (std::size_t j = 0; j < lambdas.size(); ++j) {
        for (Side side : {Side::right, Side::left}) {
          const double direct = (side == Side::right ? right : left).entries()[j].gamma2;
          gamma = std::max(gamma, rel(norming_three_spectra(omega, x, lambdas[j], side), direct, std::abs(direct)));
        }
      }
    }
    c.residual("three_spectra_norming", gamma, 1e-7);
  }

  report.residuals = c.take();
  return report;
}

std::string format_report(const RunReport& report) {
  nlohmann::ordered_json residuals = nlohmann::ordered_json::array();
  for (const auto& r : report.residuals) {
    residuals.push_back({{"name", r.name},
                         {"value", r.value},
                         {r.is_margin ? "margin_above" : "tolerance", r.tolerance},
                         {"pass", r.pass}});
  }
  nlohmann::ordered_json j{{"command", report.command},
                           {"input_digest", report.input_digest},
                           {"pass", report.pass()},
                           {"residuals", residuals}};
  if (report.timing_ms) j["timing_ms"] = *report.timing_ms;
  return j.dump(2) + "\n";
}

}  // namespace peakon
