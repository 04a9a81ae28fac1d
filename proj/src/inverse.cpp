#include "peakon/inverse.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "peakon/error.hpp"

namespace peakon {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : numerator(std::move(num)), denominator(std::move(den)) {
  if (denominator.is_zero()) fail(ErrorKind::invalid_argument, "rational function with zero denominator");
}

Precision precision_from_env() {
  const char* v = std::getenv("PEAKON_PRECISION");
  return v != nullptr && std::string(v) == "extended" ? Precision::extended : Precision::standard;
}

namespace {

template <class T>
using Poly = BasicPolynomial<T>;

void require_sign_definite(const SpectralData& d) {
  if (!d.is_sign_definite()) {
    fail(ErrorKind::indefinite_not_supported,
         "spectral data with eigenvalues of both signs: the indefinite inverse problem is not supported");
  }
}

template <class T>
std::pair<Poly<T>, Poly<T>> weyl_parts(const SpectralData& d) {
  const auto& e = d.entries();
  const std::size_t n = e.size();
  std::vector<Poly<T>> factors;
  factors.reserve(n);
  for (const auto& entry : e) factors.push_back(Poly<T>{T(1), -T(1) / T(entry.lambda)});

  Poly<T> den{T(1)};
  for (const auto& f : factors) den = den * f;

  Poly<T> num = den * T(0.5);
  for (std::size_t j = 0; j < n; ++j) {
    const T lambda = e[j].lambda;
    const T r = T(1) / (T(2) * T(e[j].gamma2));
    Poly<T> others{T(1)};
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) others = others * factors[k];
    }
    num -= others.shifted() * (r / (lambda * lambda));
  }
  return {std::move(num), std::move(den)};
}

// Keeps the coefficients of degree <= deg.
template <class T>
Poly<T> truncated(const Poly<T>& p, int deg) {
  std::vector<T> c(p.coefficients().begin(),
                   p.coefficients().begin() + std::min<std::ptrdiff_t>(deg + 1, p.degree() + 1));
  return Poly<T>(std::move(c));
}

[[noreturn]] void unrealizable(const std::string& what, std::size_t round) {
  std::ostringstream msg;
  msg << "spectral data not realizable: " << what << " at extraction round " << round;
  fail(ErrorKind::not_realizable, msg.str());
}

template <class T>
StringData extract(Poly<T> num, Poly<T> den, std::size_t n) {
  constexpr double kTrim = 1e-13;
  // F = den / num = P / Q.
  Poly<T> p = std::move(den);
  Poly<T> q = std::move(num);
  std::vector<double> gaps(n + 1, 0.0);
  std::vector<double> masses(n, 0.0);

  for (std::size_t i = n; i >= 1; --i) {
    const int deg = static_cast<int>(i);
    p = p.trimmed(kTrim);
    q = q.trimmed(kTrim);
    if (p.degree() != deg || q.degree() != deg) unrealizable("degree defect", i);
    const T l = p.leading() / q.leading();
    if (!(l > T(0))) unrealizable("nonpositive gap", i);
    gaps[i] = static_cast<double>(l);

    Poly<T> r = truncated(p - q * l, deg - 1).trimmed(kTrim);
    if (r.degree() != deg - 1) unrealizable("degree defect", i);
    const T mu = -q.leading() / r.leading();
    if (!(mu > T(0))) unrealizable("nonpositive mass", i);
    masses[i - 1] = static_cast<double>(mu);

    Poly<T> next_q = truncated(q + r.shifted() * mu, deg - 1);
    p = std::move(r);
    q = std::move(next_q);
    const T scale = std::max(p.max_abs_coeff(), q.max_abs_coeff());
    if (!(scale > T(0)) || !std::isfinite(static_cast<double>(scale))) unrealizable("degenerate remainder", i);
    p /= scale;
    q /= scale;
  }

  p = p.trimmed(kTrim);
  q = q.trimmed(kTrim);
  if (p.degree() != 0 || q.degree() != 0) unrealizable("nonconstant remainder", 0);
  const T l0 = p.leading() / q.leading();
  if (!(l0 > T(0))) unrealizable("nonpositive gap", 0);
  gaps[0] = static_cast<double>(l0);

  double total = 0.0;
  for (double g : gaps) total += g;
  if (std::abs(total - 2.0) > 1e-8) {
    std::ostringstream msg;
    msg << "spectral data not realizable: gaps sum to " << total << " instead of 2";
    fail(ErrorKind::not_realizable, msg.str());
  }
  return {std::move(gaps), std::move(masses)};
}

template <class T>
T log_sum_exp(const std::vector<T>& v, std::size_t begin, std::size_t end) {
  T m = -std::numeric_limits<T>::infinity();
  for (std::size_t i = begin; i < end; ++i) m = std::max(m, v[i]);
  if (!std::isfinite(static_cast<double>(m))) return m;
  T s = 0;
  for (std::size_t i = begin; i < end; ++i) s += std::exp(v[i] - m);
  return m + std::log(s);
}

// Running log(sum exp(v)).
template <class T>
struct LogAccumulator {
  T m = -std::numeric_limits<T>::infinity();
  T s = 0;
  void add(T v) {
    if (v > m) {
      s = s * std::exp(m - v) + T(1);
      m = v;
    } else {
      s += std::exp(v - m);
    }
  }
  T value() const { return m + std::log(s); }
};

// m(-u)/u = int d beta(theta) / (u + theta) with beta = 1/2 delta_0 + sum beta_j delta_{lambda_j}.
// Its Stieltjes fraction has coefficients a_k = E_{k-1}^2/(D_k D_{k-1}) (gaps) and
// b_k = D_k^2/(E_k E_{k-1}) (masses), D_k and E_k the Hankel determinants of the
// moments of beta and theta beta. Each is a sum of positive subset products.
struct LogHankel {
  std::vector<long double> d;  // log D_0 .. log D_{n+1}
  std::vector<long double> e;  // log E_0 .. log E_n
};

template <class T>
LogHankel hankel_by_subsets(const SpectralData& d) {
  const std::size_t n = d.size();
  const std::size_t atoms = n + 1;
  std::vector<T> theta(atoms), log_beta(atoms), log_theta(atoms, T(0));
  theta[0] = 0;
  log_beta[0] = std::log(T(0.5));
  for (std::size_t j = 0; j < n; ++j) {
    const T lambda = d.entries()[j].lambda;
    const T g = d.entries()[j].gamma2;
    theta[j + 1] = lambda;
    log_theta[j + 1] = std::log(lambda);
    log_beta[j + 1] = -std::log(T(2) * lambda * g);
  }
  std::vector<std::vector<T>> log_diff(atoms, std::vector<T>(atoms, T(0)));
  for (std::size_t i = 0; i < atoms; ++i) {
    for (std::size_t j = 0; j < atoms; ++j) {
      if (i != j) log_diff[i][j] = T(2) * std::log(std::abs(theta[i] - theta[j]));
    }
  }

  const std::uint32_t count = std::uint32_t{1} << atoms;
  std::vector<T> f(count, T(0));
  std::vector<T> g(count, T(0));
  std::vector<LogAccumulator<T>> dk(atoms + 1), ek(atoms);
  dk[0].add(0);
  ek[0].add(0);
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    const int top = 31 - __builtin_clz(mask);
    const std::uint32_t rest = mask ^ (std::uint32_t{1} << top);
    T v = f[rest] + log_beta[top];
    for (std::uint32_t r = rest; r != 0; r &= r - 1) v += log_diff[__builtin_ctz(r)][top];
    f[mask] = v;
    g[mask] = g[rest] + log_theta[top];
    const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
    dk[k].add(v);
    if ((mask & 1u) == 0) ek[k].add(v + g[mask]);
  }

  LogHankel h{std::vector<long double>(atoms + 1), std::vector<long double>(atoms)};
  for (std::size_t k = 0; k <= atoms; ++k) h.d[k] = dk[k].value();
  for (std::size_t k = 0; k < atoms; ++k) h.e[k] = ek[k].value();
  return h;
}

// log of the monic orthogonal polynomial norms h_0..h_{m-1} of sum w_j delta_{theta_j},
// by Lanczos on diag(theta) with full reorthogonalization. D_k = h_0 ... h_{k-1}.
std::vector<long double> log_norms(const std::vector<long double>& theta, const std::vector<long double>& w) {
  using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  const auto m = static_cast<Eigen::Index>(theta.size());
  long double total = 0;
  for (long double v : w) total += v;
  Vec q(m);
  for (Eigen::Index i = 0; i < m; ++i) q(i) = std::sqrt(w[static_cast<std::size_t>(i)] / total);
  std::vector<Vec> basis{q};
  std::vector<long double> out{std::log(total)};
  long double beta = 0;
  for (Eigen::Index k = 1; k < m; ++k) {
    Vec v(m);
    for (Eigen::Index i = 0; i < m; ++i) v(i) = theta[static_cast<std::size_t>(i)] * basis.back()(i);
    v -= v.dot(basis.back()) * basis.back();
    if (basis.size() > 1) v -= beta * basis[basis.size() - 2];
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vec& b : basis) v -= v.dot(b) * b;
    }
    beta = v.norm();
    if (!(beta > 0)) fail(ErrorKind::numerics, "orthogonal polynomial recursion broke down");
    out.push_back(out.back() + 2 * std::log(beta));
    basis.push_back(v / beta);
  }
  return out;
}

LogHankel hankel_by_lanczos(const SpectralData& d) {
  const std::size_t n = d.size();
  std::vector<long double> theta{0}, w{0.5L}, theta1, w1;
  for (const auto& e : d.entries()) {
    const long double lambda = e.lambda;
    const long double beta = 1 / (2 * lambda * static_cast<long double>(e.gamma2));
    theta.push_back(lambda);
    w.push_back(beta);
    theta1.push_back(lambda);
    w1.push_back(lambda * beta);
  }
  LogHankel h{{0}, {0}};
  const auto nd = log_norms(theta, w);
  for (std::size_t k = 0; k <= n; ++k) h.d.push_back(h.d.back() + nd[k]);
  const auto ne = log_norms(theta1, w1);
  for (std::size_t k = 0; k < n; ++k) h.e.push_back(h.e.back() + ne[k]);
  return h;
}

template <class T>
DiscreteMeasure measure_from_hankel(const LogHankel& h, std::size_t n) {
  const std::size_t atoms = n + 1;
  std::vector<T> log_d(h.d.begin(), h.d.end()), log_e(h.e.begin(), h.e.end());

  // log_gap[i] is l_i, gap i lying between masses i and i+1 (1-based).
  std::vector<T> log_gap(n + 1), log_mass(n + 1);
  for (std::size_t k = 1; k <= atoms; ++k) {
    log_gap[n + 1 - k] = T(2) * log_e[k - 1] - log_d[k] - log_d[k - 1];
  }
  for (std::size_t k = 1; k <= n; ++k) {
    log_mass[n + 1 - k] = T(2) * log_d[k] - log_e[k] - log_e[k - 1];
  }

  const T total = log_sum_exp(log_gap, 0, n + 1);
  if (!(std::abs(static_cast<double>(total) - std::log(2.0)) <= 1e-8)) {
    std::ostringstream msg;
    msg << "spectral data not realizable: gaps sum to " << std::exp(static_cast<double>(total)) << " instead of 2";
    fail(ErrorKind::not_realizable, msg.str());
  }

  std::vector<Atom> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const T log_left = log_sum_exp(log_gap, 0, i);    // 1 + y_i
    const T log_right = log_sum_exp(log_gap, i, n + 1);  // 1 - y_i
    const double x = static_cast<double>(log_left - log_right);
    const double w = static_cast<double>(std::exp(log_mass[i] + log_left + log_right - std::log(T(2))));
    if (!std::isfinite(x) || !std::isfinite(w) || w == 0.0) {
      fail(ErrorKind::numerics, "reconstructed atom is not finite");
    }
    out.push_back({x, w});
  }
  return DiscreteMeasure(std::move(out));
}

DiscreteMeasure checked_measure(const std::function<DiscreteMeasure()>& build, std::size_t n) {
  DiscreteMeasure omega;
  try {
    omega = build();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::invalid_argument) throw;
    fail(ErrorKind::not_representable, std::string("reconstructed measure: ") + e.what());
  }
  if (omega.size() != n) {
    fail(ErrorKind::not_representable, "reconstructed atoms coincide in double precision");
  }
  return omega;
}

// Forward map of the result against the data, for the routes that can lose
// accuracy without noticing.
void confirm(const DiscreteMeasure& omega, const SpectralData& d) {
  const SpectralData back = spectral_data(omega, Side::right);
  double worst = back.size() == d.size() ? 0.0 : INFINITY;
  for (std::size_t j = 0; j < back.size() && j < d.size(); ++j) {
    const auto& p = back.entries()[j];
    const auto& q = d.entries()[j];
    worst = std::max({worst, std::abs(p.lambda - q.lambda) / std::abs(q.lambda),
                      std::abs(p.gamma2 - q.gamma2) / std::abs(q.gamma2)});
  }
  if (!(worst <= kConfirmTolerance)) {
    std::ostringstream msg;
    msg << "reconstruction lost accuracy: its spectral data differ from the input by " << worst << " (relative)";
    fail(ErrorKind::numerics, msg.str());
  }
}

DiscreteMeasure reconstruct_positive_right(const SpectralData& d, InverseMethod method, Precision precision) {
  const std::size_t n = d.size();
  const bool subsets = method == InverseMethod::moments && n <= kMomentsMaxEigenvalues;
  const DiscreteMeasure omega = checked_measure(
      [&]() -> DiscreteMeasure {
        if (subsets) {
          return precision == Precision::extended ? measure_from_hankel<long double>(hankel_by_subsets<long double>(d), n)
                                                  : measure_from_hankel<double>(hankel_by_subsets<double>(d), n);
        }
        if (method == InverseMethod::moments) return measure_from_hankel<long double>(hankel_by_lanczos(d), n);
        if (precision == Precision::extended) {
          auto [num, den] = weyl_parts<long double>(d);
          return from_string_data(extract(std::move(num), std::move(den), n));
        }
        auto [num, den] = weyl_parts<double>(d);
        return from_string_data(extract(std::move(num), std::move(den), n));
      },
      n);
  if (!subsets) confirm(omega, d);
  return omega;
}

}  // namespace

RationalFunction weyl_function(const SpectralData& d) {
  require_sign_definite(d);
  auto [num, den] = weyl_parts<double>(d);
  return {std::move(num), std::move(den)};
}

StringData stieltjes_extract(const RationalFunction& m, std::size_t n, Precision precision) {
  if (precision == Precision::extended) {
    return extract(m.numerator.cast<long double>(), m.denominator.cast<long double>(), n);
  }
  return extract(m.numerator, m.denominator, n);
}

DiscreteMeasure reconstruct(const SpectralData& d, InverseMethod method, Precision precision) {
  if (d.empty()) return {};
  require_sign_definite(d);
  for (const auto& e : d.entries()) {
    if (!(e.lambda * e.gamma2 > 0)) {
      std::ostringstream msg;
      msg << "spectral data not realizable: lambda * gamma2 = " << e.lambda * e.gamma2 << " at lambda = "
          << e.lambda;
      fail(ErrorKind::not_realizable, msg.str());
    }
  }

  // Left data of omega are the right data of omega reflected.
  if (d.side() == Side::left) {
    return reconstruct(SpectralData(Side::right, d.entries()), method, precision).reflected();
  }
  if (d.is_negative()) {
    std::vector<SpectralEntry> flipped;
    for (const auto& e : d.entries()) flipped.push_back({-e.lambda, -e.gamma2});
    return reconstruct(SpectralData(Side::right, std::move(flipped)), method, precision).negated();
  }
  return reconstruct_positive_right(d, method, precision);
}

std::pair<double, double> limit_circle_balance(const DiscreteMeasure& omega, Side side) {
  const double lhs = exp_moment(omega, side == Side::right ? 1 : -1);
  double rhs = 0.0;
  const SpectralData d = spectral_data(omega, side);
  for (const auto& e : d.entries()) rhs += 1.0 / (e.gamma2 * e.lambda * e.lambda);
  return {lhs, rhs};
}

}  // namespace peakon
