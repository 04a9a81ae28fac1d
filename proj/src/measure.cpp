#include "peakon/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "peakon/error.hpp"

namespace peakon {

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) {
  for (const auto& a : atoms) {
    if (!std::isfinite(a.x) || !std::isfinite(a.w)) {
      fail(ErrorKind::invalid_argument, "atom with non-finite position or mass");
    }
    if (std::abs(a.x) > kMaxAbsPosition) {
      fail(ErrorKind::invalid_argument,
           "atom position " + std::to_string(a.x) + " exceeds |x| <= 700");
    }
  }
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& a, const Atom& b) { return a.x < b.x; });

  std::size_t i = 0;
  while (i < atoms.size()) {
    const double x = atoms[i].x;
    double w = 0.0;
    double scale = 0.0;
    std::size_t j = i;
    while (j < atoms.size() && atoms[j].x - x <= kMergeDistance) {
      w += atoms[j].w;
      scale += std::abs(atoms[j].w);
      ++j;
    }
    if (std::abs(w) > 4.0 * std::numeric_limits<double>::epsilon() * scale) {
      atoms_.push_back({x, w});
    }
    i = j;
  }
}

std::vector<double> DiscreteMeasure::positions() const {
  std::vector<double> out;
  out.reserve(atoms_.size());
  for (const auto& a : atoms_) out.push_back(a.x);
  return out;
}

std::vector<double> DiscreteMeasure::masses() const {
  std::vector<double> out;
  out.reserve(atoms_.size());
  for (const auto& a : atoms_) out.push_back(a.w);
  return out;
}

bool DiscreteMeasure::is_positive() const noexcept {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.w > 0; });
}

bool DiscreteMeasure::is_negative() const noexcept {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.w < 0; });
}

DiscreteMeasure DiscreteMeasure::reflected() const {
  std::vector<Atom> out;
  out.reserve(atoms_.size());
  for (const auto& a : atoms_) out.push_back({-a.x, a.w});
  return DiscreteMeasure(std::move(out));
}

DiscreteMeasure DiscreteMeasure::negated() const {
  DiscreteMeasure out = *this;
  for (auto& a : out.atoms_) a.w = -a.w;
  return out;
}

DiscreteMeasure make_measure(std::vector<Atom> atoms) { return DiscreteMeasure(std::move(atoms)); }

double kernel_integral(const DiscreteMeasure& omega, double x) {
  double sum = 0.0;
  for (const auto& a : omega.atoms()) sum += std::exp(-std::abs(x - a.x)) * a.w;
  return sum;
}

double u_eval(const DiscreteMeasure& omega, double x) { return 0.5 * kernel_integral(omega, x); }

double exp_moment(const DiscreteMeasure& omega, int sign) {
  if (sign != 1 && sign != -1) fail(ErrorKind::invalid_argument, "exp_moment sign must be +1 or -1");
  double sum = 0.0;
  for (const auto& a : omega.atoms()) sum += std::exp(sign * a.x) * a.w;
  return sum;
}

Totals totals(const DiscreteMeasure& omega) {
  Totals t{0.0, 0.0};
  for (const auto& a : omega.atoms()) {
    t.signed_mass += a.w;
    t.total_variation += std::abs(a.w);
  }
  return t;
}

std::vector<double> StringData::positions() const {
  std::vector<double> y;
  y.reserve(masses.size());
  double acc = -1.0;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    acc += gaps[i];
    y.push_back(acc);
  }
  return y;
}

StringData to_string_data(const DiscreteMeasure& omega) {
  StringData s;
  const auto atoms = omega.atoms();
  const std::size_t n = atoms.size();
  s.gaps.reserve(n + 1);
  s.masses.reserve(n);

  // 1 + tanh(x/2) = 2/(1 + e^{-x}) and 1 - tanh(x/2) = 2/(1 + e^{x}) avoid cancellation.
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = std::tanh(0.5 * atoms[i].x);
    if (std::abs(y[i]) >= 1.0) {
      fail(ErrorKind::not_representable, "atom at x = " + std::to_string(atoms[i].x) +
                                             " maps onto the string endpoint");
    }
    if (i > 0 && y[i] <= y[i - 1]) {
      fail(ErrorKind::not_representable, "atoms collide after the Liouville transform");
    }
    const double c = std::cosh(0.5 * atoms[i].x);
    s.masses.push_back(2.0 * atoms[i].w * c * c);
  }
  if (n == 0) {
    s.gaps.push_back(2.0);
    return s;
  }
  s.gaps.push_back(2.0 / (1.0 + std::exp(-atoms[0].x)));
  for (std::size_t i = 1; i < n; ++i) s.gaps.push_back(y[i] - y[i - 1]);
  s.gaps.push_back(2.0 / (1.0 + std::exp(atoms[n - 1].x)));
  return s;
}

DiscreteMeasure from_string_data(const StringData& s) {
  const std::size_t n = s.masses.size();
  if (s.gaps.size() != n + 1) {
    fail(ErrorKind::invalid_argument, "string data needs exactly one more gap than masses");
  }
  double total = 0.0;
  for (double l : s.gaps) {
    if (!std::isfinite(l) || l < 0.0) fail(ErrorKind::invalid_argument, "string gaps must be nonnegative");
    total += l;
  }
  if (std::abs(total - 2.0) > 1e-8) {
    fail(ErrorKind::invalid_argument, "string gaps sum to " + std::to_string(total) + ", expected 2");
  }
  if (n == 0) return {};
  if (s.gaps.front() == 0.0 || s.gaps.back() == 0.0) {
    fail(ErrorKind::boundary_mass, "mass sits on a string endpoint");
  }

  // 1 + y_i and 1 - y_i as partial sums of gaps, free of cancellation.
  std::vector<double> left(n), right(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += s.gaps[i];
    left[i] = acc;
  }
  acc = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    acc += s.gaps[i + 1];
    right[i] = acc;
  }

  std::vector<Atom> atoms;
  atoms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && s.gaps[i] == 0.0) fail(ErrorKind::invalid_argument, "interior string gap is zero");
    if (s.masses[i] == 0.0 || !std::isfinite(s.masses[i])) {
      fail(ErrorKind::invalid_argument, "string masses must be finite and nonzero");
    }
    const double x = std::log(left[i] / right[i]);
    const double w = 0.5 * s.masses[i] * left[i] * right[i];
    atoms.push_back({x, w});
  }
  return DiscreteMeasure(std::move(atoms));
}

double u_distance(const DiscreteMeasure& a, const DiscreteMeasure& b, std::span<const double> grid) {
  if (grid.empty()) fail(ErrorKind::invalid_argument, "u_distance needs a nonempty grid");
  double d = 0.0;
  for (double x : grid) d = std::max(d, std::abs(u_eval(a, x) - u_eval(b, x)));
  return d;
}

}  // namespace peakon
