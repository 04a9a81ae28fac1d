#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace peakon {

/// Largest admissible |x| for an atom; keeps e^{+-x} finite in double precision.
inline constexpr double kMaxAbsPosition = 700.0;

/// Atoms closer than this are merged by adding their masses.
inline constexpr double kMergeDistance = 1e-12;

struct Atom {
  double x;
  double w;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite signed sum of weighted Dirac atoms. Atoms are sorted by position,
/// strictly increasing, with nonzero masses. Immutable once built.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;

  /// Normalizes arbitrary atoms: sorts, merges coincident positions and
  /// drops zero masses. Throws Error(invalid_argument) on non-finite input
  /// or positions beyond kMaxAbsPosition.
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  const Atom& operator[](std::size_t i) const { return atoms_[i]; }

  std::vector<double> positions() const;
  std::vector<double> masses() const;

  bool is_positive() const noexcept;
  bool is_negative() const noexcept;
  bool is_sign_definite() const noexcept { return is_positive() || is_negative(); }

  /// (x_i, w_i) -> (-x_i, w_i).
  DiscreteMeasure reflected() const;
  /// (x_i, w_i) -> (x_i, -w_i).
  DiscreteMeasure negated() const;

  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

 private:
  std::vector<Atom> atoms_;
};

DiscreteMeasure make_measure(std::vector<Atom> atoms);

/// u(x) = 1/2 sum_i e^{-|x - x_i|} w_i, the H^1 solution of u - u'' = omega.
double u_eval(const DiscreteMeasure& omega, double x);

/// sum_i e^{-|x - x_i|} w_i, i.e. 2 u(x).
double kernel_integral(const DiscreteMeasure& omega, double x);

/// sum_i e^{sign * x_i} w_i for sign = +1 or -1.
double exp_moment(const DiscreteMeasure& omega, int sign);

struct Totals {
  double signed_mass;      // integral of d omega
  double total_variation;  // integral of d|omega|
};

Totals totals(const DiscreteMeasure& omega);

/// Krein string on (-1, 1): gaps l_0..l_n summing to 2 and point masses
/// m_1..m_n, mass m_i sitting at y_i = -1 + l_0 + ... + l_{i-1}.
struct StringData {
  std::vector<double> gaps;
  std::vector<double> masses;

  std::vector<double> positions() const;
};

/// Liouville transform y = tanh(x/2), m_i = 2 w_i / (1 - y_i^2).
/// Throws Error(not_representable) when distinct atoms collide in y.
StringData to_string_data(const DiscreteMeasure& omega);

/// Inverse of to_string_data. Throws Error(boundary_mass) when a boundary
/// gap vanishes, Error(invalid_argument) for malformed data.
DiscreteMeasure from_string_data(const StringData& string);

/// max over the grid of |u_1(x) - u_2(x)|.
double u_distance(const DiscreteMeasure& a, const DiscreteMeasure& b, std::span<const double> grid);

}  // namespace peakon
