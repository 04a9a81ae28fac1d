#pragma once

#include <optional>
#include <string>
#include <vector>

#include "peakon/measure.hpp"

namespace peakon {

struct Residual {
  std::string name;
  double value;
  double tolerance;
  /// A residual passes when value <= tolerance; a margin when value > tolerance.
  bool is_margin = false;
  bool pass = false;
};

struct RunReport {
  std::string command;
  std::string input_digest;
  std::vector<Residual> residuals;
  std::optional<double> timing_ms;

  bool pass() const;
};

/// Evaluates every identity that applies to omega. A given tolerance replaces
/// the default of each residual (margins keep theirs).
RunReport verify(const DiscreteMeasure& omega, std::optional<double> tolerance = std::nullopt);

std::string format_report(const RunReport& report);

}  // namespace peakon
