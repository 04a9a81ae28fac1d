#pragma once

#include <optional>
#include <string>
#include <vector>

#include "peakon/inverse.hpp"
#include "peakon/solution.hpp"

namespace peakon::cli {

/// a:b:n, n >= 1 equally spaced points from a to b inclusive.
struct Grid {
  double a;
  double b;
  std::size_t n;

  std::vector<double> points() const;
};

Grid parse_grid(const std::string& text);
/// Comma-separated numbers.
std::vector<double> parse_list(const std::string& text);

enum class Format { json, csv };

struct Options {
  Side side = Side::right;
  std::optional<double> tol;
  std::optional<Grid> grid;
  std::vector<double> times;
  std::optional<double> cutoff;
  std::optional<Format> format;
  std::vector<double> offsets;
  std::optional<std::string> phase_shifts_path;
  bool timing = false;
  Precision precision = Precision::standard;
};

struct Output {
  std::string text;
  int exit_code = 0;
};

/// Each command takes the input document text. Library errors propagate as
/// peakon::Error; the caller maps them to exit codes.
Output forward(const std::string& input, const Options& opt);
Output inverse(const std::string& input, const Options& opt);
Output evolve(const std::string& input, const Options& opt);
Output sample_u(const std::string& input, const Options& opt);
Output verify(const std::string& input, const Options& opt);
Output asymptotics(const std::string& input, const Options& opt);

}  // namespace peakon::cli
