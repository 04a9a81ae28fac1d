#include "peakon/cli.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "peakon/error.hpp"
#include "peakon/flow.hpp"
#include "peakon/io.hpp"
#include "peakon/report.hpp"
#include "peakon/spectrum.hpp"

namespace peakon::cli {

namespace {

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    fail(ErrorKind::parse, "not a number: \"" + s + "\"");
  }
  if (used != s.size() || !std::isfinite(v)) fail(ErrorKind::parse, "not a finite number: \"" + s + "\"");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

const std::vector<double>& require_times(const Options& opt, const char* command) {
  if (opt.times.empty()) fail(ErrorKind::invalid_argument, std::string(command) + " needs --times");
  return opt.times;
}

}  // namespace

std::vector<double> Grid::points() const {
  std::vector<double> xs;
  xs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  return xs;
}

Grid parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) fail(ErrorKind::parse, "grid must read a:b:n");
  const double n = parse_double(parts[2]);
  if (n < 1 || n != std::floor(n) || n > 1e7) fail(ErrorKind::parse, "grid point count must be a positive integer");
  return {parse_double(parts[0]), parse_double(parts[1]), static_cast<std::size_t>(n)};
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_double(p));
  return out;
}

Output forward(const std::string& input, const Options& opt) {
  const DiscreteMeasure omega = parse_measure(input);
  const SpectralData primary = spectral_data(omega, opt.side);
  const SpectralData other = spectral_data(omega, opposite(opt.side));
  const auto table = coupling_table(omega);
  return {format_forward(primary, other, table), 0};
}

Output inverse(const std::string& input, const Options& opt) {
  SpectralData d = parse_spectral(input);
  if (opt.cutoff) d = d.restricted(*opt.cutoff);
  return {format_measure(reconstruct(d, InverseMethod::moments, opt.precision)), 0};
}

Output evolve(const std::string& input, const Options& opt) {
  const DiscreteMeasure omega = parse_measure(input);
  const auto& times = require_times(opt, "evolve");
  std::vector<Frame> frames;
  for (double t : times) frames.push_back({t, solve_ch(omega, t, InverseMethod::moments, opt.precision)});

  if (opt.format.value_or(Format::json) == Format::csv) {
    if (!opt.grid) fail(ErrorKind::invalid_argument, "evolve --format csv needs --grid");
    std::string out = "t,x,u\n";
    for (const auto& f : frames) {
      for (double x : opt.grid->points()) {
        const double row[] = {f.t, x, u_eval(f.omega, x)};
        out += csv_row(row);
      }
    }
    return {out, 0};
  }
  if (frames.size() == 1) return {format_measure(frames.front().omega), 0};
  return {format_frames(frames), 0};
}

Output sample_u(const std::string& input, const Options& opt) {
  const DiscreteMeasure omega = parse_measure(input);
  if (!opt.grid) fail(ErrorKind::invalid_argument, "sample-u needs --grid");
  if (opt.format.value_or(Format::csv) != Format::csv) fail(ErrorKind::invalid_argument, "sample-u writes CSV only");
  const std::vector<double> times = opt.times.empty() ? std::vector<double>{0.0} : opt.times;
  std::string out = "t,x,u,u_three_spectra\n";
  for (double t : times) {
    const DiscreteMeasure w = t == 0.0 ? omega : solve_ch(omega, t, InverseMethod::moments, opt.precision);
    for (double x : opt.grid->points()) {
      // The three-spectra column gives 2u; halve it to compare with u.
      const double row[] = {t, x, u_eval(w, x), 0.5 * u_three_spectra(w, x)};
      out += csv_row(row);
    }
  }
  return {out, 0};
}

Output verify(const std::string& input, const Options& opt) {
  const DiscreteMeasure omega = parse_measure(input);
  const auto start = std::chrono::steady_clock::now();
  RunReport report = peakon::verify(omega, opt.tol);
  if (opt.timing) {
    report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return {format_report(report), report.pass() ? 0 : exit_code(ErrorKind::numerics)};
}

Output asymptotics(const std::string& input, const Options& opt) {
  const DiscreteMeasure omega = parse_measure(input);
  const auto& times = require_times(opt, "asymptotics");
  if (!omega.is_sign_definite()) {
    fail(ErrorKind::indefinite_not_supported, "asymptotics need a sign-definite measure");
  }
  const FlowState state = make_flow_state(omega);
  const auto shifts = phase_shifts(state);
  const std::vector<double> offsets = opt.offsets.empty() ? std::vector<double>{0.0} : opt.offsets;

  std::string csv = "t,lambda,x0,x,kernel_integral,profile,abs_diff\n";
  for (double t : times) {
    const DiscreteMeasure w = solve_ch(omega, t, InverseMethod::moments, opt.precision);
    for (const auto& p : shifts) {
      for (double x0 : offsets) {
        const double x = t / (2.0 * p.lambda) + x0;
        const double k = kernel_integral(w, x);
        const double a = asymptotic_profile(shifts, x, t);
        const double row[] = {t, p.lambda, x0, x, k, a, std::abs(k - a)};
        csv += csv_row(row);
      }
    }
  }
  const std::string table = format_phase_shifts(shifts, state.t0());
  if (opt.phase_shifts_path) write_text_file(*opt.phase_shifts_path, table);
  if (opt.format.value_or(Format::csv) == Format::json) {
    return {table, 0};
  }
  return {csv, 0};
}

}  // namespace peakon::cli
