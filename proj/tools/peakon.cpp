// peakon: spectral analysis and flow of multi-peakon measures.
#include <CLI11.hpp>
#include <iostream>

#include "peakon/cli.hpp"
#include "peakon/error.hpp"
#include "peakon/io.hpp"

namespace {

using peakon::cli::Options;
using peakon::cli::Output;

struct Raw {
  std::string input;
  std::string output;
  std::string side = "right";
  std::optional<double> tol;
  std::string grid;
  std::string times;
  std::optional<double> cutoff;
  std::string format;
  std::string offsets;
  std::string phase_shifts;
  bool timing = false;
};

Options resolve(const Raw& r) {
  Options o;
  o.side = r.side == "left" ? peakon::Side::left : peakon::Side::right;
  o.tol = r.tol;
  if (!r.grid.empty()) o.grid = peakon::cli::parse_grid(r.grid);
  if (!r.times.empty()) o.times = peakon::cli::parse_list(r.times);
  if (!r.offsets.empty()) o.offsets = peakon::cli::parse_list(r.offsets);
  o.cutoff = r.cutoff;
  if (r.format == "json") o.format = peakon::cli::Format::json;
  if (r.format == "csv") o.format = peakon::cli::Format::csv;
  if (!r.phase_shifts.empty()) o.phase_shifts_path = r.phase_shifts;
  o.timing = r.timing;
  o.precision = peakon::precision_from_env();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Direct and inverse spectral problem for multi-peakon measures, and the Camassa-Holm flow."};
  app.require_subcommand(1);
  Raw raw;

  using Command = Output (*)(const std::string&, const Options&);
  std::vector<std::pair<CLI::App*, Command>> commands;
  auto add = [&](const char* name, const char* help, Command fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", raw.input, "input document (- for stdin)")->required();
    sub->add_option("-o,--output", raw.output, "write here instead of stdout");
    commands.emplace_back(sub, fn);
    return sub;
  };

  auto* fwd = add("forward", "measure -> eigenvalues, norming constants of both sides, coupling table",
                  peakon::cli::forward);
  fwd->add_option("--side", raw.side, "side listed first")->check(CLI::IsMember({"left", "right"}));

  auto* inv = add("inverse", "spectral data -> measure", peakon::cli::inverse);
  inv->add_option("--cutoff", raw.cutoff, "keep eigenvalues with |lambda| <= R");

  auto* evo = add("evolve", "measure -> measure at the given times", peakon::cli::evolve);
  evo->add_option("--times", raw.times, "t1,t2,...")->required();
  evo->add_option("--grid", raw.grid, "a:b:n, with --format csv");
  evo->add_option("--format", raw.format)->check(CLI::IsMember({"json", "csv"}));

  auto* su = add("sample-u", "CSV of u and its three-spectra value on a grid", peakon::cli::sample_u);
  su->add_option("--grid", raw.grid, "a:b:n")->required();
  su->add_option("--times", raw.times, "t1,t2,... (default 0)");
  su->add_option("--format", raw.format)->check(CLI::IsMember({"csv"}));

  auto* ver = add("verify", "residuals of every spectral identity", peakon::cli::verify);
  ver->add_option("--tol", raw.tol, "replace every tolerance");
  ver->add_flag("--timing", raw.timing, "include wall time (output no longer byte-stable)");

  auto* asy = add("asymptotics", "kernel integral against the peakon train along rays", peakon::cli::asymptotics);
  asy->add_option("--times", raw.times, "t1,t2,...")->required();
  asy->add_option("--offsets", raw.offsets, "ray offsets x0 (default 0)");
  asy->add_option("--phase-shifts", raw.phase_shifts, "also write the phase-shift table here");
  asy->add_option("--format", raw.format, "csv samples or json phase shifts")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : peakon::exit_code(peakon::ErrorKind::parse);
  }

  try {
    const Options opt = resolve(raw);
    std::string text;
    if (raw.input == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
      text = peakon::read_text_file(raw.input);
    }
    for (const auto& [sub, fn] : commands) {
      if (!sub->parsed()) continue;
      const Output out = fn(text, opt);
      if (raw.output.empty()) {
        std::cout << out.text;
      } else {
        peakon::write_text_file(raw.output, out.text);
      }
      return out.exit_code;
    }
  } catch (const peakon::Error& e) {
    std::cerr << "peakon: " << e.what() << "\n";
    return peakon::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "peakon: " << e.what() << "\n";
    return peakon::exit_code(peakon::ErrorKind::numerics);
  }
  return 0;
}
