#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "peakon/flow.hpp"
#include "peakon/measure.hpp"
#include "peakon/spectrum.hpp"

namespace peakon {

/// {"atoms":[{"x":..,"w":..},...]}. Throws Error(parse) on schema violations.
DiscreteMeasure parse_measure(std::string_view text);
std::string format_measure(const DiscreteMeasure& omega);

/// {"side":"left|right","entries":[{"lambda":..,"gamma2":..},...]}, optionally
/// carrying the forward extras "other_side" and "coupling", which are ignored.
SpectralData parse_spectral(std::string_view text);
std::string format_spectral(const SpectralData& d);

/// Spectral document of one side plus the other side and the coupling table.
std::string format_forward(const SpectralData& primary, const SpectralData& other,
                           std::span<const CouplingEntry> coupling);

struct Frame {
  double t;
  DiscreteMeasure omega;
};

/// {"frames":[{"t":..,"atoms":[...]},...]}
std::string format_frames(std::span<const Frame> frames);

/// {"t0":..,"phase_shifts":[{"lambda":..,"eta":..,"eta_from_left":..},...]}
std::string format_phase_shifts(std::span<const PhaseShift> shifts, double t0);

/// Shortest decimal that reads back to the same double.
std::string format_number(double v);

/// One CSV line (newline included).
std::string csv_row(std::span<const double> values);

/// 64-bit FNV-1a of the canonical measure document, as 16 hex digits.
std::string measure_digest(const DiscreteMeasure& omega);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace peakon
