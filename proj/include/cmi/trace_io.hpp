#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "cmi/analysis.hpp"
#include "cmi/interferogram.hpp"

namespace cmi {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sidecar metadata path for a trace CSV: foo.csv -> foo.json,
/// otherwise the .json suffix is appended.
std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

/// Two-column CSV (delay_fs,value) with full double precision, plus a JSON
/// metadata sidecar (passes, omega0, delta_omega, normalization, kind).
/// Output is byte-identical for identical input.
void write_trace_csv(const Interferogram& trace, const std::filesystem::path& path);

/// Reads a trace CSV: header line optional, '#' comments skipped. Delays
/// must increase; spacing jitter up to 1% is linearly resampled onto a
/// uniform grid, larger jitter is rejected. Metadata is taken from the
/// sidecar when present; otherwise kind defaults to full (a measured trace)
/// and spectrum/passes stay unset.
Interferogram read_trace_csv(const std::filesystem::path& path);

/// Metrics as a JSON object with fixed keys: peak, background, f_pb,
/// g2_zero, fwhm_fs, visibility, fringe_period_fs. NaNs serialize as null.
std::string metrics_to_json(const TraceMetrics& metrics, int indent = 2);

}  // namespace cmi
