#pragma once

#include <utility>

#include "cmi/interferogram.hpp"
#include "cmi/spectrum.hpp"

namespace cmi {

// Trace analysis: strip the carrier-frequency oscillations, then read the
// envelope metrics off the result. Works on synthetic traces and on ingested
// measurement files alike.

/// Zero-phase low-pass specification. The mask is 1 below
/// cutoff - taper/2, 0 above cutoff + taper/2, raised-cosine between.
struct FilterConfig {
  double cutoff;       // rad/s
  double taper_width;  // rad/s

  FilterConfig(double cutoff_rad_s, double taper_rad_s);

  /// Default placement for a given source: cutoff at cutoff_fraction*omega0
  /// (default half way to the fundamental carrier), taper omega0/10.
  static FilterConfig for_spectrum(const SpectrumModel& spectrum,
                                   double cutoff_fraction = 0.5,
                                   double taper_fraction = 0.1);
};

struct TraceMetrics {
  double peak = 0.0;
  double background = 0.0;
  double peak_to_background = 0.0;  // F_P/B of the filtered envelope
  double g2_zero = 0.0;             // 1 + 2 (F_P/B - 1)
  double fwhm_fs = 0.0;             // NaN when the trace has no peak
  double visibility = 0.0;          // NaN for non-fringe-resolved input
  double fringe_period_fs = 0.0;    // NaN when no carrier is detectable
};

/// Zero-phase spectral masking. Requires uniform sampling; when the trace
/// carries spectrum metadata, rejects configurations whose envelope band
/// (N * delta_omega) reaches the cutoff.
Interferogram lowpass_envelope(const Interferogram& trace, const FilterConfig& config);

/// Peak = maximum sample; background = median of the outermost 20% of
/// samples on each side. Envelope input only; the grid must extend at least
/// 10 coherence times to each side when the spectrum is known.
std::pair<double, double> peak_background(const Interferogram& envelope);

/// g2(0) = 1 + 2 (ratio - 1). Throws below ratio 1.
double g2_from_ratio(double ratio);

/// Full width at half maximum of the peak above background, in fs, by
/// linear interpolation between samples. NaN for a flat trace; throws when a
/// genuine peak never falls to half level inside the grid.
double fwhm(const Interferogram& envelope);

/// (max - min) / (max + min) over the central coherence window
/// |tau| <= 2 pi / delta_omega. Fringe-resolved traces only.
double visibility(const Interferogram& full);

/// Period of the strongest spectral component above the filter cutoff, in
/// fs. NaN when the trace carries no oscillation there.
double fringe_period_fs(const Interferogram& full, const FilterConfig& config);

/// The full chain: filter, peak/background, g2, FWHM, plus visibility and
/// fringe period from the unfiltered trace when it is fringe-resolved.
/// Errors from individual stages are rethrown with the stage name prefixed.
TraceMetrics analyze(const Interferogram& trace, const FilterConfig& config);

}  // namespace cmi
