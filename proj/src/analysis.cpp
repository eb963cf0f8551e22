#include "cmi/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cmi/fft.hpp"

namespace cmi {

namespace {

constexpr double kFsToS = 1e-15;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double grid_step_s(const Interferogram& trace) {
  return trace.delays.step_fs() * kFsToS;
}

/// Raised-cosine low-pass mask: 1 below cutoff - taper/2, 0 above
/// cutoff + taper/2.
double mask_value(double omega, const FilterConfig& cfg) {
  const double lo = cfg.cutoff - cfg.taper_width / 2.0;
  const double hi = cfg.cutoff + cfg.taper_width / 2.0;
  if (omega <= lo) return 1.0;
  if (omega >= hi) return 0.0;
  return 0.5 * (1.0 + std::cos(std::numbers::pi * (omega - lo) / cfg.taper_width));
}

double median(std::vector<double> v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  double m = v[mid];
  if (v.size() % 2 == 0) {
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid) - 1,
                     v.begin() + static_cast<std::ptrdiff_t>(mid));
    m = (m + v[mid - 1]) / 2.0;
  }
  return m;
}

void check_fringe_sampling(const Interferogram& trace) {
  if (trace.passes && trace.spectrum) {
    const int needed = required_samples(PassCount(*trace.passes), *trace.spectrum,
                                        trace.delays.start_fs(), trace.delays.stop_fs());
    if (trace.delays.samples() < needed) {
      throw std::domain_error("trace undersamples its fastest fringe: need >= " +
                              std::to_string(needed) + " samples, got " +
                              std::to_string(trace.delays.samples()));
    }
  }
}

template <typename Fn>
auto stage(const char* name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::domain_error& e) {
    throw std::domain_error(std::string(name) + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(std::string(name) + ": " + e.what());
  }
}

}  // namespace

FilterConfig::FilterConfig(double cutoff_rad_s, double taper_rad_s)
    : cutoff(cutoff_rad_s), taper_width(taper_rad_s) {
  if (!(cutoff > 0.0)) throw std::domain_error("filter: cutoff must be positive");
  if (!(taper_width > 0.0) || !(taper_width < cutoff)) {
    throw std::domain_error("filter: taper width must lie in (0, cutoff)");
  }
}

FilterConfig FilterConfig::for_spectrum(const SpectrumModel& spectrum,
                                        double cutoff_fraction,
                                        double taper_fraction) {
  return FilterConfig(cutoff_fraction * spectrum.omega0,
                      taper_fraction * spectrum.omega0);
}

Interferogram lowpass_envelope(const Interferogram& trace, const FilterConfig& config) {
  if (trace.values.size() != static_cast<std::size_t>(trace.delays.samples())) {
    throw std::domain_error("trace values do not match its grid");
  }
  if (trace.spectrum) {
    if (!(config.cutoff < trace.spectrum->omega0)) {
      throw std::domain_error("filter cutoff must stay below the carrier frequency");
    }
    if (trace.passes &&
        *trace.passes * trace.spectrum->delta_omega >= config.cutoff) {
      throw std::domain_error(
          "envelope band N*delta_omega reaches the filter cutoff; envelope and "
          "carrier bands overlap and filtering is ill-posed");
    }
  }

  const double dt = grid_step_s(trace);
  std::vector<std::complex<double>> spec = rfft(trace.values);
  const std::vector<double> omega = rfft_omega(trace.delays.samples(), dt);
  for (std::size_t j = 0; j < spec.size(); ++j) {
    spec[j] *= mask_value(omega[j], config);
  }

  Interferogram out = trace;
  out.values = irfft(spec, trace.delays.samples());
  out.kind = TraceKind::envelope;
  return out;
}

std::pair<double, double> peak_background(const Interferogram& envelope) {
  if (envelope.kind != TraceKind::envelope) {
    throw std::domain_error("peak/background expects an envelope trace; filter first");
  }
  if (envelope.spectrum) {
    const double needed_fs = 10.0 * envelope.spectrum->coherence_time_s() / kFsToS;
    if (envelope.delays.start_fs() > -needed_fs || envelope.delays.stop_fs() < needed_fs) {
      throw std::domain_error(
          "delay grid too short for a background estimate: need at least +-" +
          std::to_string(needed_fs) + " fs (10 coherence times per side)");
    }
  }

  const auto& v = envelope.values;
  const double peak = *std::max_element(v.begin(), v.end());

  const std::size_t wing = std::max<std::size_t>(1, v.size() / 5);
  std::vector<double> outer(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(wing));
  outer.insert(outer.end(), v.end() - static_cast<std::ptrdiff_t>(wing), v.end());
  const double background = median(std::move(outer));

  if (!(background > 0.0)) {
    throw std::domain_error("background estimate is not positive");
  }
  return {peak, background};
}

double g2_from_ratio(double ratio) {
  if (!(ratio >= 1.0)) {
    throw std::domain_error("peak-to-background ratio below 1 is unphysical");
  }
  return 1.0 + 2.0 * (ratio - 1.0);
}

double fwhm(const Interferogram& envelope) {
  const auto [peak, background] = peak_background(envelope);
  const double height = peak - background;
  if (height <= 1e-12 * std::max(std::abs(peak), 1.0)) {
    return kNaN;  // flat trace, no measurable peak
  }

  const auto& v = envelope.values;
  const std::size_t peak_idx = static_cast<std::size_t>(
      std::max_element(v.begin(), v.end()) - v.begin());
  const double half = background + height / 2.0;

  const auto cross_fs = [&](bool rightward) -> double {
    const std::ptrdiff_t step = rightward ? 1 : -1;
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(peak_idx);
    const std::ptrdiff_t last = rightward ? static_cast<std::ptrdiff_t>(v.size()) - 1 : 0;
    while (i != last && v[static_cast<std::size_t>(i + step)] > half) i += step;
    if (i == last) {
      throw std::domain_error("half-maximum level never crossed inside the grid");
    }
    // Linear interpolation between samples i and i+step.
    const double v0 = v[static_cast<std::size_t>(i)];
    const double v1 = v[static_cast<std::size_t>(i + step)];
    const double t0 = envelope.delays.delay_fs(static_cast<int>(i));
    const double t1 = envelope.delays.delay_fs(static_cast<int>(i + step));
    const double f = (v0 - half) / (v0 - v1);
    return t0 + f * (t1 - t0);
  };

  return cross_fs(true) - cross_fs(false);
}

double visibility(const Interferogram& full) {
  if (full.kind != TraceKind::full) {
    throw std::domain_error("visibility needs a fringe-resolved trace, not " +
                            to_string(full.kind));
  }
  check_fringe_sampling(full);
  if (!full.spectrum) {
    throw std::domain_error("visibility needs spectrum metadata for the coherence window");
  }

  const double window_fs = full.spectrum->coherence_time_s() / kFsToS;
  double mx = -std::numeric_limits<double>::infinity();
  double mn = std::numeric_limits<double>::infinity();
  int inside = 0;
  for (int i = 0; i < full.delays.samples(); ++i) {
    if (std::abs(full.delays.delay_fs(i)) > window_fs) continue;
    mx = std::max(mx, full.values[static_cast<std::size_t>(i)]);
    mn = std::min(mn, full.values[static_cast<std::size_t>(i)]);
    ++inside;
  }
  if (inside < 2) {
    throw std::domain_error("no samples inside the central coherence window");
  }
  if (mx + mn == 0.0) return 0.0;
  return (mx - mn) / (mx + mn);
}

double fringe_period_fs(const Interferogram& full, const FilterConfig& config) {
  if (full.kind != TraceKind::full) {
    throw std::domain_error("fringe period needs a fringe-resolved trace");
  }
  const double dt = grid_step_s(full);
  const std::vector<std::complex<double>> spec = rfft(full.values);
  const std::vector<double> omega = rfft_omega(full.delays.samples(), dt);

  double best_mag = 0.0;
  double max_mag = 0.0;
  std::size_t best = 0;
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const double mag = std::abs(spec[j]);
    max_mag = std::max(max_mag, mag);
    if (omega[j] > config.cutoff && mag > best_mag) {
      best_mag = mag;
      best = j;
    }
  }
  if (best == 0 || best_mag < 1e-9 * max_mag) {
    return kNaN;  // no carrier above the cutoff
  }

  // Parabolic refinement around the strongest bin.
  double omega_peak = omega[best];
  if (best + 1 < spec.size() && best >= 1) {
    const double ym = std::abs(spec[best - 1]);
    const double y0 = best_mag;
    const double yp = std::abs(spec[best + 1]);
    const double denom = ym - 2.0 * y0 + yp;
    if (denom != 0.0) {
      const double shift = 0.5 * (ym - yp) / denom;
      if (std::abs(shift) <= 1.0) omega_peak += shift * (omega[1] - omega[0]);
    }
  }
  return 2.0 * std::numbers::pi / omega_peak / kFsToS;
}

TraceMetrics analyze(const Interferogram& trace, const FilterConfig& config) {
  if (trace.kind == TraceKind::g2) {
    throw std::domain_error(
        "analyze expects a raw or envelope trace; a g2 curve is already normalized");
  }

  const Interferogram envelope =
      stage("lowpass", [&] { return lowpass_envelope(trace, config); });
  const auto [peak, background] =
      stage("peak-background", [&] { return peak_background(envelope); });

  TraceMetrics m;
  m.peak = peak;
  m.background = background;
  m.peak_to_background = peak / background;
  m.g2_zero = stage("g2", [&] { return g2_from_ratio(m.peak_to_background); });
  m.fwhm_fs = stage("fwhm", [&] { return fwhm(envelope); });

  if (trace.kind == TraceKind::full) {
    m.visibility = stage("visibility", [&] { return visibility(trace); });
    m.fringe_period_fs =
        stage("fringe-period", [&] { return fringe_period_fs(trace, config); });
  } else {
    m.visibility = kNaN;
    m.fringe_period_fs = kNaN;
  }
  return m;
}

}  // namespace cmi
