#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmi/coherence.hpp"
#include "cmi/spectrum.hpp"

namespace cmi {

/// Uniform delay axis in femtoseconds.
class DelayGrid {
 public:
  DelayGrid(double start_fs, double stop_fs, int samples);

  double start_fs() const { return start_fs_; }
  double stop_fs() const { return stop_fs_; }
  int samples() const { return samples_; }
  double step_fs() const { return (stop_fs_ - start_fs_) / (samples_ - 1); }
  double delay_fs(int i) const { return start_fs_ + i * step_fs(); }
  std::vector<double> delays_fs() const;

 private:
  double start_fs_;
  double stop_fs_;
  int samples_;
};

enum class TraceKind { full, envelope, g2 };
enum class Normalization { raw, background_normalized };

std::string to_string(TraceKind kind);
std::string to_string(Normalization norm);
TraceKind trace_kind_from_string(const std::string& s);
Normalization normalization_from_string(const std::string& s);

/// A sampled detection-rate trace versus inter-arm delay, plus the metadata
/// needed to analyze it. spectrum/passes are absent for ingested traces
/// without a sidecar.
struct Interferogram {
  DelayGrid delays;
  std::vector<double> values;
  Normalization normalization;
  TraceKind kind;
  std::optional<SpectrumModel> spectrum;
  std::optional<int> passes;
};

/// sin(x)/x with the removable singularity handled explicitly; series
/// fallback below |x| = 1e-8 avoids the 0/0 region.
double sinc(double x);

/// Smallest sample count that keeps >= 20 samples per fringe of the fastest
/// carrier component (2N * omega0) over [start, stop].
int required_samples(PassCount n, const SpectrumModel& spectrum,
                     double start_fs, double stop_fs);

/// Low-frequency part only: C_c + sum_m c_m sinc^2(m dw tau / 2).
/// Background-normalized form divides by C_c.
Interferogram envelope_trace(PassCount n, const SpectrumModel& spectrum,
                             const DelayGrid& delays,
                             Normalization norm = Normalization::background_normalized);

/// Degree of second-order coherence versus delay:
/// 1 + sum_m (2 c_m / C_c) sinc^2(m dw tau / 2).
Interferogram g2_curve(PassCount n, const SpectrumModel& spectrum,
                       const DelayGrid& delays);

/// Fringe-resolved trace for arbitrary N, evaluated through the factorized
/// amplitude sum
///     S(tau) = u(0) + sum_k 2 u(k) sinc(k dw tau / 2) cos(k omega0 tau),
///     trace  = S^2,
/// with u(k) = C(2N, N-|k|). Rejects grids that undersample the fastest
/// fringe. Raw peak at tau = 0 is 16^N; normalized peak is R_P/B.
Interferogram full_trace(PassCount n, const SpectrumModel& spectrum,
                         const DelayGrid& delays,
                         Normalization norm = Normalization::background_normalized);

}  // namespace cmi
