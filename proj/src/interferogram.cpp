#include "cmi/interferogram.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cmi {

namespace {

constexpr double kFsToS = 1e-15;
constexpr int kSamplesPerFringe = 20;
constexpr int kMaxSamples = 100'000'000;

std::vector<double> normalized_order_weights(PassCount n) {
  // w_k = u(k)/u(0) with u(k) = C(2N, N-k); exact ratio, then one rounding.
  const unsigned N = static_cast<unsigned>(n.value());
  const BigInt u0 = binomial(2 * N, N);
  std::vector<double> w(N + 1);
  w[0] = 1.0;
  for (unsigned k = 1; k <= N; ++k) {
    w[k] = ratio_as_double(binomial(2 * N, N - k), u0);
  }
  return w;
}

double constant_coefficient_as_double(PassCount n) {
  const BigInt cc = constant_coefficient(n);
  const double value = ratio_as_double(cc, 1);
  if (!std::isfinite(value)) {
    throw std::domain_error(
        "raw trace values overflow double precision at N = " +
        std::to_string(n.value()) + "; use background-normalized output");
  }
  return value;
}

}  // namespace

DelayGrid::DelayGrid(double start_fs, double stop_fs, int samples)
    : start_fs_(start_fs), stop_fs_(stop_fs), samples_(samples) {
  if (!(start_fs < stop_fs)) {
    throw std::domain_error("delay grid: start must be below stop");
  }
  if (samples < 2) {
    throw std::domain_error("delay grid: need at least 2 samples");
  }
}

std::vector<double> DelayGrid::delays_fs() const {
  std::vector<double> out(static_cast<std::size_t>(samples_));
  for (int i = 0; i < samples_; ++i) out[static_cast<std::size_t>(i)] = delay_fs(i);
  return out;
}

std::string to_string(TraceKind kind) {
  switch (kind) {
    case TraceKind::full: return "full";
    case TraceKind::envelope: return "envelope";
    case TraceKind::g2: return "g2";
  }
  return "full";
}

std::string to_string(Normalization norm) {
  return norm == Normalization::raw ? "raw" : "background-normalized";
}

TraceKind trace_kind_from_string(const std::string& s) {
  if (s == "full") return TraceKind::full;
  if (s == "envelope") return TraceKind::envelope;
  if (s == "g2") return TraceKind::g2;
  throw std::domain_error("unknown trace kind: " + s);
}

Normalization normalization_from_string(const std::string& s) {
  if (s == "raw") return Normalization::raw;
  if (s == "background-normalized") return Normalization::background_normalized;
  throw std::domain_error("unknown normalization: " + s);
}

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

int required_samples(PassCount n, const SpectrumModel& spectrum,
                     double start_fs, double stop_fs) {
  if (!(start_fs < stop_fs)) {
    throw std::domain_error("delay grid: start must be below stop");
  }
  const double fastest_period_s = 2.0 * std::numbers::pi / (2.0 * n.value() * spectrum.omega0);
  const double max_step_s = fastest_period_s / kSamplesPerFringe;
  const double span_s = (stop_fs - start_fs) * kFsToS;
  const double needed = std::ceil(span_s / max_step_s - 1e-9) + 1.0;
  if (needed > kMaxSamples) {
    throw std::domain_error("delay grid: " + std::to_string(static_cast<long long>(needed)) +
                            " samples needed, above the supported maximum");
  }
  return std::max(2, static_cast<int>(needed));
}

Interferogram envelope_trace(PassCount n, const SpectrumModel& spectrum,
                             const DelayGrid& delays, Normalization norm) {
  const CoefficientSet set = coefficient_set(n);
  const int N = n.value();

  // Per-order envelope weights relative to the background.
  std::vector<double> rel(static_cast<std::size_t>(N) + 1, 0.0);
  for (int m = 1; m <= N; ++m) {
    rel[static_cast<std::size_t>(m)] =
        ratio_as_double(set.c_interference[static_cast<std::size_t>(m - 1)], set.c_constant);
  }
  const double scale = norm == Normalization::raw ? constant_coefficient_as_double(n) : 1.0;

  Interferogram trace{delays, {}, norm, TraceKind::envelope, spectrum, N};
  trace.values.resize(static_cast<std::size_t>(delays.samples()));
  const double dw = spectrum.delta_omega;
  for (int i = 0; i < delays.samples(); ++i) {
    const double tau = delays.delay_fs(i) * kFsToS;
    double v = 1.0;
    for (int m = 1; m <= N; ++m) {
      const double s = sinc(m * dw * tau / 2.0);
      v += rel[static_cast<std::size_t>(m)] * s * s;
    }
    trace.values[static_cast<std::size_t>(i)] = v * scale;
  }
  return trace;
}

Interferogram g2_curve(PassCount n, const SpectrumModel& spectrum,
                       const DelayGrid& delays) {
  Interferogram env = envelope_trace(n, spectrum, delays,
                                     Normalization::background_normalized);
  for (double& v : env.values) v = 1.0 + 2.0 * (v - 1.0);
  env.kind = TraceKind::g2;
  return env;
}

Interferogram full_trace(PassCount n, const SpectrumModel& spectrum,
                         const DelayGrid& delays, Normalization norm) {
  const int needed = required_samples(n, spectrum, delays.start_fs(), delays.stop_fs());
  if (delays.samples() < needed) {
    throw std::domain_error(
        "delay grid undersamples the fastest fringe: need >= " + std::to_string(needed) +
        " samples over [" + std::to_string(delays.start_fs()) + ", " +
        std::to_string(delays.stop_fs()) + "] fs, got " + std::to_string(delays.samples()));
  }

  const int N = n.value();
  const std::vector<double> w = normalized_order_weights(n);
  const double scale = norm == Normalization::raw ? constant_coefficient_as_double(n) : 1.0;

  Interferogram trace{delays, {}, norm, TraceKind::full, spectrum, N};
  trace.values.resize(static_cast<std::size_t>(delays.samples()));
  const double w0 = spectrum.omega0;
  const double dw = spectrum.delta_omega;
  for (int i = 0; i < delays.samples(); ++i) {
    const double tau = delays.delay_fs(i) * kFsToS;
    double s = 1.0;
    for (int k = 1; k <= N; ++k) {
      s += 2.0 * w[static_cast<std::size_t>(k)] * sinc(k * dw * tau / 2.0) * std::cos(k * w0 * tau);
    }
    trace.values[static_cast<std::size_t>(i)] = s * s * scale;
  }
  return trace;
}

}  // namespace cmi
