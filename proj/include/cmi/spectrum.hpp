#pragma once

namespace cmi {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s, exact

/// Rectangular spectral density: flat over [omega0 - dw/2, omega0 + dw/2].
struct SpectrumModel {
  double omega0;       // center angular frequency, rad/s
  double delta_omega;  // full width, rad/s

  SpectrumModel(double omega0_rad_s, double delta_omega_rad_s);

  /// 2*pi/delta_omega, the decay scale of the sinc^2 envelopes.
  double coherence_time_s() const;
  /// 2*pi/omega0, one fringe of the fundamental carrier.
  double optical_period_s() const;
};

struct LightSourceSpec {
  double center_wavelength_m;
  double bandwidth_m;  // full width
};

/// omega0 = 2 pi c / lambda_c, delta_omega = omega0 * (dlambda / lambda_c).
SpectrumModel spectrum_from_wavelength(const LightSourceSpec& src);

}  // namespace cmi
