#include "cmi/spectrum.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace cmi {

SpectrumModel::SpectrumModel(double omega0_rad_s, double delta_omega_rad_s)
    : omega0(omega0_rad_s), delta_omega(delta_omega_rad_s) {
  if (!(omega0 > 0.0)) {
    throw std::domain_error("spectrum: center frequency must be positive");
  }
  if (!(delta_omega > 0.0) || !(delta_omega < 2.0 * omega0)) {
    throw std::domain_error(
        "spectrum: bandwidth must satisfy 0 < delta_omega < 2*omega0 "
        "(the band must stay at positive frequencies)");
  }
}

double SpectrumModel::coherence_time_s() const {
  return 2.0 * std::numbers::pi / delta_omega;
}

double SpectrumModel::optical_period_s() const {
  return 2.0 * std::numbers::pi / omega0;
}

SpectrumModel spectrum_from_wavelength(const LightSourceSpec& src) {
  if (!(src.center_wavelength_m > 0.0) || !(src.bandwidth_m > 0.0)) {
    throw std::domain_error("light source: wavelength and bandwidth must be positive");
  }
  if (!(src.bandwidth_m < src.center_wavelength_m)) {
    throw std::domain_error("light source: bandwidth must be below the center wavelength");
  }
  const double omega0 = 2.0 * std::numbers::pi * kSpeedOfLight / src.center_wavelength_m;
  const double delta_omega = omega0 * (src.bandwidth_m / src.center_wavelength_m);
  return SpectrumModel(omega0, delta_omega);
}

}  // namespace cmi
