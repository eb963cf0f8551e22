#include "cmi/fft.hpp"

#include <fftw3.h>

#include <numbers>
#include <stdexcept>

namespace cmi {

std::vector<std::complex<double>> rfft(const std::vector<double>& input) {
  const int n = static_cast<int>(input.size());
  if (n < 2) throw std::domain_error("rfft: need at least 2 samples");

  std::vector<std::complex<double>> out(static_cast<std::size_t>(n) / 2 + 1);
  // FFTW may clobber the input buffer while planning; plan with FFTW_ESTIMATE
  // on a local copy.
  std::vector<double> in = input;
  fftw_plan plan = fftw_plan_dft_r2c_1d(
      n, in.data(), reinterpret_cast<fftw_complex*>(out.data()), FFTW_ESTIMATE);
  if (plan == nullptr) throw std::runtime_error("rfft: planning failed");
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  return out;
}

std::vector<double> irfft(const std::vector<std::complex<double>>& spectrum, int n) {
  if (n < 2 || spectrum.size() != static_cast<std::size_t>(n) / 2 + 1) {
    throw std::domain_error("irfft: spectrum size does not match sample count");
  }
  std::vector<std::complex<double>> in = spectrum;  // c2r destroys its input
  std::vector<double> out(static_cast<std::size_t>(n));
  fftw_plan plan = fftw_plan_dft_c2r_1d(
      n, reinterpret_cast<fftw_complex*>(in.data()), out.data(), FFTW_ESTIMATE);
  if (plan == nullptr) throw std::runtime_error("irfft: planning failed");
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  for (double& v : out) v /= n;
  return out;
}

std::vector<double> rfft_omega(int n, double dt) {
  if (n < 2 || !(dt > 0.0)) throw std::domain_error("rfft_omega: bad arguments");
  std::vector<double> omega(static_cast<std::size_t>(n) / 2 + 1);
  const double d_omega = 2.0 * std::numbers::pi / (n * dt);
  for (std::size_t j = 0; j < omega.size(); ++j) omega[j] = static_cast<double>(j) * d_omega;
  return omega;
}

}  // namespace cmi
