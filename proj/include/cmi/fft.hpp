#pragma once

#include <complex>
#include <vector>

namespace cmi {

// Thin wrappers over FFTW's real transforms.

/// Real-to-complex forward transform; returns n/2 + 1 bins, unnormalized.
std::vector<std::complex<double>> rfft(const std::vector<double>& input);

/// Inverse of rfft back to n real samples, including the 1/n scaling.
std::vector<double> irfft(const std::vector<std::complex<double>>& spectrum, int n);

/// Angular frequency of each rfft bin for sample spacing dt (seconds).
std::vector<double> rfft_omega(int n, double dt);

}  // namespace cmi
