#pragma once

// Shared test oracles. Everything here is deliberately independent of the
// library's own computation paths: binomials come from the Pascal
// recurrence, and the two-pass trace is written out term by term.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "cmi/bigint.hpp"
#include "cmi/spectrum.hpp"

namespace testsupport {

/// Pascal-triangle table: rows 0..max_n of exact binomial coefficients.
class PascalTriangle {
 public:
  explicit PascalTriangle(unsigned max_n) : rows_(max_n + 1) {
    for (unsigned n = 0; n <= max_n; ++n) {
      rows_[n].resize(n + 1);
      rows_[n][0] = rows_[n][n] = 1;
      for (unsigned k = 1; k < n; ++k) {
        rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
      }
    }
  }

  const cmi::BigInt& at(unsigned n, unsigned k) const { return rows_[n][k]; }
  const std::vector<cmi::BigInt>& row(unsigned n) const { return rows_[n]; }

 private:
  std::vector<std::vector<cmi::BigInt>> rows_;
};

inline double ref_sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

/// The two-pass detection rate written out term by term (raw units, peak
/// 256): constant background 36, the two envelope terms, and every
/// carrier-frequency oscillation term including the mixed product.
inline double two_pass_trace_reference(double omega0, double dw, double tau) {
  const double s1 = ref_sinc(dw * tau / 2.0);
  const double s2 = ref_sinc(dw * tau);
  const double c1 = std::cos(omega0 * tau);
  const double c2 = std::cos(2.0 * omega0 * tau);
  const double c4 = std::cos(4.0 * omega0 * tau);
  return 18.0 + 18.0
       + 2.0 * s2 * s2
       + 32.0 * s1 * s1
       + 32.0 * c2 * s1 * s1
       + 2.0 * c4 * s2 * s2
       + 96.0 * c1 * s1
       + 24.0 * c2 * s2
       + 32.0 * c1 * s1 * c2 * s2;
}

/// The default broadband source: 1550 nm center, 30 nm full width.
inline cmi::SpectrumModel ase_spectrum() {
  return cmi::spectrum_from_wavelength({1550e-9, 30e-9});
}

/// Fresh scratch directory under the system temp dir.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("cmisim_test_" + tag + "_" + std::to_string(std::rand()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace testsupport
