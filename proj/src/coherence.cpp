#include "cmi/coherence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cmi {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) {
    throw std::domain_error("binomial: k = " + std::to_string(k) +
                            " exceeds n = " + std::to_string(n));
  }
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // result stays integral after every step: it is C(n-k+i, i).
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

double ratio_as_double(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("ratio_as_double: zero denominator");
  const long double n = num.convert_to<long double>();
  const long double d = den.convert_to<long double>();
  return static_cast<double>(n / d);
}

BigInt pow_int(const BigInt& base, unsigned exp) {
  BigInt result = 1;
  BigInt b = base;
  for (unsigned e = exp; e != 0; e >>= 1) {
    if (e & 1u) result *= b;
    if (e > 1) b *= b;
  }
  return result;
}

PassCount::PassCount(int n) : n_(n) {
  if (n < 1) {
    throw std::domain_error("pass count must be >= 1, got " + std::to_string(n));
  }
}

BigInt constant_coefficient(PassCount n) {
  const unsigned N = static_cast<unsigned>(n.value());
  BigInt sum = 0;
  for (unsigned k = 0; k <= N; ++k) {
    const BigInt b = binomial(N, k);
    sum += b * b;
  }
  return sum * sum;
}

std::vector<BigInt> interference_coefficients(PassCount n) {
  const unsigned N = static_cast<unsigned>(n.value());
  std::vector<BigInt> coeffs;
  coeffs.reserve(N);
  for (unsigned m = 1; m <= N; ++m) {
    BigInt sum = 0;
    for (unsigned k = 0; k + m <= N; ++k) {
      sum += binomial(N, k) * binomial(N, k + m);
    }
    coeffs.push_back(2 * sum * sum);
  }
  return coeffs;
}

CoefficientSet coefficient_set(PassCount n) {
  CoefficientSet set{n.value(), constant_coefficient(n), interference_coefficients(n), 0};
  for (const BigInt& c : set.c_interference) set.c_interference_total += c;
  return set;
}

CoherenceMetrics metrics(PassCount n) {
  const CoefficientSet set = coefficient_set(n);
  const BigInt& cc = set.c_constant;
  const BigInt& ci = set.c_interference_total;
  const BigInt peak = pow_int(16, static_cast<unsigned>(n.value()));

  CoherenceMetrics m{};
  m.r_pb = ratio_as_double(peak, cc);
  m.f_pb = ratio_as_double(cc + ci, cc);
  m.g2_zero = ratio_as_double(cc + 2 * ci, cc);
  m.tpa_peak = ratio_as_double(2 * peak, cc);
  return m;
}

double tpa_peak_counts(PassCount n) {
  const BigInt peak = pow_int(16, static_cast<unsigned>(n.value()));
  return ratio_as_double(2 * peak, constant_coefficient(n));
}

double amplification_factor(PassCount n) {
  return tpa_peak_counts(n) / tpa_peak_counts(PassCount(1));
}

double round_half_even(double value, int decimals) {
  if (!std::isfinite(value)) return value;
  const double scale = std::pow(10.0, decimals);
  // nearbyint rounds ties to even in the default rounding mode.
  return std::nearbyint(value * scale) / scale;
}

}  // namespace cmi
