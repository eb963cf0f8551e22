#pragma once

#include <vector>

#include "cmi/bigint.hpp"

namespace cmi {

// Exact weights of the two-photon detection signal after N passes through a
// Michelson interferometer.
//
// Each photon takes one of 2^N routes (an arm choice per pass); a detection
// term pairs a route with a conjugate route per photon, and only the net
// arm-visit difference k survives. The number of route pairs of photon a (or
// b) with net difference k is
//
//     u(k) = sum_j C(N,j) C(N,j+|k|) = C(2N, N-|k|),
//
// so the delay-independent background carries weight C_c = u(0)^2 and the
// m-th order envelope term carries c_m = 2 u(m)^2. Everything here is exact
// integer arithmetic; C_c grows like 16^N / (pi N) and overflows any machine
// word long before the interesting regime.

/// Number of passes through the interferometer. Must be >= 1.
class PassCount {
 public:
  explicit PassCount(int n);
  int value() const { return n_; }

 private:
  int n_;
};

struct CoefficientSet {
  int n;
  BigInt c_constant;                  // background weight C_c
  std::vector<BigInt> c_interference; // envelope weights c_1..c_N
  BigInt c_interference_total;        // C_i = sum of c_m
};

struct CoherenceMetrics {
  double r_pb;     // peak-to-background of the fringe-resolved trace, 16^N / C_c
  double f_pb;     // peak-to-background of the filtered envelope, 1 + C_i/C_c
  double g2_zero;  // degree of second-order coherence at zero delay, 1 + 2 C_i/C_c
  double tpa_peak; // normalized two-photon peak counts, 2 r_pb
};

/// Background weight C_c = (sum_k C(N,k)^2)^2.
BigInt constant_coefficient(PassCount n);

/// Envelope weights [c_1 .. c_N], c_m = 2 (sum_k C(N,k) C(N,k+m))^2.
std::vector<BigInt> interference_coefficients(PassCount n);

/// C_c, c_1..c_N and C_i in one pass.
CoefficientSet coefficient_set(PassCount n);

CoherenceMetrics metrics(PassCount n);

/// Two-photon peak counts 2 * 16^N / C_c.
double tpa_peak_counts(PassCount n);

/// tpa_peak_counts(n) / tpa_peak_counts(1).
double amplification_factor(PassCount n);

/// Round half-to-even at the given number of decimals (display helper).
double round_half_even(double value, int decimals);

}  // namespace cmi
