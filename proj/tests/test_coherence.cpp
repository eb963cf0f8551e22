#include <doctest.h>

#include <cmath>
#include <vector>

#include "cmi/coherence.hpp"
#include "support.hpp"

using cmi::BigInt;
using cmi::PassCount;
using testsupport::PascalTriangle;

TEST_CASE("binomial small values and conventions") {
  CHECK(cmi::binomial(4, 2) == 6);
  CHECK(cmi::binomial(0, 0) == 1);
  CHECK(cmi::binomial(7, 0) == 1);
  CHECK(cmi::binomial(7, 7) == 1);
  CHECK_THROWS_AS(cmi::binomial(3, 4), std::domain_error);
}

TEST_CASE("binomial row 200 against the Pascal recurrence, exactly") {
  const PascalTriangle pascal(200);
  BigInt row_sum = 0;
  for (unsigned k = 0; k <= 200; ++k) {
    const BigInt b = cmi::binomial(200, k);
    CHECK(b == pascal.at(200, k));
    row_sum += b;
  }
  CHECK(row_sum == cmi::pow_int(2, 200));
}

TEST_CASE("constant coefficient for the first pass counts") {
  CHECK(cmi::constant_coefficient(PassCount(1)) == 4);
  CHECK(cmi::constant_coefficient(PassCount(2)) == 36);
  CHECK(cmi::constant_coefficient(PassCount(3)) == 400);
}

TEST_CASE("per-order interference coefficients") {
  CHECK(cmi::interference_coefficients(PassCount(1)) == std::vector<BigInt>{2});
  CHECK(cmi::interference_coefficients(PassCount(2)) == std::vector<BigInt>{32, 2});
  CHECK(cmi::interference_coefficients(PassCount(3)) == std::vector<BigInt>{450, 72, 2});
}

TEST_CASE("coefficient set closure and positivity up to N=64") {
  const PascalTriangle pascal(4 * 64);
  for (int n = 1; n <= 64; ++n) {
    const cmi::CoefficientSet set = cmi::coefficient_set(PassCount(n));
    const unsigned un = static_cast<unsigned>(n);

    // Independent check: central binomials from the Pascal table.
    const BigInt central = pascal.at(2 * un, un);
    CHECK(set.c_constant == central * central);
    CHECK(set.c_constant + set.c_interference_total == pascal.at(4 * un, 2 * un));

    CHECK(set.c_interference.size() == un);
    CHECK(set.c_interference.back() == 2);  // highest order is always a bare pair
    for (const BigInt& c : set.c_interference) CHECK(c > 0);
  }
}

TEST_CASE("metrics at the smallest pass counts") {
  const cmi::CoherenceMetrics m1 = cmi::metrics(PassCount(1));
  CHECK(m1.r_pb == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(m1.f_pb == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(m1.g2_zero == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(m1.tpa_peak == doctest::Approx(8.0).epsilon(1e-12));

  const cmi::CoherenceMetrics m2 = cmi::metrics(PassCount(2));
  CHECK(m2.g2_zero == doctest::Approx(26.0 / 9.0).epsilon(1e-12));
  CHECK(m2.r_pb == doctest::Approx(256.0 / 36.0).epsilon(1e-12));
}

TEST_CASE("metrics at N=50 reach the published operating point") {
  const cmi::CoherenceMetrics m = cmi::metrics(PassCount(50));
  CHECK(std::abs(m.r_pb - 157.87) <= 0.02);
  CHECK(std::abs(m.f_pb - 8.90) <= 0.01);
  CHECK(std::abs(m.g2_zero - 16.79) <= 0.01);
}

TEST_CASE("tpa peak counts and amplification") {
  CHECK(cmi::tpa_peak_counts(PassCount(1)) == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(std::abs(cmi::tpa_peak_counts(PassCount(2)) - 14.22) <= 0.005);
  CHECK(std::abs(cmi::tpa_peak_counts(PassCount(3)) - 20.48) <= 0.005);
  CHECK(std::abs(cmi::tpa_peak_counts(PassCount(100)) - 629.89) <= 0.01);

  CHECK(cmi::amplification_factor(PassCount(1)) == doctest::Approx(1.0));
  CHECK(cmi::amplification_factor(PassCount(2)) == doctest::Approx(16.0 / 9.0).epsilon(1e-12));
  CHECK(std::abs(cmi::amplification_factor(PassCount(100)) - 78.7) <= 0.3);
}

TEST_CASE("metric relations and monotone growth up to N=100") {
  double prev_r = 0.0;
  double prev_f = 0.0;
  BigInt prev_ci_cc_num = 0;  // compare C_i/C_c growth exactly: ci*cc' > ci'*cc
  BigInt prev_ci_cc_den = 1;
  for (int n = 1; n <= 100; ++n) {
    const cmi::CoefficientSet set = cmi::coefficient_set(PassCount(n));
    const cmi::CoherenceMetrics m = cmi::metrics(PassCount(n));

    // g2 - 1 is exactly twice f - 1 as rationals; in doubles the two
    // conversions agree to a few ulp.
    CHECK(m.g2_zero == doctest::Approx(1.0 + 2.0 * (m.f_pb - 1.0)).epsilon(1e-13));
    CHECK(m.tpa_peak == doctest::Approx(2.0 * m.r_pb).epsilon(1e-13));
    CHECK(m.r_pb >= 1.0);
    CHECK(m.f_pb >= 1.0);

    CHECK(m.r_pb > prev_r);
    CHECK(m.f_pb > prev_f);
    CHECK(set.c_interference_total * prev_ci_cc_den > prev_ci_cc_num * set.c_constant);

    prev_r = m.r_pb;
    prev_f = m.f_pb;
    prev_ci_cc_num = set.c_interference_total;
    prev_ci_cc_den = set.c_constant;
  }
}

TEST_CASE("R_P/B grows linearly in N") {
  std::vector<double> r;
  for (int n = 10; n <= 100; ++n) r.push_back(cmi::metrics(PassCount(n)).r_pb);

  // Least-squares line over N = 10..100.
  const double count = static_cast<double>(r.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double x = 10.0 + static_cast<double>(i);
    sx += x; sy += r[i]; sxx += x * x; sxy += x * r[i];
  }
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / count;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double x = 10.0 + static_cast<double>(i);
    CHECK(std::abs(slope * x + intercept - r[i]) / r[i] < 0.02);
  }
}

TEST_CASE("pass count validation") {
  CHECK_THROWS_AS(PassCount(0), std::domain_error);
  CHECK_THROWS_AS(PassCount(-3), std::domain_error);
  CHECK(PassCount(1).value() == 1);
}

TEST_CASE("round half to even display rounding") {
  CHECK(cmi::round_half_even(0.125, 2) == doctest::Approx(0.12));
  CHECK(cmi::round_half_even(0.375, 2) == doctest::Approx(0.38));
  CHECK(cmi::round_half_even(2.5, 0) == doctest::Approx(2.0));
  CHECK(cmi::round_half_even(3.5, 0) == doctest::Approx(4.0));
  CHECK(cmi::round_half_even(14.222222, 2) == doctest::Approx(14.22));
}
