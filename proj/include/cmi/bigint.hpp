#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cmi {

// Exact arbitrary-precision integer. Coefficient arithmetic stays exact at
// any pass count; conversion to floating point happens once, at the metric
// boundary, through ratio_as_double().
using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k), exact. Throws std::domain_error for k > n.
BigInt binomial(unsigned n, unsigned k);

/// num / den evaluated with an 80-bit extended intermediate so the quotient
/// carries at least a 64-bit significand before narrowing to double.
double ratio_as_double(const BigInt& num, const BigInt& den);

/// base^exp for non-negative integer exponents.
BigInt pow_int(const BigInt& base, unsigned exp);

}  // namespace cmi
