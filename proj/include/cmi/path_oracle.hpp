#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "cmi/bigint.hpp"
#include "cmi/coherence.hpp"
#include "cmi/interferogram.hpp"
#include "cmi/spectrum.hpp"

namespace cmi {

// Brute-force enumeration of the 16^N amplitude-product terms. This module
// is the independent check on the closed-form coefficients: it never uses
// binomials, it just counts.

/// One photon's arm choices, pass by pass. Entries are 1 or 2.
struct Route {
  std::vector<std::uint8_t> arms;
  int arm2_count() const;
};

/// One term of the squared amplitude sum. k_a is the net arm-2 visit
/// difference of photon a between its route and conjugate route (likewise
/// k_b); the term's delay dependence is fully determined by (k_a, k_b).
struct AmplitudeProductTerm {
  Route route_a;
  Route route_b;
  Route route_a_conjugate;
  Route route_b_conjugate;
  int k_a;
  int k_b;
};

/// Exact term counts keyed by (k_a, k_b).
struct TermCensus {
  int n;
  std::map<std::pair<int, int>, BigInt> counts;

  BigInt total() const;
  /// Count for (k_a, k_b); zero if the class is empty.
  BigInt count(int k_a, int k_b) const;
};

enum class CensusMode { direct, closed_form };

/// Direct enumeration refuses above this pass count (16^9 > 6e10 terms);
/// use the closed-form census instead.
inline constexpr int kEnumerationBudget = 8;

/// Visit all 16^N amplitude-product terms. Throws above the budget.
void enumerate_terms(PassCount n,
                     const std::function<void(const AmplitudeProductTerm&)>& visit);

/// Term census. direct mode enumerates (budget-limited); closed_form fills
/// counts[(k_a,k_b)] = u(k_a) u(k_b) with u(k) = C(2N, N-|k|) and works for
/// any N.
TermCensus census(PassCount n, CensusMode mode);

/// direct when within budget, closed_form otherwise.
TermCensus census(PassCount n);

/// Reference trace summed class by class over the census:
///   sum over (k_a,k_b) of count * sinc(k_a x) sinc(k_b x) cos((k_a+k_b) w0 tau),
/// x = dw tau / 2. Raw units: 16^N at tau = 0, C_c in the large-delay limit.
Interferogram brute_trace(PassCount n, const SpectrumModel& spectrum,
                          const DelayGrid& delays);

}  // namespace cmi
