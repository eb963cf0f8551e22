#include "cmi/path_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cmi {

namespace {

constexpr double kFsToS = 1e-15;

Route route_from_bits(std::uint32_t bits, int n) {
  Route r;
  r.arms.resize(static_cast<std::size_t>(n));
  for (int pass = 0; pass < n; ++pass) {
    r.arms[static_cast<std::size_t>(pass)] = (bits >> pass) & 1u ? 2 : 1;
  }
  return r;
}

void check_budget(PassCount n) {
  if (n.value() > kEnumerationBudget) {
    throw std::domain_error(
        "enumeration of 16^" + std::to_string(n.value()) +
        " terms is above the budget (N <= " + std::to_string(kEnumerationBudget) +
        "); use the closed-form census u(k_a)u(k_b) with u(k) = C(2N, N-|k|)");
  }
}

}  // namespace

int Route::arm2_count() const {
  return static_cast<int>(std::count(arms.begin(), arms.end(), std::uint8_t{2}));
}

BigInt TermCensus::total() const {
  BigInt sum = 0;
  for (const auto& [key, cnt] : counts) sum += cnt;
  return sum;
}

BigInt TermCensus::count(int k_a, int k_b) const {
  const auto it = counts.find({k_a, k_b});
  return it == counts.end() ? BigInt(0) : it->second;
}

void enumerate_terms(PassCount n,
                     const std::function<void(const AmplitudeProductTerm&)>& visit) {
  check_budget(n);
  const int N = n.value();
  const std::uint32_t routes = 1u << N;

  std::vector<Route> route_table;
  route_table.reserve(routes);
  for (std::uint32_t bits = 0; bits < routes; ++bits) {
    route_table.push_back(route_from_bits(bits, N));
  }

  AmplitudeProductTerm term;
  for (std::uint32_t a = 0; a < routes; ++a) {
    for (std::uint32_t b = 0; b < routes; ++b) {
      for (std::uint32_t pa = 0; pa < routes; ++pa) {
        for (std::uint32_t pb = 0; pb < routes; ++pb) {
          term.route_a = route_table[a];
          term.route_b = route_table[b];
          term.route_a_conjugate = route_table[pa];
          term.route_b_conjugate = route_table[pb];
          term.k_a = std::popcount(a) - std::popcount(pa);
          term.k_b = std::popcount(b) - std::popcount(pb);
          visit(term);
        }
      }
    }
  }
}

TermCensus census(PassCount n, CensusMode mode) {
  const int N = n.value();
  TermCensus result{N, {}};

  if (mode == CensusMode::closed_form) {
    std::vector<BigInt> u(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) {
      u[static_cast<std::size_t>(k)] =
          binomial(2 * static_cast<unsigned>(N), static_cast<unsigned>(N - k));
    }
    for (int ka = -N; ka <= N; ++ka) {
      for (int kb = -N; kb <= N; ++kb) {
        result.counts[{ka, kb}] =
            u[static_cast<std::size_t>(std::abs(ka))] * u[static_cast<std::size_t>(std::abs(kb))];
      }
    }
    return result;
  }

  check_budget(n);
  const std::uint32_t routes = 1u << N;

  // Joint tally over every one of the 16^N (route_a, conj_a, route_b,
  // conj_b) combinations. No per-photon shortcut: this is the side that
  // checks the factorized counts, so it must not assume them.
  std::vector<int> diffs;
  diffs.reserve(static_cast<std::size_t>(routes) * routes);
  for (std::uint32_t r = 0; r < routes; ++r) {
    for (std::uint32_t p = 0; p < routes; ++p) {
      diffs.push_back(std::popcount(r) - std::popcount(p));
    }
  }

  const int width = 2 * N + 1;
  std::vector<std::uint64_t> cells(static_cast<std::size_t>(width) * width, 0);
  for (const int ka : diffs) {
    std::uint64_t* row = cells.data() + static_cast<std::size_t>(ka + N) * width;
    for (const int kb : diffs) {
      ++row[kb + N];
    }
  }
  for (int ka = -N; ka <= N; ++ka) {
    for (int kb = -N; kb <= N; ++kb) {
      const std::uint64_t cnt =
          cells[static_cast<std::size_t>(ka + N) * width + static_cast<std::size_t>(kb + N)];
      if (cnt != 0) result.counts[{ka, kb}] = cnt;
    }
  }
  return result;
}

TermCensus census(PassCount n) {
  return census(n, n.value() <= kEnumerationBudget ? CensusMode::direct
                                                   : CensusMode::closed_form);
}

Interferogram brute_trace(PassCount n, const SpectrumModel& spectrum,
                          const DelayGrid& delays) {
  const TermCensus fullCensus = census(n);

  struct Term {
    int k_a;
    int k_b;
    double count;
  };
  std::vector<Term> terms;
  terms.reserve(fullCensus.counts.size());
  for (const auto& [key, cnt] : fullCensus.counts) {
    terms.push_back({key.first, key.second, ratio_as_double(cnt, 1)});
  }

  Interferogram trace{delays, {}, Normalization::raw, TraceKind::full, spectrum, n.value()};
  trace.values.resize(static_cast<std::size_t>(delays.samples()));
  const double w0 = spectrum.omega0;
  const double dw = spectrum.delta_omega;
  for (int i = 0; i < delays.samples(); ++i) {
    const double tau = delays.delay_fs(i) * kFsToS;
    double sum = 0.0;
    for (const Term& t : terms) {
      sum += t.count * sinc(t.k_a * dw * tau / 2.0) * sinc(t.k_b * dw * tau / 2.0) *
             std::cos((t.k_a + t.k_b) * w0 * tau);
    }
    trace.values[static_cast<std::size_t>(i)] = sum;
  }
  return trace;
}

}  // namespace cmi
