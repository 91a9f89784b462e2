#pragma once

// Growth rate of periodic-point counts, limsup (1/n) log N_n, estimated from
// finitely many (n, N_n) samples and compared against log|d|.

#include <gmpxx.h>

#include <vector>

namespace pgrowth {

struct RateSample {
  unsigned nu = 1;
  double count = 1;  ///< Counts up to 2^53 are exact.
};

struct RateEstimate {
  long d = 2;
  std::vector<RateSample> samples;  ///< Sorted by nu.
  std::vector<double> per_sample;   ///< log(count) / nu, aligned with samples.
  double estimate = 0.0;            ///< Largest per-sample value: the finite surrogate for the limsup.
  double target = 0.0;              ///< log|d|
  double margin = 0.0;              ///< estimate - target
};

/// Throws std::invalid_argument for an empty list, a count below one, nu = 0
/// or a repeated nu.
RateEstimate rate_estimate(long d, std::vector<RateSample> samples);

/// floor(eps * d^nu / 2): classes guaranteed among the fixed points of m_d^nu
/// inside an interval of length eps. Requires 0 < eps <= 1.
mpz_class saltos_lower_bound(long d, unsigned nu, const mpq_class& eps);

}  // namespace pgrowth
