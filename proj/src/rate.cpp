#include "pgrowth/rate.hpp"

#include "pgrowth/circle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pgrowth {

RateEstimate rate_estimate(long d, std::vector<RateSample> samples) {
  require_degree(d);
  if (samples.empty()) throw std::invalid_argument("rate estimate needs at least one sample");
  std::sort(samples.begin(), samples.end(), [](const RateSample& a, const RateSample& b) { return a.nu < b.nu; });
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].nu == 0) throw std::invalid_argument("sample period must be positive");
    if (!(samples[i].count >= 1)) throw std::invalid_argument("sample counts must be at least 1");
    if (i > 0 && samples[i].nu == samples[i - 1].nu) throw std::invalid_argument("repeated sample period");
  }
  RateEstimate out;
  out.d = d;
  out.target = std::log(static_cast<double>(std::labs(d)));
  out.estimate = -INFINITY;
  for (const RateSample& s : samples) {
    const double v = std::log(s.count) / s.nu;
    out.per_sample.push_back(v);
    out.estimate = std::max(out.estimate, v);
  }
  out.samples = std::move(samples);
  out.margin = out.estimate - out.target;
  return out;
}

mpz_class saltos_lower_bound(long d, unsigned nu, const mpq_class& eps) {
  require_degree(d);
  if (nu == 0) throw std::invalid_argument("period must be positive");
  if (eps <= 0 || eps > 1) throw std::invalid_argument("interval length must lie in (0, 1]");
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), mpz_class(std::labs(d)).get_mpz_t(), nu);
  mpq_class value = eps * mpq_class(power) / 2;
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

}  // namespace pgrowth
