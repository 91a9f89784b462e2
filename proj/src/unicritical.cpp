#include "pgrowth/unicritical.hpp"

#include <algorithm>
#include <cmath>

namespace pgrowth {

cplx UnicriticalMap::derivative(cplx z) const {
  cplx r{static_cast<double>(d_), 0.0};
  for (int i = 1; i < d_; ++i) r *= z;
  return r;
}

cplx UnicriticalMap::iterate(cplx z, unsigned n, cplx* deriv) const {
  cplx dz{1.0, 0.0};
  for (unsigned i = 0; i < n; ++i) {
    dz *= derivative(z);
    z = (*this)(z);
  }
  if (deriv) *deriv = dz;
  return z;
}

double escape_radius(const UnicriticalMap& m) {
  return std::max(2.0, std::pow(2.0 + std::abs(m.c()), 1.0 / (m.d() - 1)));
}

cplx chebyshev_oracle(const Angle& theta) {
  return {2.0 * std::cos(2.0 * std::numbers::pi * theta.to_double()), 0.0};
}

}  // namespace pgrowth
