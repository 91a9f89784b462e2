#pragma once

#include "pgrowth/circle.hpp"

#include <complex>
#include <numbers>
#include <stdexcept>

namespace pgrowth {

using cplx = std::complex<double>;

/// f(z) = z^d + c with d >= 2.
class UnicriticalMap {
 public:
  UnicriticalMap(int d, cplx c) : d_(d), c_(c) {
    if (d < 2) throw std::invalid_argument("unicritical degree must be at least 2");
  }

  int d() const { return d_; }
  cplx c() const { return c_; }

  template <typename Z>
  Z operator()(const Z& z) const {
    return ipow(z) + Z(c_.real(), c_.imag());
  }

  /// d * z^(d-1)
  cplx derivative(cplx z) const;

  /// f^n(z); optionally the derivative of f^n at z through `deriv`.
  cplx iterate(cplx z, unsigned n, cplx* deriv = nullptr) const;

 private:
  template <typename Z>
  Z ipow(const Z& z) const {
    Z r = z;
    for (int i = 1; i < d_; ++i) r *= z;
    return r;
  }

  int d_;
  cplx c_;
};

/// R = max(2, (2 + |c|)^(1/(d-1))); |z| >= R implies |f(z)| >= 2|z|.
double escape_radius(const UnicriticalMap& m);

/// 2 cos(2 pi theta): landing point of the theta-ray of z^2 - 2.
cplx chebyshev_oracle(const Angle& theta);

}  // namespace pgrowth
