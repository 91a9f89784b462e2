#pragma once

// Periodic points of z^d + c from symbolic itineraries.
//
// When U = disk(0, R) has the critical value c outside its closure and the
// preimage of U is compactly contained in U, the d inverse branches of f are
// well defined contractions of U. A periodic word (a_1 ... a_k)^inf then
// determines a unique f^k-fixed point: the limit of the cyclic composition
// g_{a_1} o ... o g_{a_k} iterated from any seed in U.
//
// Everything here runs in 113-bit floating point. Residuals |f^k(z) - z| for
// k around 12 amplify rounding by the multiplier of f^k (up to 6^12 for
// c = -6), which double precision cannot absorb.

#include "pgrowth/unicritical.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <span>
#include <vector>

namespace pgrowth {

using qreal = boost::multiprecision::cpp_bin_float_quad;
using qcomplex = boost::multiprecision::cpp_complex_quad;

struct HypothesisReport {
  bool holds = false;
  double critical_value_margin = 0.0;  ///< |c| - R; positive when c lies outside the closed disk.
  double preimage_margin = 0.0;        ///< R - (R + |c|)^(1/d); positive when f^-1(closure U) lies in U.
};

/// U = disk(0, R).
HypothesisReport verify_U_hypothesis(const UnicriticalMap& m, double R);

/// Branch i in 1..d of the d-th root of (z - c). Branches are the d sectors
/// centred on arg(-c)/d + 2 pi (i - 1)/d, so each is continuous on any disk
/// around the origin that excludes c.
qcomplex inverse_branch(const UnicriticalMap& m, const qcomplex& z, int branch);

qcomplex iterate_hp(const UnicriticalMap& m, qcomplex z, unsigned n);

struct ItineraryConfig {
  double radius = 0.0;  ///< R of U = disk(0, R); must pass verify_U_hypothesis.
  double tol = 1e-9;    ///< Residual accepted as converged.
  unsigned max_cycles = 500;
  double step_tol = 1e-30;  ///< Stop once a full cycle moves less than this (relative).
  double dedup_tol = 1e-12;
};

struct ItineraryResult {
  std::vector<int> word;
  qcomplex point;
  double residual = 0.0;  ///< |f^k(point) - point|
  bool converged = false;
  std::vector<double> displacements;  ///< Movement of each full cycle.

  cplx point_d() const { return {point.real().convert_to<double>(), point.imag().convert_to<double>()}; }
};

class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Throws HypothesisError when the configured disk fails the hypothesis and
/// std::invalid_argument for an empty word or a letter outside 1..d.
ItineraryResult itinerary_point(const UnicriticalMap& m, std::span<const int> word,
                                const ItineraryConfig& cfg);

struct PeriodicCount {
  unsigned k = 0;
  std::size_t count = 0;
  std::vector<ItineraryResult> points;  ///< One per word, lexicographic in {1..d}^k.
  bool all_converged = true;
  bool inside_disk = true;
};

PeriodicCount count_periodic(const UnicriticalMap& m, unsigned k, const ItineraryConfig& cfg);

}  // namespace pgrowth
