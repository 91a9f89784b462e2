#pragma once

// External rays of z^d + c traced by inverse pullback, their landing points,
// and the grouping of periodic angles by common landing point.
//
// A ray sample at Böttcher radius rho on the theta-ray maps under f to the
// sample at radius rho^d on the (d theta)-ray. Starting far out, where the
// Böttcher map is close to the identity, samples are pulled back level by
// level: each new sample is the preimage of the image-ray sample that lies
// nearest the previous sample on the same ray. Once the Böttcher levels are
// exhausted the pullback continues one level at a time until the samples
// from the last full return period agree to `landing_tol`.

#include "pgrowth/circle.hpp"
#include "pgrowth/unicritical.hpp"

#include <optional>
#include <vector>

namespace pgrowth {

struct RayConfig {
  unsigned depth = 48;        ///< Böttcher levels rho_k = R^(1/d^k), k = 0..depth.
  unsigned substeps = 8;      ///< Samples per Böttcher level.
  unsigned max_levels = 20000;  ///< Hard cap on levels, including the continuation.
  double start_radius = 1e6;  ///< Böttcher radius of level 0 (raised to the escape radius if smaller).
  double landing_tol = 1e-9;
  double newton_tol = 1e-12;
  unsigned newton_max_iter = 64;
  double deriv_tol = 1e-14;
  /// A polished periodic landing is accepted within this multiple of the
  /// terminal cluster diameter.
  double polish_capture = 1e3;
};

enum class RayStatus { converged, not_converged, newton_diverged, critical_pullback };

const char* to_string(RayStatus s);

struct RayTrace {
  Angle angle;
  std::vector<cplx> points;  ///< From the outermost sample inward.
  std::optional<cplx> landing;
  bool converged = false;
  double residual = 0.0;  ///< Diameter of the samples over the last return period.
  RayStatus status = RayStatus::not_converged;
  unsigned levels = 0;
  double max_step_residual = 0.0;  ///< Largest |f(z_new) - target| over all pullback steps.
  bool polished = false;
};

/// Traces the theta-ray together with the rays of its forward orbit; the
/// result is ordered like forward_orbit(theta, d).
std::vector<RayTrace> trace_orbit(const UnicriticalMap& m, const Angle& theta,
                                  const RayConfig& cfg = {});

RayTrace trace_ray(const UnicriticalMap& m, const Angle& theta, unsigned depth,
                   RayConfig cfg = {});

struct ClassifyConfig {
  RayConfig ray;
  double grouping_tol = 1e-6;
  double unresolved_frac = 0.1;
};

struct LandingClassification {
  int d = 2;
  cplx c;
  unsigned nu = 1;
  std::vector<std::vector<Angle>> classes;  ///< Ordered by smallest angle.
  std::vector<cplx> representatives;        ///< Landing of each class's smallest angle.
  std::vector<Angle> unresolved;
  std::vector<RayTrace> traces;  ///< One per periodic angle, in angle order.
  double max_class_diameter = 0.0;
  bool reliable = true;
};

/// Traces every angle of periodic_angles(d, nu) and groups landings within
/// `grouping_tol` by single-linkage union-find.
LandingClassification classify_landing(const UnicriticalMap& m, unsigned nu,
                                       const ClassifyConfig& cfg = {});

/// True iff no two classes interleave on the circle.
bool classes_noncrossing(const std::vector<std::vector<Angle>>& classes);

/// True iff m_d maps every class into a single class.
bool class_images_consistent(const std::vector<std::vector<Angle>>& classes, long d);

}  // namespace pgrowth
