#include "pgrowth/rays.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace pgrowth {

const char* to_string(RayStatus s) {
  switch (s) {
    case RayStatus::converged:
      return "converged";
    case RayStatus::not_converged:
      return "not_converged";
    case RayStatus::newton_diverged:
      return "newton_diverged";
    case RayStatus::critical_pullback:
      return "critical_pullback";
  }
  return "unknown";
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct PullResult {
  cplx z;
  double residual = 0.0;
  RayStatus status = RayStatus::converged;
};

// Solves f(z) = target by damped Newton from `seed`, then makes sure the
// root reached is the preimage nearest the seed so the ray keeps its branch.
PullResult pull_back(const UnicriticalMap& m, cplx target, cplx seed, const RayConfig& cfg) {
  PullResult out;
  cplx z = seed;
  bool done = false;
  for (unsigned it = 0; it < cfg.newton_max_iter; ++it) {
    const cplx fz = m(z) - target;
    const cplx dfz = m.derivative(z);
    if (std::abs(dfz) < cfg.deriv_tol) {
      out.status = RayStatus::critical_pullback;
      out.z = z;
      return out;
    }
    const cplx step = fz / dfz;
    double lambda = 1.0;
    cplx next = z - step;
    while (lambda > 1.0 / 1024 && std::abs(m(next) - target) > std::abs(fz)) {
      lambda *= 0.5;
      next = z - lambda * step;
    }
    const double moved = std::abs(next - z);
    z = next;
    if (moved <= cfg.newton_tol * std::max(1.0, std::abs(z))) {
      done = true;
      break;
    }
  }
  if (!done) {
    out.status = RayStatus::newton_diverged;
    out.z = z;
    return out;
  }

  const cplx base = target - m.c();
  const int d = m.d();
  const double r = std::pow(std::abs(base), 1.0 / d);
  const double a = std::arg(base) / d;
  cplx nearest;
  double best = INFINITY;
  for (int k = 0; k < d; ++k) {
    const cplx root = std::polar(r, a + kTwoPi * k / d);
    if (std::abs(root - seed) < best) {
      best = std::abs(root - seed);
      nearest = root;
    }
  }
  if (std::abs(z - nearest) > 1e-6 * std::max(1.0, std::abs(nearest))) {
    // Newton jumped to another branch; the explicit root continues the ray.
    z = nearest;
    z -= (m(z) - target) / m.derivative(z);
  }
  if (std::abs(m.derivative(z)) < cfg.deriv_tol) out.status = RayStatus::critical_pullback;
  out.z = z;
  out.residual = std::abs(m(z) - target);
  return out;
}

// Inverse Böttcher map near infinity: psi(w) = w - c / (d w^(d-1)) + O(|w|^(1-2d)).
cplx far_sample(const UnicriticalMap& m, double radius, double angle) {
  const cplx w = std::polar(radius, kTwoPi * angle);
  return w - m.c() / (static_cast<double>(m.d()) * std::pow(w, m.d() - 1));
}

double diameter(const std::vector<cplx>& pts, std::size_t from) {
  double diam = 0.0;
  for (std::size_t i = from; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) diam = std::max(diam, std::abs(pts[i] - pts[j]));
  }
  return diam;
}

// Newton on f^p(z) - z from `seed`; nullopt unless it converges to a point
// with |(f^p)'| >= 1 (a repelling or parabolic cycle, hence on the Julia set).
std::optional<cplx> polish_periodic(const UnicriticalMap& m, cplx seed, unsigned p) {
  cplx z = seed;
  for (int it = 0; it < 64; ++it) {
    cplx deriv;
    const cplx fz = m.iterate(z, p, &deriv) - z;
    const cplx dfz = deriv - 1.0;
    if (std::abs(dfz) == 0.0) return std::nullopt;
    const cplx step = fz / dfz;
    z -= step;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::nullopt;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) {
      cplx mult;
      m.iterate(z, p, &mult);
      if (std::abs(mult) < 1.0 - 1e-9) return std::nullopt;
      return z;
    }
  }
  return std::nullopt;
}

cplx nearest_preimage(const UnicriticalMap& m, cplx value, cplx near) {
  const cplx base = value - m.c();
  const int d = m.d();
  const double r = std::pow(std::abs(base), 1.0 / d);
  const double a = std::arg(base) / d;
  cplx best_root;
  double best = INFINITY;
  for (int k = 0; k < d; ++k) {
    const cplx root = std::polar(r, a + kTwoPi * k / d);
    if (std::abs(root - near) < best) {
      best = std::abs(root - near);
      best_root = root;
    }
  }
  return best_root;
}

}  // namespace

std::vector<RayTrace> trace_orbit(const UnicriticalMap& m, const Angle& theta, const RayConfig& cfg) {
  if (cfg.depth == 0) throw std::invalid_argument("ray depth must be positive");
  if (cfg.substeps == 0) throw std::invalid_argument("substeps must be positive");
  const long d = m.d();
  const std::vector<Angle> orbit = forward_orbit(theta, d);
  const std::size_t L = orbit.size();
  std::vector<std::size_t> next(L);
  for (std::size_t j = 0; j + 1 < L; ++j) next[j] = j + 1;
  const Angle closing = md_apply(orbit.back(), d);
  next[L - 1] = static_cast<std::size_t>(std::find(orbit.begin(), orbit.end(), closing) - orbit.begin());
  const std::size_t cycle_start = next[L - 1];
  const unsigned period = static_cast<unsigned>(L - cycle_start);

  std::vector<double> angle(L);
  for (std::size_t j = 0; j < L; ++j) angle[j] = orbit[j].to_double();

  const unsigned S = cfg.substeps;
  const double log_r0 = std::log(std::max(cfg.start_radius, escape_radius(m)));

  std::vector<RayTrace> traces(L);
  std::vector<std::vector<cplx>> level(L);  // whole-level samples per ray
  for (std::size_t j = 0; j < L; ++j) traces[j].angle = orbit[j];

  RayStatus failure = RayStatus::converged;
  auto step = [&](std::size_t j, cplx target, cplx seed) {
    PullResult r = pull_back(m, target, seed, cfg);
    traces[j].max_step_residual = std::max(traces[j].max_step_residual, r.residual);
    traces[j].points.push_back(r.z);
    if (r.status != RayStatus::converged) failure = r.status;
    return r.z;
  };

  // Böttcher phase: sample index s has radius R0^(d^(-s/S)).
  const std::size_t total = static_cast<std::size_t>(S) * cfg.depth;
  for (std::size_t s = 0; s <= total && failure == RayStatus::converged; ++s) {
    for (std::size_t j = 0; j < L && failure == RayStatus::converged; ++j) {
      cplx z;
      if (s < S) {
        const double radius = std::exp(log_r0 * std::pow(static_cast<double>(d), -static_cast<double>(s) / S));
        z = far_sample(m, radius, angle[j]);
        traces[j].points.push_back(z);
      } else {
        z = step(j, traces[next[j]].points[s - S], traces[j].points[s - 1]);
      }
      if (s % S == 0) level[j].push_back(z);
    }
  }

  auto cluster_diameter = [&](std::size_t j) {
    const auto& lv = level[j];
    return diameter(lv, lv.size() > period + 1 ? lv.size() - period - 1 : 0);
  };
  auto all_converged = [&] {
    for (std::size_t j = 0; j < L; ++j) {
      if (cluster_diameter(j) > cfg.landing_tol) return false;
    }
    return true;
  };

  // Continuation phase: one sample per level until the terminal clusters settle.
  unsigned levels = cfg.depth;
  bool settled = failure == RayStatus::converged && all_converged();
  while (!settled && failure == RayStatus::converged && levels < cfg.max_levels) {
    std::vector<cplx> fresh(L);
    for (std::size_t j = 0; j < L && failure == RayStatus::converged; ++j) {
      fresh[j] = step(j, level[next[j]].back(), level[j].back());
    }
    for (std::size_t j = 0; j < L; ++j) level[j].push_back(fresh[j]);
    ++levels;
    if (levels % period == 0 || levels >= cfg.max_levels) settled = all_converged();
  }
  if (failure == RayStatus::converged && !settled) settled = all_converged();

  for (std::size_t j = 0; j < L; ++j) {
    RayTrace& t = traces[j];
    t.levels = levels;
    t.residual = cluster_diameter(j);
    if (failure != RayStatus::converged) {
      t.status = failure;
    } else {
      t.converged = t.residual <= cfg.landing_tol;
      t.status = t.converged ? RayStatus::converged : RayStatus::not_converged;
    }
  }

  for (std::size_t j = cycle_start; j < L; ++j) {
    RayTrace& t = traces[j];
    if (!t.converged) continue;
    const cplx terminal = level[j].back();
    t.landing = terminal;
    if (auto p = polish_periodic(m, terminal, period)) {
      if (std::abs(*p - terminal) <= cfg.polish_capture * std::max(t.residual, 1e-15)) {
        t.landing = *p;
        t.polished = true;
      }
    }
  }
  for (std::size_t j = cycle_start; j-- > 0;) {
    RayTrace& t = traces[j];
    if (!t.converged) continue;
    const cplx terminal = level[j].back();
    t.landing = terminal;
    const RayTrace& image = traces[next[j]];
    if (image.polished && image.landing) {
      t.landing = nearest_preimage(m, *image.landing, terminal);
      t.polished = true;
    }
  }
  return traces;
}

RayTrace trace_ray(const UnicriticalMap& m, const Angle& theta, unsigned depth, RayConfig cfg) {
  cfg.depth = depth;
  return trace_orbit(m, theta, cfg).front();
}

LandingClassification classify_landing(const UnicriticalMap& m, unsigned nu, const ClassifyConfig& cfg) {
  LandingClassification out;
  out.d = m.d();
  out.c = m.c();
  out.nu = nu;

  const std::vector<Angle> angles = periodic_angles(m.d(), nu);
  std::map<Angle, RayTrace> by_angle;
  for (const Angle& a : angles) {
    if (by_angle.count(a)) continue;
    for (RayTrace& t : trace_orbit(m, a, cfg.ray)) {
      Angle key = t.angle;
      by_angle.try_emplace(std::move(key), std::move(t));
    }
  }

  std::vector<std::size_t> resolved;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    RayTrace& t = by_angle.at(angles[i]);
    if (t.converged && t.landing) {
      resolved.push_back(i);
    } else {
      out.unresolved.push_back(angles[i]);
    }
    out.traces.push_back(t);
  }

  std::vector<std::size_t> parent(angles.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < resolved.size(); ++a) {
    for (std::size_t b = a + 1; b < resolved.size(); ++b) {
      const std::size_t i = resolved[a];
      const std::size_t j = resolved[b];
      if (std::abs(*out.traces[i].landing - *out.traces[j].landing) <= cfg.grouping_tol) {
        std::size_t ri = find(i);
        std::size_t rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }

  // Roots are the smallest index of each class, and angles are sorted, so
  // first appearance orders classes by smallest angle.
  std::map<std::size_t, std::size_t> class_of_root;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i : resolved) {
    auto [it, fresh] = class_of_root.try_emplace(find(i), members.size());
    if (fresh) members.emplace_back();
    members[it->second].push_back(i);
  }
  for (const auto& cls : members) {
    std::vector<Angle> group;
    for (std::size_t i : cls) group.push_back(angles[i]);
    out.classes.push_back(std::move(group));
    out.representatives.push_back(*out.traces[cls.front()].landing);
    std::vector<cplx> pts;
    for (std::size_t i : cls) pts.push_back(*out.traces[i].landing);
    out.max_class_diameter = std::max(out.max_class_diameter, diameter(pts, 0));
  }
  out.reliable = static_cast<double>(out.unresolved.size()) <= cfg.unresolved_frac * static_cast<double>(angles.size());
  return out;
}

bool classes_noncrossing(const std::vector<std::vector<Angle>>& classes) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (i == j) continue;
      const auto& A = classes[i];
      const auto& B = classes[j];
      for (std::size_t p = 0; p < A.size(); ++p) {
        for (std::size_t q = p + 1; q < A.size(); ++q) {
          for (std::size_t r = 0; r < B.size(); ++r) {
            for (std::size_t s = r + 1; s < B.size(); ++s) {
              if (cyclic_order(A[p], B[r], A[q]) != cyclic_order(A[p], B[s], A[q])) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool class_images_consistent(const std::vector<std::vector<Angle>>& classes, long d) {
  std::map<Angle, std::size_t> owner;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (const Angle& a : classes[i]) owner[a] = i;
  }
  for (const auto& cls : classes) {
    std::optional<std::size_t> target;
    for (const Angle& a : cls) {
      auto it = owner.find(md_apply(a, d));
      if (it == owner.end()) continue;
      if (target && *target != it->second) return false;
      target = it->second;
    }
  }
  return true;
}

}  // namespace pgrowth
