#include "pgrowth/itinerary.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>

namespace pgrowth {

namespace mp = boost::multiprecision;

HypothesisReport verify_U_hypothesis(const UnicriticalMap& m, double R) {
  if (!(R > 0.0)) throw std::invalid_argument("disk radius must be positive");
  const double abs_c = std::abs(m.c());
  HypothesisReport rep;
  rep.critical_value_margin = abs_c - R;
  rep.preimage_margin = R - std::pow(R + abs_c, 1.0 / m.d());
  rep.holds = rep.critical_value_margin > 0.0 && rep.preimage_margin > 0.0;
  return rep;
}

qcomplex inverse_branch(const UnicriticalMap& m, const qcomplex& z, int branch) {
  const int d = m.d();
  if (branch < 1 || branch > d) throw std::invalid_argument("branch index outside 1..d");
  const qcomplex c(m.c().real(), m.c().imag());
  const qcomplex w = z - c;
  // Argument of w measured continuously around the direction of -c.
  const qreal centre = mp::atan2(qreal(-m.c().imag()), qreal(-m.c().real()));
  const qcomplex rotor = mp::polar(qreal(1), -centre);
  const qcomplex rel = w * rotor;
  const qreal psi = centre + mp::atan2(rel.imag(), rel.real());
  const qreal two_pi = 2 * boost::math::constants::pi<qreal>();
  const qreal theta = (psi + two_pi * (branch - 1)) / d;
  const qreal radius = mp::exp(mp::log(mp::abs(w)) / d);
  return mp::polar(radius, theta);
}

qcomplex iterate_hp(const UnicriticalMap& m, qcomplex z, unsigned n) {
  for (unsigned i = 0; i < n; ++i) z = m(z);
  return z;
}

ItineraryResult itinerary_point(const UnicriticalMap& m, std::span<const int> word,
                                const ItineraryConfig& cfg) {
  if (word.empty()) throw std::invalid_argument("itinerary word must be non-empty");
  for (int a : word) {
    if (a < 1 || a > m.d()) throw std::invalid_argument("itinerary letter outside 1..d");
  }
  if (!verify_U_hypothesis(m, cfg.radius).holds) {
    throw HypothesisError("disk of radius " + std::to_string(cfg.radius) +
                          " fails the inverse-branch hypothesis");
  }

  ItineraryResult out;
  out.word.assign(word.begin(), word.end());
  qcomplex z(0, 0);
  for (unsigned cycle = 0; cycle < cfg.max_cycles; ++cycle) {
    qcomplex w = z;
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = inverse_branch(m, w, *it);
    const qreal moved = mp::abs(w - z);
    out.displacements.push_back(moved.convert_to<double>());
    z = w;
    if (moved <= cfg.step_tol * std::max(qreal(1), mp::abs(z))) break;
  }
  out.point = z;
  out.residual = mp::abs(iterate_hp(m, z, static_cast<unsigned>(word.size())) - z).convert_to<double>();
  out.converged = out.residual <= cfg.tol;
  return out;
}

PeriodicCount count_periodic(const UnicriticalMap& m, unsigned k, const ItineraryConfig& cfg) {
  if (k == 0) throw std::invalid_argument("period must be at least 1");
  const int d = m.d();
  PeriodicCount out;
  out.k = k;
  std::vector<int> word(k, 1);
  while (true) {
    ItineraryResult r = itinerary_point(m, word, cfg);
    out.all_converged = out.all_converged && r.converged;
    if (mp::abs(r.point) >= cfg.radius) out.inside_disk = false;
    out.points.push_back(std::move(r));
    std::size_t pos = k;
    while (pos > 0 && word[pos - 1] == d) word[--pos] = 1;
    if (pos == 0) break;
    ++word[pos - 1];
  }

  // Distinct points: sort by real part and compare within the tolerance band.
  std::vector<std::size_t> order(out.points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return out.points[a].point.real() < out.points[b].point.real();
  });
  const qreal tol(cfg.dedup_tol);
  std::vector<bool> duplicate(order.size(), false);
  for (std::size_t a = 0; a < order.size(); ++a) {
    if (duplicate[a]) continue;
    const qcomplex& za = out.points[order[a]].point;
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      const qcomplex& zb = out.points[order[b]].point;
      if (zb.real() - za.real() > tol) break;
      if (!duplicate[b] && mp::abs(zb - za) <= tol) duplicate[b] = true;
    }
  }
  out.count = static_cast<std::size_t>(std::count(duplicate.begin(), duplicate.end(), false));
  return out;
}

}  // namespace pgrowth
