#include "pgrowth/stars.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pgrowth {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False when a and b were already connected.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool on_closed_arc(const Angle& from, const Angle& x, const Angle& to) {
  return x == from || x == to || cyclic_order(from, x, to);
}

void require_admissible(const StarSet& set) {
  if (!pairwise_disjoint(set)) throw std::invalid_argument("star set is not pairwise disjoint");
  if (has_cycle(set)) throw std::invalid_argument("star set contains a cycle");
}

}  // namespace

Star::Star(long degree, std::vector<Angle> points) : degree_(degree) {
  if (degree < 2) throw std::invalid_argument("star degree must be at least 2");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 2) throw std::invalid_argument("a star needs at least two distinct points");
  for (std::size_t i = 1; i < points.size(); ++i) {
    mpq_class scaled = (points[i].value() - points[0].value()) * degree;
    scaled.canonicalize();
    if (scaled.get_den() != 1) {
      throw std::invalid_argument("points " + points[0].str() + " and " + points[i].str() +
                                  " do not differ by a multiple of 1/" + std::to_string(degree));
    }
  }
  points_ = std::move(points);
}

bool Star::contains(const Angle& x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

Star star_new(long d, std::vector<Angle> points) { return Star(d, std::move(points)); }

std::size_t multiplicity(const Star& star) { return star.size() - 1; }

bool disjoint(const Star& a, const Star& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("stars of different degree");
  const auto& pts = a.points();
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Angle& from = pts[i];
    const Angle& to = pts[(i + 1) % n];
    bool inside = std::all_of(b.points().begin(), b.points().end(),
                              [&](const Angle& x) { return on_closed_arc(from, x, to); });
    if (inside) return true;
  }
  return false;
}

bool pairwise_disjoint(const StarSet& set) {
  for (std::size_t i = 0; i < set.stars.size(); ++i) {
    for (std::size_t j = i + 1; j < set.stars.size(); ++j) {
      if (!disjoint(set.stars[i], set.stars[j])) return false;
    }
  }
  return true;
}

bool has_cycle(const StarSet& set) {
  if (!pairwise_disjoint(set)) throw std::invalid_argument("has_cycle requires pairwise disjoint stars");
  // Nodes 0..k-1 are stars; shared points get nodes on demand.
  DisjointSets nodes(set.stars.size());
  std::map<Angle, std::size_t> point_node;
  for (std::size_t s = 0; s < set.stars.size(); ++s) {
    for (const Angle& x : set.stars[s].points()) {
      auto [it, fresh] = point_node.try_emplace(x, 0);
      if (fresh) it->second = nodes.add();
      if (!nodes.unite(s, it->second)) return true;
    }
  }
  return false;
}

std::size_t sum_multiplicities(const StarSet& set) {
  std::size_t total = 0;
  for (const Star& s : set.stars) total += multiplicity(s);
  return total;
}

bool is_maximal(const StarSet& set) {
  if (!pairwise_disjoint(set) || has_cycle(set)) return false;
  return sum_multiplicities(set) == static_cast<std::size_t>(set.degree - 1);
}

std::optional<Star> find_extension(const StarSet& set, unsigned refinement) {
  if (refinement == 0) throw std::invalid_argument("grid refinement must be positive");
  require_admissible(set);
  const long d = set.degree;
  const long n = d * static_cast<long>(refinement);
  for (long i = 0; i < n; ++i) {
    for (long j = i + refinement; j < n; j += refinement) {
      Star candidate(d, {Angle(i, n), Angle(j, n)});
      bool ok = std::all_of(set.stars.begin(), set.stars.end(),
                            [&](const Star& s) { return disjoint(s, candidate); });
      if (!ok) continue;
      StarSet extended = set;
      extended.stars.push_back(candidate);
      if (!has_cycle(extended)) return candidate;
    }
  }
  return std::nullopt;
}

bool check_maximal_bruteforce(const StarSet& set, unsigned refinement) {
  return !find_extension(set, refinement).has_value();
}

Quotient quotient(const StarSet& set, const Star& pivot, const Angle& arcStart,
                  const Angle& arcEnd) {
  if (!pivot.contains(arcStart) || !pivot.contains(arcEnd) || arcStart == arcEnd) {
    throw std::invalid_argument("arc endpoints must be two distinct points of the pivot star");
  }
  for (const Angle& x : pivot.points()) {
    if (x != arcStart && x != arcEnd && cyclic_order(arcStart, x, arcEnd)) {
      throw std::invalid_argument("arc endpoints are not consecutive points of the pivot star");
    }
  }
  const long d = set.degree;
  mpq_class scaled = arc_length(arcStart, arcEnd) * d;
  scaled.canonicalize();
  const long ell = scaled.get_num().get_si();
  if (ell < 2) {
    throw DegenerateArcError("arc " + arcStart.str() + " -> " + arcEnd.str() +
                             " collapses to degree " + std::to_string(ell));
  }

  Quotient out;
  out.ell = ell;
  out.stars.degree = ell;
  for (const Star& s : set.stars) {
    if (s == pivot) continue;
    std::size_t in_open = 0;
    std::size_t in_closed = 0;
    for (const Angle& x : s.points()) {
      if (x == arcStart || x == arcEnd) {
        ++in_closed;
      } else if (cyclic_order(arcStart, x, arcEnd)) {
        ++in_open;
        ++in_closed;
      }
    }
    if (in_open == 0) continue;
    if (in_closed != s.size()) {
      throw std::invalid_argument("a star straddles the boundary of the quotient arc");
    }
    std::vector<Angle> image;
    image.reserve(s.size());
    for (const Angle& x : s.points()) {
      image.push_back(angle_from_rational(arc_length(arcStart, x) * d / ell));
    }
    out.stars.stars.emplace_back(ell, std::move(image));
  }
  return out;
}

std::vector<Star> grid_stars(long d) {
  if (d < 2 || d > 20) throw std::invalid_argument("grid star enumeration supports 2 <= d <= 20");
  std::vector<Star> out;
  for (unsigned long mask = 1; mask < (1UL << d); ++mask) {
    if (__builtin_popcountl(mask) < 2) continue;
    std::vector<Angle> pts;
    for (long k = 0; k < d; ++k) {
      if (mask & (1UL << k)) pts.emplace_back(k, d);
    }
    out.emplace_back(d, std::move(pts));
  }
  return out;
}

namespace {

void extend_grid_sets(long d, const std::vector<Star>& stars, std::size_t next,
                      std::vector<std::size_t>& chosen, std::vector<std::size_t> components,
                      std::vector<StarSet>& out) {
  StarSet current{d, {}};
  for (std::size_t i : chosen) current.stars.push_back(stars[i]);
  out.push_back(std::move(current));

  for (std::size_t i = next; i < stars.size(); ++i) {
    const Star& cand = stars[i];
    bool ok = std::all_of(chosen.begin(), chosen.end(),
                          [&](std::size_t j) { return disjoint(stars[j], cand); });
    if (!ok) continue;
    // Grid points are k/d; a new star closes a cycle iff two of its points
    // are already connected through the chosen stars.
    std::vector<std::size_t> roots;
    for (const Angle& x : cand.points()) {
      roots.push_back(components[mpz_class(x.num() * d / x.den()).get_ui()]);
    }
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) continue;
    std::vector<std::size_t> merged = components;
    for (auto& c : merged) {
      if (std::binary_search(roots.begin(), roots.end(), c)) c = roots.front();
    }
    chosen.push_back(i);
    extend_grid_sets(d, stars, i + 1, chosen, std::move(merged), out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<StarSet> enumerate_admissible_grid_sets(long d) {
  const std::vector<Star> stars = grid_stars(d);
  std::vector<StarSet> out;
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> components(static_cast<std::size_t>(d));
  std::iota(components.begin(), components.end(), 0);
  extend_grid_sets(d, stars, 0, chosen, std::move(components), out);
  return out;
}

}  // namespace pgrowth
