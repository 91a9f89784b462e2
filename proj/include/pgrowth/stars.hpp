#pragma once

// d-stars: subsets of a single fibre of m_d, and families of them.
//
// A d-star is a set of at least two points of the circle whose pairwise
// differences are multiples of 1/d. Two stars are disjoint when one lies in
// the closure of a single complementary arc of the other. A family has a cycle
// when its incidence graph (stars on one side, shared points on the other)
// contains a cycle, i.e. a closed chain of distinct stars linked through
// distinct points. A family of disjoint, acyclic d-stars is maximal exactly
// when its multiplicities add up to d - 1.

#include "pgrowth/circle.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pgrowth {

class Star {
 public:
  /// Validates and cyclically sorts the points. Throws std::invalid_argument
  /// for fewer than two distinct points or a difference not in (1/d)Z.
  Star(long degree, std::vector<Angle> points);

  long degree() const { return degree_; }
  const std::vector<Angle>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const Angle& x) const;

  friend bool operator==(const Star&, const Star&) = default;

 private:
  long degree_;
  std::vector<Angle> points_;
};

struct StarSet {
  long degree = 2;
  std::vector<Star> stars;
};

Star star_new(long d, std::vector<Angle> points);

std::size_t multiplicity(const Star& star);

/// Throws std::invalid_argument on degree mismatch.
bool disjoint(const Star& a, const Star& b);

bool pairwise_disjoint(const StarSet& set);

/// Throws std::invalid_argument when the stars are not pairwise disjoint.
bool has_cycle(const StarSet& set);

std::size_t sum_multiplicities(const StarSet& set);

bool is_maximal(const StarSet& set);

/// Exhaustive extension search: true iff no two-point star on the grid
/// {k / (d * refinement)} can be added to `set` keeping it disjoint and
/// acyclic. Independent of the multiplicity count used by is_maximal.
/// Throws std::invalid_argument when `set` is not disjoint and acyclic.
bool check_maximal_bruteforce(const StarSet& set, unsigned refinement);

/// The extension witness found by the search, if any.
std::optional<Star> find_extension(const StarSet& set, unsigned refinement);

class DegenerateArcError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Quotient {
  long ell = 0;
  StarSet stars;
};

/// Collapses the closed counter-clockwise arc [arcStart, arcEnd] between two
/// consecutive points of `pivot` onto a circle of length one. Stars of `set`
/// inside the arc become ell-stars, where ell / d is the arc length; stars
/// outside the open arc are dropped. Throws DegenerateArcError when ell < 2
/// and std::invalid_argument for a star straddling the arc boundary or for
/// endpoints that are not consecutive points of `pivot`.
Quotient quotient(const StarSet& set, const Star& pivot, const Angle& arcStart,
                  const Angle& arcEnd);

/// Every star of degree d with all points on {k/d}: the 2^d - d - 1 subsets
/// of size at least two.
std::vector<Star> grid_stars(long d);

/// Every family of distinct grid stars (see grid_stars) that is pairwise
/// disjoint and acyclic, including the empty family.
std::vector<StarSet> enumerate_admissible_grid_sets(long d);

}  // namespace pgrowth
