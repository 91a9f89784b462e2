#pragma once

// Exact dynamics of the covering m_d : θ ↦ d·θ on the circle R/Z.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pgrowth {

/// A rational point of R/Z in canonical form: 0 <= num < den, gcd(num, den) = 1.
/// Zero is 0/1.
class Angle {
 public:
  Angle() : num_(0), den_(1) {}

  /// Reduces p/q mod 1. Throws std::invalid_argument when q == 0.
  Angle(const mpz_class& p, const mpz_class& q);

  /// Parses "p/q" or a plain integer.
  static Angle parse(std::string_view text);

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  double to_double() const;
  std::string str() const;

  /// Exact rational value in [0, 1).
  mpq_class value() const { return mpq_class(num_, den_); }

  friend bool operator==(const Angle& a, const Angle& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  /// Order of the representatives in [0, 1).
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b);

  friend std::ostream& operator<<(std::ostream& os, const Angle& a) { return os << a.str(); }

 private:
  mpz_class num_;
  mpz_class den_;
};

Angle angle_new(const mpz_class& p, const mpz_class& q);

/// Canonical representative of an exact rational modulo 1.
Angle angle_from_rational(const mpq_class& x);

/// Counter-clockwise length (b - a) mod 1, in [0, 1).
mpq_class arc_length(const Angle& from, const Angle& to);

/// Min-arc distance on the circle of length one; value in [0, 1/2].
class CircleDistance {
 public:
  explicit CircleDistance(mpq_class value) : value_(std::move(value)) {}
  const mpq_class& value() const { return value_; }
  friend bool operator==(const CircleDistance&, const CircleDistance&) = default;

 private:
  mpq_class value_;
};

/// d·θ mod 1. Requires |d| >= 2.
Angle md_apply(const Angle& theta, long d);

CircleDistance circle_dist(const Angle& a, const Angle& b);

/// The |d^ν − 1| solutions of d^ν·θ = θ mod 1, in increasing order.
std::vector<Angle> periodic_angles(long d, unsigned nu);

/// Least n >= 1 with d^n·θ = θ, or nullopt when θ is strictly preperiodic.
std::optional<std::uint64_t> exact_period(const Angle& theta, long d);

/// True iff b lies on the open counter-clockwise arc from a to c.
/// Throws std::invalid_argument unless a, b, c are pairwise distinct.
bool cyclic_order(const Angle& a, const Angle& b, const Angle& c);

/// Forward orbit θ, dθ, d²θ, ... up to (not including) the first repeated angle.
std::vector<Angle> forward_orbit(const Angle& theta, long d);

void require_degree(long d);

}  // namespace pgrowth
