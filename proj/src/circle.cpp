#include "pgrowth/circle.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace pgrowth {

namespace {

mpz_class floor_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

void require_degree(long d) {
  if (d > -2 && d < 2) {
    throw std::invalid_argument("degree must satisfy |d| >= 2, got " + std::to_string(d));
  }
}

Angle::Angle(const mpz_class& p, const mpz_class& q) {
  if (q == 0) throw std::invalid_argument("angle denominator must be non-zero");
  mpz_class num = p;
  mpz_class den = q;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num = floor_mod(num, den);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  num_ = num / g;
  den_ = den / g;
}

Angle Angle::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto slash = text.find('/');
  mpz_class p;
  mpz_class q = 1;
  try {
    if (slash == std::string_view::npos) {
      p = mpz_class(std::string(text));
    } else {
      p = mpz_class(std::string(trim(text.substr(0, slash))));
      q = mpz_class(std::string(trim(text.substr(slash + 1))));
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed angle '" + std::string(text) + "'");
  }
  return Angle(p, q);
}

double Angle::to_double() const { return mpq_class(num_, den_).get_d(); }

std::string Angle::str() const { return num_.get_str() + "/" + den_.get_str(); }

std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
  int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Angle angle_new(const mpz_class& p, const mpz_class& q) { return Angle(p, q); }

Angle angle_from_rational(const mpq_class& x) { return Angle(x.get_num(), x.get_den()); }

mpq_class arc_length(const Angle& from, const Angle& to) {
  mpq_class diff = to.value() - from.value();
  if (diff < 0) diff += 1;
  return diff;
}

Angle md_apply(const Angle& theta, long d) {
  require_degree(d);
  return Angle(theta.num() * d, theta.den());
}

CircleDistance circle_dist(const Angle& a, const Angle& b) {
  mpq_class diff = arc_length(a, b);
  mpq_class other = 1 - diff;
  return CircleDistance(diff < other ? diff : other);
}

std::vector<Angle> periodic_angles(long d, unsigned nu) {
  require_degree(d);
  if (nu == 0) throw std::invalid_argument("period must be positive");
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), mpz_class(d).get_mpz_t(), nu);
  mpz_class count = abs(power - 1);
  if (!count.fits_ulong_p() || count > mpz_class(1UL << 32)) {
    throw std::invalid_argument("periodic angle set too large to enumerate");
  }
  const unsigned long n = count.get_ui();
  std::vector<Angle> out;
  out.reserve(n);
  for (unsigned long k = 0; k < n; ++k) out.emplace_back(mpz_class(k), count);
  return out;
}

std::optional<std::uint64_t> exact_period(const Angle& theta, long d) {
  require_degree(d);
  mpz_class g;
  mpz_class dz(d);
  mpz_gcd(g.get_mpz_t(), theta.den().get_mpz_t(), dz.get_mpz_t());
  // Periodic iff the reduced denominator is coprime to d; the period is then
  // the multiplicative order of d modulo the denominator.
  if (g != 1) return std::nullopt;
  const mpz_class& q = theta.den();
  if (q == 1) return 1;
  mpz_class base = floor_mod(dz, q);
  mpz_class x = base;
  std::uint64_t n = 1;
  while (x != 1) {
    x = floor_mod(x * base, q);
    ++n;
  }
  return n;
}

bool cyclic_order(const Angle& a, const Angle& b, const Angle& c) {
  if (a == b || b == c || a == c) {
    throw std::invalid_argument("cyclic_order requires pairwise distinct angles");
  }
  return arc_length(a, b) < arc_length(a, c);
}

std::vector<Angle> forward_orbit(const Angle& theta, long d) {
  std::vector<Angle> orbit;
  std::set<Angle> seen;
  Angle x = theta;
  while (seen.insert(x).second) {
    orbit.push_back(x);
    x = md_apply(x, d);
  }
  return orbit;
}

}  // namespace pgrowth
