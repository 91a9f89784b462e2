#include "pgrowth/circle.hpp"

#include <doctest.h>

#include <random>

using namespace pgrowth;

TEST_SUITE("circle") {

TEST_CASE("angle_new reduces mod 1") {
  CHECK(angle_new(3, 6) == Angle(1, 2));
  CHECK(angle_new(9, 7).str() == "2/7");
  CHECK(angle_new(0, 5).str() == "0/1");
  CHECK(angle_new(-1, 3).str() == "2/3");
  CHECK(angle_new(1, -3).str() == "2/3");
  CHECK_THROWS_AS(angle_new(1, 0), std::invalid_argument);
}

TEST_CASE("parse") {
  CHECK(Angle::parse(" 4 / 7 ") == Angle(4, 7));
  CHECK(Angle::parse("0") == Angle());
  CHECK_THROWS_AS(Angle::parse("x/7"), std::invalid_argument);
  CHECK_THROWS_AS(Angle::parse("1/0"), std::invalid_argument);
}

TEST_CASE("md_apply") {
  CHECK(md_apply(Angle(1, 7), 2) == Angle(2, 7));
  CHECK(md_apply(Angle(4, 7), 2) == Angle(1, 7));
  CHECK(md_apply(Angle(), 5) == Angle());
  CHECK(md_apply(Angle(1, 3), -2) == Angle(1, 3));
  CHECK_THROWS_AS(md_apply(Angle(1, 3), 1), std::invalid_argument);
  CHECK_THROWS_AS(md_apply(Angle(1, 3), -1), std::invalid_argument);
}

TEST_CASE("circle_dist") {
  CHECK(circle_dist(Angle(1, 4), Angle(3, 4)).value() == mpq_class(1, 2));
  CHECK(circle_dist(Angle(), Angle(1, 4)).value() == mpq_class(1, 4));
  CHECK(circle_dist(Angle(1, 7), Angle(6, 7)).value() == mpq_class(2, 7));
}

TEST_CASE("periodic_angles") {
  auto a = periodic_angles(2, 3);
  REQUIRE(a.size() == 7);
  for (int k = 0; k < 7; ++k) CHECK(a[k] == Angle(k, 7));
  CHECK(periodic_angles(2, 1) == std::vector<Angle>{Angle()});
  auto b = periodic_angles(3, 2);
  REQUIRE(b.size() == 8);
  for (int k = 0; k < 8; ++k) CHECK(b[k] == Angle(k, 8));
  // (-2)θ = θ has the three solutions k/3.
  CHECK(periodic_angles(-2, 1).size() == 3);
  CHECK_THROWS_AS(periodic_angles(2, 0), std::invalid_argument);
}

TEST_CASE("exact_period") {
  CHECK(exact_period(Angle(1, 7), 2) == 3u);
  CHECK(exact_period(Angle(), 2) == 1u);
  CHECK_FALSE(exact_period(Angle(1, 2), 2).has_value());
  CHECK_FALSE(exact_period(Angle(1, 6), 3).has_value());
  CHECK(exact_period(Angle(1, 3), -2) == 1u);
}

TEST_CASE("periods beyond 64 bits stay exact") {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), 2, 70);
  q -= 1;
  const Angle theta(1, q);
  CHECK(exact_period(theta, 2) == 70u);
  Angle x = theta;
  for (int i = 0; i < 70; ++i) x = md_apply(x, 2);
  CHECK(x == theta);
}

TEST_CASE("cyclic_order") {
  CHECK(cyclic_order(Angle(), Angle(1, 4), Angle(1, 2)));
  CHECK_FALSE(cyclic_order(Angle(), Angle(1, 2), Angle(1, 4)));
  CHECK(cyclic_order(Angle(3, 4), Angle(), Angle(1, 4)));
  CHECK_THROWS_AS(cyclic_order(Angle(), Angle(), Angle(1, 4)), std::invalid_argument);
}

TEST_CASE("md_apply composes like multiplication by d^2") {
  for (long d : {2L, -3L}) {
    for (long q = 1; q <= 1000; ++q) {
      for (long p = 0; p < q; ++p) {
        const Angle theta(p, q);
        if (theta.den() != q) continue;
        REQUIRE(md_apply(md_apply(theta, d), d) == Angle(theta.num() * d * d, theta.den()));
      }
    }
  }
}

TEST_CASE("periodic angles have periods dividing nu") {
  for (long d : {2L, 3L, 4L}) {
    for (unsigned nu = 1; nu <= 6; ++nu) {
      mpz_class expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), d, nu);
      if (expected > 5000) continue;
      auto angles = periodic_angles(d, nu);
      CHECK(angles.size() == expected.get_ui() - 1);
      for (const Angle& a : angles) {
        auto p = exact_period(a, d);
        REQUIRE(p.has_value());
        CHECK(nu % *p == 0);
      }
    }
  }
}

TEST_CASE("circle_dist is a metric on sampled triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> den(1, 60);
  auto sample = [&] {
    int q = den(rng);
    return Angle(std::uniform_int_distribution<int>(0, q - 1)(rng), q);
  };
  for (int i = 0; i < 2000; ++i) {
    Angle a = sample(), b = sample(), c = sample();
    auto ab = circle_dist(a, b).value();
    CHECK(ab == circle_dist(b, a).value());
    CHECK((ab == 0) == (a == b));
    CHECK(ab <= mpq_class(1, 2));
    CHECK(circle_dist(a, c).value() <= ab + circle_dist(b, c).value());
  }
}

TEST_CASE("equal images exactly when the difference is a multiple of 1/d") {
  for (long d : {2L, 3L, 4L, -3L}) {
    std::vector<Angle> pts;
    for (long q = 1; q <= 24; ++q)
      for (long p = 0; p < q; ++p) pts.emplace_back(p, q);
    for (std::size_t i = 0; i < pts.size(); i += 3) {
      for (std::size_t j = 0; j < pts.size(); j += 5) {
        if (pts[i] == pts[j]) continue;
        mpq_class diff = (pts[i].value() - pts[j].value()) * std::labs(d);
        diff.canonicalize();
        CHECK((md_apply(pts[i], d) == md_apply(pts[j], d)) == (diff.get_den() == 1));
      }
    }
  }
}

}
