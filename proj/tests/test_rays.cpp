#include "pgrowth/rays.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace pgrowth;

namespace {

const cplx kFigureC{-0.110, 0.6557};

cplx cosine_landing(const Angle& t) { return {2.0 * std::cos(2.0 * std::numbers::pi * t.to_double()), 0.0}; }

// Orbits of theta -> 1 - theta among the period-nu angles.
std::vector<std::vector<Angle>> mirror_pairs(unsigned nu) {
  std::vector<std::vector<Angle>> out;
  for (const Angle& a : periodic_angles(2, nu)) {
    Angle b(a.den() - a.num(), a.den());
    if (b < a) continue;
    if (a == b) out.push_back({a});
    else out.push_back({a, b});
  }
  return out;
}

}  // namespace

TEST_SUITE("complexdyn") {

TEST_CASE("escape_radius") {
  CHECK(escape_radius(UnicriticalMap(2, -2.0)) == doctest::Approx(4.0));
  CHECK(escape_radius(UnicriticalMap(2, 0.0)) == doctest::Approx(2.0));
  CHECK(escape_radius(UnicriticalMap(3, -6.0)) == doctest::Approx(std::sqrt(8.0)));
  for (auto [d, c] : {std::pair{2, cplx(-2.0)}, std::pair{3, cplx(-6.0)}, std::pair{4, cplx(1.0, 3.0)}}) {
    UnicriticalMap m(d, c);
    const double R = escape_radius(m);
    for (int i = 0; i < 64; ++i) {
      const cplx z = std::polar(R, 2.0 * std::numbers::pi * i / 64.0);
      CHECK(std::abs(m(z)) >= 2.0 * std::abs(z) * (1 - 1e-12));
    }
  }
}

TEST_CASE("chebyshev_oracle") {
  CHECK(std::abs(chebyshev_oracle(Angle(1, 3)) - cplx(-1.0)) < 1e-12);
  CHECK(std::abs(chebyshev_oracle(Angle()) - cplx(2.0)) < 1e-12);
  for (const Angle& a : periodic_angles(2, 5)) CHECK(std::abs(chebyshev_oracle(a) - cosine_landing(a)) < 1e-12);
}

TEST_CASE("iterate derivative matches the chain rule") {
  UnicriticalMap m(3, cplx(0.2, -0.4));
  cplx deriv;
  const cplx z0(0.3, 0.1);
  const cplx z = m.iterate(z0, 3, &deriv);
  cplx w = z0, dw = 1.0;
  for (int i = 0; i < 3; ++i) {
    dw *= 3.0 * w * w;
    w = w * w * w + m.c();
  }
  CHECK(std::abs(z - w) < 1e-14);
  CHECK(std::abs(deriv - dw) < 1e-12);
}

TEST_CASE("rays of z^2 - 2") {
  UnicriticalMap m(2, -2.0);
  RayTrace t = trace_ray(m, Angle(1, 3), 48);
  CHECK(t.converged);
  REQUIRE(t.landing.has_value());
  CHECK(std::abs(*t.landing - cplx(-1.0)) < 1e-6);
  RayTrace z = trace_ray(m, Angle(), 48);
  REQUIRE(z.landing.has_value());
  CHECK(std::abs(*z.landing - cplx(2.0)) < 1e-6);
}

TEST_CASE("classify z^2 - 2") {
  UnicriticalMap m(2, -2.0);
  auto two = classify_landing(m, 2);
  CHECK(two.reliable);
  CHECK(two.classes == std::vector<std::vector<Angle>>{{Angle()}, {Angle(1, 3), Angle(2, 3)}});
  auto three = classify_landing(m, 3);
  CHECK(three.classes == std::vector<std::vector<Angle>>{
                             {Angle()}, {Angle(1, 7), Angle(6, 7)}, {Angle(2, 7), Angle(5, 7)}, {Angle(3, 7), Angle(4, 7)}});
  for (unsigned nu = 2; nu <= 6; ++nu) {
    auto cl = classify_landing(m, nu);
    CHECK(cl.classes == mirror_pairs(nu));
    for (const RayTrace& t : cl.traces) {
      REQUIRE(t.landing.has_value());
      CHECK(std::abs(*t.landing - cosine_landing(t.angle)) < 1e-6);
    }
  }
}

TEST_CASE("figure parameter: the 1/7 orbit shares a landing point") {
  UnicriticalMap m(2, kFigureC);
  auto orbit = trace_orbit(m, Angle(1, 7));
  REQUIRE(orbit.size() == 3);
  for (const RayTrace& t : orbit) REQUIRE(t.landing.has_value());
  CHECK(std::abs(*orbit[0].landing - *orbit[1].landing) < 1e-6);
  CHECK(std::abs(*orbit[0].landing - *orbit[2].landing) < 1e-6);
  auto cl = classify_landing(m, 3);
  CHECK(cl.reliable);
  CHECK(std::find(cl.classes.begin(), cl.classes.end(),
                  std::vector<Angle>{Angle(1, 7), Angle(2, 7), Angle(4, 7)}) != cl.classes.end());
}

TEST_CASE("trace invariants and semiconjugacy") {
  for (cplx c : {cplx(-2.0), kFigureC, cplx(-1.0), cplx(0.25, 0.3)}) {
    UnicriticalMap m(2, c);
    ClassifyConfig cfg;
    auto cl = classify_landing(m, 5, cfg);
    CHECK(classes_noncrossing(cl.classes));
    CHECK(class_images_consistent(cl.classes, 2));
    for (const RayTrace& t : cl.traces) {
      if (!t.converged) continue;
      CHECK(t.residual <= cfg.ray.landing_tol);
      CHECK(t.max_step_residual <= 1e-9);
      auto image = std::find_if(cl.traces.begin(), cl.traces.end(),
                                [&](const RayTrace& u) { return u.angle == md_apply(t.angle, 2); });
      REQUIRE(image != cl.traces.end());
      if (!image->converged) continue;
      CHECK(std::abs(*image->landing - m(*t.landing)) <= 10 * cfg.ray.landing_tol);
    }
  }
}

TEST_CASE("classes_noncrossing and class_images_consistent on hand-made classes") {
  CHECK(classes_noncrossing({{Angle(1, 7), Angle(2, 7), Angle(4, 7)}, {Angle(3, 7)}, {Angle(5, 7), Angle(6, 7)}}));
  CHECK_FALSE(classes_noncrossing({{Angle(1, 7), Angle(3, 7)}, {Angle(2, 7), Angle(4, 7)}}));
  CHECK(class_images_consistent({{Angle()}, {Angle(1, 3), Angle(2, 3)}}, 2));
  CHECK_FALSE(class_images_consistent({{Angle(1, 7), Angle(3, 7)}, {Angle(2, 7)}, {Angle(6, 7)}}, 2));
}

TEST_CASE("level cap leaves the slow rays unresolved") {
  UnicriticalMap m(2, kFigureC);
  RayConfig tight;
  tight.max_levels = 60;
  RayTrace t = trace_ray(m, Angle(1, 7), 48, tight);
  CHECK_FALSE(t.converged);
  CHECK(t.status == RayStatus::not_converged);
  CHECK_FALSE(t.landing.has_value());

  ClassifyConfig cfg;
  cfg.ray = tight;
  auto cl = classify_landing(m, 3, cfg);
  CHECK_FALSE(cl.unresolved.empty());
  CHECK_FALSE(cl.reliable);
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(UnicriticalMap(1, 0.0), std::invalid_argument);
  UnicriticalMap m(2, -2.0);
  CHECK_THROWS_AS(classify_landing(m, 0), std::invalid_argument);
}

}
