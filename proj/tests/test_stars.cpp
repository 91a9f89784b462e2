#include "pgrowth/stars.hpp"

#include <doctest.h>

#include <random>

using namespace pgrowth;

namespace {

Star S4(std::initializer_list<std::pair<long, long>> pts) {
  std::vector<Angle> v;
  for (auto [p, q] : pts) v.emplace_back(p, q);
  return Star(4, v);
}

const Star E1 = S4({{0, 1}, {1, 4}});
const Star E2 = S4({{1, 4}, {1, 2}});
const Star E3 = S4({{1, 2}, {3, 4}});
const Star E4 = S4({{0, 1}, {1, 2}});
const Star E5 = S4({{3, 4}, {0, 1}});

StarSet set4(std::vector<Star> s) { return StarSet{4, std::move(s)}; }

}  // namespace

TEST_SUITE("stars") {

TEST_CASE("star_new") {
  CHECK(star_new(4, {Angle(0, 1), Angle(1, 4)}).size() == 2);
  CHECK(star_new(3, {Angle(0, 1), Angle(1, 3), Angle(2, 3)}).size() == 3);
  CHECK_THROWS_AS(star_new(4, {Angle(0, 1), Angle(1, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(star_new(4, {Angle(1, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(star_new(4, {Angle(1, 4), Angle(5, 4)}), std::invalid_argument);
}

TEST_CASE("multiplicity") {
  CHECK(multiplicity(E1) == 1);
  CHECK(multiplicity(star_new(4, {Angle(0, 1), Angle(1, 4), Angle(1, 2), Angle(3, 4)})) == 3);
}

TEST_CASE("disjoint") {
  CHECK(disjoint(E3, E4));
  CHECK(disjoint(E1, E3));
  CHECK(disjoint(E1, E2));
  CHECK_FALSE(disjoint(E4, S4({{1, 8}, {5, 8}})));
  CHECK_THROWS_AS(disjoint(E1, star_new(2, {Angle(0, 1), Angle(1, 2)})), std::invalid_argument);
}

TEST_CASE("has_cycle") {
  CHECK(has_cycle(set4({E1, E2, E3, E5})));
  CHECK_FALSE(has_cycle(set4({E1, E2, E3})));
  CHECK_FALSE(has_cycle(set4({E3, E4})));
  CHECK_THROWS_AS(has_cycle(set4({E4, S4({{1, 8}, {5, 8}})})), std::invalid_argument);
}

TEST_CASE("sum_multiplicities and is_maximal") {
  CHECK(sum_multiplicities(set4({E1, E2, E3})) == 3);
  CHECK(sum_multiplicities(set4({E3, E4})) == 2);
  CHECK(sum_multiplicities(set4({})) == 0);
  CHECK(is_maximal(set4({E1, E2, E3})));
  CHECK_FALSE(is_maximal(set4({E3, E4})));
  CHECK_FALSE(is_maximal(set4({E1, E2, E3, E5})));
  for (long d = 2; d <= 7; ++d) {
    std::vector<Angle> fibre;
    for (long k = 0; k < d; ++k) fibre.emplace_back(k, d);
    CHECK(is_maximal(StarSet{d, {Star(d, fibre)}}));
  }
}

TEST_CASE("bruteforce extension search") {
  CHECK(check_maximal_bruteforce(set4({E1, E2, E3}), 2));
  CHECK_FALSE(check_maximal_bruteforce(set4({E3, E4}), 2));
  auto w = find_extension(set4({E3, E4}), 2);
  REQUIRE(w.has_value());
  StarSet grown = set4({E3, E4, *w});
  CHECK(pairwise_disjoint(grown));
  CHECK_FALSE(has_cycle(grown));
  // The witness named in the example works as well.
  StarSet named = set4({E3, E4, S4({{1, 8}, {3, 8}})});
  CHECK(pairwise_disjoint(named));
  CHECK_FALSE(has_cycle(named));
  CHECK_FALSE(check_maximal_bruteforce(StarSet{2, {}}, 2));
  CHECK_THROWS_AS(check_maximal_bruteforce(set4({E1, E2, E3, E5}), 1), std::invalid_argument);
}

TEST_CASE("quotient") {
  Quotient q = quotient(set4({E1, E2, E3}), E1, Angle(1, 4), Angle(0, 1));
  CHECK(q.ell == 3);
  REQUIRE(q.stars.stars.size() == 2);
  // (x - 1/4) * 4/3 applied by hand.
  CHECK(q.stars.stars[0] == star_new(3, {Angle(0, 1), Angle(1, 3)}));
  CHECK(q.stars.stars[1] == star_new(3, {Angle(1, 3), Angle(2, 3)}));
  CHECK(is_maximal(q.stars));

  const Star half = star_new(2, {Angle(0, 1), Angle(1, 2)});
  CHECK_THROWS_AS(quotient(StarSet{2, {half}}, half, Angle(0, 1), Angle(1, 2)), DegenerateArcError);

  const Star pivot6 = star_new(6, {Angle(0, 1), Angle(1, 2)});
  const Star straddle = star_new(6, {Angle(1, 3), Angle(2, 3)});
  CHECK_THROWS_AS(quotient(StarSet{6, {pivot6, straddle}}, pivot6, Angle(0, 1), Angle(1, 2)),
                  std::invalid_argument);

  const Star fibre = star_new(4, {Angle(0, 1), Angle(1, 4), Angle(1, 2), Angle(3, 4)});
  CHECK_THROWS_AS(quotient(StarSet{4, {fibre}}, fibre, Angle(0, 1), Angle(1, 2)), std::invalid_argument);
}

TEST_CASE("grid_stars count") {
  for (long d = 2; d <= 8; ++d) CHECK(grid_stars(d).size() == (std::size_t{1} << d) - d - 1);
}

TEST_CASE("points of a star share one image") {
  for (long d = 2; d <= 6; ++d)
    for (const Star& s : grid_stars(d))
      for (const Angle& x : s.points()) CHECK(md_apply(x, d) == md_apply(s.points().front(), d));
}

TEST_CASE("disjoint is symmetric") {
  for (long d = 2; d <= 6; ++d) {
    auto all = grid_stars(d);
    for (const Star& a : all)
      for (const Star& b : all) REQUIRE(disjoint(a, b) == disjoint(b, a));
  }
  std::mt19937 rng(3);
  for (int i = 0; i < 3000; ++i) {
    const long d = std::uniform_int_distribution<long>(2, 6)(rng);
    auto pick = [&] {
      const long q = 2 * d;
      const long base = std::uniform_int_distribution<long>(0, q - 1)(rng);
      const long step = 2 * std::uniform_int_distribution<long>(1, d - 1)(rng);
      return Star(d, {Angle(base, q), Angle(base + step, q)});
    };
    Star a = pick(), b = pick();
    REQUIRE(disjoint(a, b) == disjoint(b, a));
  }
}

TEST_CASE("multiplicity count agrees with extension search for small d") {
  for (long d = 2; d <= 4; ++d)
    for (const StarSet& s : enumerate_admissible_grid_sets(d))
      for (unsigned r = 1; r <= 2; ++r) REQUIRE(is_maximal(s) == check_maximal_bruteforce(s, r));
}

TEST_CASE("quotients of maximal sets are maximal") {
  for (long d = 2; d <= 6; ++d) {
    for (const StarSet& s : enumerate_admissible_grid_sets(d)) {
      if (!is_maximal(s)) continue;
      for (const Star& pivot : s.stars) {
        const auto& p = pivot.points();
        for (std::size_t i = 0; i < p.size(); ++i) {
          const Angle& a = p[i];
          const Angle& b = p[(i + 1) % p.size()];
          mpq_class len = arc_length(a, b);
          if (len == 0) len = 1;
          mpq_class ell = len * d;
          ell.canonicalize();
          if (ell < 2) {
            CHECK_THROWS_AS(quotient(s, pivot, a, b), DegenerateArcError);
            continue;
          }
          Quotient q = quotient(s, pivot, a, b);
          CHECK(mpq_class(q.ell) == ell);
          INFO("d=" << d);
          CHECK(is_maximal(q.stars));
        }
      }
    }
  }
}

}
