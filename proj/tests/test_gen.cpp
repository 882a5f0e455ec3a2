#include "doctest.h"

#include <algorithm>
#include <vector>

#include "cct/census.hpp"
#include "cct/errors.hpp"
#include "cct/generators.hpp"
#include "cct/linprog.hpp"
#include "support/testutil.hpp"

using namespace cct;
using cct::test::pt;
using cct::test::q;

TEST_SUITE_BEGIN("gen");

namespace {

Rational max_norm_distance(const Point& a, const Point& b) {
  Rational best(0);
  for (std::size_t c = 0; c < a.size(); ++c) {
    Rational diff = a[c] - b[c];
    if (diff < 0) diff = -diff;
    if (diff > best) best = diff;
  }
  return best;
}

}  // namespace

TEST_CASE("cluster generator keeps each colour near its simplex vertex") {
  Configuration config = gen_simplex_cluster(2, 3, q("1/100"), 7);
  CHECK(config.total_points() == 9);
  REQUIRE(config.colours.size() == 3);
  for (int colour = 0; colour <= 2; ++colour) {
    const Point vertex = simplex_vertex(2, colour);
    CHECK(config.colours[colour].size() == 3);
    for (const auto& p : config.colours[colour])
      CHECK(max_norm_distance(p, vertex) < q("1/100"));
  }
  CHECK(is_general_position(config).ok);
}

TEST_CASE("cluster generator at one point per colour gives a containing simplex") {
  Configuration config = gen_simplex_cluster(3, 1, q("1/100"), 7);
  CHECK(config.total_points() == 4);
  std::vector<Point> system;
  for (const auto& colour : config.colours) system.push_back(colour[0]);
  CHECK(point_in_hull(system, origin_point(3)).has_value());
}

TEST_CASE("cluster generator rejects radii reaching the origin") {
  CHECK_THROWS_AS(gen_simplex_cluster(2, 3, q("10"), 7), InputError);
  CHECK_THROWS_AS(gen_simplex_cluster(2, 3, q("1"), 7), InputError);
  CHECK_THROWS_AS(gen_simplex_cluster(2, 3, q("0"), 7), InputError);
  CHECK_THROWS_AS(gen_simplex_cluster(0, 3, q("1/2"), 7), InputError);
}

TEST_CASE("cluster generator stays in general position at larger sizes") {
  CHECK(is_general_position(gen_simplex_cluster(3, 4, q("1/100"), 7)).ok);
}

TEST_CASE("barany generator puts the origin in every colour hull") {
  const Point zero2 = origin_point(2);
  Configuration config = gen_random_barany(2, 4, 13);
  for (const auto& colour : config.colours) {
    CHECK(colour.size() == 4);
    CHECK(point_in_hull(colour, zero2).has_value());
  }
  CHECK(is_general_position(config).ok);

  Configuration big = gen_random_barany(3, 5, 11);
  const Point zero3 = origin_point(3);
  for (const auto& colour : big.colours) CHECK(point_in_hull(colour, zero3).has_value());

  CHECK_THROWS_AS(gen_random_barany(2, 2, 13), InputError);
}

TEST_CASE("doubled generator flanks the origin with every colourful system") {
  DoubledConfig doubled = gen_doubled(1, 1);
  REQUIRE(doubled.colours.size() == 2);
  // two intervals around 0: all four colourful systems contain it
  const Point zero = origin_point(1);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      std::vector<Point> system = {doubled.colours[0][a], doubled.colours[1][b]};
      CHECK(point_in_hull(system, zero).has_value());
    }

  DoubledConfig plane = gen_doubled(2, 7);
  auto census = enumerate_containing(plane.as_configuration());
  CHECK(census.size() >= 2);
  CHECK(census.size() <= 8);
}

TEST_CASE("perturb repairs degenerate configurations without touching the input") {
  Configuration collinear;
  collinear.dimension = 2;
  collinear.colours = {{pt({"1", "0"}), pt({"2", "0"})}, {pt({"3", "0"})}, {pt({"4", "0"})}};
  REQUIRE_FALSE(is_general_position(collinear).ok);

  Configuration fixed = perturb(collinear, q("1/1000"), 3);
  CHECK(is_general_position(fixed).ok);
  CHECK(collinear.colours[0][0] == pt({"1", "0"}));  // input untouched
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < collinear.colours[c].size(); ++i)
      CHECK(max_norm_distance(collinear.colours[c][i], fixed.colours[c][i]) < q("1/1000"));

  CHECK_THROWS_AS(perturb(collinear, q("0"), 3), InputError);
}

TEST_CASE("generators are deterministic in their arguments") {
  CHECK(gen_simplex_cluster(2, 3, q("1/100"), 7).colours ==
        gen_simplex_cluster(2, 3, q("1/100"), 7).colours);
  CHECK(gen_random_barany(3, 4, 5).colours == gen_random_barany(3, 4, 5).colours);
  CHECK(gen_doubled(2, 9).colours == gen_doubled(2, 9).colours);
  CHECK(gen_simplex_cluster(2, 3, q("1/100"), 7).colours !=
        gen_simplex_cluster(2, 3, q("1/100"), 8).colours);

  Configuration base = gen_simplex_cluster(2, 2, q("1/4"), 21);
  CHECK(perturb(base, q("1/50"), 4).colours == perturb(base, q("1/50"), 4).colours);
}

TEST_SUITE_END();
