#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cantor/constructions.hpp"
#include "cantor/geometry.hpp"
#include "helpers.hpp"

using namespace cantor;
namespace ct = cantor::testing;

namespace {

Region octagon_fixed() { return build("octagon-fixed").region; }

}  // namespace

TEST_CASE("point membership") {
  const Region disk{{Disk{Point{Rational(1, 2), Rational(1, 2)}, Rational(145, 338)}}};
  CHECK(point_in_region(Point{Rational(1, 2), Rational(1, 2)}, disk));

  const Region neg{{HalfPlane{1, 1, -1}}};  // x + y <= -1
  CHECK_FALSE(point_in_region(Point{0, 0}, neg));

  const Region cut{{HalfPlane{-1, -1, Rational(-2, 27)}}};  // x + y >= 2/27
  CHECK(point_in_region(Point{Rational(1, 27), Rational(1, 27)}, cut));  // boundary, closed
}

TEST_CASE("square vs primitive") {
  CHECK(classify_square(GridSquare{0, 0, Rational(1, 3)}, Primitive{Disk{Point{0, 0}, 1}}) ==
        Classification::kInside);

  CHECK(classify_square(GridSquare{2, 2, 1},
                        Primitive{Disk{Point{Rational(1, 2), Rational(1, 2)},
                                       Rational(145, 338)}}) == Classification::kOutside);

  // One corner violates x + y >= 2/27, the far corner meets it with equality.
  CHECK(classify_square(GridSquare{0, 0, Rational(1, 27)},
                        Primitive{HalfPlane{-1, -1, Rational(-2, 27)}}) ==
        Classification::kStraddles);
}

TEST_CASE("square vs region") {
  const Region oct = octagon_fixed();
  CHECK(classify_square(GridSquare{Rational(2, 27), 0, Rational(1, 27)}, oct) ==
        Classification::kInside);
  CHECK(classify_square(GridSquare{0, 0, Rational(1, 27)}, oct) == Classification::kStraddles);

  const Region corner_square{{HalfPlane{1, 0, Rational(1, 3)}, HalfPlane{0, 1, Rational(1, 3)},
                              HalfPlane{-1, 0, 0}, HalfPlane{0, -1, 0}}};
  CHECK(classify_square(GridSquare{Rational(2, 3), 0, Rational(1, 3)}, corner_square) ==
        Classification::kOutside);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(classify_square(GridSquare{0, 0, 0}, octagon_fixed()), std::invalid_argument);
  CHECK_THROWS_AS(classify_square(GridSquare{0, 0, -1}, octagon_fixed()), std::invalid_argument);
  CHECK_THROWS_AS(point_in_region(Point{0, 0}, Region{}), std::invalid_argument);
  CHECK_THROWS_AS(
      classify_square(GridSquare{0, 0, 1}, Primitive{HalfPlane{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(classify_square(GridSquare{0, 0, 1}, Primitive{Disk{Point{0, 0}, 0}}),
                  std::invalid_argument);
}

TEST_CASE("inside and outside are sound under point sampling") {
  std::mt19937_64 rng(0x5eed0002);
  const Region oct = octagon_fixed();
  const Region disk{{Disk{Point{Rational(1, 2), Rational(1, 2)}, Rational(145, 338)}}};

  for (const Region& region : {oct, disk}) {
    int verified = 0;
    for (int trial = 0; trial < 300 && verified < 40; ++trial) {
      const Rational side(1, 1 + static_cast<long>(rng() % 81));
      const GridSquare sq{ct::unit_rational(rng), ct::unit_rational(rng), side};
      const Classification c = classify_square(sq, region);
      if (c == Classification::kStraddles) continue;
      ++verified;
      for (int i = 0; i < 1000; ++i) {
        const Point p = ct::sample_point(sq, rng);
        CHECK(point_in_region(p, region) == (c == Classification::kInside));
      }
    }
    CHECK(verified >= 40);  // the sampler must actually exercise both verdicts
  }
}

TEST_CASE("classification is scale invariant") {
  std::mt19937_64 rng(0x5eed0003);
  const Region oct = octagon_fixed();
  const Region circle = build("circle-series").region;
  const std::vector<Rational> factors = {Rational(1, 9), Rational(1), Rational(9),
                                         ct::small_rational(rng)};
  for (const Region& region : {oct, circle}) {
    for (int i = 0; i < 200; ++i) {
      const Rational side(1, 1 + static_cast<long>(rng() % 100));
      const GridSquare sq{ct::unit_rational(rng), ct::unit_rational(rng), side};
      const Classification base = classify_square(sq, region);
      for (const Rational& f : factors)
        CHECK(classify_square(ct::scale(sq, f), ct::scale(region, f)) == base);
    }
  }
}

TEST_CASE("classification commutes with the square's reflections") {
  std::mt19937_64 rng(0x5eed0004);
  const Region oct = octagon_fixed();
  const Region circle = build("circle-series").region;
  for (const Region& region : {oct, circle}) {
    for (int i = 0; i < 200; ++i) {
      const Rational side(1, 1 + static_cast<long>(rng() % 100));
      const GridSquare sq{ct::unit_rational(rng), ct::unit_rational(rng), side};
      const Classification base = classify_square(sq, region);
      CHECK(classify_square(ct::reflect_x(sq), ct::reflect_region<ct::reflect_x>(region)) == base);
      CHECK(classify_square(ct::reflect_y(sq), ct::reflect_region<ct::reflect_y>(region)) == base);
      CHECK(classify_square(ct::reflect_diag(sq), ct::reflect_region<ct::reflect_diag>(region)) ==
            base);
    }
  }
}

TEST_CASE("region straddle never claims containment") {
  // A square overlapping the region border must contain both a member and a
  // non-member point among dense corner probes.
  const Region oct = octagon_fixed();
  const GridSquare sq{0, 0, Rational(1, 27)};
  REQUIRE(classify_square(sq, oct) == Classification::kStraddles);
  CHECK(point_in_region(Point{Rational(1, 27), Rational(1, 27)}, oct));
  CHECK_FALSE(point_in_region(Point{0, 0}, oct));
}
