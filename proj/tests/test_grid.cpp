#include <doctest.h>

#include <future>
#include <random>
#include <stdexcept>
#include <vector>

#include "cantor/constructions.hpp"
#include "cantor/grid.hpp"
#include "helpers.hpp"

using namespace cantor;
namespace ct = cantor::testing;

namespace {

const GridSquare kUnitRoot{0, 0, 1};

CoverageCount quadrant_count(const CoverSpec& spec, int digit, int level) {
  const GridSquare child = square_for_address(spec.root, Address{{static_cast<uint8_t>(digit)}});
  return count_coverage(child, spec.region, level - 1);
}

}  // namespace

TEST_CASE("addressing follows the corner maps") {
  CHECK(square_for_address(kUnitRoot, Address{}).side == Rational(1));

  const GridSquare a3 = square_for_address(kUnitRoot, Address{{3}});
  CHECK(a3.x0 == Rational(2, 3));
  CHECK(a3.y0 == Rational(2, 3));
  CHECK(a3.side == Rational(1, 3));

  const GridSquare a03 = square_for_address(kUnitRoot, Address{{0, 3}});
  CHECK(a03.x0 == Rational(2, 9));
  CHECK(a03.y0 == Rational(2, 9));
  CHECK(a03.side == Rational(1, 9));

  CHECK(Address{{0, 3}}.level() == 3);
  CHECK_THROWS_AS(square_for_address(kUnitRoot, Address{{4}}), std::invalid_argument);
}

TEST_CASE("known coverage tallies") {
  const CoverSpec oct = build("octagon-fixed");
  const CoverageCount c = count_coverage(oct.root, oct.region, 4);
  CHECK(c.inside == 60);
  CHECK(c.straddle == 4);
  CHECK(c.outside == 0);
  CHECK(c.total == 64);
  CHECK(c.inside_fraction() == Rational(15, 16));

  // The circle family's disk alone: every level-2 square touches the border.
  const Region disk{{Disk{Point{Rational(1, 2), Rational(1, 2)}, Rational(145, 338)}}};
  const CoverageCount c2 = count_coverage(kUnitRoot, disk, 2);
  CHECK(c2.inside == 0);
  CHECK(c2.straddle == 4);
  CHECK(c2.outside == 0);

  const CoverSpec basic = build("basic-interval", {{"n", Rational(2)}});
  const CoverageCount cb = count_coverage(basic.root, basic.region, 2);
  CHECK(cb.inside == 1);
  CHECK(cb.straddle == 0);
  CHECK(cb.outside == 3);
}

TEST_CASE("frozen exhaustive tallies") {
  // Values recorded from independent exhaustive enumeration.
  const CoverSpec big = build("circle-big");
  const CoverageCount c4 = brute_force_coverage(big.root, big.region, 4);
  CHECK(c4.inside == 60);
  CHECK(c4.straddle == 4);
  CHECK(c4.outside == 0);

  const CoverSpec series = build("octagon-series", {{"k", Rational(3)}});
  const CoverageCount s4 = count_coverage(series.root, series.region, 4);
  CHECK(s4.inside == 52);
  CHECK(s4.straddle == 8);
  CHECK(s4.outside == 4);

  const CoverSpec corr = build("correction-region");
  const CoverageCount c8 = count_coverage(corr.root, corr.region, 8);
  CHECK(c8.inside == 15388);
  CHECK(c8.straddle == 12);
  CHECK(c8.outside == 984);
}

TEST_CASE("pruned count equals exhaustive enumeration") {
  for (const std::string& name : catalog()) {
    const CoverSpec spec = build(name);
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      CHECK(count_coverage(spec.root, spec.region, n) ==
            brute_force_coverage(spec.root, spec.region, n));
    }
  }

  // and on irregular off-catalog regions
  std::mt19937_64 rng(0x5eed0005);
  for (int i = 0; i < 8; ++i) {
    Region region{unit_square_halfplanes()};
    region.primitives.push_back(
        Disk{ct::sample_point(kUnitRoot, rng), ct::small_rational(rng, 40, 40)});
    region.primitives.push_back(
        HalfPlane{ct::small_rational(rng), ct::small_rational(rng), ct::small_rational(rng)});
    for (int n = 1; n <= 4; ++n)
      CHECK(count_coverage(kUnitRoot, region, n) == brute_force_coverage(kUnitRoot, region, n));
  }
}

TEST_CASE("conservation and monotone certified fraction") {
  const CoverSpec spec = build("circle-series");
  Rational last(0);
  for (int n = 1; n <= 8; ++n) {
    const CoverageCount c = count_coverage(spec.root, spec.region, n);
    CHECK(c.inside + c.straddle + c.outside == c.total);
    const Rational frac = c.inside_fraction();
    CHECK(frac >= last);
    last = frac;
  }
}

TEST_CASE("dihedral-symmetric regions give quadrant-balanced tallies") {
  for (const char* name :
       {"octagon-fixed", "octagon-series", "circle-big", "circle-series", "correction-region"}) {
    const CoverSpec spec = build(name);
    const int level = 6;
    const CoverageCount whole = count_coverage(spec.root, spec.region, level);
    CAPTURE(name);
    CHECK(whole.straddle % 4 == 0);
    CHECK(whole.outside % 4 == 0);
    const CoverageCount q0 = quadrant_count(spec, 0, level);
    for (int d = 1; d < 4; ++d) {
      const CoverageCount qd = quadrant_count(spec, d, level);
      CHECK(q0.inside == qd.inside);
      CHECK(q0.straddle == qd.straddle);
      CHECK(q0.outside == qd.outside);
    }
    CHECK(q0.inside * 4 == whole.inside);
  }
}

TEST_CASE("parallel partition reproduces the sequential count") {
  const CoverSpec spec = build("circle-series");
  CountOptions parallel;
  parallel.parallel = true;
  for (int n : {5, 8}) {
    CHECK(count_coverage(spec.root, spec.region, n, parallel) ==
          count_coverage(spec.root, spec.region, n));
  }
}

TEST_CASE("shared regions tolerate concurrent callers") {
  const CoverSpec spec = build("circle-series");
  const CoverageCount expect = count_coverage(spec.root, spec.region, 7);
  std::vector<std::future<CoverageCount>> jobs;
  for (int i = 0; i < 8; ++i) {
    jobs.push_back(std::async(std::launch::async, [&spec] {
      CountOptions options;
      options.parallel = true;
      return count_coverage(spec.root, spec.region, 7, options);
    }));
  }
  for (auto& job : jobs) CHECK(job.get() == expect);
}

TEST_CASE("level bounds are enforced") {
  const CoverSpec spec = build("octagon-fixed");
  CHECK_THROWS_AS(count_coverage(spec.root, spec.region, 0), std::invalid_argument);
  CHECK_THROWS_AS(count_coverage(spec.root, spec.region, 15), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_coverage(spec.root, spec.region, 9), std::invalid_argument);
  CHECK_NOTHROW(brute_force_coverage(spec.root, spec.region, 8, 8));
  // raising the cap admits deeper levels (basic-interval prunes instantly)
  const CoverSpec basic = build("basic-interval", {{"n", Rational(2)}});
  CountOptions wide;
  wide.max_level = 15;
  const CoverageCount deep = count_coverage(basic.root, basic.region, 15, wide);
  CHECK(deep.inside == int_pow(4, 13));
}
