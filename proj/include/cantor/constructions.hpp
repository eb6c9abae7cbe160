#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cantor/bounds.hpp"

namespace cantor {

using Params = std::map<std::string, Rational>;

// One cover-set construction, normalized to the unit root square: the region,
// its analytic diameter, and assorted exact parameters.
struct CoverSpec {
  std::string name;
  GridSquare root;  // always (0, 0, 1) for catalog entries
  Region region;
  DiameterValue diameter;
  int recommended_level = 6;
  Params params;
};

// Recorded reference tally for a construction: the coverage fraction and
// diameter it was derived from, plus the bound as originally printed (six
// decimals). These are stored verbatim, never recomputed from geometry.
struct Fixture {
  std::string name;
  Rational fraction;
  DiameterValue diameter;
  double expected_bound = 0.0;
};

std::vector<std::string> catalog();

// Builds a catalog construction. Parameters: basic-interval takes n >= 1
// (default 2); octagon-series takes integer k >= 2 (default 3).
CoverSpec build(const std::string& name, const Params& params = {});

Fixture reference_fixture(const std::string& name, const Params& params = {});

// Exact partial sum 1 - 4 * sum_{i=1..terms} 2^(i-1)/4^(k*i); converges to
// (4^k - 6)/(4^k - 2) from above as terms grows.
Rational series_fraction_oracle(int k, int terms);

// Closed form of the limit above.
Rational series_fraction_limit(int k);

// The four half-planes of the unit root square.
std::vector<Primitive> unit_square_halfplanes();

// Loads a custom cover spec from its JSON document form; throws
// std::invalid_argument on schema violations.
CoverSpec load_cover_spec_json(const std::string& text);
CoverSpec load_cover_spec_file(const std::string& path);

}  // namespace cantor
