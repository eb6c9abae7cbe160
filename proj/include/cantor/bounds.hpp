#pragma once

#include <optional>
#include <string>
#include <variant>

#include "cantor/bigfloat.hpp"
#include "cantor/geometry.hpp"
#include "cantor/grid.hpp"

namespace cantor {

// Diameter known in closed form: scale * sqrt(radicand), both exact.
struct SqrtDiameter {
  Rational scale;
  Rational radicand;
};

// Diameter known only through a proven enclosure; hi is a certified upper
// bound of the true value.
struct IntervalDiameter {
  BigFloat lo, hi;
};

using DiameterValue = std::variant<SqrtDiameter, IntervalDiameter>;

// Canonical closed form: pulls square factors out of the radicand, e.g.
// 2*sqrt(290/676) -> sqrt(290)/13.
SqrtDiameter simplified_sqrt(const Rational& scale, const Rational& radicand);

Enclosure diameter_enclosure(const DiameterValue& d);
// Exact squared value; only available for the closed form.
Rational sqrt_diameter_squared(const SqrtDiameter& d);
// Multiply a diameter by an exact positive factor (closed form stays exact).
DiameterValue scale_diameter(const DiameterValue& d, const Rational& factor);
std::string diameter_str(const DiameterValue& d);

struct CertifiedProvenance {
  CoverageCount coverage;
};
struct FixtureProvenance {
  std::string name;
};
using Provenance = std::variant<CertifiedProvenance, FixtureProvenance>;

// A value proven to be >= the quantity it bounds. `value` is the raw upper
// endpoint of the certified enclosure; published figures round it further
// toward +inf at the 9th decimal.
struct UpperBound {
  BigFloat value;
  Provenance provenance = FixtureProvenance{"direct-evaluation"};

  BigFloat published() const { return value.ceil_at_decimal(9); }
  std::string decimal(int digits = 9) const { return value.decimal_fixed(digits, MPFR_RNDU); }
};

// Solves branch_count * ratio^s = 1. Detects exact integer solutions;
// otherwise returns a certified enclosure of ln(branch_count)/ln(1/ratio).
Enclosure hausdorff_dimension(int branch_count, const Rational& contraction_ratio);

// Cached dimension of the planar corner-IFS dust: log_3 4.
const Enclosure& corner_dust_dimension();

// Certified upper bound of base^exponent (for enclosed bases, of hi^exponent).
UpperBound pow_upper(const DiameterValue& base, const Enclosure& exponent,
                     Provenance provenance = FixtureProvenance{"direct-evaluation"});

// diameter^s / coverage_fraction, every step rounded toward +inf.
UpperBound partial_estimation_bound(const Rational& coverage_fraction,
                                    const DiameterValue& diameter, const Enclosure& s,
                                    Provenance provenance = FixtureProvenance{"direct-evaluation"});

// The fraction-1 specialization: diameter^s alone.
UpperBound trivial_diameter_bound(const DiameterValue& diameter, const Enclosure& s,
                                  Provenance provenance = FixtureProvenance{"direct-evaluation"});

struct DiameterReport {
  bool pass = false;
  bool distance_ok = false;
  bool area_ok = false;
  // Largest pairwise distance among kept boundary samples (upper-rounded),
  // with the pair that attains it.
  BigFloat max_sampled_distance;
  Point max_pair_a, max_pair_b;
  // Certified upper bound of the region area, and the isoperimetric
  // allowance pi*(claimed/2)^2*(1+1e-3) it must stay below.
  BigFloat area_estimate;
  BigFloat area_allowance;
  bool exact_vertex_maximum = false;  // polygon regions: max taken over exact vertices
  int sample_count = 0;
  std::optional<std::string> diagnostic;
};

// Checks a claimed diameter against the region: boundary samples (exact
// rational points, filtered by exact membership) must stay within
// claimed*(1+1e-9), and a certified area upper bound must respect the
// isoperimetric inequality for that diameter. A sampling check, not a proof;
// for pure polygons the exact vertex-pair maximum is used instead.
DiameterReport verify_diameter(const Region& region, const DiameterValue& claimed,
                               int boundary_samples);

}  // namespace cantor
