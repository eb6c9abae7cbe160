#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cantor/bounds.hpp"
#include "cantor/constructions.hpp"

namespace cantor {

// The octagon-family objective: bound obtained from the family's limiting
// coverage fraction and diameter at real parameter k >= 2. Certified
// enclosure; for integer k it agrees with partial_estimation_bound applied to
// the corresponding construction.
Enclosure f_octagon_series(double k, const Enclosure& s);

struct ObjectiveResult {
  double k = 0.0;
  Enclosure value;
  std::optional<double> second_derivative;  // central difference, step 1e-4
  std::optional<std::string> diagnostic;    // set when unimodality looked violated
};

// Golden-section minimization of an arbitrary enclosure-valued objective.
// Comparisons use interval midpoints; a diagnostic is recorded (not thrown)
// when the interior values stop behaving unimodally.
ObjectiveResult golden_section_min(const std::function<Enclosure(double)>& f, double lo, double hi,
                                   double tol);

// Golden-section search on f_octagon_series over [lo, hi] plus a
// central-difference second derivative at the minimizer.
ObjectiveResult minimize_octagon_series(double lo, double hi, double tol, const Enclosure& s);

struct IntegerArgmin {
  int k = 0;
  Enclosure bound;
};

// Argmin of f_octagon_series over integers in [k_min, k_max]; ties resolve to
// the smaller k.
IntegerArgmin best_integer_k(int k_min, int k_max, const Enclosure& s);

struct SweepRow {
  Rational r2;
  CoverageCount coverage;
  DiameterValue diameter;                // min(2*sqrt(r2), root diagonal), exact
  std::optional<UpperBound> bound;       // absent when no square is certified inside
};

// For each radius-squared value: certified coverage of the unit square cut
// by the disk
// at the given level and the resulting bound. Rows sorted by bound ascending,
// unbounded rows last.
std::vector<SweepRow> sweep_disk_radius(const Point& center, const std::vector<Rational>& r2_values,
                                        int level, const Enclosure& s,
                                        const CountOptions& options = {});

}  // namespace cantor
