#include "cantor/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cantor {

namespace {

const Enclosure& log3() {
  static const Enclosure v = Enclosure::log(Enclosure::from_integer(3));
  return v;
}

const Enclosure& log4() {
  static const Enclosure v = Enclosure::log(Enclosure::from_integer(4));
  return v;
}

Enclosure exp_scaled(const Enclosure& log_base, double k) {
  return Enclosure::exp(log_base * Enclosure::point(BigFloat(k)));
}

}  // namespace

Enclosure f_octagon_series(double k, const Enclosure& s) {
  if (!(k >= 2.0))
    throw std::invalid_argument("f_octagon_series: k must be >= 2 (below that the corner cut "
                                "2/(3^k - 1) exceeds the feasible quarter side, and the fraction "
                                "term has a pole near k ~ 1.29)");
  const Enclosure three_k = exp_scaled(log3(), k);
  const Enclosure four_k = exp_scaled(log4(), k);
  const Enclosure two(BigFloat(2.0), BigFloat(2.0));
  // diameter = sqrt(2*3^(2k) - 12*3^k + 26) / (3^k - 1)
  const Enclosure radicand = two * three_k * three_k -
                             Enclosure::from_integer(12) * three_k + Enclosure::from_integer(26);
  const Enclosure diam = Enclosure::sqrt(radicand) / (three_k - Enclosure::from_integer(1));
  const Enclosure power = Enclosure::exp(s * Enclosure::log(diam));
  // reciprocal limiting fraction = (4^k - 2)/(4^k - 6)
  return power * (four_k - Enclosure::from_integer(2)) / (four_k - Enclosure::from_integer(6));
}

ObjectiveResult golden_section_min(const std::function<Enclosure(double)>& f, double lo, double hi,
                                   double tol) {
  if (!(lo < hi)) throw std::invalid_argument("golden_section_min: need lo < hi");
  if (!(tol >= 1e-12)) throw std::invalid_argument("golden_section_min: tol must be >= 1e-12");

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  ObjectiveResult result;

  const Enclosure f_lo = f(lo);
  const Enclosure f_hi = f(hi);
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  Enclosure f1 = f(x1);
  Enclosure f2 = f(x2);

  auto mid_less = [](const Enclosure& u, const Enclosure& v) { return u.mid() < v.mid(); };

  bool unimodal = true;
  while (b - a > tol) {
    // In a unimodal bracket at least one interior value sits at or below both
    // ends; if both interior values exceed both ends the shape is not
    // unimodal.
    const Enclosure& best_inner = mid_less(f1, f2) ? f1 : f2;
    if (best_inner.mid() > f_lo.mid() && best_inner.mid() > f_hi.mid()) unimodal = false;
    if (mid_less(f1, f2)) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }

  result.k = (a + b) / 2.0;
  result.value = f(result.k);
  if (!unimodal)
    result.diagnostic = "objective did not look unimodal on the bracket; minimum is local only";
  return result;
}

ObjectiveResult minimize_octagon_series(double lo, double hi, double tol, const Enclosure& s) {
  if (!(lo >= 2.0)) throw std::invalid_argument("minimize_octagon_series: bracket must start >= 2");
  auto f = [&s](double k) { return f_octagon_series(k, s); };
  ObjectiveResult result = golden_section_min(f, lo, hi, tol);

  const double h = 1e-4;
  if (result.k - h >= 2.0) {
    const Enclosure second =
        (f(result.k + h) - result.value - result.value + f(result.k - h)).div_rational(
            Rational(mpq_class(h * h)));
    result.second_derivative = second.mid().to_double();
  }
  return result;
}

IntegerArgmin best_integer_k(int k_min, int k_max, const Enclosure& s) {
  if (k_min < 2 || k_min > k_max)
    throw std::invalid_argument("best_integer_k: need 2 <= k_min <= k_max");
  IntegerArgmin best{k_min, f_octagon_series(k_min, s)};
  for (int k = k_min + 1; k <= k_max; ++k) {
    Enclosure v = f_octagon_series(k, s);
    if (v.certainly_less(best.bound)) best = IntegerArgmin{k, std::move(v)};
  }
  return best;
}

std::vector<SweepRow> sweep_disk_radius(const Point& center, const std::vector<Rational>& r2_values,
                                        int level, const Enclosure& s,
                                        const CountOptions& options) {
  if (r2_values.empty()) throw std::invalid_argument("sweep_disk_radius: no r2 values");
  const GridSquare root{0, 0, 1};

  std::vector<SweepRow> rows;
  rows.reserve(r2_values.size());
  for (const Rational& r2 : r2_values) {
    if (r2.sign() <= 0) throw std::invalid_argument("sweep_disk_radius: r2 must be positive");
    Region region{unit_square_halfplanes()};
    region.primitives.push_back(Disk{center, r2});

    SweepRow row;
    row.r2 = r2;
    row.coverage = count_coverage(root, region, level, options);
    // Diameter: the disk's own diameter unless it exceeds the root diagonal,
    // in which case the diagonal is the sound cap. 4*r2 vs 2, exactly.
    row.diameter = (Rational(4) * r2 <= Rational(2)) ? simplified_sqrt(Rational(2), r2)
                                                     : simplified_sqrt(Rational(1), Rational(2));
    if (row.coverage.inside > 0) {
      row.bound = partial_estimation_bound(row.coverage.inside_fraction(), row.diameter, s,
                                           CertifiedProvenance{row.coverage});
    }
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.bound.has_value() != b.bound.has_value()) return a.bound.has_value();
    if (a.bound && b.bound) {
      if (a.bound->value < b.bound->value) return true;
      if (b.bound->value < a.bound->value) return false;
    }
    return a.r2 < b.r2;
  });
  return rows;
}

}  // namespace cantor
