#include "cantor/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cantor {

namespace {

// Deterministic per-index jitter; no shared generator state, so sampling is
// reproducible under any thread partition.
uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0, 1) with a 2^-32 grid; exact as a rational.
Rational jitter01(uint64_t index, uint64_t salt) {
  const uint64_t h = splitmix64(index ^ (salt * 0x517cc1b727220a95ULL));
  return Rational(static_cast<long>(h >> 32), 1L << 32);
}

}  // namespace

SqrtDiameter simplified_sqrt(const Rational& scale, const Rational& radicand) {
  if (radicand.sign() < 0) throw std::invalid_argument("simplified_sqrt: negative radicand");
  if (radicand.is_zero() || scale.is_zero()) return SqrtDiameter{Rational(0), Rational(1)};

  // scale*sqrt(p/q) = (scale/q)*sqrt(p*q); then strip square factors of p*q.
  mpz_class m = radicand.num() * radicand.den();
  mpz_class root(1);
  mpz_class d(2), d2;
  while (true) {
    d2 = d * d;
    if (d2 > m || d > 100000) break;
    while (mpz_divisible_p(m.get_mpz_t(), d2.get_mpz_t())) {
      m /= d2;
      root *= d;
    }
    d += (d == 2) ? 1 : 2;
  }
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
    root *= s;
    m = 1;
  }
  return SqrtDiameter{scale * Rational(root, radicand.den()), Rational(m, mpz_class(1))};
}

Enclosure diameter_enclosure(const DiameterValue& d) {
  if (const auto* sq = std::get_if<SqrtDiameter>(&d)) {
    if (sq->radicand.sign() < 0) throw std::invalid_argument("diameter: negative radicand");
    if (sq->scale.sign() <= 0) throw std::invalid_argument("diameter: scale must be positive");
    return Enclosure::sqrt(Enclosure::from_rational(sq->radicand)).mul_rational(sq->scale);
  }
  const auto& iv = std::get<IntervalDiameter>(d);
  if (iv.lo.sign() <= 0 || iv.hi < iv.lo)
    throw std::invalid_argument("diameter: interval must satisfy 0 < lo <= hi");
  return Enclosure(iv.lo, iv.hi);
}

Rational sqrt_diameter_squared(const SqrtDiameter& d) { return d.scale.squared() * d.radicand; }

DiameterValue scale_diameter(const DiameterValue& d, const Rational& factor) {
  if (factor.sign() <= 0) throw std::invalid_argument("scale_diameter: factor must be positive");
  if (const auto* sq = std::get_if<SqrtDiameter>(&d))
    return SqrtDiameter{sq->scale * factor, sq->radicand};
  const auto& iv = std::get<IntervalDiameter>(d);
  const Enclosure scaled = Enclosure(iv.lo, iv.hi).mul_rational(factor);
  return IntervalDiameter{scaled.lo(), scaled.hi()};
}

std::string diameter_str(const DiameterValue& d) {
  if (const auto* sq = std::get_if<SqrtDiameter>(&d)) {
    if (sq->radicand == Rational(1)) return sq->scale.str();
    const std::string rad = "sqrt(" + sq->radicand.str() + ")";
    if (sq->scale == Rational(1)) return rad;
    if (sq->scale.num() == 1) return rad + "/" + sq->scale.den().get_str();
    return "(" + sq->scale.str() + ")*" + rad;
  }
  const auto& iv = std::get<IntervalDiameter>(d);
  return "[" + iv.lo.decimal_sig(17, MPFR_RNDD) + ", " + iv.hi.decimal_sig(17, MPFR_RNDU) + "]";
}

Enclosure hausdorff_dimension(int branch_count, const Rational& contraction_ratio) {
  if (branch_count < 1) throw std::invalid_argument("hausdorff_dimension: branch_count >= 1");
  if (contraction_ratio.sign() <= 0 || contraction_ratio >= Rational(1))
    throw std::invalid_argument("hausdorff_dimension: contraction ratio must lie in (0, 1)");

  // branch_count * ratio^s = 1 has an exact integer solution iff some
  // ratio^j equals 1/branch_count; detect it before going transcendental.
  const Rational target = Rational(1, branch_count);
  Rational p(1);
  for (int j = 0; j <= 128; ++j) {
    if (p == target) return Enclosure::from_integer(j);
    if (p < target) break;
    p *= contraction_ratio;
  }
  const Enclosure num = Enclosure::log(Enclosure::from_integer(branch_count));
  const Enclosure den = Enclosure::log(Enclosure::from_rational(contraction_ratio.reciprocal()));
  return num / den;
}

const Enclosure& corner_dust_dimension() {
  static const Enclosure s = hausdorff_dimension(4, Rational(1, 3));
  return s;
}

UpperBound pow_upper(const DiameterValue& base, const Enclosure& exponent, Provenance provenance) {
  const Enclosure b = diameter_enclosure(base);
  if (!b.strictly_positive()) throw std::invalid_argument("pow_upper: base must be positive");
  const Enclosure p = Enclosure::exp(exponent * Enclosure::log(b));
  return UpperBound{p.hi(), std::move(provenance)};
}

UpperBound partial_estimation_bound(const Rational& coverage_fraction,
                                    const DiameterValue& diameter, const Enclosure& s,
                                    Provenance provenance) {
  if (coverage_fraction.sign() <= 0 || coverage_fraction > Rational(1))
    throw std::invalid_argument("partial_estimation_bound: fraction must lie in (0, 1]");
  const UpperBound p = pow_upper(diameter, s);
  BigFloat v;
  mpfr_div_q(v.raw(), p.value.raw(), coverage_fraction.raw().get_mpq_t(), MPFR_RNDU);
  return UpperBound{std::move(v), std::move(provenance)};
}

UpperBound trivial_diameter_bound(const DiameterValue& diameter, const Enclosure& s,
                                  Provenance provenance) {
  return partial_estimation_bound(Rational(1), diameter, s, std::move(provenance));
}

// ---------------------------------------------------------------------------
// verify_diameter
// ---------------------------------------------------------------------------

namespace {

struct Box {
  Rational x0, y0, x1, y1;

  bool valid() const { return x0 <= x1 && y0 <= y1; }
  GridSquare as_square() const {
    const Rational w = x1 - x0;
    const Rational h = y1 - y0;
    return GridSquare{x0, y0, w >= h ? w : h};
  }
};

// Outer rational bounding box from axis-aligned half-planes and disk boxes.
// Diagonal half-planes only tighten the region further, so skipping them
// keeps the box a superset.
std::optional<Box> bounding_box(const Region& region) {
  std::optional<Rational> xlo, xhi, ylo, yhi;
  auto raise = [](std::optional<Rational>& v, const Rational& cand) {
    if (!v || cand > *v) v = cand;
  };
  auto lower = [](std::optional<Rational>& v, const Rational& cand) {
    if (!v || cand < *v) v = cand;
  };
  for (const Primitive& prim : region.primitives) {
    if (const auto* disk = std::get_if<Disk>(&prim)) {
      const Rational r_up =
          Enclosure::sqrt(Enclosure::from_rational(disk->r2)).hi().to_rational();
      raise(xlo, disk->center.x - r_up);
      lower(xhi, disk->center.x + r_up);
      raise(ylo, disk->center.y - r_up);
      lower(yhi, disk->center.y + r_up);
    } else {
      const auto& hp = std::get<HalfPlane>(prim);
      if (hp.b.is_zero()) {
        const Rational bound = hp.c / hp.a;
        if (hp.a.sign() > 0) lower(xhi, bound); else raise(xlo, bound);
      } else if (hp.a.is_zero()) {
        const Rational bound = hp.c / hp.b;
        if (hp.b.sign() > 0) lower(yhi, bound); else raise(ylo, bound);
      }
    }
  }
  if (!xlo || !xhi || !ylo || !yhi) return std::nullopt;
  return Box{*xlo, *ylo, *xhi, *yhi};
}

// Certified area upper bound by bisection: inside cells count fully, straddle
// cells count fully too (sound overestimate) and get refined until their
// total area is small or the depth cap is reached.
Rational area_upper_bound(const Region& region, const GridSquare& box) {
  Rational inside_area(0);
  std::vector<GridSquare> frontier{box};
  const Rational stop = box.side.squared() * Rational(1, 5000);
  for (int depth = 0; depth < 14 && !frontier.empty(); ++depth) {
    Rational frontier_area = frontier.empty() ? Rational(0)
                                              : frontier.front().side.squared() *
                                                    Rational(static_cast<long>(frontier.size()));
    if (depth > 0 && frontier_area <= stop) break;
    std::vector<GridSquare> next;
    next.reserve(frontier.size() * 2);
    for (const GridSquare& cell : frontier) {
      const Rational half = cell.side / 2;
      for (int cy = 0; cy < 2; ++cy) {
        for (int cx = 0; cx < 2; ++cx) {
          GridSquare child{cell.x0 + (cx ? half : Rational(0)),
                           cell.y0 + (cy ? half : Rational(0)), half};
          switch (classify_square(child, region)) {
            case Classification::kInside:
              inside_area += half.squared();
              break;
            case Classification::kOutside:
              break;
            case Classification::kStraddles:
              next.push_back(std::move(child));
              break;
          }
        }
      }
    }
    frontier = std::move(next);
    if (frontier.size() > 600000) break;  // safety valve; keeps the bound sound
  }
  Rational straddle_area(0);
  if (!frontier.empty())
    straddle_area = frontier.front().side.squared() * Rational(static_cast<long>(frontier.size()));
  return inside_area + straddle_area;
}

struct SamplePoint {
  Point p;
  double x, y;
};

// Pull a floating-point boundary point a hair toward a rational anchor known
// (or hoped) to lie inside, rationalize, and keep it only if the exact
// membership test passes.
std::optional<Point> snap_inward(double px, double py, const Point& anchor, const Region& region) {
  if (!std::isfinite(px) || !std::isfinite(py)) return std::nullopt;
  const Rational rx{mpq_class(px)};
  const Rational ry{mpq_class(py)};
  Rational eps(1, 1L << 30);
  for (int attempt = 0; attempt < 6; ++attempt) {
    const Rational f = Rational(1) - eps;
    Point q{anchor.x + (rx - anchor.x) * f, anchor.y + (ry - anchor.y) * f};
    if (point_in_region(q, region)) return q;
    eps *= Rational(32);
    if (eps >= Rational(1)) break;
  }
  return std::nullopt;
}

void push_sample(std::vector<SamplePoint>& out, Point p) {
  const double x = p.x.to_double();
  const double y = p.y.to_double();
  out.push_back(SamplePoint{std::move(p), x, y});
}

void sample_halfplane_boundary(const HalfPlane& hp, const Region& region, const Box& box,
                               int count, uint64_t salt, std::vector<SamplePoint>& out) {
  // Rational parameterization p0 + t*(b, -a), clipped to the box.
  Point p0;
  if (!hp.b.is_zero()) {
    p0 = Point{Rational(0), hp.c / hp.b};
  } else {
    p0 = Point{hp.c / hp.a, Rational(0)};
  }
  const Rational vx = hp.b;
  const Rational vy = -hp.a;

  std::optional<Rational> tlo, thi;
  auto clip_axis = [&](const Rational& origin, const Rational& dir, const Rational& lo,
                       const Rational& hi) -> bool {
    if (dir.is_zero()) return origin >= lo && origin <= hi;
    Rational t0 = (lo - origin) / dir;
    Rational t1 = (hi - origin) / dir;
    if (dir.sign() < 0) std::swap(t0, t1);
    if (!tlo || t0 > *tlo) tlo = t0;
    if (!thi || t1 < *thi) thi = t1;
    return true;
  };
  if (!clip_axis(p0.x, vx, box.x0, box.x1)) return;
  if (!clip_axis(p0.y, vy, box.y0, box.y1)) return;
  if (!tlo || !thi || *tlo > *thi) return;

  const Rational span = *thi - *tlo;
  for (int i = 0; i < count; ++i) {
    const Rational u = (Rational(2L * i + 1, 2) + (jitter01(i, salt) - Rational(1, 2))) / count;
    const Rational t = *tlo + span * u;
    Point p{p0.x + vx * t, p0.y + vy * t};  // exactly on the boundary line
    if (point_in_region(p, region)) push_sample(out, std::move(p));
  }
}

void sample_disk_boundary(const Disk& disk, const Region& region, int count, uint64_t salt,
                          std::vector<SamplePoint>& out) {
  const double cx = disk.center.x.to_double();
  const double cy = disk.center.y.to_double();
  const double r = std::sqrt(disk.r2.to_double());
  for (int i = 0; i < count; ++i) {
    const double theta =
        2.0 * M_PI * (i + 0.5 * jitter01(i, salt).to_double()) / static_cast<double>(count);
    auto q = snap_inward(cx + r * std::cos(theta), cy + r * std::sin(theta), disk.center, region);
    if (q) push_sample(out, std::move(*q));
  }
}

// Exact intersection of two boundary lines; a region vertex if it passes the
// membership test.
std::optional<Point> line_pair_vertex(const HalfPlane& h1, const HalfPlane& h2) {
  const Rational det = h1.a * h2.b - h2.a * h1.b;
  if (det.is_zero()) return std::nullopt;
  return Point{(h1.c * h2.b - h2.c * h1.b) / det, (h1.a * h2.c - h2.a * h1.c) / det};
}

void circle_line_specials(const Disk& disk, const HalfPlane& hp, const Region& region,
                          std::vector<SamplePoint>& out) {
  const double a = hp.a.to_double(), b = hp.b.to_double(), c = hp.c.to_double();
  const double cx = disk.center.x.to_double(), cy = disk.center.y.to_double();
  const double r = std::sqrt(disk.r2.to_double());
  const double norm = std::hypot(a, b);
  if (norm == 0.0) return;
  const double h = (a * cx + b * cy - c) / norm;
  const double rest = r * r - h * h;
  if (rest < 0) return;
  const double t = std::sqrt(rest);
  const double fx = cx - h * a / norm, fy = cy - h * b / norm;
  const double dx = b / norm, dy = -a / norm;
  for (double sgn : {1.0, -1.0}) {
    auto q = snap_inward(fx + sgn * t * dx, fy + sgn * t * dy, disk.center, region);
    if (q) push_sample(out, std::move(*q));
  }
}

void circle_circle_specials(const Disk& d1, const Disk& d2, const Region& region,
                            std::vector<SamplePoint>& out) {
  const double x1 = d1.center.x.to_double(), y1 = d1.center.y.to_double();
  const double x2 = d2.center.x.to_double(), y2 = d2.center.y.to_double();
  const double r1 = std::sqrt(d1.r2.to_double()), r2 = std::sqrt(d2.r2.to_double());
  const double dist = std::hypot(x2 - x1, y2 - y1);
  if (dist == 0.0) return;
  const double l = (r1 * r1 - r2 * r2 + dist * dist) / (2 * dist);
  const double h2 = r1 * r1 - l * l;
  if (h2 < 0) return;
  const double h = std::sqrt(h2);
  const double ux = (x2 - x1) / dist, uy = (y2 - y1) / dist;
  const Point mid{(d1.center.x + d2.center.x) / Rational(2),
                  (d1.center.y + d2.center.y) / Rational(2)};
  for (double sgn : {1.0, -1.0}) {
    auto q = snap_inward(x1 + l * ux - sgn * h * uy, y1 + l * uy + sgn * h * ux, mid, region);
    if (q) push_sample(out, std::move(*q));
  }
}

}  // namespace

DiameterReport verify_diameter(const Region& region, const DiameterValue& claimed,
                               int boundary_samples) {
  validate(region);
  if (boundary_samples < 64)
    throw std::invalid_argument("verify_diameter: boundary_samples must be >= 64");
  const Enclosure claimed_enc = diameter_enclosure(claimed);  // validates positivity

  DiameterReport report;

  const std::optional<Box> box = bounding_box(region);
  if (!box) {
    report.diagnostic = "region has no finite bounding box; cannot verify a diameter";
    return report;
  }
  if (!box->valid()) {
    report.diagnostic = "region is empty (contradictory axis bounds)";
    return report;
  }

  // Certified area upper bound, then the isoperimetric allowance.
  const Rational area = area_upper_bound(region, box->as_square());
  report.area_estimate = BigFloat::from_rational(area, MPFR_RNDU);
  {
    BigFloat pi_lo;
    mpfr_const_pi(pi_lo.raw(), MPFR_RNDD);
    BigFloat half_d = claimed_enc.lo();
    mpfr_div_2ui(half_d.raw(), half_d.raw(), 1, MPFR_RNDD);
    BigFloat allowance;
    mpfr_mul(allowance.raw(), half_d.raw(), half_d.raw(), MPFR_RNDD);
    mpfr_mul(allowance.raw(), allowance.raw(), pi_lo.raw(), MPFR_RNDD);
    mpfr_mul_q(allowance.raw(), allowance.raw(), Rational(1001, 1000).raw().get_mpq_t(),
               MPFR_RNDD);
    report.area_allowance = allowance;
  }

  // Boundary samples: per-primitive boundary curves, exact membership filter.
  std::vector<SamplePoint> samples;
  const int prim_count = static_cast<int>(region.primitives.size());
  const int per_prim = (boundary_samples + prim_count - 1) / prim_count;
  bool all_halfplanes = true;
  for (size_t i = 0; i < region.primitives.size(); ++i) {
    const Primitive& prim = region.primitives[i];
    if (const auto* disk = std::get_if<Disk>(&prim)) {
      all_halfplanes = false;
      sample_disk_boundary(*disk, region, per_prim, i, samples);
    } else {
      sample_halfplane_boundary(std::get<HalfPlane>(prim), region, *box, per_prim, i, samples);
    }
  }
  // Boundary-curve crossings: the candidates where the diameter is attained.
  std::vector<Point> exact_vertices;
  for (size_t i = 0; i < region.primitives.size(); ++i) {
    for (size_t j = i + 1; j < region.primitives.size(); ++j) {
      const auto* h1 = std::get_if<HalfPlane>(&region.primitives[i]);
      const auto* h2 = std::get_if<HalfPlane>(&region.primitives[j]);
      const auto* d1 = std::get_if<Disk>(&region.primitives[i]);
      const auto* d2 = std::get_if<Disk>(&region.primitives[j]);
      if (h1 && h2) {
        if (auto v = line_pair_vertex(*h1, *h2); v && point_in_region(*v, region)) {
          exact_vertices.push_back(*v);
          push_sample(samples, *v);
        }
      } else if (d1 && d2) {
        circle_circle_specials(*d1, *d2, region, samples);
      } else {
        circle_line_specials(d1 ? *d1 : *d2, h1 ? *h1 : *h2, region, samples);
      }
    }
  }

  report.sample_count = static_cast<int>(samples.size());
  if (samples.empty()) {
    report.diagnostic = "no boundary sample passed the exact membership filter; "
                        "region appears empty or degenerate";
    return report;
  }

  // Max pairwise distance: locate near-max pairs in double precision, settle
  // them exactly.
  double best_d2 = -1.0;
  for (size_t i = 0; i < samples.size(); ++i) {
    for (size_t j = i + 1; j < samples.size(); ++j) {
      const double dx = samples[i].x - samples[j].x;
      const double dy = samples[i].y - samples[j].y;
      best_d2 = std::max(best_d2, dx * dx + dy * dy);
    }
  }
  Rational max_d2(0);
  Point best_a = samples[0].p, best_b = samples[0].p;
  const double cutoff = best_d2 * (1.0 - 1e-9);
  for (size_t i = 0; i < samples.size(); ++i) {
    for (size_t j = i + 1; j < samples.size(); ++j) {
      const double dx = samples[i].x - samples[j].x;
      const double dy = samples[i].y - samples[j].y;
      if (dx * dx + dy * dy < cutoff) continue;
      Rational d2 = squared_distance(samples[i].p, samples[j].p);
      if (d2 > max_d2) {
        max_d2 = std::move(d2);
        best_a = samples[i].p;
        best_b = samples[j].p;
      }
    }
  }

  // For pure polygons the vertex-pair maximum is the exact diameter.
  if (all_halfplanes && !exact_vertices.empty()) {
    report.exact_vertex_maximum = true;
    for (size_t i = 0; i < exact_vertices.size(); ++i) {
      for (size_t j = i + 1; j < exact_vertices.size(); ++j) {
        Rational d2 = squared_distance(exact_vertices[i], exact_vertices[j]);
        if (d2 > max_d2) {
          max_d2 = std::move(d2);
          best_a = exact_vertices[i];
          best_b = exact_vertices[j];
        }
      }
    }
  }

  report.max_sampled_distance =
      Enclosure::sqrt(Enclosure::from_rational(max_d2)).hi();
  report.max_pair_a = best_a;
  report.max_pair_b = best_b;

  // Distance gate: max sampled distance <= claimed * (1 + 1e-9).
  if (const auto* sq = std::get_if<SqrtDiameter>(&claimed)) {
    const Rational slack = Rational(1000000001L, 1000000000L);
    report.distance_ok = max_d2 <= sqrt_diameter_squared(*sq) * slack.squared();
  } else {
    BigFloat rhs = claimed_enc.hi();
    mpfr_mul_q(rhs.raw(), rhs.raw(), Rational(1000000001L, 1000000000L).raw().get_mpq_t(),
               MPFR_RNDD);
    report.distance_ok = report.max_sampled_distance <= rhs;
  }

  report.area_ok = report.area_estimate <= report.area_allowance;
  report.pass = report.distance_ok && report.area_ok;
  if (!report.distance_ok)
    report.diagnostic = "sampled distance " + report.max_sampled_distance.decimal_sig(17, MPFR_RNDU) +
                        " exceeds the claimed diameter";
  else if (!report.area_ok)
    report.diagnostic = "area upper bound " + report.area_estimate.decimal_sig(17, MPFR_RNDU) +
                        " violates the isoperimetric allowance " +
                        report.area_allowance.decimal_sig(17, MPFR_RNDD);
  return report;
}

}  // namespace cantor
