#include "cantor/geometry.hpp"

#include <stdexcept>

namespace cantor {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::kInside: return "inside";
    case Classification::kOutside: return "outside";
    case Classification::kStraddles: return "straddles";
  }
  return "?";
}

void validate(const GridSquare& sq) {
  if (sq.side.sign() <= 0) throw std::invalid_argument("GridSquare: side must be positive");
}

void validate(const Primitive& prim) {
  if (const auto* disk = std::get_if<Disk>(&prim)) {
    if (disk->r2.sign() <= 0) throw std::invalid_argument("Disk: r2 must be positive");
  } else {
    const auto& hp = std::get<HalfPlane>(prim);
    if (hp.a.is_zero() && hp.b.is_zero())
      throw std::invalid_argument("HalfPlane: (a, b) must be nonzero");
  }
}

void validate(const Region& region) {
  if (region.primitives.empty()) throw std::invalid_argument("Region: empty primitive list");
  for (const Primitive& p : region.primitives) validate(p);
}

Rational squared_distance(const Point& a, const Point& b) {
  const Rational dx = a.x - b.x;
  const Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

bool point_in_primitive(const Point& p, const Primitive& prim) {
  if (const auto* disk = std::get_if<Disk>(&prim))
    return squared_distance(p, disk->center) <= disk->r2;
  const auto& hp = std::get<HalfPlane>(prim);
  return hp.a * p.x + hp.b * p.y <= hp.c;
}

bool point_in_region(const Point& p, const Region& region) {
  validate(region);
  for (const Primitive& prim : region.primitives)
    if (!point_in_primitive(p, prim)) return false;
  return true;
}

namespace {

// Clamp v into [lo, hi].
const Rational& clamp(const Rational& v, const Rational& lo, const Rational& hi) {
  if (v < lo) return lo;
  if (v > hi) return hi;
  return v;
}

Classification classify_disk(const GridSquare& sq, const Disk& disk) {
  const Rational x1 = sq.x1();
  const Rational y1 = sq.y1();

  // Containment: the disk is convex, so the square lies inside iff its
  // farthest corner does. Pick that corner per axis by comparing the center
  // against the square's midline, exactly.
  const Rational two_cx = disk.center.x + disk.center.x;
  const Rational two_cy = disk.center.y + disk.center.y;
  const Rational& fx = (two_cx >= sq.x0 + x1) ? sq.x0 : x1;
  const Rational& fy = (two_cy >= sq.y0 + y1) ? sq.y0 : y1;
  if (squared_distance(Point{fx, fy}, disk.center) <= disk.r2) return Classification::kInside;

  // Disjointness: nearest point of the square to the center is the
  // coordinate-wise clamp.
  const Point nearest{clamp(disk.center.x, sq.x0, x1), clamp(disk.center.y, sq.y0, y1)};
  if (squared_distance(nearest, disk.center) > disk.r2) return Classification::kOutside;

  return Classification::kStraddles;
}

Classification classify_halfplane(const GridSquare& sq, const HalfPlane& hp) {
  // a*x + b*y over the square attains its extremes at corners chosen by the
  // signs of a and b.
  const Rational& xmax = hp.a.sign() >= 0 ? sq.x1() : sq.x0;
  const Rational& xmin = hp.a.sign() >= 0 ? sq.x0 : sq.x1();
  const Rational& ymax = hp.b.sign() >= 0 ? sq.y1() : sq.y0;
  const Rational& ymin = hp.b.sign() >= 0 ? sq.y0 : sq.y1();
  if (hp.a * xmax + hp.b * ymax <= hp.c) return Classification::kInside;
  if (hp.a * xmin + hp.b * ymin > hp.c) return Classification::kOutside;
  return Classification::kStraddles;
}

}  // namespace

Classification classify_square(const GridSquare& sq, const Primitive& prim) {
  validate(sq);
  validate(prim);
  if (const auto* disk = std::get_if<Disk>(&prim)) return classify_disk(sq, *disk);
  return classify_halfplane(sq, std::get<HalfPlane>(prim));
}

Classification classify_square(const GridSquare& sq, const Region& region) {
  validate(sq);
  validate(region);
  bool all_inside = true;
  for (const Primitive& prim : region.primitives) {
    const Classification c = classify_square(sq, prim);
    if (c == Classification::kOutside) return Classification::kOutside;
    if (c != Classification::kInside) all_inside = false;
  }
  return all_inside ? Classification::kInside : Classification::kStraddles;
}

}  // namespace cantor
