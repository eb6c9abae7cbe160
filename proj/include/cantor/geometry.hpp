#pragma once

#include <variant>
#include <vector>

#include "cantor/rational.hpp"

namespace cantor {

struct Point {
  Rational x, y;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

// Closed axis-aligned square [x0, x0+side] x [y0, y0+side], side > 0.
struct GridSquare {
  Rational x0, y0, side;

  Rational x1() const { return x0 + side; }
  Rational y1() const { return y0 + side; }
};

// Closed disk: squared distance to center <= r2, r2 > 0.
struct Disk {
  Point center;
  Rational r2;
};

// Closed half-plane a*x + b*y <= c with (a, b) != (0, 0).
struct HalfPlane {
  Rational a, b, c;
};

using Primitive = std::variant<Disk, HalfPlane>;

// Intersection of closed convex primitives. The collection must be non-empty;
// the intersection is then closed and convex.
struct Region {
  std::vector<Primitive> primitives;
};

enum class Classification { kInside, kOutside, kStraddles };

const char* to_string(Classification c);

// Exact membership tests. No floating point anywhere in this module.
bool point_in_primitive(const Point& p, const Primitive& prim);
bool point_in_region(const Point& p, const Region& region);

// Conservative exact classification of a closed square against a primitive or
// a region. kInside and kOutside are proven; kStraddles claims nothing.
Classification classify_square(const GridSquare& sq, const Primitive& prim);
Classification classify_square(const GridSquare& sq, const Region& region);

// Exact squared Euclidean distance.
Rational squared_distance(const Point& a, const Point& b);

void validate(const GridSquare& sq);
void validate(const Primitive& prim);
void validate(const Region& region);

}  // namespace cantor
