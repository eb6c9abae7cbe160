#pragma once

#include <cstdint>
#include <random>

#include "cantor/geometry.hpp"

namespace cantor::testing {

// Deterministic rational in [0, 1) with denominator 2^32.
inline Rational unit_rational(std::mt19937_64& rng) {
  return Rational(static_cast<long>(rng() >> 32), 1L << 32);
}

// Uniformly sampled rational point of a closed square.
inline Point sample_point(const GridSquare& sq, std::mt19937_64& rng) {
  return Point{sq.x0 + sq.side * unit_rational(rng), sq.y0 + sq.side * unit_rational(rng)};
}

// Nonzero rational in [lo, hi] with small terms, for fuzzing parameters.
inline Rational small_rational(std::mt19937_64& rng, long max_num = 64, long max_den = 64) {
  const long num = 1 + static_cast<long>(rng() % static_cast<uint64_t>(max_num));
  const long den = 1 + static_cast<long>(rng() % static_cast<uint64_t>(max_den));
  return Rational(num, den);
}

// Reflections of the unit-square scene used by the equivariance checks.
inline Point reflect_x(const Point& p) { return Point{Rational(1) - p.x, p.y}; }
inline Point reflect_y(const Point& p) { return Point{p.x, Rational(1) - p.y}; }
inline Point reflect_diag(const Point& p) { return Point{p.y, p.x}; }

inline GridSquare reflect_x(const GridSquare& s) {
  return GridSquare{Rational(1) - s.x0 - s.side, s.y0, s.side};
}
inline GridSquare reflect_y(const GridSquare& s) {
  return GridSquare{s.x0, Rational(1) - s.y0 - s.side, s.side};
}
inline GridSquare reflect_diag(const GridSquare& s) { return GridSquare{s.y0, s.x0, s.side}; }

inline Primitive reflect_x(const Primitive& prim) {
  if (const auto* disk = std::get_if<Disk>(&prim)) return Disk{reflect_x(disk->center), disk->r2};
  const auto& hp = std::get<HalfPlane>(prim);
  // a(1-x') + b y <= c  ->  -a x' + b y <= c - a
  return HalfPlane{-hp.a, hp.b, hp.c - hp.a};
}
inline Primitive reflect_y(const Primitive& prim) {
  if (const auto* disk = std::get_if<Disk>(&prim)) return Disk{reflect_y(disk->center), disk->r2};
  const auto& hp = std::get<HalfPlane>(prim);
  return HalfPlane{hp.a, -hp.b, hp.c - hp.b};
}
inline Primitive reflect_diag(const Primitive& prim) {
  if (const auto* disk = std::get_if<Disk>(&prim)) return Disk{reflect_diag(disk->center), disk->r2};
  const auto& hp = std::get<HalfPlane>(prim);
  return HalfPlane{hp.b, hp.a, hp.c};
}

template <Primitive (*F)(const Primitive&)>
Region reflect_region(const Region& region) {
  Region out;
  for (const Primitive& p : region.primitives) out.primitives.push_back(F(p));
  return out;
}

// Scale the whole scene about the origin by a positive factor.
inline GridSquare scale(const GridSquare& s, const Rational& f) {
  return GridSquare{s.x0 * f, s.y0 * f, s.side * f};
}
inline Primitive scale(const Primitive& prim, const Rational& f) {
  if (const auto* disk = std::get_if<Disk>(&prim))
    return Disk{Point{disk->center.x * f, disk->center.y * f}, disk->r2 * f * f};
  const auto& hp = std::get<HalfPlane>(prim);
  return HalfPlane{hp.a, hp.b, hp.c * f};
}
inline Region scale(const Region& region, const Rational& f) {
  Region out;
  for (const Primitive& p : region.primitives) out.primitives.push_back(scale(p, f));
  return out;
}

}  // namespace cantor::testing
