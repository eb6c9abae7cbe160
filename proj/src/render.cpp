#include "cantor/render.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cantor {

namespace {

// Fixed profile so golden outputs stay stable.
constexpr int kCanvas = 1000;
constexpr int kArcChords = 256;
constexpr const char* kStyle =
    ".in{fill:#2b83ba;stroke:none}"
    ".st{fill:#fdae61;stroke:none}"
    ".out{fill:#f0f0f0;stroke:none}"
    ".arc{fill:none;stroke:#d7191c;stroke-width:2.5}"
    ".edge{fill:none;stroke:#d7191c;stroke-width:2.5}"
    ".root{fill:none;stroke:#000000;stroke-width:1.5}"
    ".lg{font-family:monospace;font-size:24px}";

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Mapper {
  double x0, y0, scale;

  std::string x(double wx) const { return fixed2((wx - x0) * scale); }
  std::string y(double wy) const { return fixed2(kCanvas - (wy - y0) * scale); }  // flip up
  std::string ytop(double wy, double wside) const { return y(wy + wside); }
  std::string len(double w) const { return fixed2(w * scale); }
};

const char* css_class(Classification c) {
  switch (c) {
    case Classification::kInside: return "in";
    case Classification::kStraddles: return "st";
    case Classification::kOutside: return "out";
  }
  return "out";
}

void emit_squares(const GridSquare& sq, const Region& region, int level_now, int target,
                  std::optional<Classification> inherited, const Mapper& m, std::ostream& out) {
  const Classification c = inherited ? *inherited : classify_square(sq, region);
  if (level_now == target) {
    out << "<rect class=\"sq " << css_class(c) << "\" x=\"" << m.x(sq.x0.to_double()) << "\" y=\""
        << m.ytop(sq.y0.to_double(), sq.side.to_double()) << "\" width=\""
        << m.len(sq.side.to_double()) << "\" height=\"" << m.len(sq.side.to_double()) << "\"/>\n";
    return;
  }
  // Proven squares pass their classification to all descendants.
  std::optional<Classification> pass = inherited;
  if (!pass && c != Classification::kStraddles) pass = c;
  const Rational step = sq.side * Rational(2, 3);
  const Rational side = sq.side / 3;
  for (int d = 0; d < 4; ++d) {
    GridSquare child{(d & 1) ? sq.x0 + step : sq.x0, (d & 2) ? sq.y0 + step : sq.y0, side};
    emit_squares(child, region, level_now + 1, target, pass, m, out);
  }
}

bool roughly_in_region(double x, double y, const Region& region) {
  // Display-only filter; a small tolerance keeps boundary chords visible.
  const double eps = 1e-9;
  for (const Primitive& prim : region.primitives) {
    if (const auto* disk = std::get_if<Disk>(&prim)) {
      const double dx = x - disk->center.x.to_double();
      const double dy = y - disk->center.y.to_double();
      if (dx * dx + dy * dy > disk->r2.to_double() + eps) return false;
    } else {
      const auto& hp = std::get<HalfPlane>(prim);
      if (hp.a.to_double() * x + hp.b.to_double() * y > hp.c.to_double() + eps) return false;
    }
  }
  return true;
}

void emit_polyline(const std::vector<std::pair<double, double>>& pts, const char* cls,
                   const Mapper& m, std::ostream& out) {
  if (pts.size() < 2) return;
  out << "<polyline class=\"" << cls << "\" points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) out << " ";
    out << m.x(pts[i].first) << "," << m.y(pts[i].second);
  }
  out << "\"/>\n";
}

// Runs of consecutive boundary vertices that stay in the region, with
// wrap-around runs merged for closed curves.
void emit_boundary_runs(const std::vector<std::pair<double, double>>& ring, bool closed,
                        const Region& region, const char* cls, const Mapper& m,
                        std::ostream& out) {
  const size_t n = ring.size();
  std::vector<bool> keep(n);
  for (size_t i = 0; i < n; ++i) keep[i] = roughly_in_region(ring[i].first, ring[i].second, region);

  std::vector<std::vector<std::pair<double, double>>> runs;
  std::vector<std::pair<double, double>> current;
  for (size_t i = 0; i < n; ++i) {
    if (keep[i]) {
      current.push_back(ring[i]);
    } else if (!current.empty()) {
      runs.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) runs.push_back(std::move(current));
  if (closed && runs.size() >= 2 && keep.front() && keep.back()) {
    // the run ending at the last vertex continues through the seam
    runs.back().insert(runs.back().end(), runs.front().begin(), runs.front().end());
    runs.erase(runs.begin());
  }
  for (const auto& run : runs) emit_polyline(run, cls, m, out);
}

}  // namespace

std::string render_svg(const CoverSpec& spec, int level) {
  if (level < 1 || level > 9)
    throw std::invalid_argument("render_svg: level must lie in [1, 9]");
  validate(spec.root);
  validate(spec.region);

  const Mapper m{spec.root.x0.to_double(), spec.root.y0.to_double(),
                 kCanvas / spec.root.side.to_double()};

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
      << kCanvas + 60 << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas + 60 << "\">\n";
  out << "<style>" << kStyle << "</style>\n";
  out << "<g id=\"grid\">\n";
  emit_squares(spec.root, spec.region, 1, level, std::nullopt, m, out);
  out << "</g>\n<g id=\"boundary\">\n";

  for (const Primitive& prim : spec.region.primitives) {
    if (const auto* disk = std::get_if<Disk>(&prim)) {
      const double cx = disk->center.x.to_double();
      const double cy = disk->center.y.to_double();
      const double r = std::sqrt(disk->r2.to_double());
      std::vector<std::pair<double, double>> ring;
      ring.reserve(kArcChords);
      for (int i = 0; i < kArcChords; ++i) {
        const double t = 2.0 * M_PI * i / kArcChords;
        ring.emplace_back(cx + r * std::cos(t), cy + r * std::sin(t));
      }
      emit_boundary_runs(ring, /*closed=*/true, spec.region, "arc", m, out);
    } else {
      const auto& hp = std::get<HalfPlane>(prim);
      // Parameterize the boundary line across the root box and bucket it in
      // kArcChords steps like the arcs.
      const double a = hp.a.to_double(), b = hp.b.to_double(), c = hp.c.to_double();
      const double norm = std::hypot(a, b);
      const double px = a / norm * (c / norm), py = b / norm * (c / norm);
      const double dx = b / norm, dy = -a / norm;
      const double reach = 2.0 * spec.root.side.to_double() +
                           std::hypot(spec.root.x0.to_double(), spec.root.y0.to_double()) +
                           std::abs(c / norm);
      std::vector<std::pair<double, double>> seg;
      seg.reserve(kArcChords + 1);
      for (int i = 0; i <= kArcChords; ++i) {
        const double t = -reach + 2.0 * reach * i / kArcChords;
        seg.emplace_back(px + t * dx, py + t * dy);
      }
      emit_boundary_runs(seg, /*closed=*/false, spec.region, "edge", m, out);
    }
  }

  out << "</g>\n";
  out << "<rect class=\"root\" x=\"" << m.x(spec.root.x0.to_double()) << "\" y=\""
      << m.ytop(spec.root.y0.to_double(), spec.root.side.to_double()) << "\" width=\""
      << m.len(spec.root.side.to_double()) << "\" height=\"" << m.len(spec.root.side.to_double())
      << "\"/>\n";

  // legend strip under the drawing
  const int ly = kCanvas + 18;
  const char* labels[3] = {"inside", "straddles", "outside"};
  const char* classes[3] = {"in", "st", "out"};
  for (int i = 0; i < 3; ++i) {
    const int lx = 20 + 330 * i;
    out << "<rect class=\"" << classes[i] << "\" x=\"" << lx << "\" y=\"" << ly
        << "\" width=\"24\" height=\"24\"/>\n";
    out << "<text class=\"lg\" x=\"" << lx + 32 << "\" y=\"" << ly + 20 << "\">" << labels[i]
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace cantor
