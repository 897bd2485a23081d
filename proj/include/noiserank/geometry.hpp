#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "noiserank/components.hpp"
#include "noiserank/mask.hpp"

namespace noiserank {

/// Continuous pixel-space point: x runs along columns, y along rows.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Closed polygon in continuous pixel space; the edge from the last vertex
/// back to the first is implicit. May self-intersect (rasterization uses the
/// even-odd rule, so that is well defined).
struct PolygonRing {
  std::vector<Point> vertices;
};

/// Row-major 2x3 affine transform on (x, y):
///   x' = m00*x + m01*y + m02
///   y' = m10*x + m11*y + m12
/// transform_component applies it in anchor-relative coordinates, so the
/// translation column is a shift about the anchor and the anchor itself is
/// the fixed point when (m02, m12) is zero.
struct AffineTransform {
  double m00 = 1.0, m01 = 0.0, m02 = 0.0;
  double m10 = 0.0, m11 = 1.0, m12 = 0.0;

  static AffineTransform identity() { return {}; }

  static AffineTransform scaling(double sx, double sy) {
    AffineTransform t;
    t.m00 = sx;
    t.m11 = sy;
    return t;
  }

  static AffineTransform rotation_deg(double degrees) {
    const double rad = degrees * std::acos(-1.0) / 180.0;
    AffineTransform t;
    t.m00 = std::cos(rad);
    t.m01 = -std::sin(rad);
    t.m10 = std::sin(rad);
    t.m11 = std::cos(rad);
    return t;
  }

  double det() const { return m00 * m11 - m01 * m10; }

  Point apply_linear(Point p) const {
    return {m00 * p.x + m01 * p.y, m10 * p.x + m11 * p.y};
  }
};

namespace detail {

// Directions for grid-edge walking, ordered so that (d + 3) % 4 is the left
// turn: 0 = east, 1 = south, 2 = west, 3 = north (screen coordinates, y down).
inline constexpr int kDx[4] = {1, 0, -1, 0};
inline constexpr int kDy[4] = {0, 1, 0, -1};

// Local view of a component: bbox-aligned bitmap with a one-cell margin so
// flood fill can start from the border.
struct LocalGrid {
  int w = 0, h = 0;        // grid cells including margin
  int origin_row = 0, origin_col = 0;
  std::vector<std::uint8_t> filled;
  std::vector<std::uint8_t> outside;

  explicit LocalGrid(const Component& comp) {
    w = comp.bbox.width() + 2;
    h = comp.bbox.height() + 2;
    origin_row = comp.bbox.min_row - 1;
    origin_col = comp.bbox.min_col - 1;
    filled.assign(static_cast<std::size_t>(w) * h, 0);
    for (const PixelCoord& p : comp.pixels) {
      filled[static_cast<std::size_t>(p.row - origin_row) * w + (p.col - origin_col)] = 1;
    }
    flood_outside();
  }

  bool is_filled(int r, int c) const {
    return r >= 0 && r < h && c >= 0 && c < w &&
           filled[static_cast<std::size_t>(r) * w + c] != 0;
  }

  bool is_outside(int r, int c) const {
    return r < 0 || r >= h || c < 0 || c >= w ||
           outside[static_cast<std::size_t>(r) * w + c] != 0;
  }

 private:
  // 4-connected flood fill of the background from the margin. Empty cells not
  // reached are interior holes; edges facing them are dropped so the traced
  // ring is the outer boundary only.
  void flood_outside() {
    outside.assign(filled.size(), 0);
    std::vector<std::pair<int, int>> stack;
    auto push = [&](int r, int c) {
      const std::size_t i = static_cast<std::size_t>(r) * w + c;
      if (filled[i] || outside[i]) return;
      outside[i] = 1;
      stack.emplace_back(r, c);
    };
    for (int c = 0; c < w; ++c) {
      push(0, c);
      push(h - 1, c);
    }
    for (int r = 0; r < h; ++r) {
      push(r, 0);
      push(r, w - 1);
    }
    while (!stack.empty()) {
      auto [r, c] = stack.back();
      stack.pop_back();
      if (r > 0) push(r - 1, c);
      if (r + 1 < h) push(r + 1, c);
      if (c > 0) push(r, c - 1);
      if (c + 1 < w) push(r, c + 1);
    }
  }
};

}  // namespace detail

/// Traces the outer boundary of a component as a closed ring of pixel-corner
/// vertices, oriented with the interior on the right of travel.
///
/// The walk follows directed unit edges between a filled pixel and the
/// outside background. At checkerboard pinch corners (two diagonally touching
/// pixels) two continuations exist; taking the left turn crosses into the
/// other lobe first, which keeps the whole 8-connected outline on a single
/// ring. Interior holes are not traced, so rasterizing the result yields the
/// component's outer fill exactly.
inline PolygonRing trace_boundary(const Component& component) {
  if (component.pixels.empty()) {
    throw ValidationError("trace_boundary: component is empty");
  }
  const detail::LocalGrid grid(component);

  // Outgoing edge directions per corner vertex. Corner (vx, vy) indexes into a
  // (w+1) x (h+1) lattice.
  const int vw = grid.w + 1;
  const int vh = grid.h + 1;
  std::vector<std::uint8_t> out_dirs(static_cast<std::size_t>(vw) * vh, 0);
  auto add_edge = [&](int vx, int vy, int dir) {
    out_dirs[static_cast<std::size_t>(vy) * vw + vx] |= static_cast<std::uint8_t>(1u << dir);
  };

  long long start_key = -1;
  for (int r = 0; r < grid.h; ++r) {
    for (int c = 0; c < grid.w; ++c) {
      if (!grid.is_filled(r, c)) continue;
      if (grid.is_outside(r - 1, c)) add_edge(c, r, 0);          // top: east
      if (grid.is_outside(r, c + 1)) add_edge(c + 1, r, 1);      // right: south
      if (grid.is_outside(r + 1, c)) add_edge(c + 1, r + 1, 2);  // bottom: west
      if (grid.is_outside(r, c - 1)) add_edge(c, r + 1, 3);      // left: north
      const long long key = static_cast<long long>(r) * vw + c;
      if (grid.is_outside(r - 1, c) && (start_key < 0 || key < start_key)) {
        start_key = key;
      }
    }
  }
  // Every component touches the outside background somewhere, so a topmost
  // boundary pixel always exists.
  const int start_vy = static_cast<int>(start_key / vw);
  const int start_vx = static_cast<int>(start_key % vw);

  std::vector<Point> path;   // unit-step corner sequence
  std::vector<int> dirs;     // step direction leaving each corner
  int vx = start_vx, vy = start_vy;
  int dir = 0;  // the lexicographically smallest corner's only exit is east
  do {
    auto& mask_bits = out_dirs[static_cast<std::size_t>(vy) * vw + vx];
    const int left = (dir + 3) & 3;
    int take = -1;
    if (mask_bits & (1u << left)) {
      take = left;
    } else {
      for (int d = 0; d < 4; ++d) {
        if (mask_bits & (1u << d)) {
          take = d;
          break;
        }
      }
    }
    if (take < 0) {
      throw ValidationError("trace_boundary: boundary walk left an open path");
    }
    mask_bits &= static_cast<std::uint8_t>(~(1u << take));
    path.push_back({static_cast<double>(grid.origin_col + vx),
                    static_cast<double>(grid.origin_row + vy)});
    dirs.push_back(take);
    vx += detail::kDx[take];
    vy += detail::kDy[take];
    dir = take;
  } while (vx != start_vx || vy != start_vy);

  // Keep only corners where the walk turns; collinear unit steps collapse.
  PolygonRing ring;
  const std::size_t n = path.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int prev_dir = dirs[(i + n - 1) % n];
    if (dirs[i] != prev_dir) ring.vertices.push_back(path[i]);
  }
  return ring;
}

/// Fills rings onto a fresh mask: a pixel is true iff its center lies inside
/// any ring under the even-odd rule. Geometry outside the canvas is clipped;
/// degenerate rings cover no pixel centers and contribute nothing.
inline BinaryMask rasterize(std::span<const PolygonRing> rings, int width, int height) {
  BinaryMask mask(width, height);
  std::vector<double> crossings;
  for (const PolygonRing& ring : rings) {
    const std::size_t n = ring.vertices.size();
    if (n < 3) continue;
    double min_y = ring.vertices[0].y, max_y = ring.vertices[0].y;
    for (const Point& v : ring.vertices) {
      min_y = std::min(min_y, v.y);
      max_y = std::max(max_y, v.y);
    }
    const int r_lo = std::max(0, static_cast<int>(std::floor(min_y - 0.5)));
    const int r_hi = std::min(height - 1, static_cast<int>(std::ceil(max_y)));
    for (int r = r_lo; r <= r_hi; ++r) {
      const double yc = r + 0.5;
      crossings.clear();
      for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring.vertices[i];
        const Point& b = ring.vertices[(i + 1) % n];
        if ((a.y <= yc) == (b.y <= yc)) continue;
        const double t = (yc - a.y) / (b.y - a.y);
        crossings.push_back(a.x + t * (b.x - a.x));
      }
      std::sort(crossings.begin(), crossings.end());
      for (std::size_t k = 0; k + 1 < crossings.size(); k += 2) {
        // pixel centers strictly between the crossing pair
        int c_lo = static_cast<int>(std::floor(crossings[k] - 0.5)) + 1;
        int c_hi = static_cast<int>(std::ceil(crossings[k + 1] - 0.5)) - 1;
        c_lo = std::max(c_lo, 0);
        c_hi = std::min(c_hi, width - 1);
        for (int c = c_lo; c <= c_hi; ++c) {
          if (c + 0.5 > crossings[k] && c + 0.5 < crossings[k + 1]) {
            mask.set(r, c, true);
          }
        }
      }
    }
  }
  return mask;
}

inline BinaryMask rasterize(const PolygonRing& ring, int width, int height) {
  return rasterize(std::span<const PolygonRing>(&ring, 1), width, height);
}

/// Transformed footprint of one component, computed by inverse mapping: each
/// candidate output pixel center is pulled back through the inverse affine
/// (expressed about the anchor) and kept iff the source point lands on a
/// member pixel. The anchor is given in continuous (row, col) coordinates —
/// to pivot on a component's center of mass pass centroid + 0.5. Output is
/// clipped to the mask bounds and sorted by (row, col).
inline std::vector<PixelCoord> transform_component(const BinaryMask& mask,
                                                   const Component& component,
                                                   const AffineTransform& xf,
                                                   double anchor_row, double anchor_col) {
  const double det = xf.det();
  if (std::abs(det) < 1e-12) {
    throw ValidationError("degenerate transform");
  }
  const double i00 = xf.m11 / det, i01 = -xf.m01 / det;
  const double i10 = -xf.m10 / det, i11 = xf.m00 / det;
  const Point anchor{anchor_col, anchor_row};

  // Membership bitmap over the component bbox.
  const BoundingBox& bb = component.bbox;
  const int bw = bb.width(), bh = bb.height();
  std::vector<std::uint8_t> member(static_cast<std::size_t>(bw) * bh, 0);
  for (const PixelCoord& p : component.pixels) {
    member[static_cast<std::size_t>(p.row - bb.min_row) * bw + (p.col - bb.min_col)] = 1;
  }

  // Candidate window: forward image of the bbox, padded one pixel.
  double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
  for (const double cx : {static_cast<double>(bb.min_col), static_cast<double>(bb.max_col + 1)}) {
    for (const double cy : {static_cast<double>(bb.min_row), static_cast<double>(bb.max_row + 1)}) {
      const Point rel = xf.apply_linear({cx - anchor.x, cy - anchor.y});
      const double ox = rel.x + xf.m02 + anchor.x;
      const double oy = rel.y + xf.m12 + anchor.y;
      min_x = std::min(min_x, ox);
      max_x = std::max(max_x, ox);
      min_y = std::min(min_y, oy);
      max_y = std::max(max_y, oy);
    }
  }
  const int r_lo = std::max(0, static_cast<int>(std::floor(min_y)) - 1);
  const int r_hi = std::min(mask.height() - 1, static_cast<int>(std::ceil(max_y)) + 1);
  const int c_lo = std::max(0, static_cast<int>(std::floor(min_x)) - 1);
  const int c_hi = std::min(mask.width() - 1, static_cast<int>(std::ceil(max_x)) + 1);

  std::vector<PixelCoord> footprint;
  for (int r = r_lo; r <= r_hi; ++r) {
    for (int c = c_lo; c <= c_hi; ++c) {
      const double rx = (c + 0.5) - anchor.x - xf.m02;
      const double ry = (r + 0.5) - anchor.y - xf.m12;
      const double sx = i00 * rx + i01 * ry + anchor.x;
      const double sy = i10 * rx + i11 * ry + anchor.y;
      const int src_col = static_cast<int>(std::floor(sx));
      const int src_row = static_cast<int>(std::floor(sy));
      if (src_row < bb.min_row || src_row > bb.max_row || src_col < bb.min_col ||
          src_col > bb.max_col) {
        continue;
      }
      if (member[static_cast<std::size_t>(src_row - bb.min_row) * bw +
                 (src_col - bb.min_col)]) {
        footprint.push_back({r, c});
      }
    }
  }
  return footprint;
}

}  // namespace noiserank
