#pragma once

#include <algorithm>
#include <vector>

#include "noiserank/mask.hpp"

namespace noiserank {

struct PixelCoord {
  int row = 0;
  int col = 0;

  friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
  friend bool operator<(const PixelCoord& a, const PixelCoord& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  }
};

struct BoundingBox {
  int min_row = 0;
  int min_col = 0;
  int max_row = 0;
  int max_col = 0;

  int height() const { return max_row - min_row + 1; }
  int width() const { return max_col - min_col + 1; }
};

/// One building: a maximal 8-connected set of foreground pixels.
struct Component {
  std::vector<PixelCoord> pixels;  // sorted by (row, col)
  BoundingBox bbox;
  double centroid_row = 0.0;  // mean of member pixel indices
  double centroid_col = 0.0;
};

/// Labels the 8-connected foreground components of a mask. Components are
/// returned ordered by (bbox min row, bbox min col), then first pixel, so the
/// indexing is stable across runs; each component's pixel list is sorted.
inline std::vector<Component> connected_components(const BinaryMask& mask) {
  const int w = mask.width();
  const int h = mask.height();
  std::vector<std::uint8_t> visited(mask.size(), 0);
  std::vector<Component> components;
  std::vector<PixelCoord> stack;

  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const std::size_t idx = static_cast<std::size_t>(r) * w + c;
      if (!mask.at(r, c) || visited[idx]) continue;

      Component comp;
      visited[idx] = 1;
      stack.push_back({r, c});
      while (!stack.empty()) {
        const PixelCoord p = stack.back();
        stack.pop_back();
        comp.pixels.push_back(p);
        for (int dr = -1; dr <= 1; ++dr) {
          for (int dc = -1; dc <= 1; ++dc) {
            if (dr == 0 && dc == 0) continue;
            const int nr = p.row + dr;
            const int nc = p.col + dc;
            if (!mask.in_bounds(nr, nc) || !mask.at(nr, nc)) continue;
            const std::size_t nidx = static_cast<std::size_t>(nr) * w + nc;
            if (visited[nidx]) continue;
            visited[nidx] = 1;
            stack.push_back({nr, nc});
          }
        }
      }

      std::sort(comp.pixels.begin(), comp.pixels.end());
      comp.bbox = {comp.pixels.front().row, comp.pixels.front().col,
                   comp.pixels.front().row, comp.pixels.front().col};
      double sum_r = 0.0, sum_c = 0.0;
      for (const PixelCoord& p : comp.pixels) {
        comp.bbox.min_row = std::min(comp.bbox.min_row, p.row);
        comp.bbox.min_col = std::min(comp.bbox.min_col, p.col);
        comp.bbox.max_row = std::max(comp.bbox.max_row, p.row);
        comp.bbox.max_col = std::max(comp.bbox.max_col, p.col);
        sum_r += p.row;
        sum_c += p.col;
      }
      comp.centroid_row = sum_r / static_cast<double>(comp.pixels.size());
      comp.centroid_col = sum_c / static_cast<double>(comp.pixels.size());
      components.push_back(std::move(comp));
    }
  }

  std::sort(components.begin(), components.end(),
            [](const Component& a, const Component& b) {
              if (a.bbox.min_row != b.bbox.min_row) return a.bbox.min_row < b.bbox.min_row;
              if (a.bbox.min_col != b.bbox.min_col) return a.bbox.min_col < b.bbox.min_col;
              return a.pixels.front() < b.pixels.front();
            });
  return components;
}

}  // namespace noiserank
