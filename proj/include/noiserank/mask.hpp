#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "noiserank/errors.hpp"

namespace noiserank {

/// Dense binary segmentation mask, the universal currency of the pipeline.
/// Row-major grid of booleans; true = building, false = background. Pixel
/// (row, col) occupies the unit square [col, col+1) x [row, row+1) in
/// continuous (x, y) coordinates, so its center sits at (col+0.5, row+0.5).
class BinaryMask {
 public:
  BinaryMask() = default;

  BinaryMask(int width, int height, bool fill = false)
      : width_(width), height_(height) {
    if (width <= 0 || height <= 0) {
      throw ValidationError("mask dimensions must be positive, got " +
                            std::to_string(width) + "x" + std::to_string(height));
    }
    pixels_.assign(static_cast<std::size_t>(width) * height, fill ? 1 : 0);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }

  bool in_bounds(int row, int col) const {
    return row >= 0 && row < height_ && col >= 0 && col < width_;
  }

  bool at(int row, int col) const {
    return pixels_[static_cast<std::size_t>(row) * width_ + col] != 0;
  }

  void set(int row, int col, bool value) {
    pixels_[static_cast<std::size_t>(row) * width_ + col] = value ? 1 : 0;
  }

  /// Number of true (building) pixels.
  std::size_t count() const {
    std::size_t n = 0;
    for (std::uint8_t p : pixels_) n += p;
    return n;
  }

  bool same_shape(const BinaryMask& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  const std::vector<std::uint8_t>& data() const { return pixels_; }
  std::vector<std::uint8_t>& data() { return pixels_; }

  friend bool operator==(const BinaryMask& a, const BinaryMask& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.pixels_ == b.pixels_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

namespace detail {
struct OverlapCounts {
  std::size_t tp = 0, fp = 0, fn = 0;
};

inline OverlapCounts count_overlap(const BinaryMask& a, const BinaryMask& b,
                                   const char* caller) {
  if (!a.same_shape(b)) {
    throw ValidationError(std::string(caller) + ": mask dimensions differ (" +
                          std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                          " vs " + std::to_string(b.width()) + "x" +
                          std::to_string(b.height()) + ")");
  }
  OverlapCounts c;
  const auto& pa = a.data();
  const auto& pb = b.data();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    c.tp += pa[i] & pb[i];
    c.fp += pa[i] & (1 - pb[i]);
    c.fn += (1 - pa[i]) & pb[i];
  }
  return c;
}
}  // namespace detail

/// Intersection-over-Union of the foreground. Two all-background masks agree
/// perfectly, so that case is defined as 1.0 rather than 0/0.
inline double iou(const BinaryMask& a, const BinaryMask& b) {
  const auto c = detail::count_overlap(a, b, "iou");
  const std::size_t uni = c.tp + c.fp + c.fn;
  if (uni == 0) return 1.0;
  return static_cast<double>(c.tp) / static_cast<double>(uni);
}

/// F1 score with building as the positive class; first argument is the
/// prediction. Both masks all-background is defined as 1.0.
inline double f1(const BinaryMask& pred, const BinaryMask& ref) {
  const auto c = detail::count_overlap(pred, ref, "f1");
  const std::size_t denom = 2 * c.tp + c.fp + c.fn;
  if (denom == 0) return 1.0;
  return 2.0 * static_cast<double>(c.tp) / static_cast<double>(denom);
}

}  // namespace noiserank
