#pragma once

#include <cstdint>
#include <vector>

namespace vsls {

// Row-major grayscale image, intensities in [0, 1].
struct Image {
  int width = 0;
  int height = 0;
  std::vector<float> pixels;

  Image() = default;
  Image(int w, int h, float fill = 0.f) : width(w), height(h), pixels(static_cast<size_t>(w) * h, fill) {}

  float& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
  float at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
  size_t size() const { return pixels.size(); }
  bool empty() const { return pixels.empty(); }

  bool same_shape(const Image& o) const { return width == o.width && height == o.height; }
  bool operator==(const Image& o) const { return width == o.width && height == o.height && pixels == o.pixels; }
};

// Bilinear sample with clamp-to-edge; (x, y) in pixel coordinates.
double bilinear_sample(const Image& img, double x, double y);

// Mean squared difference between two equally sized images.
double image_mse(const Image& a, const Image& b);

// FNV-1a of the raw pixel bytes plus dimensions; used for dataset audits.
uint64_t image_hash(const Image& img);

}  // namespace vsls
