#include "vsls/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vsls {

double bilinear_sample(const Image& img, double x, double y) {
  const double xc = std::clamp(x, 0.0, static_cast<double>(img.width - 1));
  const double yc = std::clamp(y, 0.0, static_cast<double>(img.height - 1));
  const int x0 = std::min(static_cast<int>(std::floor(xc)), img.width - 2 >= 0 ? img.width - 2 : 0);
  const int y0 = std::min(static_cast<int>(std::floor(yc)), img.height - 2 >= 0 ? img.height - 2 : 0);
  const int x1 = std::min(x0 + 1, img.width - 1);
  const int y1 = std::min(y0 + 1, img.height - 1);
  const double fx = xc - x0;
  const double fy = yc - y0;
  return (1.0 - fy) * ((1.0 - fx) * img.at(x0, y0) + fx * img.at(x1, y0)) +
         fy * ((1.0 - fx) * img.at(x0, y1) + fx * img.at(x1, y1));
}

double image_mse(const Image& a, const Image& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("image_mse: dimension mismatch");
  double acc = 0.0;
  for (size_t i = 0; i < a.pixels.size(); ++i) {
    const double d = static_cast<double>(a.pixels[i]) - b.pixels[i];
    acc += d * d;
  }
  return acc / static_cast<double>(a.pixels.size());
}

uint64_t image_hash(const Image& img) {
  uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](const unsigned char* p, size_t n) {
    for (size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 0x100000001b3ull;
    }
  };
  const int dims[2] = {img.width, img.height};
  mix(reinterpret_cast<const unsigned char*>(dims), sizeof(dims));
  mix(reinterpret_cast<const unsigned char*>(img.pixels.data()), img.pixels.size() * sizeof(float));
  return h;
}

}  // namespace vsls
