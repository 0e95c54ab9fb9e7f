#include "vsls/texture.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace vsls {

Image make_test_texture(uint64_t seed, int width, int height) {
  Rng rng(seed ^ 0xa5a5a5a5deadbeefull);

  struct Wave {
    double kx, ky, phase, amp;
  };
  struct Blob {
    double cx, cy, sigma, amp;
  };
  std::vector<Wave> waves(6);
  for (auto& w : waves) {
    const double freq = rng.uniform(1.5, 6.0);
    const double ang = rng.uniform(0.0, 2.0 * M_PI);
    w = {freq * std::cos(ang), freq * std::sin(ang), rng.uniform(0.0, 2.0 * M_PI), rng.uniform(0.4, 1.0)};
  }
  std::vector<Blob> blobs(8);
  for (auto& b : blobs)
    b = {rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0), rng.uniform(0.05, 0.2), rng.uniform(-1.5, 1.5)};

  Image img(width, height);
  double lo = 1e30, hi = -1e30;
  std::vector<double> field(img.size());
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double u = static_cast<double>(x) / (width - 1);
      const double v = static_cast<double>(y) / (height - 1);
      double s = 0.0;
      for (const auto& w : waves) s += w.amp * std::cos(2.0 * M_PI * (w.kx * u + w.ky * v) + w.phase);
      for (const auto& b : blobs) {
        const double dx = u - b.cx, dy = v - b.cy;
        s += b.amp * std::exp(-(dx * dx + dy * dy) / (2.0 * b.sigma * b.sigma));
      }
      field[static_cast<size_t>(y) * width + x] = s;
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
  }
  const double span = std::max(hi - lo, 1e-12);
  for (size_t i = 0; i < field.size(); ++i)
    img.pixels[i] = static_cast<float>(0.05 + 0.9 * (field[i] - lo) / span);
  return img;
}

}  // namespace vsls
