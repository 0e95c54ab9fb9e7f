#pragma once

#include "vsls/image.hpp"
#include "vsls/rng.hpp"

namespace vsls {

// Procedural grayscale texture: a smooth random field (sum of oriented cosine
// waves plus Gaussian blobs) normalized into [0.05, 0.95]. Smoothness keeps
// bilinear sampling faithful and image gradients informative everywhere,
// which is what the photometric controller needs from a "high texture" scene.
Image make_test_texture(uint64_t seed, int width = 128, int height = 128);

}  // namespace vsls
