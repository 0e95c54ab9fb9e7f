#pragma once

#include <string>

#include "vsls/image.hpp"

namespace vsls {

// Reads an 8-bit PNG (gray or RGB/RGBA, converted to grayscale by Rec. 601
// luma) into [0, 1] intensities. Throws std::runtime_error on IO/parse errors.
Image read_png_gray(const std::string& path);

// Writes intensities in [0, 1] as an 8-bit grayscale PNG.
void write_png_gray(const std::string& path, const Image& img);

}  // namespace vsls
