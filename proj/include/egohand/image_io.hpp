#pragma once

#include <string>

#include "egohand/raster.hpp"

namespace egohand {

// Reads an 8-bit PNG or JPEG (chosen by file signature). Grayscale files load
// as 1 channel, everything else as RGB. Throws std::runtime_error naming the
// path on failure.
Raster read_image(const std::string& path);

// Writes 8-bit PNG (grayscale or RGB per raster channels).
void write_png(const Raster& image, const std::string& path);

// Masks serialize as 8-bit grayscale PNG: 0 = background, 255 = foreground.
BinaryMask read_mask_png(const std::string& path);
void write_mask_png(const BinaryMask& mask, const std::string& path);

}  // namespace egohand
