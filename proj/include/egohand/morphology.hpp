#pragma once

#include <vector>

#include "egohand/blob.hpp"
#include "egohand/raster.hpp"

namespace egohand {

// Offsets of a disc structuring element: all (dx, dy) with dx^2 + dy^2 <= r^2.
// radius 0 yields just the origin.
std::vector<PixelCoord> disc_offsets(int radius);

// Binary morphology with a disc structuring element. Pixels outside the frame
// count as background for both operations.
BinaryMask binary_erode(const BinaryMask& mask, int radius);
BinaryMask binary_dilate(const BinaryMask& mask, int radius);
BinaryMask binary_open(const BinaryMask& mask, int radius);
BinaryMask binary_close(const BinaryMask& mask, int radius);

// Serial references kept for testing and benchmarking.
BinaryMask binary_erode_serial(const BinaryMask& mask, int radius);
BinaryMask binary_dilate_serial(const BinaryMask& mask, int radius);

}  // namespace egohand
