#pragma once

#include "egohand/raster.hpp"

namespace egohand {

// Exact Euclidean distance transform: each foreground pixel gets its distance
// to the nearest background pixel, with the image border counting as
// background (a virtual background ring one pixel outside the frame).
// Background pixels get 0.
FloatMap distance_transform(const BinaryMask& mask);

// Serial reference, kept for testing and benchmarking. Bit-identical to the
// parallel kernel.
FloatMap distance_transform_serial(const BinaryMask& mask);

}  // namespace egohand
