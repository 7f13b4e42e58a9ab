#include "egohand/morphology.hpp"

#include <stdexcept>

namespace egohand {

std::vector<PixelCoord> disc_offsets(int radius) {
  if (radius < 0) throw std::invalid_argument("disc_offsets: radius must be >= 0");
  std::vector<PixelCoord> offsets;
  const int r2 = radius * radius;
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      if (dx * dx + dy * dy <= r2) offsets.push_back({dx, dy});
    }
  }
  return offsets;
}

namespace {

enum class Op { erode, dilate };

BinaryMask morph(const BinaryMask& mask, int radius, Op op, bool parallel) {
  const auto offsets = disc_offsets(radius);
  const int w = mask.width;
  const int h = mask.height;
  BinaryMask out(w, h, false);

#pragma omp parallel for schedule(static) if (parallel)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      bool v = op == Op::erode;
      for (const PixelCoord& o : offsets) {
        const int nx = x + o.x;
        const int ny = y + o.y;
        const bool fg = mask.in_bounds(nx, ny) && mask.at(nx, ny);
        if (op == Op::erode) {
          if (!fg) {
            v = false;
            break;
          }
        } else {
          if (fg) {
            v = true;
            break;
          }
        }
      }
      out.set(x, y, v);
    }
  }
  return out;
}

}  // namespace

BinaryMask binary_erode(const BinaryMask& mask, int radius) {
  return morph(mask, radius, Op::erode, true);
}

BinaryMask binary_dilate(const BinaryMask& mask, int radius) {
  return morph(mask, radius, Op::dilate, true);
}

BinaryMask binary_erode_serial(const BinaryMask& mask, int radius) {
  return morph(mask, radius, Op::erode, false);
}

BinaryMask binary_dilate_serial(const BinaryMask& mask, int radius) {
  return morph(mask, radius, Op::dilate, false);
}

BinaryMask binary_open(const BinaryMask& mask, int radius) {
  return binary_dilate(binary_erode(mask, radius), radius);
}

BinaryMask binary_close(const BinaryMask& mask, int radius) {
  return binary_erode(binary_dilate(mask, radius), radius);
}

}  // namespace egohand
