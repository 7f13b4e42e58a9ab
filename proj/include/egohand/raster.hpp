#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace egohand {

// 8-bit image, row-major, interleaved samples. channels is 1 (gray) or 3 (RGB).
struct Raster {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<std::uint8_t> data;

  Raster() = default;

  Raster(int w, int h, int ch, std::uint8_t fill = 0)
      : width(w), height(h), channels(ch),
        data(static_cast<std::size_t>(w) * h * ch, fill) {
    if (w < 1 || h < 1) throw std::invalid_argument("Raster: width and height must be >= 1");
    if (ch != 1 && ch != 3) throw std::invalid_argument("Raster: channels must be 1 or 3");
  }

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }

  std::uint8_t at(int x, int y, int c = 0) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }

  std::uint8_t& at(int x, int y, int c = 0) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
};

// One boolean per pixel, row-major. Stored as bytes holding 0 or 1.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  BinaryMask() = default;

  BinaryMask(int w, int h, bool fill = false)
      : width(w), height(h), bits(static_cast<std::size_t>(w) * h, fill ? 1 : 0) {
    if (w < 1 || h < 1) throw std::invalid_argument("BinaryMask: width and height must be >= 1");
  }

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }

  bool at(int x, int y) const {
    return bits[static_cast<std::size_t>(y) * width + x] != 0;
  }

  void set(int x, int y, bool v) {
    bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (std::uint8_t b : bits) n += b;
    return n;
  }
};

// Dense real-valued per-pixel map (distance transforms, probabilities).
struct FloatMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  FloatMap() = default;

  FloatMap(int w, int h, double fill = 0.0)
      : width(w), height(h), values(static_cast<std::size_t>(w) * h, fill) {
    if (w < 1 || h < 1) throw std::invalid_argument("FloatMap: width and height must be >= 1");
  }

  double at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }

  double& at(int x, int y) {
    return values[static_cast<std::size_t>(y) * width + x];
  }
};

}  // namespace egohand
