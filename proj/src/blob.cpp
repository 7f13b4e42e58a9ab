#include "egohand/blob.hpp"

#include <algorithm>
#include <stdexcept>

namespace egohand {

namespace {

// Clockwise in image coordinates (y grows downward), starting east.
constexpr int kDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr int kDy[8] = {0, 1, 1, 1, 0, -1, -1, -1};

int dir_index(int dx, int dy) {
  for (int d = 0; d < 8; ++d) {
    if (kDx[d] == dx && kDy[d] == dy) return d;
  }
  return -1;
}

// Moore boundary trace over a membership bitmap local to the blob's bbox.
std::vector<PixelCoord> trace_contour(const std::vector<std::uint8_t>& local, int lw, int lh,
                                      PixelCoord start_local, BoxI bbox) {
  auto member = [&](int x, int y) {
    return x >= 0 && x < lw && y >= 0 && y < lh && local[static_cast<std::size_t>(y) * lw + x] != 0;
  };

  std::vector<PixelCoord> contour;
  contour.push_back({start_local.x + bbox.x, start_local.y + bbox.y});

  PixelCoord c = start_local;
  // The west neighbor of the topmost-leftmost pixel is always background.
  PixelCoord b{start_local.x - 1, start_local.y};
  const PixelCoord b0 = b;

  // Hard cap: every boundary pixel is visited at most a handful of times.
  const std::size_t max_steps = 8 * static_cast<std::size_t>(lw) * lh + 16;
  for (std::size_t step = 0; step < max_steps; ++step) {
    const int bi = dir_index(b.x - c.x, b.y - c.y);
    int found = -1;
    for (int i = 1; i <= 8; ++i) {
      const int d = (bi + i) % 8;
      if (member(c.x + kDx[d], c.y + kDy[d])) {
        found = d;
        break;
      }
      b = {c.x + kDx[d], c.y + kDy[d]};  // last background visited
    }
    if (found < 0) break;  // isolated pixel
    c = {c.x + kDx[found], c.y + kDy[found]};
    if (c == start_local && b == b0) break;  // back at the initial state
    contour.push_back({c.x + bbox.x, c.y + bbox.y});
  }
  return contour;
}

}  // namespace

std::vector<Vec2> Blob::contour_points() const {
  std::vector<Vec2> pts;
  pts.reserve(contour.size());
  for (PixelCoord p : contour) pts.push_back({static_cast<double>(p.x), static_cast<double>(p.y)});
  return pts;
}

std::vector<Vec2> Blob::pixel_points() const {
  std::vector<Vec2> pts;
  pts.reserve(pixels.size());
  for (PixelCoord p : pixels) pts.push_back({static_cast<double>(p.x), static_cast<double>(p.y)});
  return pts;
}

Blob make_blob(std::vector<PixelCoord> pixels) {
  if (pixels.empty()) throw std::invalid_argument("make_blob: empty pixel set");
  std::sort(pixels.begin(), pixels.end());
  pixels.erase(std::unique(pixels.begin(), pixels.end()), pixels.end());

  Blob blob;
  blob.area = static_cast<std::int64_t>(pixels.size());

  int min_x = pixels[0].x, max_x = pixels[0].x;
  int min_y = pixels[0].y, max_y = pixels[0].y;
  double sx = 0.0, sy = 0.0;
  for (PixelCoord p : pixels) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
    sx += p.x;
    sy += p.y;
  }
  blob.centroid_x = sx / static_cast<double>(pixels.size());
  blob.centroid_y = sy / static_cast<double>(pixels.size());
  blob.bbox = {min_x, min_y, max_x - min_x + 1, max_y - min_y + 1};

  const int lw = blob.bbox.w;
  const int lh = blob.bbox.h;
  std::vector<std::uint8_t> local(static_cast<std::size_t>(lw) * lh, 0);
  for (PixelCoord p : pixels) {
    local[static_cast<std::size_t>(p.y - min_y) * lw + (p.x - min_x)] = 1;
  }
  // pixels are sorted row-major, so front() is the topmost-leftmost pixel.
  const PixelCoord start_local{pixels.front().x - min_x, pixels.front().y - min_y};
  blob.contour = trace_contour(local, lw, lh, start_local, blob.bbox);
  blob.pixels = std::move(pixels);
  return blob;
}

std::vector<Blob> connected_components(const BinaryMask& mask, int min_area) {
  const int w = mask.width;
  const int h = mask.height;
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(w) * h, 0);
  std::vector<Blob> blobs;
  std::vector<PixelCoord> stack;

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t idx = static_cast<std::size_t>(y) * w + x;
      if (!mask.bits[idx] || visited[idx]) continue;

      std::vector<PixelCoord> component;
      visited[idx] = 1;
      stack.push_back({x, y});
      while (!stack.empty()) {
        const PixelCoord p = stack.back();
        stack.pop_back();
        component.push_back(p);
        for (int d = 0; d < 8; ++d) {
          const int nx = p.x + kDx[d];
          const int ny = p.y + kDy[d];
          if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
          const std::size_t nidx = static_cast<std::size_t>(ny) * w + nx;
          if (mask.bits[nidx] && !visited[nidx]) {
            visited[nidx] = 1;
            stack.push_back({nx, ny});
          }
        }
      }
      if (static_cast<int>(component.size()) >= min_area) {
        blobs.push_back(make_blob(std::move(component)));
      }
    }
  }
  return blobs;
}

void paint_blob(BinaryMask& mask, const Blob& blob) {
  for (PixelCoord p : blob.pixels) {
    if (mask.in_bounds(p.x, p.y)) mask.set(p.x, p.y, true);
  }
}

}  // namespace egohand
