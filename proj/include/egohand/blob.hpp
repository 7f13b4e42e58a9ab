#pragma once

#include <cstdint>
#include <vector>

#include "egohand/geometry.hpp"
#include "egohand/raster.hpp"

namespace egohand {

struct PixelCoord {
  int x = 0;
  int y = 0;
};

inline bool operator==(PixelCoord a, PixelCoord b) { return a.x == b.x && a.y == b.y; }

// Row-major ordering: by y, then x.
inline bool operator<(PixelCoord a, PixelCoord b) {
  return a.y < b.y || (a.y == b.y && a.x < b.x);
}

// One connected skin region. pixels are sorted row-major; the contour is a
// clockwise Moore boundary trace starting at the topmost-leftmost pixel.
struct Blob {
  std::vector<PixelCoord> pixels;
  std::vector<PixelCoord> contour;
  std::int64_t area = 0;
  double centroid_x = 0.0;
  double centroid_y = 0.0;
  BoxI bbox;

  std::vector<Vec2> contour_points() const;
  std::vector<Vec2> pixel_points() const;
};

// Builds a Blob from a pixel set: sorts row-major, computes area, centroid,
// bounding box, and traces the outer contour of the component containing the
// topmost-leftmost pixel. Connectivity of the set itself is not checked here;
// connected_components and watershed_split only ever pass connected sets.
Blob make_blob(std::vector<PixelCoord> pixels);

// All 8-connected foreground components with area >= min_area, ordered by
// their topmost-leftmost pixel (row-major scan order).
std::vector<Blob> connected_components(const BinaryMask& mask, int min_area);

// Paints blob pixels as foreground. Test/render helper.
void paint_blob(BinaryMask& mask, const Blob& blob);

}  // namespace egohand
