#pragma once

#include <vector>

#include "egohand/blob.hpp"
#include "egohand/raster.hpp"

namespace egohand {

// Splits a blob into sub-blobs by marker-based watershed flooding of its
// interior distance transform. Markers are the h-maxima of the distance map
// within the blob: regional maxima that survive suppression of peaks
// shallower than h. The output sub-blobs partition the input pixel set.
// A single surviving maximum returns the blob unchanged.
//
// dist must cover the blob's bounding box (normally the full-frame distance
// transform of the mask the blob came from). h > 0.
std::vector<Blob> watershed_split(const Blob& blob, const FloatMap& dist, double h);

}  // namespace egohand
