#include "egohand/watershed.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <queue>
#include <stdexcept>
#include <vector>

namespace egohand {

namespace {

constexpr int kDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr int kDy[8] = {0, 1, 1, 1, 0, -1, -1, -1};

// Work grid local to the blob's bounding box. Index -1 marks non-members.
struct LocalGrid {
  int w = 0, h = 0;
  int x0 = 0, y0 = 0;
  std::vector<std::int32_t> index;          // pixel -> member index or -1
  std::vector<PixelCoord> coords;           // member index -> local coords
  std::vector<double> value;                // member index -> dist value

  int at(int x, int y) const {
    if (x < 0 || x >= w || y < 0 || y >= h) return -1;
    return index[static_cast<std::size_t>(y) * w + x];
  }
};

LocalGrid build_grid(const Blob& blob, const FloatMap& dist) {
  LocalGrid g;
  g.w = blob.bbox.w;
  g.h = blob.bbox.h;
  g.x0 = blob.bbox.x;
  g.y0 = blob.bbox.y;
  g.index.assign(static_cast<std::size_t>(g.w) * g.h, -1);
  g.coords.reserve(blob.pixels.size());
  g.value.reserve(blob.pixels.size());
  for (const PixelCoord& p : blob.pixels) {
    const int lx = p.x - g.x0;
    const int ly = p.y - g.y0;
    if (p.x < 0 || p.y < 0 || p.x >= dist.width || p.y >= dist.height) {
      throw std::invalid_argument("watershed_split: dist does not cover the blob");
    }
    const int id = static_cast<int>(g.coords.size());
    g.index[static_cast<std::size_t>(ly) * g.w + lx] = id;
    g.coords.push_back({lx, ly});
    g.value.push_back(dist.at(p.x, p.y));
  }
  return g;
}

// Geodesic reconstruction by dilation of (value - h) under value, restricted
// to blob members, 8-connectivity (Vincent's hybrid raster + queue scheme).
std::vector<double> hmax_reconstruction(const LocalGrid& g, double h) {
  const std::size_t n = g.coords.size();
  std::vector<double> rec(n);
  for (std::size_t i = 0; i < n; ++i) rec[i] = std::max(0.0, g.value[i] - h);

  auto scan = [&](bool forward) {
    // Neighbors already visited in this scan direction.
    static const int fwd[4][2] = {{-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    static const int bwd[4][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}};
    const auto& half = forward ? fwd : bwd;
    for (int step = 0; step < g.h * g.w; ++step) {
      const int pos = forward ? step : g.h * g.w - 1 - step;
      const int y = pos / g.w;
      const int x = pos % g.w;
      const int id = g.at(x, y);
      if (id < 0) continue;
      double m = rec[id];
      for (const auto& d : half) {
        const int nid = g.at(x + d[0], y + d[1]);
        if (nid >= 0) m = std::max(m, rec[nid]);
      }
      rec[id] = std::min(m, g.value[id]);
    }
  };
  scan(true);
  scan(false);

  std::deque<int> fifo;
  for (std::size_t i = 0; i < n; ++i) {
    const PixelCoord c = g.coords[i];
    for (int d = 0; d < 8; ++d) {
      const int nid = g.at(c.x + kDx[d], c.y + kDy[d]);
      if (nid >= 0 && rec[nid] < rec[i] && rec[nid] < g.value[nid]) {
        fifo.push_back(static_cast<int>(i));
        break;
      }
    }
  }
  while (!fifo.empty()) {
    const int id = fifo.front();
    fifo.pop_front();
    const PixelCoord c = g.coords[id];
    for (int d = 0; d < 8; ++d) {
      const int nid = g.at(c.x + kDx[d], c.y + kDy[d]);
      if (nid < 0) continue;
      if (rec[nid] < rec[id] && rec[nid] < g.value[nid]) {
        rec[nid] = std::min(rec[id], g.value[nid]);
        fifo.push_back(nid);
      }
    }
  }
  return rec;
}

// Labels the regional maxima of rec: 8-connected equal-value plateaus with no
// strictly greater neighbor inside the blob. Returns the seed count; labels
// are 1-based, 0 = unlabeled.
int label_regional_maxima(const LocalGrid& g, const std::vector<double>& rec,
                          std::vector<int>& labels) {
  const std::size_t n = g.coords.size();
  labels.assign(n, 0);
  std::vector<std::int8_t> state(n, 0);  // 0 unknown, 1 visiting, 2 not-max
  int next_label = 0;
  std::vector<int> plateau, stack;

  for (std::size_t i = 0; i < n; ++i) {
    if (state[i] != 0) continue;
    // Flood the equal-value plateau containing i; watch for greater neighbors.
    plateau.clear();
    stack.push_back(static_cast<int>(i));
    state[i] = 1;
    bool is_max = true;
    const double v = rec[i];
    while (!stack.empty()) {
      const int id = stack.back();
      stack.pop_back();
      plateau.push_back(id);
      const PixelCoord c = g.coords[id];
      for (int d = 0; d < 8; ++d) {
        const int nid = g.at(c.x + kDx[d], c.y + kDy[d]);
        if (nid < 0) continue;
        if (rec[nid] > v) {
          is_max = false;
        } else if (rec[nid] == v && state[nid] == 0) {
          state[nid] = 1;
          stack.push_back(nid);
        }
      }
    }
    if (is_max) {
      ++next_label;
      for (int id : plateau) {
        labels[id] = next_label;
        state[id] = 2;
      }
    } else {
      for (int id : plateau) state[id] = 2;
    }
  }
  return next_label;
}

struct FloodEntry {
  double value;
  std::uint64_t age;
  int id;
  int label;
};

struct FloodOrder {
  // Highest distance first; earlier queue entries win ties.
  bool operator()(const FloodEntry& a, const FloodEntry& b) const {
    if (a.value != b.value) return a.value < b.value;
    return a.age > b.age;
  }
};

}  // namespace

std::vector<Blob> watershed_split(const Blob& blob, const FloatMap& dist, double h) {
  if (h <= 0.0) throw std::invalid_argument("watershed_split: h must be > 0");

  const LocalGrid g = build_grid(blob, dist);
  const std::vector<double> rec = hmax_reconstruction(g, h);

  std::vector<int> labels;
  const int n_seeds = label_regional_maxima(g, rec, labels);
  if (n_seeds <= 1) {
    return {blob};
  }

  // Flood from the seeds in decreasing distance order; ties resolve by queue
  // entry age so the result is deterministic.
  std::priority_queue<FloodEntry, std::vector<FloodEntry>, FloodOrder> queue;
  std::uint64_t age = 0;
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (labels[i] == 0) continue;
    const PixelCoord c = g.coords[i];
    for (int d = 0; d < 8; ++d) {
      const int nid = g.at(c.x + kDx[d], c.y + kDy[d]);
      if (nid >= 0 && labels[nid] == 0) {
        queue.push({g.value[nid], age++, nid, labels[i]});
      }
    }
  }
  while (!queue.empty()) {
    const FloodEntry e = queue.top();
    queue.pop();
    if (labels[e.id] != 0) continue;
    labels[e.id] = e.label;
    const PixelCoord c = g.coords[e.id];
    for (int d = 0; d < 8; ++d) {
      const int nid = g.at(c.x + kDx[d], c.y + kDy[d]);
      if (nid >= 0 && labels[nid] == 0) {
        queue.push({g.value[nid], age++, nid, e.label});
      }
    }
  }

  std::vector<std::vector<PixelCoord>> groups(n_seeds);
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    groups[labels[i] - 1].push_back({g.coords[i].x + g.x0, g.coords[i].y + g.y0});
  }
  std::vector<Blob> out;
  out.reserve(groups.size());
  for (auto& pix : groups) {
    if (!pix.empty()) out.push_back(make_blob(std::move(pix)));
  }
  return out;
}

}  // namespace egohand
