#include "egohand/distance_transform.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace egohand {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 1-D squared distance transform via the lower envelope of parabolas
// (Felzenszwalb & Huttenlocher). d[q] = min_p ((q - p)^2 + f[p]).
// Parabolas rooted at +inf never contribute and are skipped outright, which
// keeps the intersection arithmetic finite.
void dt_1d(const double* f, double* d, int n, int* v, double* z) {
  int k = -1;
  for (int q = 0; q < n; ++q) {
    if (f[q] == kInf) continue;
    const double fq = f[q] + static_cast<double>(q) * q;
    double s = -kInf;
    while (k >= 0) {
      s = (fq - (f[v[k]] + static_cast<double>(v[k]) * v[k])) / (2.0 * (q - v[k]));
      if (s <= z[k]) {
        --k;
      } else {
        break;
      }
    }
    if (k < 0) {
      k = 0;
      v[0] = q;
      z[0] = -kInf;
    } else {
      ++k;
      v[k] = q;
      z[k] = s;
    }
    z[k + 1] = kInf;
  }

  if (k < 0) {
    for (int q = 0; q < n; ++q) d[q] = kInf;
    return;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const double dq = q - v[k];
    d[q] = dq * dq + f[v[k]];
  }
}

// Shared implementation; `parallel` toggles the OpenMP pragmas.
FloatMap edt_impl(const BinaryMask& mask, bool parallel) {
  const int w = mask.width;
  const int h = mask.height;
  // Pad with a one-pixel background ring so the frame border acts as
  // background.
  const int pw = w + 2;
  const int ph = h + 2;

  std::vector<double> grid(static_cast<std::size_t>(pw) * ph, 0.0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (mask.at(x, y)) grid[static_cast<std::size_t>(y + 1) * pw + (x + 1)] = kInf;
    }
  }

  // Column pass.
  std::vector<double> tmp(static_cast<std::size_t>(pw) * ph);
#pragma omp parallel for schedule(static) if (parallel)
  for (int x = 0; x < pw; ++x) {
    std::vector<double> f(ph), d(ph), z(ph + 1);
    std::vector<int> v(ph);
    for (int y = 0; y < ph; ++y) f[y] = grid[static_cast<std::size_t>(y) * pw + x];
    dt_1d(f.data(), d.data(), ph, v.data(), z.data());
    for (int y = 0; y < ph; ++y) tmp[static_cast<std::size_t>(y) * pw + x] = d[y];
  }

  // Row pass.
  FloatMap out(w, h, 0.0);
#pragma omp parallel for schedule(static) if (parallel)
  for (int y = 1; y < ph - 1; ++y) {
    std::vector<double> d(pw), z(pw + 1);
    std::vector<int> v(pw);
    const double* f = &tmp[static_cast<std::size_t>(y) * pw];
    dt_1d(f, d.data(), pw, v.data(), z.data());
    for (int x = 1; x < pw - 1; ++x) {
      out.at(x - 1, y - 1) = std::sqrt(d[x]);
    }
  }
  return out;
}

}  // namespace

FloatMap distance_transform(const BinaryMask& mask) { return edt_impl(mask, true); }

FloatMap distance_transform_serial(const BinaryMask& mask) { return edt_impl(mask, false); }

}  // namespace egohand
