#include "egohand/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace egohand {

namespace {

constexpr double kPi = std::numbers::pi;

double normalize_angle(double a) {
  a = std::fmod(a, kPi);
  if (a < 0.0) a += kPi;
  // fmod can return exactly pi for inputs just below a multiple of pi
  if (a >= kPi) a -= kPi;
  return a;
}

struct Scatter {
  Vec2 mean;
  double cxx = 0.0, cxy = 0.0, cyy = 0.0;  // covariance (scatter / n)
};

Scatter covariance(std::span<const Vec2> pts) {
  Scatter s;
  const double n = static_cast<double>(pts.size());
  for (const Vec2& p : pts) {
    s.mean.x += p.x;
    s.mean.y += p.y;
  }
  s.mean.x /= n;
  s.mean.y /= n;
  for (const Vec2& p : pts) {
    const double dx = p.x - s.mean.x;
    const double dy = p.y - s.mean.y;
    s.cxx += dx * dx;
    s.cxy += dx * dy;
    s.cyy += dy * dy;
  }
  s.cxx /= n;
  s.cxy /= n;
  s.cyy /= n;
  return s;
}

}  // namespace

LineFit fit_line_tls(std::span<const Vec2> points) {
  if (points.size() < 2) throw std::invalid_argument("fit_line_tls: need at least 2 points");

  const Scatter s = covariance(points);

  // Closed-form eigen decomposition of the symmetric 2x2 covariance.
  const double half_tr = 0.5 * (s.cxx + s.cyy);
  const double disc = std::sqrt(0.25 * (s.cxx - s.cyy) * (s.cxx - s.cyy) + s.cxy * s.cxy);
  const double lambda_max = half_tr + disc;
  const double lambda_min = std::max(0.0, half_tr - disc);

  if (lambda_max <= 0.0) throw std::invalid_argument("fit_line_tls: all points identical");

  Vec2 dir;
  if (std::abs(s.cxy) > 1e-300) {
    // Eigenvector of lambda_max: pick the numerically larger formulation.
    Vec2 v1{lambda_max - s.cyy, s.cxy};
    Vec2 v2{s.cxy, lambda_max - s.cxx};
    dir = norm(v1) >= norm(v2) ? v1 : v2;
  } else {
    dir = s.cxx >= s.cyy ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
  }
  const double len = norm(dir);
  dir = {dir.x / len, dir.y / len};

  return LineFit{Line2D{s.mean, dir}, lambda_min};
}

namespace {

double total_squared_error(const std::vector<LineCluster>& clusters) {
  double total = 0.0;
  for (const auto& c : clusters) {
    for (const Vec2& p : c.members) {
      const double d = c.line.distance_to(p);
      total += d * d;
    }
  }
  return total;
}

// Initial partition: order points along an axis and split into k contiguous
// groups. For k == 2 the sign of the minor-axis projection is used directly.
std::vector<int> initial_assignment(std::span<const Vec2> points, int k) {
  const LineFit pca = fit_line_tls(points);
  const Vec2 minor{-pca.line.direction.y, pca.line.direction.x};

  std::vector<int> assign(points.size(), 0);
  if (k == 1) return assign;

  if (k == 2) {
    std::size_t side0 = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double proj = dot(points[i] - pca.line.point, minor);
      assign[i] = proj >= 0.0 ? 0 : 1;
      if (assign[i] == 0) ++side0;
    }
    if (side0 >= 2 && points.size() - side0 >= 2) return assign;
    // Near-collinear cloud: every minor projection has the same sign. Fall
    // back to splitting at the median of the major-axis projection.
  }

  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dot(points[a] - pca.line.point, pca.line.direction) <
           dot(points[b] - pca.line.point, pca.line.direction);
  });
  const std::size_t per = points.size() / k;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const int c = std::min<int>(k - 1, static_cast<int>(rank / per));
    assign[order[rank]] = c;
  }
  return assign;
}

// Keep every cluster at >= 2 members: pull the points with the smallest
// distance margin (distance to the starving cluster minus distance to their
// own) out of clusters that can spare them.
void repair_small_clusters(std::span<const Vec2> points, std::vector<int>& assign,
                           const std::vector<LineCluster>& clusters, int k) {
  std::vector<int> sizes(k, 0);
  for (int a : assign) ++sizes[a];

  for (int c = 0; c < k; ++c) {
    while (sizes[c] < 2) {
      int best = -1;
      double best_margin = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < points.size(); ++i) {
        const int own = assign[i];
        if (own == c || sizes[own] <= 2) continue;
        const double margin = clusters[c].line.distance_to(points[i]) -
                              clusters[own].line.distance_to(points[i]);
        if (margin < best_margin) {
          best_margin = margin;
          best = static_cast<int>(i);
        }
      }
      if (best < 0) throw std::invalid_argument("kmeans_lines: cannot keep all clusters populated");
      --sizes[assign[best]];
      assign[best] = c;
      ++sizes[c];
    }
  }
}

}  // namespace

KMeansLinesResult kmeans_lines(std::span<const Vec2> points, int k, int max_iters) {
  if (k < 1) throw std::invalid_argument("kmeans_lines: k must be >= 1");
  if (points.size() < static_cast<std::size_t>(2 * k))
    throw std::invalid_argument("kmeans_lines: need at least 2k points");

  std::vector<int> assign = initial_assignment(points, k);

  KMeansLinesResult result;
  result.clusters.resize(k);

  auto refit = [&]() {
    for (int c = 0; c < k; ++c) {
      result.clusters[c].members.clear();
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      result.clusters[assign[i]].members.push_back(points[i]);
    }
    for (int c = 0; c < k; ++c) {
      auto& cl = result.clusters[c];
      bool distinct = false;
      for (std::size_t i = 1; i < cl.members.size() && !distinct; ++i) {
        distinct = cl.members[i].x != cl.members[0].x || cl.members[i].y != cl.members[0].y;
      }
      if (distinct) {
        cl.line = fit_line_tls(cl.members).line;
      }
      // All-identical cluster keeps its previous line; distance to every
      // member is then constant so the iteration still terminates.
    }
  };

  refit();

  for (int iter = 0; iter < max_iters; ++iter) {
    // Assign to nearest line, ties to the lower index.
    std::vector<int> next(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      int best = 0;
      double best_d = result.clusters[0].line.distance_to(points[i]);
      for (int c = 1; c < k; ++c) {
        const double d = result.clusters[c].line.distance_to(points[i]);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      next[i] = best;
    }
    repair_small_clusters(points, next, result.clusters, k);

    const bool unchanged = next == assign;
    assign = std::move(next);
    refit();
    result.error_history.push_back(total_squared_error(result.clusters));
    result.iterations = iter + 1;
    if (unchanged) {
      result.converged = true;
      break;
    }
  }
  return result;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> points) {
  std::sort(points.begin(), points.end(), [](Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }),
               points.end());
  const std::size_t n = points.size();
  if (n <= 2) return points;

  std::vector<Vec2> hull(2 * n);
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower
    while (m >= 2 && cross(hull[m - 1] - hull[m - 2], points[i] - hull[m - 2]) <= 0) --m;
    hull[m++] = points[i];
  }
  const std::size_t lower = m + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper
    while (m >= lower && cross(hull[m - 1] - hull[m - 2], points[i] - hull[m - 2]) <= 0) --m;
    hull[m++] = points[i];
  }
  hull.resize(m - 1);
  return hull;
}

std::array<Vec2, 4> OrientedRect::corners() const {
  const Vec2 u = long_axis();
  const Vec2 v{-u.y, u.x};
  const Vec2 a = u * half_long;
  const Vec2 b = v * half_short;
  return {center + a + b, center + a - b, center - a - b, center - a + b};
}

bool OrientedRect::contains(Vec2 p, double tol) const {
  const Vec2 u = long_axis();
  const Vec2 v{-u.y, u.x};
  const Vec2 d = p - center;
  return std::abs(dot(d, u)) <= half_long + tol && std::abs(dot(d, v)) <= half_short + tol;
}

OrientedRect min_area_rect(std::span<const Vec2> points) {
  std::vector<Vec2> hull = convex_hull(std::vector<Vec2>(points.begin(), points.end()));

  if (hull.empty()) throw std::invalid_argument("min_area_rect: no points");

  if (hull.size() == 1) {
    return OrientedRect{hull[0], 0.5, 0.5, 0.0};
  }
  if (hull.size() == 2) {
    // Collinear input.
    const Vec2 d = hull[1] - hull[0];
    const double len = norm(d);
    OrientedRect r;
    r.center = (hull[0] + hull[1]) * 0.5;
    r.half_long = std::max(len * 0.5, 0.5);
    r.half_short = 0.5;
    r.angle = normalize_angle(std::atan2(d.y, d.x));
    return r;
  }

  double best_area = std::numeric_limits<double>::infinity();
  OrientedRect best;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Vec2 e = hull[(i + 1) % hull.size()] - hull[i];
    const double elen = norm(e);
    if (elen == 0.0) continue;
    const Vec2 u{e.x / elen, e.y / elen};
    const Vec2 v{-u.y, u.x};

    double min_u = std::numeric_limits<double>::infinity(), max_u = -min_u;
    double min_v = min_u, max_v = -min_u;
    for (const Vec2& p : hull) {
      const double pu = dot(p, u);
      const double pv = dot(p, v);
      min_u = std::min(min_u, pu);
      max_u = std::max(max_u, pu);
      min_v = std::min(min_v, pv);
      max_v = std::max(max_v, pv);
    }
    const double du = max_u - min_u;
    const double dv = max_v - min_v;
    const double area = du * dv;
    if (area < best_area) {
      best_area = area;
      const double cu = 0.5 * (min_u + max_u);
      const double cv = 0.5 * (min_v + max_v);
      best.center = {u.x * cu + v.x * cv, u.y * cu + v.y * cv};
      if (du >= dv) {
        best.half_long = du * 0.5;
        best.half_short = dv * 0.5;
        best.angle = normalize_angle(std::atan2(u.y, u.x));
      } else {
        best.half_long = dv * 0.5;
        best.half_short = du * 0.5;
        best.angle = normalize_angle(std::atan2(v.y, v.x));
      }
    }
  }
  best.half_short = std::max(best.half_short, 1e-12);
  return best;
}

}  // namespace egohand
