#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace egohand {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// Axis-aligned box in pixel coordinates, half-open: covers [x, x+w) x [y, y+h).
struct BoxI {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;
};

inline bool operator==(const BoxI& a, const BoxI& b) {
  return a.x == b.x && a.y == b.y && a.w == b.w && a.h == b.h;
}

// Infinite 2-D line given by a point and a unit direction.
struct Line2D {
  Vec2 point;
  Vec2 direction;  // unit length

  double distance_to(Vec2 p) const {
    return std::abs(cross(direction, p - point));
  }
};

struct LineFit {
  Line2D line;
  double mse = 0.0;  // mean squared orthogonal distance
};

// Total least squares fit: line through the centroid along the principal
// eigenvector of the point scatter. mse is the smaller covariance eigenvalue.
// Throws std::invalid_argument for fewer than 2 distinct points.
LineFit fit_line_tls(std::span<const Vec2> points);

struct LineCluster {
  Line2D line;
  std::vector<Vec2> members;
};

struct KMeansLinesResult {
  std::vector<LineCluster> clusters;
  // Total squared orthogonal error after each assign+refit iteration.
  std::vector<double> error_history;
  int iterations = 0;
  bool converged = false;
};

// k-means with 2-D lines as cluster prototypes and orthogonal distance as the
// assignment metric. Deterministic initialization (no RNG): points are split
// by the sign of their projection onto the minor principal axis of the cloud.
// Throws std::invalid_argument if points.size() < 2 * k.
KMeansLinesResult kmeans_lines(std::span<const Vec2> points, int k, int max_iters);

// Convex hull (monotone chain), counter-clockwise in standard axes, strictly
// convex (collinear interior points removed).
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

// Oriented rectangle. half_long >= half_short; angle is the long-axis
// direction in radians, normalized to [0, pi).
struct OrientedRect {
  Vec2 center;
  double half_long = 0.0;
  double half_short = 0.0;
  double angle = 0.0;

  double area() const { return 4.0 * half_long * half_short; }
  Vec2 long_axis() const { return {std::cos(angle), std::sin(angle)}; }
  std::array<Vec2, 4> corners() const;
  bool contains(Vec2 p, double tol = 1e-9) const;
};

// Minimum-area enclosing rectangle of the convex hull (rotating calipers).
// Degenerate inputs (single point or collinear set) yield a rect with the
// short half-extent clamped to 0.5.
OrientedRect min_area_rect(std::span<const Vec2> points);

}  // namespace egohand
