#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace hs {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Point2 a, Point2 b) { return !(a == b); }

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double squared_norm(Point2 a) { return a.x * a.x + a.y * a.y; }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline double squared_dist(Point2 a, Point2 b) { return squared_norm(a - b); }

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Strict ordering by (x, y); the canonical order used for deduplication
// and for deterministic scans.
inline bool lex_less(Point2 a, Point2 b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

Point2 rotate(Point2 p, double angle);
Point2 rotate_about(Point2 p, Point2 center, double angle);

// Axis-aligned bounding box; lo <= hi componentwise.
struct Box2 {
  Point2 lo;
  Point2 hi;

  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  bool contains(Point2 p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
  }
  bool contains(const Box2& other) const {
    return contains(other.lo) && contains(other.hi);
  }
  Box2 expanded(double r) const {
    return {{lo.x - r, lo.y - r}, {hi.x + r, hi.y + r}};
  }
};

Box2 bounding_box(const std::vector<Point2>& points);
Box2 merge(const Box2& a, const Box2& b);

double point_segment_distance(Point2 p, Point2 a, Point2 b);
double segment_segment_distance(Point2 a1, Point2 a2, Point2 b1, Point2 b2);
bool segments_intersect(Point2 a1, Point2 a2, Point2 b1, Point2 b2);

// Convex hull (Andrew's monotone chain), counterclockwise, no duplicates.
// Degenerate inputs (all collinear) yield the extreme points.
std::vector<Point2> convex_hull(std::vector<Point2> points);

}  // namespace hs
