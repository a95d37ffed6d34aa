#include "hs/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace hs {

Point2 rotate(Point2 p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

Point2 rotate_about(Point2 p, Point2 center, double angle) {
  return center + rotate(p - center, angle);
}

Box2 bounding_box(const std::vector<Point2>& points) {
  if (points.empty()) {
    throw std::invalid_argument("bounding_box: empty point set");
  }
  Box2 box{points.front(), points.front()};
  for (const Point2& p : points) {
    box.lo.x = std::min(box.lo.x, p.x);
    box.lo.y = std::min(box.lo.y, p.y);
    box.hi.x = std::max(box.hi.x, p.x);
    box.hi.y = std::max(box.hi.y, p.y);
  }
  return box;
}

Box2 merge(const Box2& a, const Box2& b) {
  return {{std::min(a.lo.x, b.lo.x), std::min(a.lo.y, b.lo.y)},
          {std::max(a.hi.x, b.hi.x), std::max(a.hi.y, b.hi.y)}};
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = squared_norm(ab);
  if (len2 == 0.0) {
    return dist(p, a);
  }
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return dist(p, a + t * ab);
}

namespace {

int orientation_sign(Point2 a, Point2 b, Point2 c) {
  const double v = cross(b - a, c - a);
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

bool on_segment(Point2 a, Point2 b, Point2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Point2 a1, Point2 a2, Point2 b1, Point2 b2) {
  const int o1 = orientation_sign(a1, a2, b1);
  const int o2 = orientation_sign(a1, a2, b2);
  const int o3 = orientation_sign(b1, b2, a1);
  const int o4 = orientation_sign(b1, b2, a2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a1, a2, b1)) return true;
  if (o2 == 0 && on_segment(a1, a2, b2)) return true;
  if (o3 == 0 && on_segment(b1, b2, a1)) return true;
  if (o4 == 0 && on_segment(b1, b2, a2)) return true;
  return false;
}

double segment_segment_distance(Point2 a1, Point2 a2, Point2 b1, Point2 b2) {
  if (segments_intersect(a1, a2, b1, b2)) return 0.0;
  return std::min(std::min(point_segment_distance(a1, b1, b2),
                           point_segment_distance(a2, b1, b2)),
                  std::min(point_segment_distance(b1, a1, a2),
                           point_segment_distance(b2, a1, a2)));
}

std::vector<Point2> convex_hull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  if (n <= 2) return points;

  std::vector<Point2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 &&
           cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= 0.0) {
      --k;
    }
    hull[k++] = points[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower &&
           cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= 0.0) {
      --k;
    }
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace hs
