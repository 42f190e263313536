#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "finmet/metric_space.hpp"

namespace finmet {

struct Point2 {
    double x = 0.0, y = 0.0;
};

inline bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }

inline double euclid(const Point2& a, const Point2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Finite planar point set; duplicates are removed on ingest.
struct PlanarCloud {
    std::vector<Point2> points;

    PlanarCloud() = default;
    explicit PlanarCloud(std::vector<Point2> pts) : points(std::move(pts)) {
        std::sort(points.begin(), points.end(), [](const Point2& a, const Point2& b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
        });
        points.erase(std::unique(points.begin(), points.end()), points.end());
        if (points.empty()) throw std::invalid_argument("PlanarCloud: empty cloud");
    }

    int size() const { return static_cast<int>(points.size()); }
};

inline double cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Counterclockwise hull vertices, collinear interior points dropped
// (monotone chain). Degenerate inputs give 1 or 2 vertices.
inline std::vector<Point2> convex_hull(const PlanarCloud& cloud) {
    std::vector<Point2> pts = cloud.points;   // already sorted and unique
    const int n = static_cast<int>(pts.size());
    if (n <= 2) return pts;
    std::vector<Point2> hull(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const int lower = k + 1;
    for (int i = n - 2; i >= 0; --i) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
    return hull;
}

inline double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    if (len2 == 0) return euclid(p, a);
    double t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * vx), p.y - (a.y + t * vy));
}

// Distance from a point to a solid convex polygon given by CCW vertices;
// 0 inside.
inline double point_polygon_distance(const Point2& p, const std::vector<Point2>& hull) {
    if (hull.empty()) throw std::invalid_argument("point_polygon_distance: empty polygon");
    if (hull.size() == 1) return euclid(p, hull[0]);
    if (hull.size() == 2) return point_segment_distance(p, hull[0], hull[1]);
    bool inside = true;
    for (size_t i = 0; i < hull.size(); ++i) {
        const Point2& a = hull[i];
        const Point2& b = hull[(i + 1) % hull.size()];
        if (cross(a, b, p) < 0) {
            inside = false;
            break;
        }
    }
    if (inside) return 0.0;
    double m = inf();
    for (size_t i = 0; i < hull.size(); ++i)
        m = std::min(m, point_segment_distance(p, hull[i], hull[(i + 1) % hull.size()]));
    return m;
}

// Hausdorff distance of planar clouds. Point mode compares the finite
// sets; hull mode compares the solid convex hulls (the max of a convex
// distance function over a polygon is attained at a vertex, so scanning
// vertices against the other solid polygon is exact).
//
// There is deliberately no boundary mode: closeness of solid figures
// neither implies nor follows from closeness of their boundaries (a disk
// against a fine net of it, or against its own circle).
inline double planar_hausdorff(const PlanarCloud& A, const PlanarCloud& B, bool as_hulls = false) {
    if (!as_hulls) {
        double h = 0.0;
        for (const Point2& a : A.points) {
            double m = inf();
            for (const Point2& b : B.points) m = std::min(m, euclid(a, b));
            h = std::max(h, m);
        }
        for (const Point2& b : B.points) {
            double m = inf();
            for (const Point2& a : A.points) m = std::min(m, euclid(a, b));
            h = std::max(h, m);
        }
        return h;
    }
    const std::vector<Point2> ha = convex_hull(A);
    const std::vector<Point2> hb = convex_hull(B);
    double h = 0.0;
    for (const Point2& v : ha) h = std::max(h, point_polygon_distance(v, hb));
    for (const Point2& v : hb) h = std::max(h, point_polygon_distance(v, ha));
    return h;
}

} // namespace finmet
