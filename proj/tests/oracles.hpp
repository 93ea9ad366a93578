// Test-only oracles, independent of the implementation paths they check.
#pragma once

#include <optional>
#include <vector>

#include "tritile/geom.hpp"
#include "tritile/tile.hpp"

namespace oracles {

using tritile::ConvexPolygon;
using tritile::Point;
using tritile::QS3;
using tritile::Rat;
using tritile::Triangle;

// Sutherland-Hodgman clip of a convex subject by the closed left
// half-plane of (a -> b), exact.
inline std::vector<Point> clip_halfplane(const std::vector<Point>& subject, const Point& a,
                                         const Point& b) {
    std::vector<Point> out;
    const std::size_t n = subject.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& cur = subject[i];
        const Point& nxt = subject[(i + 1) % n];
        int sc = tritile::orientation(a, b, cur);
        int sn = tritile::orientation(a, b, nxt);
        if (sc >= 0) out.push_back(cur);
        if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
            // exact line-segment intersection: cur + t (nxt - cur)
            QS3 denom = cross(b - a, nxt - cur);
            QS3 t = cross(b - a, a - cur) / denom;
            out.push_back(cur + Point{t * (nxt.x - cur.x), t * (nxt.y - cur.y)});
        }
    }
    return out;
}

inline QS3 poly_area(const std::vector<Point>& poly) {
    QS3 s(0);
    for (std::size_t i = 0; i < poly.size(); ++i)
        s += cross(poly[i], poly[(i + 1) % poly.size()]);
    return s / QS3(2);
}

inline std::vector<Point> to_points(const Triangle& t) { return {t.v0, t.v1, t.v2}; }
inline std::vector<Point> to_points(const ConvexPolygon& p) { return p.vertices(); }

// exact area of the intersection of two convex polygons
template <typename A, typename B>
QS3 intersection_area(const A& subject, const B& clip) {
    std::vector<Point> cur = to_points(subject);
    std::vector<Point> cp = to_points(clip);
    for (std::size_t i = 0; i < cp.size() && cur.size() >= 3; ++i)
        cur = clip_halfplane(cur, cp[i], cp[(i + 1) % cp.size()]);
    if (cur.size() < 3) return QS3(0);
    return poly_area(cur);
}

// clipping-based tiling certification: congruence is assumed checked by
// the caller; decides partition purely through intersection areas
inline bool clipping_partition_oracle(const tritile::Tiling& t) {
    std::vector<Triangle> feet;
    feet.reserve(t.placements.size());
    for (const auto& pl : t.placements) feet.push_back(pl.footprint(t.shape));
    QS3 total(0);
    for (std::size_t i = 0; i < feet.size(); ++i) {
        QS3 in_target = intersection_area(feet[i], t.target);
        QS3 own = feet[i].signed_area2() / QS3(2);
        if (in_target != own) return false;  // pokes outside
        total += own;
        for (std::size_t j = i + 1; j < feet.size(); ++j) {
            if (intersection_area(feet[i], feet[j]).sign() != 0) return false;
        }
    }
    return total == t.target.signed_area();
}

// brute-force Frobenius representability over coprime (a, b)
inline std::optional<std::pair<long, long>> frobenius_brute(long target, long a, long b) {
    for (long k = 0; k * a <= target; ++k)
        for (long k1 = 0; k * a + k1 * b <= target; ++k1)
            if (k * a + k1 * b == target) return std::make_pair(k, k1);
    return std::nullopt;
}

}  // namespace oracles
