#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <unordered_map>
#include <vector>

#include "tritile/tile.hpp"

namespace tritile {

enum class FailureKind { BadCongruence, OutsideTarget, Overlap, AreaMismatch, CountMismatch };

inline const char* failure_kind_name(FailureKind k) {
    switch (k) {
        case FailureKind::BadCongruence: return "BadCongruence";
        case FailureKind::OutsideTarget: return "OutsideTarget";
        case FailureKind::Overlap: return "Overlap";
        case FailureKind::AreaMismatch: return "AreaMismatch";
        case FailureKind::CountMismatch: return "CountMismatch";
    }
    return "?";
}

struct VerifyFailure {
    FailureKind kind;
    // placement indices involved; -1 when not applicable
    long i = -1, j = -1;

    friend bool operator==(const VerifyFailure& a, const VerifyFailure& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j;
    }
    friend bool operator<(const VerifyFailure& a, const VerifyFailure& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

struct VerifyReport {
    bool passed = false;
    std::uint64_t tile_count = 0;
    std::vector<VerifyFailure> failures;
};

// Exact congruence: orthogonal isometry and footprint squared-side
// multiset {a^2, b^2, c^2}.
inline bool check_congruence(const Placement& pl, const TileShape& shape) {
    if (!pl.iso.is_orthogonal()) return false;
    Triangle canon = canonical_triangle(shape);
    Point p0 = pl.iso.apply(canon.v0), p1 = pl.iso.apply(canon.v1), p2 = pl.iso.apply(canon.v2);
    std::array<QS3, 3> sq = {dist2(p0, p1), dist2(p1, p2), dist2(p2, p0)};
    std::array<QS3, 3> want = {QS3(shape.c * shape.c), QS3(shape.a * shape.a),
                               QS3(shape.b * shape.b)};
    // small fixed multisets: match greedily
    std::array<bool, 3> used = {false, false, false};
    for (const QS3& s : sq) {
        bool hit = false;
        for (int i = 0; i < 3; ++i) {
            if (!used[i] && want[i] == s) {
                used[i] = true;
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

namespace detail {

// Footprint vertex with cached double coordinates for the semi-static
// floating-point filter. The doubles only ever shortcut decisions whose
// error bound proves the sign; everything else falls back to exact.
struct FPoint {
    Point p;
    double x, y;
    explicit FPoint(const Point& pt) : p(pt), x(qs3_to_double(pt.x)), y(qs3_to_double(pt.y)) {}
};

struct FTriangle {
    FPoint v0, v1, v2;
    explicit FTriangle(const Triangle& t) : v0(t.v0), v1(t.v1), v2(t.v2) {}
};

inline int orientation_filtered(const FPoint& p, const FPoint& q, const FPoint& r) {
    double ax = q.x - p.x, ay = q.y - p.y;
    double bx = r.x - p.x, by = r.y - p.y;
    double det = ax * by - ay * bx;
    // bound covers rounding in the input doubles themselves, so the
    // magnitudes of the absolute coordinates enter, not the differences
    double mx = std::abs(p.x) + std::abs(q.x) + std::abs(r.x);
    double my = std::abs(p.y) + std::abs(q.y) + std::abs(r.y);
    double err = 1e-12 * (mx * my + 1.0);
    if (det > err) return 1;
    if (det < -err) return -1;
    return orientation(p.p, q.p, r.p);
}

inline bool all_right_filtered(const FPoint& a, const FPoint& b, const FTriangle& t) {
    return orientation_filtered(a, b, t.v0) <= 0 && orientation_filtered(a, b, t.v1) <= 0 &&
           orientation_filtered(a, b, t.v2) <= 0;
}

inline bool separating_edge_filtered(const FTriangle& t1, const FTriangle& t2) {
    return all_right_filtered(t1.v0, t1.v1, t2) || all_right_filtered(t1.v1, t1.v2, t2) ||
           all_right_filtered(t1.v2, t1.v0, t2);
}

inline bool interior_disjoint_filtered(const FTriangle& t1, const FTriangle& t2) {
    return separating_edge_filtered(t1, t2) || separating_edge_filtered(t2, t1);
}

struct BBox {
    double lox, loy, hix, hiy;
};

// outward-rounded double bounding box; used only to enumerate candidate
// pairs, never to decide anything
inline BBox bbox_of(const Triangle& t) {
    const double pad = 1e-6;
    auto xd = [](const Point& p) { return qs3_to_double(p.x); };
    auto yd = [](const Point& p) { return qs3_to_double(p.y); };
    double lox = std::min({xd(t.v0), xd(t.v1), xd(t.v2)}) - pad;
    double hix = std::max({xd(t.v0), xd(t.v1), xd(t.v2)}) + pad;
    double loy = std::min({yd(t.v0), yd(t.v1), yd(t.v2)}) - pad;
    double hiy = std::max({yd(t.v0), yd(t.v1), yd(t.v2)}) + pad;
    return {lox, loy, hix, hiy};
}

}  // namespace detail

// Certifies that the tiling is an exact partition of its convex target:
// every placement congruent, inside the closed target, pairwise
// interior-disjoint, and the areas add up exactly. Candidate overlap
// pairs are pre-filtered by an approximate grid; every decision is made
// by exact predicates.
inline VerifyReport verify_tiling(const Tiling& t) {
    VerifyReport rep;
    rep.tile_count = t.placements.size();
    const std::size_t n = t.placements.size();

    if (t.claimed_count != n) rep.failures.push_back({FailureKind::CountMismatch, -1, -1});

    std::vector<Triangle> feet;
    feet.reserve(n);
    std::vector<bool> congruent(n, true);
    for (std::size_t i = 0; i < n; ++i) {
        if (!check_congruence(t.placements[i], t.shape)) {
            congruent[i] = false;
            rep.failures.push_back({FailureKind::BadCongruence, static_cast<long>(i), -1});
        }
        feet.push_back(t.placements[i].footprint(t.shape));
    }

    std::vector<detail::FPoint> ftarget;
    for (const Point& p : t.target.vertices()) ftarget.emplace_back(p);
    std::vector<detail::FTriangle> ffeet;
    ffeet.reserve(n);
    for (const Triangle& f : feet) ffeet.emplace_back(f);

    auto contains_filtered = [&](const detail::FPoint& p) {
        const std::size_t m = ftarget.size();
        for (std::size_t e = 0; e < m; ++e)
            if (detail::orientation_filtered(ftarget[e], ftarget[(e + 1) % m], p) < 0) return false;
        return true;
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (!contains_filtered(ffeet[i].v0) || !contains_filtered(ffeet[i].v1) ||
            !contains_filtered(ffeet[i].v2))
            rep.failures.push_back({FailureKind::OutsideTarget, static_cast<long>(i), -1});
    }

    // grid cell size: the tile diameter, outward-approximated
    double cell = std::max(1.0, std::ceil(static_cast<double>(t.shape.c))) + 1e-3;
    std::unordered_map<long long, std::vector<std::size_t>> grid;
    auto key = [](long gx, long gy) {
        return (static_cast<long long>(gx) << 32) ^ (static_cast<long long>(gy) & 0xffffffffLL);
    };
    std::vector<detail::BBox> boxes;
    boxes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        detail::BBox b = detail::bbox_of(feet[i]);
        boxes.push_back(b);
        long gx0 = static_cast<long>(std::floor(b.lox / cell));
        long gx1 = static_cast<long>(std::floor(b.hix / cell));
        long gy0 = static_cast<long>(std::floor(b.loy / cell));
        long gy1 = static_cast<long>(std::floor(b.hiy / cell));
        for (long gx = gx0; gx <= gx1; ++gx)
            for (long gy = gy0; gy <= gy1; ++gy) grid[key(gx, gy)].push_back(i);
    }
    std::vector<std::pair<std::size_t, std::size_t>> cand;
    for (auto& [cellkey, ids] : grid) {
        (void)cellkey;
        for (std::size_t x = 0; x < ids.size(); ++x)
            for (std::size_t y = x + 1; y < ids.size(); ++y)
                cand.emplace_back(std::min(ids[x], ids[y]), std::max(ids[x], ids[y]));
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (auto [i, j] : cand) {
        const detail::BBox &bi = boxes[i], &bj = boxes[j];
        if (bi.hix < bj.lox || bj.hix < bi.lox || bi.hiy < bj.loy || bj.hiy < bi.loy) continue;
        if (!detail::interior_disjoint_filtered(ffeet[i], ffeet[j]))
            rep.failures.push_back({FailureKind::Overlap, static_cast<long>(i),
                                    static_cast<long>(j)});
    }

    // with congruence established each footprint has the tile area, so the
    // exact sum reduces to a count times the tile area
    bool all_congruent = std::all_of(congruent.begin(), congruent.end(), [](bool b) { return b; });
    QS3 total(0);
    if (all_congruent) {
        total = QS3(Rat(static_cast<long>(n))) * t.shape.area();
    } else {
        for (const Triangle& f : feet) total += f.signed_area2() / QS3(2);
    }
    if (total != t.target.signed_area())
        rep.failures.push_back({FailureKind::AreaMismatch, -1, -1});

    std::sort(rep.failures.begin(), rep.failures.end());
    rep.passed = rep.failures.empty();
    return rep;
}

}  // namespace tritile
