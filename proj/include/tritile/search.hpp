#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tritile/constructions.hpp"
#include "tritile/verify.hpp"

namespace tritile {

struct SearchBudget {
    long max_tiles = 100;
    std::uint64_t max_nodes = 1000000;
    double time_limit_seconds = 3600.0;
};

enum class SearchStatus { Found, ExhaustedNone, BudgetExceeded };

inline const char* search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "Found";
        case SearchStatus::ExhaustedNone: return "ExhaustedNone";
        case SearchStatus::BudgetExceeded: return "BudgetExceeded";
    }
    return "?";
}

struct SearchOutcome {
    SearchStatus status = SearchStatus::ExhaustedNone;
    std::optional<Tiling> tiling;
    std::uint64_t nodes_explored = 0;
};

namespace search_detail {

// exact point with cached double coordinates; the doubles only feed
// sign filters whose inconclusive cases fall back to exact arithmetic
struct CPt {
    Point p;
    double x, y;
    CPt() : x(0), y(0) {}
    explicit CPt(Point pp) : p(std::move(pp)), x(qs3_to_double(p.x)), y(qs3_to_double(p.y)) {}

    friend bool operator==(const CPt& a, const CPt& b) { return a.p == b.p; }
    friend bool operator!=(const CPt& a, const CPt& b) { return !(a.p == b.p); }
};

using Cycle = std::vector<CPt>;

constexpr double kFilterEps = 1e-12;

inline int ori(const CPt& a, const CPt& b, const CPt& c) {
    double ux = b.x - a.x, uy = b.y - a.y;
    double vx = c.x - a.x, vy = c.y - a.y;
    double det = ux * vy - uy * vx;
    double mx = std::abs(a.x) + std::abs(b.x) + std::abs(c.x);
    double my = std::abs(a.y) + std::abs(b.y) + std::abs(c.y);
    double err = kFilterEps * (mx * my + 1.0);
    if (det > err) return 1;
    if (det < -err) return -1;
    return orientation(a.p, b.p, c.p);
}

// sign of (a1-a0) x (b1-b0)
inline int cross_sign(const CPt& a0, const CPt& a1, const CPt& b0, const CPt& b1) {
    double ux = a1.x - a0.x, uy = a1.y - a0.y;
    double vx = b1.x - b0.x, vy = b1.y - b0.y;
    double det = ux * vy - uy * vx;
    double mx = std::abs(a0.x) + std::abs(a1.x) + std::abs(b0.x) + std::abs(b1.x);
    double my = std::abs(a0.y) + std::abs(a1.y) + std::abs(b0.y) + std::abs(b1.y);
    double err = kFilterEps * (mx * my + 1.0);
    if (det > err) return 1;
    if (det < -err) return -1;
    return cross(a1.p - a0.p, b1.p - b0.p).sign();
}

// sign of (a1-a0) . (b1-b0)
inline int dot_sign(const CPt& a0, const CPt& a1, const CPt& b0, const CPt& b1) {
    double ux = a1.x - a0.x, uy = a1.y - a0.y;
    double vx = b1.x - b0.x, vy = b1.y - b0.y;
    double d = ux * vx + uy * vy;
    double mx = std::abs(a0.x) + std::abs(a1.x) + std::abs(b0.x) + std::abs(b1.x);
    double my = std::abs(a0.y) + std::abs(a1.y) + std::abs(b0.y) + std::abs(b1.y);
    double err = kFilterEps * (mx * mx + my * my + 1.0);
    if (d > err) return 1;
    if (d < -err) return -1;
    return dot(a1.p - a0.p, b1.p - b0.p).sign();
}

// sign of (a.y - b.y)
inline int ysign(const CPt& a, const CPt& b) {
    double d = a.y - b.y;
    double err = kFilterEps * (std::abs(a.y) + std::abs(b.y) + 1.0);
    if (d > err) return 1;
    if (d < -err) return -1;
    return (a.p.y - b.p.y).sign();
}

// p strictly inside the open segment (a, b), all collinear checks exact
inline bool strictly_on(const CPt& a, const CPt& b, const CPt& p) {
    if (p == a || p == b) return false;
    if (ori(a, b, p) != 0) return false;
    if (dot_sign(a, p, a, b) <= 0) return false;
    return dot_sign(b, p, b, a) > 0;
}

// +1 strictly inside, 0 on the boundary, -1 outside; exact winding rule
inline int point_vs_cycle(const Cycle& poly, const CPt& p) {
    const std::size_t n = poly.size();
    int winding = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const CPt& a = poly[i];
        const CPt& b = poly[(i + 1) % n];
        int o = ori(a, b, p);
        if (o == 0) {
            if (p == a || p == b) return 0;
            if (dot_sign(a, p, a, b) >= 0 && dot_sign(b, p, b, a) >= 0) return 0;
        }
        int ya = ysign(a, p), yb = ysign(b, p);
        if (ya <= 0 && yb > 0) {
            if (o > 0) ++winding;
        } else if (ya > 0 && yb <= 0) {
            if (o < 0) --winding;
        }
    }
    return winding != 0 ? 1 : -1;
}

inline bool proper_cross(const CPt& p1, const CPt& p2, const CPt& q1, const CPt& q2) {
    int o1 = ori(p1, p2, q1), o2 = ori(p1, p2, q2);
    if (o1 * o2 >= 0) return false;
    int o3 = ori(q1, q2, p1), o4 = ori(q1, q2, p2);
    return o3 * o4 < 0;
}

inline QS3 cycle_area2(const Cycle& c) {
    QS3 s(0);
    for (std::size_t i = 0; i < c.size(); ++i)
        s += cross(c[i].p, c[(i + 1) % c.size()].p);
    return s;
}

inline bool point_less(const CPt& a, const CPt& b) {
    double dx = a.x - b.x;
    double ex = kFilterEps * (std::abs(a.x) + std::abs(b.x) + 1.0);
    if (dx < -ex) return true;
    if (dx > ex) return false;
    int s = (a.p.x - b.p.x).sign();
    if (s != 0) return s < 0;
    return ysign(a, b) < 0;
}

// strict exact ordering for memo keys
struct PointKeyLess {
    bool operator()(const Point& a, const Point& b) const {
        if (a.x.p() != b.x.p()) return a.x.p() < b.x.p();
        if (a.x.q() != b.x.q()) return a.x.q() < b.x.q();
        if (a.y.p() != b.y.p()) return a.y.p() < b.y.p();
        return a.y.q() < b.y.q();
    }
};

// CCW angular order around a reference direction, for the boundary
// stitcher: the continuation is the outgoing edge with the largest CCW
// angle from the reversed incoming direction
struct AngularLess {
    const CPt& at;
    const CPt& ref;  // ray target: reference direction is at -> ref
    bool operator()(const CPt& w1, const CPt& w2) const {
        auto cls = [&](const CPt& w) {
            int cr = cross_sign(at, ref, at, w);
            if (cr > 0) return 1;
            if (cr < 0) return 3;
            return dot_sign(at, ref, at, w) > 0 ? 0 : 2;
        };
        int c1 = cls(w1), c2 = cls(w2);
        if (c1 != c2) return c1 < c2;
        if (c1 == 1 || c1 == 3) return cross_sign(at, w1, at, w2) > 0;
        return false;
    }
};

struct DirEdge {
    CPt a, b;
};

// drop collinear straight-through vertices; reject spikes
inline Cycle normalize_cycle(const Cycle& in) {
    Cycle out;
    const std::size_t n = in.size();
    for (std::size_t i = 0; i < n; ++i) {
        const CPt& prev = in[(i + n - 1) % n];
        const CPt& cur = in[i];
        const CPt& next = in[(i + 1) % n];
        if (cur == prev) continue;
        if (ori(prev, cur, next) == 0) {
            int d = dot_sign(prev, cur, cur, next);
            if (d > 0) continue;  // straight through
            if (d < 0) throw std::logic_error("search: boundary spike after subtraction");
        }
        out.push_back(cur);
    }
    return out;
}

// Region minus a ccw triangle that lies in the region's closure and is
// flush against its boundary. Exact arrangement-based subtraction;
// returns the remaining ccw components.
inline std::vector<Cycle> subtract_triangle(const Cycle& comp, const std::array<CPt, 3>& tri) {
    auto split_edges = [&](const std::vector<DirEdge>& edges, const std::vector<CPt>& splitters) {
        std::vector<DirEdge> out;
        for (const DirEdge& e : edges) {
            std::vector<CPt> on;
            for (const CPt& s : splitters)
                if (strictly_on(e.a, e.b, s)) on.push_back(s);
            std::sort(on.begin(), on.end(), [&](const CPt& p, const CPt& q) {
                return qs3_less(dot(p.p - e.a.p, e.b.p - e.a.p), dot(q.p - e.a.p, e.b.p - e.a.p));
            });
            CPt cur = e.a;
            for (const CPt& p : on) {
                if (p != cur) out.push_back({cur, p});
                cur = p;
            }
            if (cur != e.b) out.push_back({cur, e.b});
        }
        return out;
    };

    std::vector<DirEdge> pedges;
    for (std::size_t i = 0; i < comp.size(); ++i)
        pedges.push_back({comp[i], comp[(i + 1) % comp.size()]});
    std::vector<DirEdge> tedges = {{tri[0], tri[1]}, {tri[1], tri[2]}, {tri[2], tri[0]}};

    std::vector<CPt> tpts(tri.begin(), tri.end());
    pedges = split_edges(pedges, tpts);
    tedges = split_edges(tedges, comp);

    // cancel polygon subedges covered by the triangle boundary; shared
    // pieces run in the same direction because the triangle lies inside
    std::vector<DirEdge> result;
    std::vector<bool> t_used(tedges.size(), false);
    for (const DirEdge& pe : pedges) {
        bool cancelled = false;
        for (std::size_t j = 0; j < tedges.size(); ++j) {
            if (t_used[j]) continue;
            if (tedges[j].a == pe.a && tedges[j].b == pe.b) {
                t_used[j] = true;
                cancelled = true;
                break;
            }
        }
        if (!cancelled) result.push_back(pe);
    }
    for (std::size_t j = 0; j < tedges.size(); ++j)
        if (!t_used[j]) result.push_back({tedges[j].b, tedges[j].a});  // reversed

    // stitch directed edges into faces, keeping the region on the left
    std::vector<bool> used(result.size(), false);
    std::vector<Cycle> cycles;
    for (std::size_t start = 0; start < result.size(); ++start) {
        if (used[start]) continue;
        Cycle cyc;
        std::size_t cur = start;
        while (true) {
            used[cur] = true;
            cyc.push_back(result[cur].a);
            const CPt& at = result[cur].b;
            if (at == result[start].a) break;  // face closes at first return
            long best = -1;
            AngularLess less{at, result[cur].a};
            for (std::size_t j = 0; j < result.size(); ++j) {
                if (used[j] || !(result[j].a == at)) continue;
                if (best < 0 || less(result[best].b, result[j].b)) best = static_cast<long>(j);
            }
            if (best < 0) throw std::logic_error("search: open boundary walk after subtraction");
            cur = static_cast<std::size_t>(best);
        }
        if (cyc.size() < 3) continue;
        Cycle norm = normalize_cycle(cyc);
        if (norm.size() < 3) continue;
        int a_sign = cycle_area2(norm).sign();
        if (a_sign < 0) throw std::logic_error("search: hole produced by subtraction");
        if (a_sign > 0) cycles.push_back(std::move(norm));
    }
    return cycles;
}

// achievable corner angles: every sum of tile angles strictly between 0
// and 2*pi, held as exact (cos, sin) pairs
struct AngleSet {
    std::vector<std::array<QS3, 2>> values;

    bool contains(const QS3& c, const QS3& s) const {
        for (const auto& v : values)
            if (v[0] == c && v[1] == s) return true;
        return false;
    }

    static AngleSet build(const TileShape& shape) {
        AngleData d = angle_data(shape);
        std::array<std::array<QS3, 2>, 3> steps = {
            std::array<QS3, 2>{QS3(d.cos_alpha), d.sin_alpha()},
            std::array<QS3, 2>{QS3(d.cos_beta), d.sin_beta()},
            std::array<QS3, 2>{QS3(d.cos_gamma), d.sin_gamma()}};
        struct State {
            QS3 c, s;
            bool upper;  // angle <= pi
        };
        std::vector<State> states = {{QS3(1), QS3(0), true}};  // angle 0
        AngleSet out;
        std::size_t head = 0;
        auto seen = [&](const QS3& c, const QS3& s, bool upper) {
            for (const State& st : states)
                if (st.c == c && st.s == s && st.upper == upper) return true;
            return false;
        };
        while (head < states.size()) {
            State cur = states[head++];
            for (const auto& step : steps) {
                QS3 nc = cur.c * step[0] - cur.s * step[1];
                QS3 ns = cur.s * step[0] + cur.c * step[1];
                int ss = ns.sign();
                bool upper;
                if (cur.upper) {
                    // new angle lies in (0, 2*pi); drop the exact 2*pi state
                    if (ss == 0 && nc == QS3(1)) continue;
                    upper = ss > 0 || (ss == 0 && nc == QS3(-1));
                } else {
                    // new angle lies in (pi, 3*pi); reaching 2*pi is out
                    if (ss >= 0) continue;
                    upper = false;
                }
                if (seen(nc, ns, upper)) continue;
                states.push_back({nc, ns, upper});
                out.values.push_back({nc, ns});
            }
        }
        return out;
    }
};

struct Searcher {
    const TileShape& shape;
    const SearchBudget& budget;
    AngleSet angles;
    std::array<Point, 3> canon;                    // alpha, beta, gamma corners
    std::array<std::array<QS3, 2>, 3> corner_cs;   // (cos, sin) per tile corner
    std::array<std::array<QS3, 3>, 3> side_len;    // |canon[i] canon[j]|
    QS3 tile_area;
    std::uint64_t nodes = 0;
    std::chrono::steady_clock::time_point deadline;
    std::vector<Placement> placed;
    std::map<Point, std::optional<Point>, PointKeyLess> unit_memo;
    std::map<Point, bool, PointKeyLess> corner_memo;  // key: (cos, sin) as a point

    explicit Searcher(const TileShape& s, const SearchBudget& b)
        : shape(s), budget(b), angles(AngleSet::build(s)) {
        Triangle t = canonical_triangle(s);
        canon = {t.v0, t.v1, t.v2};
        AngleData d = angle_data(s);
        corner_cs = {std::array<QS3, 2>{QS3(d.cos_alpha), d.sin_alpha()},
                     std::array<QS3, 2>{QS3(d.cos_beta), d.sin_beta()},
                     std::array<QS3, 2>{QS3(d.cos_gamma), d.sin_gamma()}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                side_len[i][j] = i == j ? QS3(0) : *qs3_sqrt(dist2(canon[i], canon[j]));
        tile_area = s.area();
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(b.time_limit_seconds));
    }

    bool area_is_tile_multiple(const QS3& area2) const {
        QS3 ratio = area2 / (QS3(2) * tile_area);
        return ratio.is_rational() && ratio.p().is_integer() && ratio.p().sign() > 0;
    }

    const std::optional<Point>& unit_direction(const Point& v) {
        auto it = unit_memo.find(v);
        if (it != unit_memo.end()) return it->second;
        std::optional<Point> u;
        auto len = qs3_sqrt(norm2(v));
        if (len && !len->is_zero()) u = Point{v.x / *len, v.y / *len};
        return unit_memo.emplace(v, std::move(u)).first->second;
    }

    // every corner angle must be an achievable sum of tile angles; the
    // check is skipped for rays without representable unit directions,
    // which keeps the prune sound
    bool corners_feasible(const Cycle& c) {
        const std::size_t n = c.size();
        for (std::size_t i = 0; i < n; ++i) {
            Point un = c[(i + 1) % n].p - c[i].p;
            Point up = c[(i + n - 1) % n].p - c[i].p;
            const auto& dn = unit_direction(un);
            const auto& dp = unit_direction(up);
            if (!dn || !dp) continue;
            Point cs{dot(*dn, *dp), cross(*dn, *dp)};
            auto it = corner_memo.find(cs);
            bool ok;
            if (it != corner_memo.end()) {
                ok = it->second;
            } else {
                ok = angles.contains(cs.x, cs.y);
                corner_memo.emplace(cs, ok);
            }
            if (!ok) return false;
        }
        return true;
    }

    // candidate placements flush at corner c[i]: every tile corner whose
    // angle fits, anchored along either boundary ray, either adjacent
    // tile side on the ray, reflections included; deduplicated
    std::vector<Isometry> corner_candidates(const Cycle& c, std::size_t i) {
        const std::size_t n = c.size();
        const Point& v = c[i].p;
        Point rays[2] = {c[(i + 1) % n].p - v, c[(i + n - 1) % n].p - v};
        std::vector<Isometry> out;
        for (int corner = 0; corner < 3; ++corner) {
            const QS3& cs = corner_cs[corner][0];
            const QS3& sn = corner_cs[corner][1];
            // rotating ray 0 by the corner angle must stay inside the
            // sector (the chosen corner is convex, so the sector is < pi)
            Point rot{cs * rays[0].x - sn * rays[0].y, sn * rays[0].x + cs * rays[0].y};
            if (cross(rays[0], rot).sign() < 0) continue;
            if (cross(rot, rays[1]).sign() < 0) continue;
            for (int anchor = 0; anchor < 2; ++anchor) {
                const auto& u = unit_direction(rays[anchor]);
                if (!u) continue;
                for (int other = 0; other < 2; ++other) {
                    int yidx = (corner + 1 + other) % 3;
                    int zidx = (corner + 2 - other) % 3;
                    const QS3& len = side_len[corner][yidx];
                    Point e = v + Point{len * u->x, len * u->y};
                    // of the two chiralities keep the one with the third
                    // vertex on the interior side of the anchored ray
                    for (int flip = 0; flip < 2; ++flip) {
                        Isometry iso = align_segment(canon[corner], canon[yidx], v, e, flip != 0);
                        Point z = iso.apply(canon[zidx]);
                        int side = orientation(v, e, z);
                        if ((anchor == 0 && side > 0) || (anchor == 1 && side < 0)) {
                            bool dup = false;
                            for (const Isometry& q : out)
                                if (q == iso) dup = true;
                            if (!dup) out.push_back(iso);
                            break;
                        }
                    }
                }
            }
        }
        return out;
    }

    // exact containment of the tile in the closed component
    bool placement_fits(const Cycle& comp, const std::array<CPt, 3>& tri) {
        for (const CPt& tv : tri)
            if (point_vs_cycle(comp, tv) < 0) return false;
        for (const CPt& rv : comp) {
            if (ori(tri[0], tri[1], rv) > 0 && ori(tri[1], tri[2], rv) > 0 &&
                ori(tri[2], tri[0], rv) > 0)
                return false;  // region vertex strictly inside the tile
        }
        const std::size_t n = comp.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (int e = 0; e < 3; ++e) {
                if (proper_cross(comp[i], comp[(i + 1) % n], tri[e], tri[(e + 1) % 3]))
                    return false;
            }
        }
        CPt centroid(Point{(tri[0].p.x + tri[1].p.x + tri[2].p.x) / QS3(3),
                           (tri[0].p.y + tri[1].p.y + tri[2].p.y) / QS3(3)});
        return point_vs_cycle(comp, centroid) > 0;
    }

    bool budget_hit() {
        if (nodes >= budget.max_nodes) return true;
        if ((nodes & 1023) == 0 && std::chrono::steady_clock::now() > deadline) return true;
        return false;
    }

    SearchStatus dfs(std::vector<Cycle>& comps) {
        if (comps.empty()) return SearchStatus::Found;
        // the lexicographically least vertex over all components is the
        // corner to fill; it is automatically convex
        std::size_t best_comp = 0, best_idx = 0;
        bool have = false;
        for (std::size_t ci = 0; ci < comps.size(); ++ci) {
            for (std::size_t vi = 0; vi < comps[ci].size(); ++vi) {
                if (!have || point_less(comps[ci][vi], comps[best_comp][best_idx])) {
                    best_comp = ci;
                    best_idx = vi;
                    have = true;
                }
            }
        }
        const Cycle& comp = comps[best_comp];
        std::vector<Isometry> cands = corner_candidates(comp, best_idx);
        for (const Isometry& iso : cands) {
            std::array<CPt, 3> tri = {CPt(iso.apply(canon[0])), CPt(iso.apply(canon[1])),
                                      CPt(iso.apply(canon[2]))};
            if (ori(tri[0], tri[1], tri[2]) < 0) std::swap(tri[1], tri[2]);
            if (!placement_fits(comp, tri)) continue;
            if (budget_hit()) return SearchStatus::BudgetExceeded;
            ++nodes;
            std::vector<Cycle> rest = subtract_triangle(comp, tri);
            bool ok = true;
            for (const Cycle& c : rest) {
                if (!area_is_tile_multiple(cycle_area2(c)) || !corners_feasible(c)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::vector<Cycle> next;
            next.reserve(comps.size() - 1 + rest.size());
            for (std::size_t ci = 0; ci < comps.size(); ++ci)
                if (ci != best_comp) next.push_back(comps[ci]);
            for (Cycle& c : rest) next.push_back(std::move(c));
            placed.push_back({iso});
            SearchStatus st = dfs(next);
            if (st != SearchStatus::ExhaustedNone) return st;
            placed.pop_back();
        }
        return SearchStatus::ExhaustedNone;
    }
};

}  // namespace search_detail

// Bounded exhaustive corner-filling search. Deterministic: identical
// inputs explore identical trees and return identical outcomes. Found
// tilings are verified before being returned.
inline SearchOutcome exhaustive_search(const ConvexPolygon& region, const TileShape& shape,
                                       const SearchBudget& budget) {
    SearchOutcome out;
    QS3 ratio = region.signed_area() / shape.area();
    if (!(ratio.is_rational() && ratio.p().is_integer() && ratio.p().sign() > 0)) {
        out.status = SearchStatus::ExhaustedNone;  // area obstruction
        return out;
    }
    BigInt k = ratio.p().numerator();
    if (k > budget.max_tiles) {
        out.status = SearchStatus::ExhaustedNone;  // area obstruction against the budget
        return out;
    }
    search_detail::Searcher s(shape, budget);
    search_detail::Cycle start;
    for (const Point& p : region.vertices()) start.emplace_back(p);
    start = search_detail::normalize_cycle(start);
    if (!s.corners_feasible(start)) {
        out.status = SearchStatus::ExhaustedNone;
        return out;
    }
    std::vector<search_detail::Cycle> comps;
    comps.push_back(std::move(start));
    SearchStatus st = s.dfs(comps);
    out.nodes_explored = s.nodes;
    out.status = st;
    if (st == SearchStatus::Found) {
        Tiling t{shape, region, s.placed, static_cast<std::uint64_t>(s.placed.size())};
        if (!verify_tiling(t).passed)
            throw std::logic_error("exhaustive_search: found tiling failed verification");
        out.tiling = std::move(t);
    }
    return out;
}

// region builders for the command-line surface

inline ConvexPolygon region_equilateral(long side) {
    using detail::pt;
    return ConvexPolygon({pt(Rat(0), Rat(0)), pt(Rat(side), Rat(0)),
                          pt(Rat(side, 2), Rat(side, 2))});
}

inline ConvexPolygon region_ideal_trapezoid(long x, long ell) {
    using detail::pt;
    return ConvexPolygon({pt(Rat(0), Rat(0)), pt(Rat(x + ell), Rat(0)),
                          pt(Rat(ell, 2) + Rat(x), Rat(ell, 2)), pt(Rat(ell, 2), Rat(ell, 2))});
}

inline ConvexPolygon region_parallelogram(long horiz, long slant) {
    using detail::pt;
    return ConvexPolygon({pt(Rat(0), Rat(0)), pt(Rat(horiz), Rat(0)),
                          pt(Rat(horiz) + Rat(slant, 2), Rat(slant, 2)),
                          pt(Rat(slant, 2), Rat(slant, 2))});
}

// triangle with base p on the x-axis, |AC| = q, |BC| = r; throws when the
// apex does not land in the coordinate field
inline ConvexPolygon region_triangle(long p, long q, long r) {
    if (p < 1 || q < 1 || r < 1) throw std::invalid_argument("triangle sides must be positive");
    QS3 cx = QS3(Rat(p * p + q * q - r * r, 2 * p));
    auto cy = qs3_sqrt(QS3(q * q) - cx * cx);
    if (!cy || cy->is_zero())
        throw std::invalid_argument("triangle apex does not lie in Q(sqrt3) coordinates");
    return ConvexPolygon({Point{QS3(0), QS3(0)}, Point{QS3(p), QS3(0)}, Point{cx, *cy}});
}

}  // namespace tritile
