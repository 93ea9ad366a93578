#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "tritile/qs3.hpp"

namespace tritile {

struct Point {
    QS3 x, y;

    Point() = default;
    Point(QS3 px, QS3 py) : x(std::move(px)), y(std::move(py)) {}

    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(const QS3& s, const Point& a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

inline QS3 cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline QS3 dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline QS3 norm2(const Point& u) { return dot(u, u); }
inline QS3 dist2(const Point& a, const Point& b) { return norm2(b - a); }

// sign of the cross product (q-p) x (r-p)
inline int orientation(const Point& p, const Point& q, const Point& r) {
    return cross(q - p, r - p).sign();
}

// Direct plane isometry: x -> M x + t with M exactly orthogonal.
// det = -1 marks a reflected (mirror) placement.
struct Isometry {
    QS3 m00{1}, m01{0}, m10{0}, m11{1};
    QS3 tx{0}, ty{0};

    static Isometry identity() { return {}; }

    static Isometry translation(const Point& t) {
        Isometry i;
        i.tx = t.x;
        i.ty = t.y;
        return i;
    }

    // rotation with exact cosine/sine pair (cs^2 + sn^2 must be 1)
    static Isometry rotation(const QS3& cs, const QS3& sn) {
        Isometry i;
        i.m00 = cs; i.m01 = -sn;
        i.m10 = sn; i.m11 = cs;
        return i;
    }

    // point reflection through c: x -> 2c - x
    static Isometry point_reflection(const Point& c) {
        Isometry i;
        i.m00 = QS3(-1); i.m01 = QS3(0);
        i.m10 = QS3(0);  i.m11 = QS3(-1);
        i.tx = QS3(2) * c.x;
        i.ty = QS3(2) * c.y;
        return i;
    }

    Point apply(const Point& p) const {
        return {m00 * p.x + m01 * p.y + tx, m10 * p.x + m11 * p.y + ty};
    }

    // this o other: apply `other` first
    Isometry compose(const Isometry& o) const {
        Isometry r;
        r.m00 = m00 * o.m00 + m01 * o.m10;
        r.m01 = m00 * o.m01 + m01 * o.m11;
        r.m10 = m10 * o.m00 + m11 * o.m10;
        r.m11 = m10 * o.m01 + m11 * o.m11;
        Point t = apply({o.tx, o.ty});
        r.tx = t.x;
        r.ty = t.y;
        return r;
    }

    QS3 det() const { return m00 * m11 - m01 * m10; }

    bool is_orthogonal() const {
        QS3 one(1), zero(0);
        return m00 * m00 + m10 * m10 == one && m01 * m01 + m11 * m11 == one &&
               m00 * m01 + m10 * m11 == zero;
    }

    friend bool operator==(const Isometry& a, const Isometry& b) {
        return a.m00 == b.m00 && a.m01 == b.m01 && a.m10 == b.m10 && a.m11 == b.m11 &&
               a.tx == b.tx && a.ty == b.ty;
    }
};

struct Triangle {
    Point v0, v1, v2;

    Triangle(Point a, Point b, Point c) : v0(std::move(a)), v1(std::move(b)), v2(std::move(c)) {
        if (orientation(v0, v1, v2) == 0) throw std::invalid_argument("Triangle: degenerate");
    }

    int winding() const { return orientation(v0, v1, v2); }

    Triangle ccw() const {
        if (winding() > 0) return *this;
        return Triangle(v0, v2, v1);
    }

    QS3 signed_area2() const { return cross(v1 - v0, v2 - v0); }  // twice the signed area
};

// Convex polygon, counterclockwise, no repeated vertices, at least 3
// strictly convex turns. Vertices on edge interiors are permitted.
class ConvexPolygon {
public:
    explicit ConvexPolygon(std::vector<Point> vs) : v_(std::move(vs)) { validate(); }
    ConvexPolygon(std::initializer_list<Point> vs) : v_(vs) { validate(); }

    const std::vector<Point>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    const Point& operator[](std::size_t i) const { return v_[i]; }

    QS3 signed_area() const {
        QS3 s(0);
        for (std::size_t i = 0; i < v_.size(); ++i) {
            const Point& a = v_[i];
            const Point& b = v_[(i + 1) % v_.size()];
            s += cross(a, b);
        }
        return s / QS3(2);
    }

    // closed containment
    bool contains(const Point& p) const {
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (orientation(v_[i], v_[(i + 1) % v_.size()], p) < 0) return false;
        }
        return true;
    }

private:
    void validate() const {
        const std::size_t n = v_.size();
        if (n < 3) throw std::invalid_argument("ConvexPolygon: needs >= 3 vertices");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (v_[i] == v_[j]) throw std::invalid_argument("ConvexPolygon: repeated vertex");
        int strict = 0;
        for (std::size_t i = 0; i < n; ++i) {
            int o = orientation(v_[i], v_[(i + 1) % n], v_[(i + 2) % n]);
            if (o < 0) throw std::invalid_argument("ConvexPolygon: not convex/ccw");
            if (o > 0) ++strict;
        }
        if (strict < 3) throw std::invalid_argument("ConvexPolygon: fewer than 3 strict turns");
        // every vertex in the closed left half-plane of every edge; this
        // excludes multiply-wound vertex cycles
        for (std::size_t i = 0; i < n; ++i) {
            const Point& a = v_[i];
            const Point& b = v_[(i + 1) % n];
            for (std::size_t j = 0; j < n; ++j)
                if (orientation(a, b, v_[j]) < 0)
                    throw std::invalid_argument("ConvexPolygon: not an intersection of half-planes");
        }
    }

    std::vector<Point> v_;
};

inline QS3 signed_area(const ConvexPolygon& poly) { return poly.signed_area(); }

// all three vertices inside the closed polygon; sufficient for convex targets
inline bool triangle_in_polygon(const Triangle& t, const ConvexPolygon& poly) {
    return poly.contains(t.v0) && poly.contains(t.v1) && poly.contains(t.v2);
}

namespace detail {

// true iff every vertex of t lies in the closed right half-plane of (a -> b)
inline bool all_right_of(const Point& a, const Point& b, const Triangle& t) {
    return orientation(a, b, t.v0) <= 0 && orientation(a, b, t.v1) <= 0 &&
           orientation(a, b, t.v2) <= 0;
}

inline bool separating_edge(const Triangle& t1, const Triangle& t2) {
    return all_right_of(t1.v0, t1.v1, t2) || all_right_of(t1.v1, t1.v2, t2) ||
           all_right_of(t1.v2, t1.v0, t2);
}

}  // namespace detail

// Exact separating-axis test over the 6 edge-supporting lines. Both
// triangles must be counterclockwise. Touching boundaries are allowed.
inline bool triangles_interior_disjoint(const Triangle& t1, const Triangle& t2) {
    if (t1.winding() <= 0 || t2.winding() <= 0)
        throw std::invalid_argument("triangles_interior_disjoint: wants ccw triangles");
    return detail::separating_edge(t1, t2) || detail::separating_edge(t2, t1);
}

// Isometry mapping segment (s0, s1) onto (d0, d1), which must have equal
// squared lengths. With flip the source is mirrored across the x-axis
// first, so the two flip values give the two candidate isometries.
inline Isometry align_segment(const Point& s0, const Point& s1, const Point& d0, const Point& d1,
                              bool flip) {
    Point u = s1 - s0, w = d1 - d0;
    QS3 l2 = norm2(u);
    if (l2.is_zero()) throw std::invalid_argument("align_segment: degenerate base segment");
    if (l2 != norm2(w)) throw std::logic_error("align_segment: segment lengths differ");
    if (flip) u = Point{u.x, -u.y};
    // rotation taking u to w: (cs, sn) = w * conj(u) / |u|^2
    QS3 cs = dot(w, u) / l2;
    QS3 sn = cross(u, w) / l2;
    Isometry m;
    if (!flip) {
        m.m00 = cs; m.m01 = -sn;
        m.m10 = sn; m.m11 = cs;
    } else {
        m.m00 = cs; m.m01 = sn;
        m.m10 = sn; m.m11 = -cs;
    }
    Point ms0 = {m.m00 * s0.x + m.m01 * s0.y, m.m10 * s0.x + m.m11 * s0.y};
    m.tx = d0.x - ms0.x;
    m.ty = d0.y - ms0.y;
    return m;
}

// Unique isometry mapping src0->dst0, src1->dst1, src2->dst2, which must
// be exactly congruent point triples. Chooses a reflection when the two
// triples wind oppositely. Throws if no isometry matches exactly; the
// construction code uses this as a built-in consistency check.
inline Isometry rigid_map(const Point& s0, const Point& s1, const Point& s2,
                          const Point& d0, const Point& d1, const Point& d2) {
    bool flip = orientation(s0, s1, s2) != orientation(d0, d1, d2);
    Isometry m = align_segment(s0, s1, d0, d1, flip);
    if (m.apply(s1) != d1 || m.apply(s2) != d2 || !m.is_orthogonal())
        throw std::logic_error("rigid_map: point triples are not congruent");
    return m;
}

}  // namespace tritile
