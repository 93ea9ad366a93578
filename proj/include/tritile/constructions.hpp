#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tritile/frobenius.hpp"
#include "tritile/tile.hpp"

namespace tritile {

struct NotConstructible : std::runtime_error {
    explicit NotConstructible(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotRepresentable : NotConstructible {
    explicit NotRepresentable(const std::string& msg) : NotConstructible(msg) {}
};

namespace detail {

inline Point pt(Rat x, Rat y_sqrt3) {
    return {QS3(std::move(x)), QS3(Rat(0), std::move(y_sqrt3))};
}

inline Point scale_pt(const Rat& s, const Point& p) { return {QS3(s) * p.x, QS3(s) * p.y}; }

inline Point lerp(const Point& from, const Point& to, const Rat& t) {
    return from + scale_pt(t, to - from);
}

// (cos 2*alpha, sin 2*alpha) as an exact unit vector
inline Point dir_2alpha(const TileShape& s) {
    AngleData d = angle_data(s);
    return pt(Rat(2) * d.cos_alpha * d.cos_alpha - Rat(1),
              Rat(2) * d.sin_alpha_coeff * d.cos_alpha);
}

inline Point dir_2beta(const TileShape& s) {
    AngleData d = angle_data(s);
    return pt(Rat(2) * d.cos_beta * d.cos_beta - Rat(1), Rat(2) * d.sin_beta_coeff * d.cos_beta);
}

inline void emit(std::vector<Placement>& out, const Isometry& pose, const Isometry& local) {
    out.push_back({pose.compose(local)});
}

// isometry mapping the k-scaled canonical triangle onto (dA, dB, dC):
// dA receives the alpha vertex, dB beta, dC gamma; throws if the target
// triple is not congruent, which doubles as a consistency check on the
// construction formulas
inline Isometry place_scaled(const TileShape& s, long k, const Point& dA, const Point& dB,
                             const Point& dC) {
    Rat kk(k);
    Point a{QS3(0), QS3(0)};
    Point b{QS3(Rat(k * s.c)), QS3(0)};
    Point c = scale_pt(kk, canonical_apex(s));
    return rigid_map(a, b, c, dA, dB, dC);
}

inline ConvexPolygon posed_polygon(std::vector<Point> local, const Isometry& pose) {
    for (Point& p : local) p = pose.apply(p);
    if (pose.det().sign() < 0) std::reverse(local.begin(), local.end());
    return ConvexPolygon(std::move(local));
}

// reflection across the vertical line x = c/2; maps the canonical
// triangle of (a,b,c) onto the canonical triangle of (b,a,c)
inline Isometry swap_reflection(const TileShape& s) {
    Isometry f;
    f.m00 = QS3(-1); f.m01 = QS3(0);
    f.m10 = QS3(0);  f.m11 = QS3(1);
    f.tx = QS3(s.c);
    f.ty = QS3(0);
    return f;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// rep-tile subdivision
// ---------------------------------------------------------------------------

// The k-scaled similar triangle at `pose`, partitioned into k^2 congruent
// copies. Inverted rows are point reflections, so the fragment introduces
// no mirror images beyond what `pose` itself carries.
inline void frag_reptile(const TileShape& s, long k, const Isometry& pose,
                         std::vector<Placement>& out) {
    if (k < 1) throw NotConstructible("reptile scale must be >= 1");
    Point e1{QS3(Rat(s.c)), QS3(0)};
    Point e2 = canonical_apex(s);
    for (long i = 0; i < k; ++i) {
        for (long j = 0; i + j < k; ++j) {
            Point off = detail::scale_pt(Rat(i), e1) + detail::scale_pt(Rat(j), e2);
            detail::emit(out, pose, Isometry::translation(off));
        }
    }
    for (long i = 0; i + 2 <= k; ++i) {
        for (long j = 0; i + j + 2 <= k; ++j) {
            Point t = detail::scale_pt(Rat(i + 1), e1) + detail::scale_pt(Rat(j + 1), e2);
            Isometry inv;
            inv.m00 = QS3(-1);
            inv.m11 = QS3(-1);
            inv.tx = t.x;
            inv.ty = t.y;
            detail::emit(out, pose, inv);
        }
    }
}

inline Tiling reptile_subdivision(const TileShape& s, long k,
                                  const Isometry& pose = Isometry::identity()) {
    std::vector<Placement> pls;
    frag_reptile(s, k, pose, pls);
    Rat kk(k);
    std::vector<Point> local = {detail::pt(Rat(0), Rat(0)), detail::pt(Rat(k * s.c), Rat(0)),
                                detail::scale_pt(kk, canonical_apex(s))};
    return Tiling{s, detail::posed_polygon(local, pose), std::move(pls),
                  static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k)};
}

// ---------------------------------------------------------------------------
// parallelograms
// ---------------------------------------------------------------------------

namespace detail {

// Two placements tiling one (a,b) parallelogram cell in the slant frame:
// corners (0,0), (w,0), (w,0) + L*slant, L*slant with {w, L} = {a, b}.
// The two tiles share the diagonal of length c and are point reflections
// of each other.
inline void frag_unit_cell(const TileShape& s, bool width_is_a, const Isometry& pose,
                           std::vector<Placement>& out) {
    const long w = width_is_a ? s.a : s.b;
    const long L = width_is_a ? s.b : s.a;
    Point O = pt(Rat(0), Rat(0));
    Point B1 = pt(Rat(w), Rat(0));
    Point T1 = pt(Rat(w) + Rat(L, 2), Rat(L, 2));
    Point T0 = pt(Rat(L, 2), Rat(L, 2));
    Isometry tri1;
    Point mid;
    if (s.variant == TileVariant::Obtuse120) {
        // the long diagonal O-T1 has length c
        tri1 = width_is_a ? place_scaled(s, 1, T1, O, B1) : place_scaled(s, 1, O, T1, B1);
        mid = scale_pt(Rat(1, 2), O + T1);
    } else {
        // the short diagonal B1-T0 has length c
        tri1 = width_is_a ? place_scaled(s, 1, T0, B1, O) : place_scaled(s, 1, B1, T0, O);
        mid = scale_pt(Rat(1, 2), B1 + T0);
    }
    emit(out, pose, tri1);
    emit(out, pose, Isometry::point_reflection(mid).compose(tri1));
}

}  // namespace detail

// two tiles glued along side c; the second is the first rotated pi about
// the midpoint of that side
inline void frag_unit_parallelogram(const TileShape& s, const Isometry& pose,
                                    std::vector<Placement>& out) {
    detail::emit(out, pose, Isometry::identity());
    detail::emit(out, pose, Isometry::point_reflection(detail::pt(Rat(s.c, 2), Rat(0))));
}

inline Tiling tile_unit_parallelogram(const TileShape& s,
                                      const Isometry& pose = Isometry::identity()) {
    std::vector<Placement> pls;
    frag_unit_parallelogram(s, pose, pls);
    Point A = detail::pt(Rat(0), Rat(0));
    Point B = detail::pt(Rat(s.c), Rat(0));
    Point C = canonical_apex(s);
    Point Cr = B - C;  // apex reflected through the midpoint of AB
    return Tiling{s, detail::posed_polygon({A, Cr, B, C}, pose), std::move(pls), 2};
}

// Slant parallelogram with horizontal side `horiz`, lateral side ab,
// angles pi/3 and 2pi/3, filled as Frobenius columns of width a and b;
// N = 2*horiz.
inline void frag_parallelogram(const TileShape& s, long horiz, const Isometry& pose,
                               std::vector<Placement>& out) {
    if (horiz < 1) throw NotConstructible("parallelogram horizontal side must be >= 1");
    auto wit = frobenius_decompose(horiz, s.a, s.b);
    if (!wit)
        throw NotRepresentable("horizontal side " + std::to_string(horiz) +
                               " not representable as nonnegative combination of " +
                               std::to_string(s.a) + " and " + std::to_string(s.b));
    long x_off = 0;
    auto column = [&](bool width_is_a) {
        const long w = width_is_a ? s.a : s.b;
        const long L = width_is_a ? s.b : s.a;
        const long cells = width_is_a ? s.a : s.b;  // cells * L = ab: full lateral height
        for (long j = 0; j < cells; ++j) {
            Point off = detail::pt(Rat(x_off) + Rat(j * L, 2), Rat(j * L, 2));
            detail::frag_unit_cell(s, width_is_a, pose.compose(Isometry::translation(off)), out);
        }
        x_off += w;
    };
    for (long i = 0; i < wit->k; ++i) column(true);
    for (long i = 0; i < wit->k1; ++i) column(false);
}

inline Tiling tile_parallelogram(const TileShape& s, long horiz,
                                 const Isometry& pose = Isometry::identity()) {
    std::vector<Placement> pls;
    frag_parallelogram(s, horiz, pose, pls);
    long ab = s.a * s.b;
    std::vector<Point> local = {detail::pt(Rat(0), Rat(0)), detail::pt(Rat(horiz), Rat(0)),
                                detail::pt(Rat(horiz) + Rat(ab, 2), Rat(ab, 2)),
                                detail::pt(Rat(ab, 2), Rat(ab, 2))};
    return Tiling{s, detail::posed_polygon(std::move(local), pose), std::move(pls),
                  static_cast<std::uint64_t>(2 * horiz)};
}

// p x q grid of unit (a,b) parallelogram cells: sides (p*a, q*b), N = 2pq
inline void frag_grid_parallelogram(const TileShape& s, long p, long q, const Isometry& pose,
                                    std::vector<Placement>& out) {
    if (p < 1 || q < 1) throw NotConstructible("grid parallelogram needs p, q >= 1");
    for (long i = 0; i < p; ++i) {
        for (long j = 0; j < q; ++j) {
            Point off = detail::pt(Rat(i * s.a) + Rat(j * s.b, 2), Rat(j * s.b, 2));
            detail::frag_unit_cell(s, true, pose.compose(Isometry::translation(off)), out);
        }
    }
}

inline Tiling tile_grid_parallelogram(const TileShape& s, long p, long q,
                                      const Isometry& pose = Isometry::identity()) {
    std::vector<Placement> pls;
    frag_grid_parallelogram(s, p, q, pose, pls);
    long pa = p * s.a, qb = q * s.b;
    std::vector<Point> local = {detail::pt(Rat(0), Rat(0)), detail::pt(Rat(pa), Rat(0)),
                                detail::pt(Rat(pa) + Rat(qb, 2), Rat(qb, 2)),
                                detail::pt(Rat(qb, 2), Rat(qb, 2))};
    return Tiling{s, detail::posed_polygon(std::move(local), pose), std::move(pls),
                  static_cast<std::uint64_t>(2 * p * q)};
}

// ---------------------------------------------------------------------------
// ideal trapezoids
// ---------------------------------------------------------------------------

// short parallel side of the basic trapezoid
inline long basic_trapezoid_short(const TileShape& s) {
    return s.variant == TileVariant::Obtuse120 ? s.a * s.a + s.b * s.b : s.c * s.c;
}

// The basic ideal trapezoid: lateral sides ab, short side a^2+b^2
// (Obtuse120) or c^2 (Acute60); three similar pieces of scales a, c, b;
// N = a^2 + b^2 + c^2 for both variants.
inline void frag_basic_trapezoid(const TileShape& s, const Isometry& pose,
                                 std::vector<Placement>& out) {
    const long a = s.a, b = s.b, c = s.c;
    const long ab = a * b;
    if (s.variant == TileVariant::Obtuse120) {
        Point A = detail::pt(Rat(0), Rat(0));
        Point B = detail::pt(Rat(c * c), Rat(0));
        Point D = detail::pt(Rat(ab, 2), Rat(ab, 2));
        Point E = detail::pt(Rat(ab, 2) + Rat(a * a), Rat(ab, 2));
        frag_reptile(s, a, pose.compose(detail::place_scaled(s, a, A, E, D)), out);
        frag_reptile(s, c, pose.compose(detail::place_scaled(s, c, B, A, E)), out);
        frag_reptile(s, b, pose.compose(detail::place_scaled(s, b, E, B,
                                                              detail::pt(Rat(c * c) - Rat(ab, 2),
                                                                         Rat(ab, 2)))),
                     out);
    } else {
        Point A = detail::pt(Rat(0), Rat(0));
        Point B = detail::pt(Rat(a * a + b * b), Rat(0));
        Point D = detail::pt(Rat(ab, 2), Rat(ab, 2));
        Point C = detail::pt(Rat(ab, 2) + Rat(c * c), Rat(ab, 2));
        Point E = detail::pt(Rat(a * a), Rat(0));
        frag_reptile(s, a, pose.compose(detail::place_scaled(s, a, D, E, A)), out);
        frag_reptile(s, c, pose.compose(detail::place_scaled(s, c, C, D, E)), out);
        frag_reptile(s, b, pose.compose(detail::place_scaled(s, b, E, C, B)), out);
    }
}

inline Tiling tile_basic_trapezoid(const TileShape& s,
                                   const Isometry& pose = Isometry::identity()) {
    std::vector<Placement> pls;
    frag_basic_trapezoid(s, pose, pls);
    long ab = s.a * s.b;
    long shortside = basic_trapezoid_short(s);
    long longside = shortside + ab;
    std::vector<Point> local = {detail::pt(Rat(0), Rat(0)), detail::pt(Rat(longside), Rat(0)),
                                detail::pt(Rat(ab, 2) + Rat(shortside), Rat(ab, 2)),
                                detail::pt(Rat(ab, 2), Rat(ab, 2))};
    long n = s.a * s.a + s.b * s.b + s.c * s.c;
    return Tiling{s, detail::posed_polygon(std::move(local), pose), std::move(pls),
                  static_cast<std::uint64_t>(n)};
}

// exact Frobenius form of the constructibility test: ab | ell and
// (x - short) representable over (a, b); subsumes the sufficient bound
// x > c^2 - a - b (Obtuse120) resp. x > a^2 + b^2 - a - b (Acute60)
inline bool trapezoid_constructible(const TileShape& s, long x, long ell) {
    if (x < 1 || ell < 1) return false;
    if (ell % (s.a * s.b) != 0) return false;
    long diff = x - basic_trapezoid_short(s);
    if (diff < 0) return false;
    return frobenius_decompose(diff, s.a, s.b).has_value();
}

// Ideal trapezoid with short side x and lateral ell = k*ab: k layers,
// each one basic trapezoid plus one Frobenius parallelogram;
// N = (2x + ell) * ell / ab.
inline void frag_ideal_trapezoid(const TileShape& s, long x, long ell, const Isometry& pose,
                                 std::vector<Placement>& out) {
    const long ab = s.a * s.b;
    if (!trapezoid_constructible(s, x, ell)) {
        std::string why;
        if (x < 1 || ell < 1)
            why = "sides must be positive";
        else if (ell % ab != 0)
            why = "(ab) must divide ell";
        else
            why = "x - " + std::to_string(basic_trapezoid_short(s)) +
                  " must be a nonnegative combination of a and b";
        throw NotConstructible("ideal trapezoid (x=" + std::to_string(x) +
                               ", ell=" + std::to_string(ell) + "): " + why);
    }
    const long k = ell / ab;
    const long base = basic_trapezoid_short(s);
    for (long j = 0; j < k; ++j) {
        Point layer_org = detail::pt(Rat(j * ab, 2), Rat(j * ab, 2));
        Isometry layer_pose = pose.compose(Isometry::translation(layer_org));
        frag_basic_trapezoid(s, layer_pose, out);
        long w = x + (k - 1 - j) * ab - base;
        if (w == 0) continue;
        // the filler parallelogram slants up-left; mirror the standard frame
        Isometry mirror;
        mirror.m00 = QS3(-1);
        mirror.m01 = QS3(0);
        mirror.m10 = QS3(0);
        mirror.m11 = QS3(1);
        mirror.tx = QS3(Rat(base + ab + w));
        mirror.ty = QS3(0);
        frag_parallelogram(s, w, layer_pose.compose(mirror), out);
    }
}

inline Tiling tile_ideal_trapezoid(const TileShape& s, long x, long ell,
                                   const Isometry& pose = Isometry::identity()) {
    std::vector<Placement> pls;
    frag_ideal_trapezoid(s, x, ell, pose, pls);
    std::vector<Point> local = {detail::pt(Rat(0), Rat(0)), detail::pt(Rat(x + ell), Rat(0)),
                                detail::pt(Rat(ell, 2) + Rat(x), Rat(ell, 2)),
                                detail::pt(Rat(ell, 2), Rat(ell, 2))};
    long n = (2 * x + ell) * ell / (s.a * s.b);
    return Tiling{s, detail::posed_polygon(std::move(local), pose), std::move(pls),
                  static_cast<std::uint64_t>(n)};
}

// ---------------------------------------------------------------------------
// equilateral triangles (pinwheel of three ideal trapezoids)
// ---------------------------------------------------------------------------

// smallest r with r*ab strictly above the Frobenius bound, times 3;
// strictness avoids the exact-divisibility corner of the ceiling formula
inline long equiconstruct_threshold(const TileShape& s) {
    long bound = (s.variant == TileVariant::Obtuse120)
                     ? s.c * s.c - s.a - s.b
                     : s.a * s.a + s.b * s.b - s.a - s.b;
    long ab = s.a * s.b;
    long r0 = bound / ab + 1;
    return 3 * r0;
}

inline void frag_equilateral(const TileShape& s, long r, long rr, long t, const Isometry& pose,
                             std::vector<Placement>& out) {
    const long ab = s.a * s.b;
    auto check = [&](long x, long ell) {
        if (!trapezoid_constructible(s, x * ab, ell * ab))
            throw NotConstructible("equilateral pinwheel trapezoid (x=" + std::to_string(x * ab) +
                                   ", ell=" + std::to_string(ell * ab) + ") not constructible");
    };
    if (r < 1 || rr < 1 || t < 1) throw NotConstructible("equilateral needs r, s, t >= 1");
    check(r, rr);
    check(rr, t);
    check(t, r);
    const long L = (r + rr + t) * ab;
    QS3 half(Rat(1, 2)), s3half(Rat(0), Rat(1, 2));
    // trapezoid 1 along the bottom side
    frag_ideal_trapezoid(s, r * ab, rr * ab, pose, out);
    // trapezoid 2 along the right side, rotated 120 degrees at B
    Isometry rot120 = Isometry::rotation(QS3(Rat(-1, 2)), s3half);
    Isometry pose2 = Isometry::translation(detail::pt(Rat(L), Rat(0))).compose(rot120);
    frag_ideal_trapezoid(s, rr * ab, t * ab, pose.compose(pose2), out);
    // trapezoid 3 along the left side, rotated 240 degrees at C
    Isometry rot240 = Isometry::rotation(QS3(Rat(-1, 2)), QS3(Rat(0), Rat(-1, 2)));
    Isometry pose3 = Isometry::translation(detail::pt(Rat(L, 2), Rat(L, 2))).compose(rot240);
    frag_ideal_trapezoid(s, t * ab, r * ab, pose.compose(pose3), out);
}

inline Tiling tile_equilateral(const TileShape& s, long r, long rr, long t,
                               const Isometry& pose = Isometry::identity()) {
    std::vector<Placement> pls;
    frag_equilateral(s, r, rr, t, pose, pls);
    const long L = (r + rr + t) * s.a * s.b;
    std::vector<Point> local = {detail::pt(Rat(0), Rat(0)), detail::pt(Rat(L), Rat(0)),
                                detail::pt(Rat(L, 2), Rat(L, 2))};
    std::uint64_t m = static_cast<std::uint64_t>(r + rr + t);
    return Tiling{s, detail::posed_polygon(std::move(local), pose), std::move(pls),
                  m * m * static_cast<std::uint64_t>(s.a * s.b)};
}

namespace detail {

// deterministic split m = r + s + t with every part at least r0
inline std::array<long, 3> equilateral_split(const TileShape& s, long m,
                                             const char* who) {
    long M = equiconstruct_threshold(s);
    long r0 = M / 3;
    if (m < M)
        throw NotConstructible(std::string(who) + ": m*ab must be equiconstructible (m >= " +
                               std::to_string(M) + ", got m = " + std::to_string(m) + ")");
    return {r0, r0, m - 2 * r0};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// section-5 constructions: isosceles, arith2, odd
// ---------------------------------------------------------------------------

// swap=false: (mac, mac, ma(b+2a)) with a central equilateral of side mab
// and two flanking ma-scaled tiles; N = m^2 a(b+2a).
// swap=true exchanges the roles of a and b: N = m^2 b(a+2b).
inline Tiling tile_isosceles(const TileShape& s, long m, bool swap,
                             const Isometry& pose = Isometry::identity()) {
    auto [r, rr, t] = detail::equilateral_split(s, m, "isosceles");
    const long u = swap ? s.b : s.a;
    const long w = swap ? s.a : s.b;
    const long base = m * u * (2 * u + w);
    Point B0 = detail::pt(Rat(0), Rat(0));
    Point B1 = detail::pt(Rat(base), Rat(0));
    Point P = detail::pt(Rat(m * u * u), Rat(0));
    Point Q = detail::pt(Rat(m * u * u + m * u * w), Rat(0));
    Point V = detail::pt(Rat(m * u * u) + Rat(m * u * w, 2), Rat(m * u * w, 2));
    std::vector<Placement> pls;
    if (!swap) {
        frag_reptile(s, m * u, pose.compose(detail::place_scaled(s, m * u, V, B0, P)), pls);
        frag_reptile(s, m * u, pose.compose(detail::place_scaled(s, m * u, V, B1, Q)), pls);
    } else {
        frag_reptile(s, m * u, pose.compose(detail::place_scaled(s, m * u, B0, V, P)), pls);
        frag_reptile(s, m * u, pose.compose(detail::place_scaled(s, m * u, B1, V, Q)), pls);
    }
    frag_equilateral(s, r, rr, t, pose.compose(Isometry::translation(P)), pls);
    std::uint64_t n = static_cast<std::uint64_t>(m) * m * u * (w + 2 * u);
    return Tiling{s, detail::posed_polygon({B0, B1, V}, pose), std::move(pls), n};
}

namespace detail {

struct Arith2Frame {
    Point B, C, D, apex;
};

inline Arith2Frame arith2_frame(const TileShape& s, long m, bool swap) {
    const long u = swap ? s.a : s.b;
    Arith2Frame f;
    f.B = pt(Rat(0), Rat(0));
    f.C = pt(Rat(m * u * (s.a + s.b)), Rat(0));
    f.D = pt(Rat(m * u * u), Rat(0));
    f.apex = pt(Rat(m * u * u) + Rat(m * s.a * s.b, 2), Rat(m * s.a * s.b, 2));
    return f;
}

}  // namespace detail

inline void frag_arith2(const TileShape& s, long m, bool swap, const Isometry& pose,
                        std::vector<Placement>& out) {
    auto [r, rr, t] = detail::equilateral_split(s, m, "arith2");
    detail::Arith2Frame f = detail::arith2_frame(s, m, swap);
    const long u = swap ? s.a : s.b;
    if (!swap)
        frag_reptile(s, m * u, pose.compose(detail::place_scaled(s, m * u, f.B, f.apex, f.D)),
                     out);
    else
        frag_reptile(s, m * u, pose.compose(detail::place_scaled(s, m * u, f.apex, f.B, f.D)),
                     out);
    frag_equilateral(s, r, rr, t, pose.compose(Isometry::translation(f.D)), out);
}

// swap=false: (mab, mbc, mb(a+b)) = equilateral of side mab plus one
// mb-scaled tile; N = m^2 b(a+b). swap=true: N = m^2 a(a+b).
inline Tiling tile_arith2(const TileShape& s, long m, bool swap,
                          const Isometry& pose = Isometry::identity()) {
    std::vector<Placement> pls;
    frag_arith2(s, m, swap, pose, pls);
    detail::Arith2Frame f = detail::arith2_frame(s, m, swap);
    const long u = swap ? s.a : s.b;
    std::uint64_t n = static_cast<std::uint64_t>(m) * m * u * (s.a + s.b);
    return Tiling{s, detail::posed_polygon({f.B, f.C, f.apex}, pose), std::move(pls), n};
}

// swap=false: (mac, (b+2a)mb, (a+b)cm) split at D on the long side into
// the arith2 triangle (mab, mac, ma(a+b)) and an m(a+b)-scaled tile;
// N = m^2 (b+2a)(a+b). swap=true: N = m^2 (a+2b)(a+b).
inline Tiling tile_odd(const TileShape& s, long m, bool swap,
                       const Isometry& pose = Isometry::identity()) {
    const long u = swap ? s.b : s.a;  // scale letter of the arith2 piece
    const long w = swap ? s.a : s.b;
    Point A = detail::pt(Rat(0), Rat(0));
    Point C = detail::pt(Rat(m * w * (2 * u + w)), Rat(0));
    Point D = detail::pt(Rat(m * s.a * s.b), Rat(0));
    Point B = detail::pt(Rat(m * u * (w - u), 2), Rat(m * u * (s.a + s.b), 2));
    std::vector<Placement> pls;
    detail::Arith2Frame sub = detail::arith2_frame(s, m, !swap);
    Isometry embed = rigid_map(sub.apex, sub.B, sub.C, A, B, D);
    frag_arith2(s, m, !swap, pose.compose(embed), pls);
    long k2 = m * (s.a + s.b);
    if (!swap)
        frag_reptile(s, k2, pose.compose(detail::place_scaled(s, k2, C, B, D)), pls);
    else
        frag_reptile(s, k2, pose.compose(detail::place_scaled(s, k2, B, C, D)), pls);
    std::uint64_t n = static_cast<std::uint64_t>(m) * m * (w + 2 * u) * (s.a + s.b);
    return Tiling{s, detail::posed_polygon({A, C, B}, pose), std::move(pls), n};
}

// ---------------------------------------------------------------------------
// the (2a, 2b, a+b)-angled triangle family
// ---------------------------------------------------------------------------

namespace detail {

struct ArithFrame {
    Point P;  // 2*alpha corner
    Point Q;  // 2*beta corner
    Point R;  // pi/3 corner
};

// local frame of the n-scaled primitive triangle with sides
// ((a+2b)a n, (2a+b)b n, c^2 n); requires a < b
inline ArithFrame arith_frame_n(const TileShape& s, long n) {
    ArithFrame f;
    f.P = pt(Rat(0), Rat(0));
    f.Q = pt(Rat(n * s.c * s.c), Rat(0));
    f.R = scale_pt(Rat(n * (2 * s.a + s.b) * s.b), dir_2alpha(s));
    return f;
}

inline long arith_scale(const TileShape& s, long m, int option) {
    return m * (option == 1 ? s.c : s.b);
}

// local corners of the ideal-trapezoid frame (long side on the x-axis)
struct TrapFrame {
    Point A, B, C, D;  // A,B long side ends; D,C short side ends
};

inline TrapFrame trap_frame(long x, long ell) {
    TrapFrame t;
    t.A = pt(Rat(0), Rat(0));
    t.B = pt(Rat(x + ell), Rat(0));
    t.C = pt(Rat(ell, 2) + Rat(x), Rat(ell, 2));
    t.D = pt(Rat(ell, 2), Rat(ell, 2));
    return t;
}

// Decomposition of the n-scaled primitive (n = mc for option 1, n = mb
// for option 2) into four similar triangles and one ideal trapezoid with
// x = m a c^2 and lateral m a b (b - a). Derived from the stated
// parameters; every piece is cross-checked by rigid_map and the caller's
// verification. Requires a < b.
inline void frag_arithmetic_ordered(const TileShape& s, long m, int option, const Isometry& pose,
                                    std::vector<Placement>& out) {
    const long a = s.a, b = s.b, c = s.c;
    const long n = arith_scale(s, m, option);
    ArithFrame fr = arith_frame_n(s, n);
    Point V = scale_pt(Rat(n * c), canonical_apex(s));
    Point W2 = scale_pt(Rat(n * c * c), dir_2alpha(s));
    frag_reptile(s, n * c, pose.compose(place_scaled(s, n * c, fr.P, fr.Q, V)), out);
    frag_reptile(s, n * c, pose.compose(place_scaled(s, n * c, fr.P, W2, V)), out);
    const long trap_x = m * a * c * c;
    const long trap_ell = m * a * b * (b - a);
    TrapFrame tf = trap_frame(trap_x, trap_ell);
    if (option == 1) {
        const long k3 = m * a * (a + 2 * b);
        Point F = lerp(fr.Q, V, Rat(a * (a + 2 * b), c * c));
        frag_reptile(s, k3, pose.compose(place_scaled(s, k3, fr.R, fr.Q, F)), out);
        const long k4 = m * a * (b - a);
        Point G = lerp(fr.R, F, Rat(a * (b - a), (a + 2 * b) * b));
        frag_reptile(s, k4, pose.compose(place_scaled(s, k4, W2, fr.R, G)), out);
        Isometry tp = rigid_map(tf.D, tf.C, tf.A, V, W2, F);
        if (tp.apply(tf.B) != G) throw std::logic_error("arithmetic option 1: frame mismatch");
        frag_ideal_trapezoid(s, trap_x, trap_ell, pose.compose(tp), out);
    } else {
        const long k3 = m * a * c;
        Point S = lerp(V, fr.Q, Rat(a, b));
        frag_reptile(s, k3, pose.compose(place_scaled(s, k3, W2, S, V)), out);
        const long k4 = m * a * (b - a);
        Point T = lerp(fr.Q, fr.R, Rat(a * (b - a), b * (a + 2 * b)));
        frag_reptile(s, k4, pose.compose(place_scaled(s, k4, S, fr.Q, T)), out);
        Isometry tp = rigid_map(tf.D, tf.C, tf.A, W2, S, fr.R);
        if (tp.apply(tf.B) != T) throw std::logic_error("arithmetic option 2: frame mismatch");
        frag_ideal_trapezoid(s, trap_x, trap_ell, pose.compose(tp), out);
    }
}

// Thm-arithmetic combination on an a<b shape: option-1 piece scaled k1 at
// the 2*alpha corner, option-2 piece scaled k at the 2*beta corner, and a
// grid parallelogram between them; edge c^2 (bk + ck1).
inline void frag_arith_frobenius_ordered(const TileShape& s, long k, long k1,
                                         const Isometry& pose, std::vector<Placement>& out) {
    const long a = s.a, b = s.b, c = s.c;
    const long mhat = b * k + c * k1;
    if (k < 0 || k1 < 0 || mhat < 1)
        throw NotConstructible("arithmetic combination needs k, k1 >= 0 with bk + ck1 >= 1");
    ArithFrame big = arith_frame_n(s, mhat);
    if (k1 > 0) frag_arithmetic_ordered(s, k1, 1, pose, out);
    if (k > 0) {
        ArithFrame sub = arith_frame_n(s, b * k);
        Point W = pt(Rat(k1 * c * c * c), Rat(0));
        Point T2 = lerp(big.Q, big.R, Rat(b * k, mhat));
        Isometry embed = rigid_map(sub.P, sub.Q, sub.R, W, big.Q, T2);
        frag_arithmetic_ordered(s, k, 2, pose.compose(embed), out);
        if (k1 > 0) {
            Point T1 = lerp(big.P, big.R, Rat(c * k1, mhat));
            const long p = (a + 2 * b) * c * k1;
            const long q = (2 * a + b) * b * k;
            Point G0 = pt(Rat(0), Rat(0));
            Point G1 = pt(Rat(p * a), Rat(0));
            Point G3 = pt(Rat(q * b, 2), Rat(q * b, 2));
            Point G2 = G1 + G3;
            Isometry gp = rigid_map(G0, G1, G3, W, T1, T2);
            if (gp.apply(G2) != big.R)
                throw std::logic_error("arithmetic combination: parallelogram frame mismatch");
            frag_grid_parallelogram(s, p, q, pose.compose(gp), out);
        }
    }
}

// adapter: relabel (a,b) -> (b,a) and convert placements so they refer to
// the original canonical tile
template <typename Frag>
inline void with_ab_ordered(const TileShape& s, std::vector<Placement>& out, Frag&& frag) {
    if (s.a < s.b) {
        frag(s, out);
        return;
    }
    TileShape sw = s.swapped_ab();
    std::vector<Placement> tmp;
    frag(sw, tmp);
    Isometry conv = swap_reflection(s);
    out.reserve(out.size() + tmp.size());
    for (const Placement& p : tmp) out.push_back({p.iso.compose(conv)});
}

inline ArithFrame arith_frobenius_frame(const TileShape& s, long k, long k1) {
    const TileShape sc = s.a < s.b ? s : s.swapped_ab();
    return arith_frame_n(sc, sc.b * k + sc.c * k1);
}

}  // namespace detail

// The (2*alpha, 2*beta, alpha+beta)-angled triangle of Prop arithmetic:
// option 1 tiles ((a+2b)mac, (b+2a)mbc, c^3 m) with N = (a+2b)(b+2a)m^2c^2,
// option 2 tiles ((a+2b)mab, (b+2a)mb^2, bc^2 m) with N = (a+2b)(b+2a)m^2b^2.
// (a, b) are used in ascending order; the labels above assume a < b.
inline Tiling tile_arithmetic(const TileShape& s, long m, int option,
                              const Isometry& pose = Isometry::identity()) {
    if (m < 1) throw NotConstructible("arithmetic construction needs m >= 1");
    if (option != 1 && option != 2) throw NotConstructible("arithmetic option must be 1 or 2");
    std::vector<Placement> pls;
    detail::with_ab_ordered(s, pls, [&](const TileShape& sc, std::vector<Placement>& out) {
        detail::frag_arithmetic_ordered(sc, m, option, pose, out);
    });
    const TileShape sc = s.a < s.b ? s : s.swapped_ab();
    detail::ArithFrame fr = detail::arith_frame_n(sc, detail::arith_scale(sc, m, option));
    long per = (option == 1 ? sc.c : sc.b);
    std::uint64_t n = static_cast<std::uint64_t>(sc.a + 2 * sc.b) * (2 * sc.a + sc.b) * m * m *
                      per * per;
    return Tiling{s, detail::posed_polygon({fr.P, fr.Q, fr.R}, pose), std::move(pls), n};
}

// Thm arithmetic: the same angle family with edge c^2(bk + ck1), as an
// option-2 piece scaled k, an option-1 piece scaled k1 and a grid
// parallelogram; N = (a+2b)(b+2a)(bk + ck1)^2 (a < b labels).
inline Tiling tile_arithmetic_frobenius(const TileShape& s, long k, long k1,
                                        const Isometry& pose = Isometry::identity()) {
    std::vector<Placement> pls;
    detail::with_ab_ordered(s, pls, [&](const TileShape& sc, std::vector<Placement>& out) {
        detail::frag_arith_frobenius_ordered(sc, k, k1, pose, out);
    });
    detail::ArithFrame fr = detail::arith_frobenius_frame(s, k, k1);
    const TileShape sc = s.a < s.b ? s : s.swapped_ab();
    long mhat = sc.b * k + sc.c * k1;
    std::uint64_t n = static_cast<std::uint64_t>(sc.a + 2 * sc.b) * (2 * sc.a + sc.b) * mhat *
                      mhat;
    return Tiling{s, detail::posed_polygon({fr.P, fr.Q, fr.R}, pose), std::move(pls), n};
}

// Prop triple-angle: swap=false tiles (c^2 m, (a+2b)mc, 3(a+b)mb) with
// angles (alpha, 2*alpha, 3*beta) into the arithmetic triangle plus an
// (a+2b)m-scaled tile; N = 3 m^2 (a+2b)(a+b), m = bk + ck1 (a < b labels).
// swap=true: N = 3 m^2 (2a+b)(a+b).
inline Tiling tile_triple_angle(const TileShape& s, long k, long k1, bool swap,
                                const Isometry& pose = Isometry::identity()) {
    std::vector<Placement> pls;
    bool eff_swap = s.a < s.b ? swap : !swap;
    detail::with_ab_ordered(s, pls, [&](const TileShape& sc, std::vector<Placement>& out) {
        const long a = sc.a, b = sc.b, c = sc.c;
        const long mhat = b * k + c * k1;
        if (k < 0 || k1 < 0 || mhat < 1)
            throw NotConstructible("triple-angle needs k, k1 >= 0 with bk + ck1 >= 1");
        detail::ArithFrame sub = detail::arith_frame_n(sc, mhat);
        Point B = detail::pt(Rat(0), Rat(0));
        if (!eff_swap) {
            Point C = detail::pt(Rat(3 * (a + b) * mhat * b), Rat(0));
            Point A2 = detail::scale_pt(Rat(mhat * c * c), detail::dir_2alpha(sc));
            Point D = detail::pt(Rat((2 * a + b) * b * mhat), Rat(0));
            Isometry embed = rigid_map(sub.P, sub.Q, sub.R, B, A2, D);
            detail::frag_arith_frobenius_ordered(sc, k, k1, pose.compose(embed), out);
            long k2 = (a + 2 * b) * mhat;
            frag_reptile(sc, k2, pose.compose(detail::place_scaled(sc, k2, C, A2, D)), out);
        } else {
            Point C = detail::pt(Rat(3 * (a + b) * mhat * a), Rat(0));
            Point A2 = detail::scale_pt(Rat(mhat * c * c), detail::dir_2beta(sc));
            Point D = detail::pt(Rat((a + 2 * b) * a * mhat), Rat(0));
            Isometry embed = rigid_map(sub.P, sub.Q, sub.R, A2, B, D);
            detail::frag_arith_frobenius_ordered(sc, k, k1, pose.compose(embed), out);
            long k2 = (2 * a + b) * mhat;
            frag_reptile(sc, k2, pose.compose(detail::place_scaled(sc, k2, A2, C, D)), out);
        }
    });
    const TileShape sc = s.a < s.b ? s : s.swapped_ab();
    const long a = sc.a, b = sc.b, c = sc.c;
    const long mhat = b * k + c * k1;
    Point B = detail::pt(Rat(0), Rat(0));
    Point C = detail::pt(Rat(3 * (a + b) * mhat * (eff_swap ? a : b)), Rat(0));
    Point A2 = detail::scale_pt(Rat(mhat * c * c),
                                eff_swap ? detail::dir_2beta(sc) : detail::dir_2alpha(sc));
    std::uint64_t coeff = eff_swap ? static_cast<std::uint64_t>(2 * a + b)
                                   : static_cast<std::uint64_t>(a + 2 * b);
    std::uint64_t n = 3 * coeff * (a + b) * mhat * mhat;
    return Tiling{s, detail::posed_polygon({B, C, A2}, pose), std::move(pls), n};
}

}  // namespace tritile
