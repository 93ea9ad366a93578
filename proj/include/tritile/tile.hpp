#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "tritile/geom.hpp"

namespace tritile {

enum class TileVariant { Obtuse120, Acute60 };

inline const char* variant_name(TileVariant v) {
    return v == TileVariant::Obtuse120 ? "obtuse120" : "acute60";
}

struct TileError : std::runtime_error {
    enum class Kind { CoprimalityViolation, LawOfCosinesViolation, DegenerateTile, BadSides };
    Kind kind;
    TileError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Integer-sided tile triangle (a, b, c) with the angle opposite c equal
// to 2pi/3 (Obtuse120, c^2 = a^2 + b^2 + ab) or pi/3 (Acute60,
// c^2 = a^2 + b^2 - ab). Sides are pairwise coprime and a != b.
struct TileShape {
    long a = 0, b = 0, c = 0;
    TileVariant variant = TileVariant::Obtuse120;

    static TileShape make(long a, long b, long c, TileVariant variant) {
        if (a < 1 || b < 1 || c < 1)
            throw TileError(TileError::Kind::BadSides, "tile sides must be >= 1");
        if (a == b)
            throw TileError(TileError::Kind::DegenerateTile,
                            "a = b forces the excluded commensurable case");
        if (std::gcd(a, b) != 1 || std::gcd(b, c) != 1 || std::gcd(a, c) != 1)
            throw TileError(TileError::Kind::CoprimalityViolation,
                            "tile sides must be pairwise coprime");
        long rhs = (variant == TileVariant::Obtuse120) ? a * a + b * b + a * b
                                                       : a * a + b * b - a * b;
        if (c * c != rhs)
            throw TileError(TileError::Kind::LawOfCosinesViolation,
                            variant == TileVariant::Obtuse120
                                ? "c^2 = a^2 + b^2 + ab fails"
                                : "c^2 = a^2 + b^2 - ab fails");
        return TileShape{a, b, c, variant};
    }

    TileShape swapped_ab() const {
        return TileShape{b, a, c, variant};
    }

    QS3 area() const {  // ab sqrt(3) / 4, both variants
        return QS3(Rat(0), Rat(a * b, 4));
    }

    std::string str() const {
        return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
    }

    friend bool operator==(const TileShape& x, const TileShape& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.variant == y.variant;
    }
};

// Exact trigonometry of the tile angles. Cosines are rational; sines are
// rational multiples of sqrt(3) (law of sines with sin(gamma) = sqrt(3)/2).
struct AngleData {
    Rat cos_alpha, sin_alpha_coeff;
    Rat cos_beta, sin_beta_coeff;
    Rat cos_gamma, sin_gamma_coeff;

    QS3 sin_alpha() const { return QS3(Rat(0), sin_alpha_coeff); }
    QS3 sin_beta() const { return QS3(Rat(0), sin_beta_coeff); }
    QS3 sin_gamma() const { return QS3(Rat(0), sin_gamma_coeff); }
};

inline AngleData angle_data(const TileShape& s) {
    AngleData d;
    d.cos_alpha = Rat(s.b * s.b + s.c * s.c - s.a * s.a, 2 * s.b * s.c);
    d.sin_alpha_coeff = Rat(s.a, 2 * s.c);
    d.cos_beta = Rat(s.a * s.a + s.c * s.c - s.b * s.b, 2 * s.a * s.c);
    d.sin_beta_coeff = Rat(s.b, 2 * s.c);
    d.cos_gamma = (s.variant == TileVariant::Obtuse120) ? Rat(-1, 2) : Rat(1, 2);
    d.sin_gamma_coeff = Rat(1, 2);
    return d;
}

// Fixed reference placement: v0 = (0,0) carries alpha, v1 = (c,0) carries
// beta, v2 above the x-axis carries gamma; |v0 v2| = b, |v1 v2| = a.
inline Point canonical_apex(const TileShape& s) {
    return {QS3(Rat(s.b * s.b + s.c * s.c - s.a * s.a, 2 * s.c)),
            QS3(Rat(0), Rat(s.a * s.b, 2 * s.c))};
}

inline Triangle canonical_triangle(const TileShape& s) {
    return Triangle({QS3(0), QS3(0)}, {QS3(s.c), QS3(0)}, canonical_apex(s));
}

// A tile placement: the isometry applied to the canonical triangle.
struct Placement {
    Isometry iso;

    // footprint re-oriented counterclockwise regardless of det(iso)
    Triangle footprint(const TileShape& s) const {
        Triangle canon = canonical_triangle(s);
        return Triangle(iso.apply(canon.v0), iso.apply(canon.v1), iso.apply(canon.v2)).ccw();
    }
};

struct Tiling {
    TileShape shape;
    ConvexPolygon target;
    std::vector<Placement> placements;
    std::uint64_t claimed_count = 0;
};

}  // namespace tritile
