#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "tritile/tile.hpp"

using namespace tritile;

TEST_CASE("make_tile validation") {
    CHECK_NOTHROW(TileShape::make(3, 5, 7, TileVariant::Obtuse120));
    CHECK_NOTHROW(TileShape::make(5, 8, 7, TileVariant::Acute60));
    CHECK_NOTHROW(TileShape::make(7, 8, 13, TileVariant::Obtuse120));
    CHECK_THROWS_AS(TileShape::make(2, 4, 6, TileVariant::Obtuse120), TileError);
    CHECK_THROWS_AS(TileShape::make(3, 5, 8, TileVariant::Obtuse120), TileError);
    CHECK_THROWS_AS(TileShape::make(5, 8, 7, TileVariant::Obtuse120), TileError);
    CHECK_THROWS_AS(TileShape::make(3, 3, 3, TileVariant::Obtuse120), TileError);
    try {
        TileShape::make(2, 4, 6, TileVariant::Obtuse120);
    } catch (const TileError& e) {
        CHECK(e.kind == TileError::Kind::CoprimalityViolation);
    }
}

TEST_CASE("canonical triangle coordinates") {
    TileShape s = TileShape::make(3, 5, 7, TileVariant::Obtuse120);
    Triangle t = canonical_triangle(s);
    CHECK(t.v2 == (Point{QS3(Rat(65, 14)), QS3(Rat(0), Rat(15, 14))}));
    CHECK(dist2(t.v0, t.v2) == QS3(25));
    CHECK(dist2(t.v1, t.v2) == QS3(9));
    CHECK(t.signed_area2() / QS3(2) == QS3(Rat(0), Rat(15, 4)));

    TileShape ac = TileShape::make(5, 8, 7, TileVariant::Acute60);
    Triangle u = canonical_triangle(ac);
    CHECK(u.v2 == (Point{QS3(Rat(88, 14)), QS3(Rat(0), Rat(40, 14))}));
    CHECK(dist2(u.v0, u.v2) == QS3(64));
    CHECK(dist2(u.v1, u.v2) == QS3(25));
    CHECK(u.signed_area2() / QS3(2) == QS3(Rat(0), Rat(40, 4)));
}

TEST_CASE("angle data") {
    TileShape s = TileShape::make(3, 5, 7, TileVariant::Obtuse120);
    AngleData d = angle_data(s);
    CHECK(d.cos_alpha == Rat(13, 14));
    CHECK(d.sin_alpha_coeff == Rat(3, 14));
    CHECK(d.cos_gamma == Rat(-1, 2));
    // cos^2 + sin^2 = 1 with sin = coeff * sqrt3
    CHECK(d.cos_alpha * d.cos_alpha + Rat(3) * d.sin_alpha_coeff * d.sin_alpha_coeff == Rat(1));

    TileShape ac = TileShape::make(5, 8, 7, TileVariant::Acute60);
    CHECK(angle_data(ac).cos_gamma == Rat(1, 2));
}

TEST_CASE("angle sum identity alpha + beta = pi - gamma, exact") {
    for (auto s : {TileShape::make(3, 5, 7, TileVariant::Obtuse120),
                   TileShape::make(7, 8, 13, TileVariant::Obtuse120),
                   TileShape::make(5, 16, 19, TileVariant::Obtuse120),
                   TileShape::make(5, 8, 7, TileVariant::Acute60),
                   TileShape::make(7, 15, 13, TileVariant::Acute60)}) {
        AngleData d = angle_data(s);
        // cos(alpha+beta) = -cos gamma: cosA cosB - 3 sA sB = -cosG
        CHECK(d.cos_alpha * d.cos_beta - Rat(3) * d.sin_alpha_coeff * d.sin_beta_coeff ==
              -d.cos_gamma);
        // sin(alpha+beta) = sin gamma (sqrt3 coefficients)
        CHECK(d.sin_alpha_coeff * d.cos_beta + d.cos_alpha * d.sin_beta_coeff ==
              d.sin_gamma_coeff);
    }
}

TEST_CASE("canonical side multiset equals {a^2, b^2, c^2}") {
    for (auto s : {TileShape::make(3, 5, 7, TileVariant::Obtuse120),
                   TileShape::make(5, 8, 7, TileVariant::Acute60)}) {
        Triangle t = canonical_triangle(s);
        std::vector<QS3> got = {dist2(t.v0, t.v1), dist2(t.v1, t.v2), dist2(t.v2, t.v0)};
        std::vector<long> want = {s.a * s.a, s.b * s.b, s.c * s.c};
        for (long w : want) {
            bool found = false;
            for (auto& g : got)
                if (g == QS3(w)) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("incommensurability spot check: cos alpha is no cos(k pi / n), n <= 24") {
    TileShape s = TileShape::make(3, 5, 7, TileVariant::Obtuse120);
    double target = 13.0 / 14.0;
    for (int n = 1; n <= 24; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(std::abs(std::cos(k * M_PI / n) - target) > 1e-9);
}

TEST_CASE("placement footprint is ccw also for mirrored placements") {
    TileShape s = TileShape::make(3, 5, 7, TileVariant::Obtuse120);
    Isometry mirror;
    mirror.m00 = QS3(1);
    mirror.m11 = QS3(-1);
    Placement pl{mirror};
    CHECK(pl.footprint(s).winding() == 1);
}
