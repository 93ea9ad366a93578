#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tritile/constructions.hpp"
#include "tritile/verify.hpp"

using namespace tritile;

namespace {

const TileShape t357 = TileShape::make(3, 5, 7, TileVariant::Obtuse120);
const TileShape t587 = TileShape::make(5, 8, 7, TileVariant::Acute60);

bool has_kind(const VerifyReport& r, FailureKind k) {
    return std::any_of(r.failures.begin(), r.failures.end(),
                       [&](const VerifyFailure& f) { return f.kind == k; });
}

}  // namespace

TEST_CASE("check_congruence") {
    CHECK(check_congruence(Placement{Isometry::identity()}, t357));
    Isometry mirror;
    mirror.m00 = QS3(1);
    mirror.m11 = QS3(-1);
    CHECK(check_congruence(Placement{mirror}, t357));
    Isometry scaled;
    scaled.m00 = QS3(2);
    scaled.m11 = QS3(2);
    CHECK(!check_congruence(Placement{scaled}, t357));
}

TEST_CASE("verify passes on constructions and fails on tampering") {
    Tiling good = tile_unit_parallelogram(t357);
    VerifyReport rep = verify_tiling(good);
    CHECK(rep.passed);
    CHECK(rep.tile_count == 2);

    SECTION("duplicated placement") {
        Tiling bad = good;
        bad.placements.push_back(bad.placements.front());
        bad.claimed_count = 3;
        VerifyReport r = verify_tiling(bad);
        CHECK(!r.passed);
        CHECK(has_kind(r, FailureKind::Overlap));
        CHECK(has_kind(r, FailureKind::AreaMismatch));
    }
    SECTION("count mismatch") {
        Tiling bad = good;
        bad.claimed_count = 5;
        VerifyReport r = verify_tiling(bad);
        CHECK(!r.passed);
        CHECK(has_kind(r, FailureKind::CountMismatch));
    }
    SECTION("translated placement") {
        Tiling bad = good;
        bad.placements[0].iso.tx += QS3(Rat(1, 1000000));
        VerifyReport r = verify_tiling(bad);
        CHECK(!r.passed);
    }
    SECTION("scaled placement breaks congruence") {
        Tiling bad = good;
        bad.placements[0].iso.m00 = QS3(2);
        VerifyReport r = verify_tiling(bad);
        CHECK(!r.passed);
        CHECK(has_kind(r, FailureKind::BadCongruence));
    }
}

TEST_CASE("verification order independent") {
    Tiling t = tile_basic_trapezoid(t357);
    VerifyReport base = verify_tiling(t);
    CHECK(base.passed);
    // tamper, then shuffle placements: pass/fail and failure multiset
    // (up to index renaming) must not depend on order
    Tiling bad = t;
    bad.placements[10].iso.tx += QS3(Rat(1, 1000));
    VerifyReport r1 = verify_tiling(bad);
    std::mt19937 rng(99u);
    std::vector<std::size_t> perm(bad.placements.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Tiling shuffled = bad;
    for (std::size_t i = 0; i < perm.size(); ++i) shuffled.placements[i] = bad.placements[perm[i]];
    VerifyReport r2 = verify_tiling(shuffled);
    CHECK(r1.passed == r2.passed);
    std::vector<FailureKind> k1, k2;
    for (auto& f : r1.failures) k1.push_back(f.kind);
    for (auto& f : r2.failures) k2.push_back(f.kind);
    std::sort(k1.begin(), k1.end());
    std::sort(k2.begin(), k2.end());
    CHECK(k1 == k2);
}

TEST_CASE("soundness versus clipping oracle on the small corpus") {
    std::vector<Tiling> corpus;
    corpus.push_back(tile_unit_parallelogram(t357));
    corpus.push_back(reptile_subdivision(t357, 3));
    corpus.push_back(tile_parallelogram(t357, 8));
    corpus.push_back(tile_grid_parallelogram(t357, 2, 3));
    corpus.push_back(tile_basic_trapezoid(t357));
    corpus.push_back(tile_basic_trapezoid(t587));
    corpus.push_back(tile_ideal_trapezoid(t357, 34, 15));
    for (const Tiling& t : corpus) {
        REQUIRE(t.placements.size() <= 200);
        bool ours = verify_tiling(t).passed;
        bool oracle = oracles::clipping_partition_oracle(t);
        CHECK(ours);
        CHECK(oracle);
    }
    // tampered versions must fail on both routes
    for (Tiling t : {tile_unit_parallelogram(t357), reptile_subdivision(t357, 2)}) {
        t.placements.back().iso.tx += QS3(Rat(1, 1000000));
        CHECK(!verify_tiling(t).passed);
        CHECK(!oracles::clipping_partition_oracle(t));
    }
}

TEST_CASE("mutation kill: unit translations flip any passing tiling") {
    Tiling t = tile_ideal_trapezoid(t357, 42, 15);
    REQUIRE(verify_tiling(t).passed);
    for (long q : {1000l, 1000000l}) {
        for (std::size_t i = 0; i < t.placements.size(); i += 7) {
            Tiling bad = t;
            bad.placements[i].iso.tx += QS3(Rat(1, q));
            CHECK(!verify_tiling(bad).passed);
        }
    }
}
