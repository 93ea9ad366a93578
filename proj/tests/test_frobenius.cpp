#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "oracles.hpp"
#include "tritile/frobenius.hpp"

using namespace tritile;

TEST_CASE("frobenius examples") {
    auto w = frobenius_decompose(8, 3, 5);
    REQUIRE(w.has_value());
    CHECK(*w == FrobeniusWitness{1, 1});
    CHECK(!frobenius_decompose(7, 3, 5).has_value());
    auto z = frobenius_decompose(0, 3, 5);
    REQUIRE(z.has_value());
    CHECK(*z == FrobeniusWitness{0, 0});
    // deterministic: k maximal
    auto m = frobenius_decompose(15, 3, 5);
    REQUIRE(m.has_value());
    CHECK(*m == FrobeniusWitness{5, 0});
}

TEST_CASE("guaranteed above the Frobenius number") {
    for (long a : {2, 3, 5, 7}) {
        for (long b : {3, 5, 11}) {
            if (std::gcd(a, b) != 1) continue;
            long f = a * b - a - b;
            for (long t = f + 1; t <= f + 2 * a * b; ++t) {
                auto w = frobenius_decompose(t, a, b);
                REQUIRE(w.has_value());
                CHECK(w->k * a + w->k1 * b == t);
            }
            CHECK(!frobenius_decompose(f, a, b).has_value());
        }
    }
}

TEST_CASE("agrees with brute force for all coprime pairs up to 20") {
    for (long a = 1; a <= 20; ++a) {
        for (long b = 1; b <= 20; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (long t = 0; t <= 2 * a * b; ++t) {
                auto fast = frobenius_decompose(t, a, b);
                auto slow = oracles::frobenius_brute(t, a, b);
                REQUIRE(fast.has_value() == slow.has_value());
                if (fast) CHECK(fast->k * a + fast->k1 * b == t);
            }
        }
    }
}
