#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tritile/qs3.hpp"

using namespace tritile;

namespace {

std::mt19937 rng(20240817u);

Rat random_rat() {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    return Rat(num(rng), den(rng));
}

QS3 random_qs3() { return QS3(random_rat(), random_rat()); }

}  // namespace

TEST_CASE("rational canonical form") {
    Rat r(6, 4);
    CHECK(r.numerator() == 3);
    CHECK(r.denominator() == 2);
    Rat n(-6, 4);
    CHECK(n.numerator() == -3);
    CHECK(n.denominator() == 2);
    CHECK(Rat(0, 7) == Rat(0));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("qs3 arithmetic examples") {
    QS3 one(1), sqrt3 = QS3::sqrt3();
    CHECK(one + sqrt3 == QS3(Rat(1), Rat(1)));
    CHECK(sqrt3 * sqrt3 == QS3(3));
    // 1 / (2 + sqrt3) = 2 - sqrt3; check by multiplying back
    QS3 y(Rat(2), Rat(1));
    QS3 d = one / y;
    CHECK(d == QS3(Rat(2), Rat(-1)));
    CHECK(d * y == one);
    CHECK_THROWS_AS(one / QS3(), std::domain_error);
}

TEST_CASE("qs3 sign") {
    CHECK(QS3().sign() == 0);
    CHECK(QS3(Rat(-5), Rat(3)).sign() == 1);   // 27 > 25
    CHECK(QS3(Rat(7), Rat(-4)).sign() == 1);   // 49 > 48
    CHECK(QS3(Rat(-7), Rat(4)).sign() == -1);
    CHECK(QS3(Rat(2), Rat(-1)).sign() == 1);
    CHECK(QS3(Rat(0), Rat(-2)).sign() == -1);
}

TEST_CASE("qs3 approx") {
    CHECK(qs3_approx(QS3::sqrt3(), 6) == "1.732051");
    CHECK(qs3_approx(QS3(2), 2) == "2.00");
    CHECK(qs3_approx(QS3(Rat(-5), Rat(3)), 4) == "0.1962");
    CHECK(qs3_approx(QS3(Rat(-1, 2)), 1) == "-0.5");
    CHECK(qs3_approx(-QS3::sqrt3(), 3) == "-1.732");
    // exact rational tie rounds half away from zero
    CHECK(qs3_approx(QS3(Rat(1, 8)), 2) == "0.13");
    CHECK(qs3_approx(QS3(Rat(-1, 8)), 2) == "-0.13");
}

TEST_CASE("field axioms on random samples") {
    for (int i = 0; i < 2000; ++i) {
        QS3 x = random_qs3(), y = random_qs3(), z = random_qs3();
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
        if (!x.is_zero()) {
            QS3 inv = QS3(1) / x;
            CHECK(x * inv == QS3(1));
        }
        CHECK((x == y) == ((x - y).is_zero()));
    }
}

TEST_CASE("sign agrees with 30-digit approx") {
    int tested = 0;
    for (int i = 0; i < 200000 && tested < 10000; ++i) {
        QS3 x = random_qs3();
        std::string s = qs3_approx(x, 30);
        bool nonzero_digit = s.find_first_of("123456789") != std::string::npos;
        if (!nonzero_digit) continue;
        ++tested;
        int approx_sign = (s[0] == '-') ? -1 : 1;
        REQUIRE(x.sign() == approx_sign);
    }
    CHECK(tested >= 10000);
}

TEST_CASE("qs3 sqrt") {
    QS3 v(Rat(7), Rat(4));  // (2 + sqrt3)^2
    auto r = qs3_sqrt(v);
    REQUIRE(r.has_value());
    CHECK(*r == QS3(Rat(2), Rat(1)));
    CHECK(qs3_sqrt(QS3(4)) == QS3(2));
    CHECK(qs3_sqrt(QS3(12)) == QS3(Rat(0), Rat(2)));
    CHECK(!qs3_sqrt(QS3(2)).has_value());
    CHECK(!qs3_sqrt(QS3(-1)).has_value());
    for (int i = 0; i < 500; ++i) {
        QS3 x = random_qs3();
        auto s = qs3_sqrt(x * x);
        REQUIRE(s.has_value());
        CHECK(*s * *s == x * x);
        CHECK(s->sign() >= 0);
    }
}

TEST_CASE("string round trip") {
    QS3 v(Rat(-13, 14), Rat(15, 98));
    auto t = v.to_strings();
    CHECK(QS3::from_strings(t[0], t[1], t[2], t[3]) == v);
}
