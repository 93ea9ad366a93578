#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace tritile {

using BigInt = mpz_class;

// Arbitrary-precision rational, always in canonical form: positive
// denominator, gcd(|num|, den) = 1. Equality is structural.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(static_cast<long>(n)) {}
    Rat(const BigInt& n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) { normalize(); }
    Rat(const BigInt& n, const BigInt& d) : v_(n, d) { normalize(); }
    explicit Rat(mpq_class q) : v_(std::move(q)) { normalize(); }

    static Rat from_decimal_strings(const std::string& num, const std::string& den) {
        return Rat(BigInt(num), BigInt(den));
    }

    const BigInt numerator() const { return v_.get_num(); }
    const BigInt denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_), already_canonical{}); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    std::string str() const { return v_.get_str(); }

private:
    struct already_canonical {};
    Rat(mpq_class q, already_canonical) : v_(std::move(q)) {}

    void normalize() {
        if (sgn(v_.get_den()) == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

// Exact square root of a nonnegative rational, if it is rational.
inline bool rat_sqrt(const Rat& x, Rat& out) {
    if (x.sign() < 0) return false;
    BigInt num = x.numerator(), den = x.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = Rat(rn, rd);
    return true;
}

}  // namespace tritile
