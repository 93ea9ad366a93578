#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "tritile/rational.hpp"

namespace tritile {

// Element of the quadratic field Q(sqrt(3)): value = p + q*sqrt(3).
// Representation is unique because sqrt(3) is irrational, so equality
// is componentwise.
class QS3 {
public:
    QS3() = default;
    QS3(Rat p) : p_(std::move(p)) {}
    QS3(long p) : p_(Rat(p)) {}
    QS3(Rat p, Rat q) : p_(std::move(p)), q_(std::move(q)) {}
    QS3(long p, long q) : p_(Rat(p)), q_(Rat(q)) {}

    static QS3 sqrt3() { return QS3(Rat(0), Rat(1)); }
    static QS3 sqrt3_times(Rat q) { return QS3(Rat(0), std::move(q)); }

    const Rat& p() const { return p_; }
    const Rat& q() const { return q_; }

    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
    bool is_rational() const { return q_.is_zero(); }

    QS3 operator-() const { return QS3(-p_, -q_); }
    QS3& operator+=(const QS3& o) { p_ += o.p_; q_ += o.q_; return *this; }
    QS3& operator-=(const QS3& o) { p_ -= o.p_; q_ -= o.q_; return *this; }
    QS3& operator*=(const QS3& o) {
        // (p1 + q1 s)(p2 + q2 s) = p1 p2 + 3 q1 q2 + (p1 q2 + p2 q1) s
        Rat np = p_ * o.p_ + Rat(3) * q_ * o.q_;
        Rat nq = p_ * o.q_ + o.p_ * q_;
        p_ = std::move(np);
        q_ = std::move(nq);
        return *this;
    }
    QS3& operator/=(const QS3& o) {
        if (o.is_zero()) throw std::domain_error("QS3: division by zero");
        // multiply by conjugate / (p^2 - 3 q^2); the norm is nonzero for o != 0
        Rat norm = o.p_ * o.p_ - Rat(3) * o.q_ * o.q_;
        QS3 conj(o.p_, -o.q_);
        *this *= conj;
        p_ /= norm;
        q_ /= norm;
        return *this;
    }

    friend QS3 operator+(QS3 a, const QS3& b) { return a += b; }
    friend QS3 operator-(QS3 a, const QS3& b) { return a -= b; }
    friend QS3 operator*(QS3 a, const QS3& b) { return a *= b; }
    friend QS3 operator/(QS3 a, const QS3& b) { return a /= b; }

    friend bool operator==(const QS3& a, const QS3& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
    friend bool operator!=(const QS3& a, const QS3& b) { return !(a == b); }

    // Exact sign of the real number p + q*sqrt(3).
    int sign() const {
        int sp = p_.sign(), sq = q_.sign();
        if (sq == 0) return sp;
        if (sp == 0) return sq;
        if (sp == sq) return sp;
        // opposite signs: compare p^2 against 3 q^2
        Rat d = p_ * p_ - Rat(3) * q_ * q_;
        return sp * d.sign();
    }

    std::array<std::string, 4> to_strings() const {
        return {p_.numerator().get_str(), p_.denominator().get_str(),
                q_.numerator().get_str(), q_.denominator().get_str()};
    }
    static QS3 from_strings(const std::string& pn, const std::string& pd,
                            const std::string& qn, const std::string& qd) {
        return QS3(Rat::from_decimal_strings(pn, pd), Rat::from_decimal_strings(qn, qd));
    }

    std::string str() const { return p_.str() + (q_.sign() >= 0 ? "+" : "") + q_.str() + "*sqrt3"; }

private:
    Rat p_, q_;
};

inline int qs3_sign(const QS3& x) { return x.sign(); }
inline bool qs3_less(const QS3& a, const QS3& b) { return (a - b).sign() < 0; }
inline bool qs3_leq(const QS3& a, const QS3& b) { return (a - b).sign() <= 0; }

// Exact square root within the field, if one exists. Solves
// (p + q s)^2 = x for the nonnegative root.
inline std::optional<QS3> qs3_sqrt(const QS3& x) {
    int sx = x.sign();
    if (sx < 0) return std::nullopt;
    if (sx == 0) return QS3();
    if (x.q().is_zero()) {
        Rat r;
        if (rat_sqrt(x.p(), r)) return QS3(r);
        if (rat_sqrt(x.p() / Rat(3), r)) return QS3(Rat(0), r);
        return std::nullopt;
    }
    // p^2 + 3 q^2 = x.p, 2 p q = x.q: p^2 and 3 q^2 are roots of
    // z^2 - x.p z + 3 (x.q/2)^2 = 0
    Rat half_q = x.q() / Rat(2);
    Rat disc = x.p() * x.p() - Rat(12) * half_q * half_q;
    Rat d;
    if (disc.sign() < 0 || !rat_sqrt(disc, d)) return std::nullopt;
    for (int branch = 0; branch < 2; ++branch) {
        Rat z = (branch == 0) ? (x.p() + d) / Rat(2) : (x.p() - d) / Rat(2);
        Rat prat;
        if (z.sign() < 0 || !rat_sqrt(z, prat)) continue;
        if (prat.is_zero()) continue;
        Rat qrat = half_q / prat;
        QS3 cand(prat, qrat);
        if (cand * cand == x && cand.sign() > 0) return cand;
        cand = -cand;
        if (cand * cand == x && cand.sign() > 0) return cand;
    }
    return std::nullopt;
}

namespace detail {

// floor of a rational given as num/den with den > 0
inline BigInt floor_div(const BigInt& num, const BigInt& den) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline BigInt pow10(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

// round half away from zero, exact rational input
inline BigInt round_rat(const Rat& r) {
    BigInt num2 = r.numerator() * 2;
    BigInt den2 = r.denominator() * 2;
    if (r.sign() >= 0) return floor_div(num2 + r.denominator(), den2);
    BigInt m = floor_div(-num2 + r.denominator(), den2);
    return -m;
}

}  // namespace detail

// Decimal expansion of p + q*sqrt(3), correctly rounded to `digits`
// fractional digits (half away from zero on exact rational ties).
// Rendering only: uses outward-rounded interval refinement of sqrt(3),
// never feeds back into exact logic.
inline std::string qs3_approx(const QS3& x, int digits) {
    if (digits < 1) throw std::invalid_argument("qs3_approx: digits must be >= 1");
    const BigInt scale = detail::pow10(static_cast<unsigned long>(digits));
    BigInt n;  // round(x * 10^digits)
    if (x.q().is_zero()) {
        n = detail::round_rat(Rat(x.p().numerator() * scale, x.p().denominator()));
    } else {
        Rat pp(x.p().numerator() * scale, x.p().denominator());
        Rat qq(x.q().numerator() * scale, x.q().denominator());
        // bracket sqrt(3) in [s/10^k, (s+1)/10^k] and refine until the
        // rounded value is pinned; x irrational here, so this terminates
        for (unsigned long k = static_cast<unsigned long>(digits) + 8;; k *= 2) {
            BigInt tenk = detail::pow10(k);
            BigInt s;
            BigInt three_tenk2 = 3 * tenk * tenk;
            mpz_sqrt(s.get_mpz_t(), three_tenk2.get_mpz_t());
            Rat lo3(s, tenk), hi3(s + 1, tenk);
            Rat lo = pp + qq * (x.q().sign() > 0 ? lo3 : hi3);
            Rat hi = pp + qq * (x.q().sign() > 0 ? hi3 : lo3);
            BigInt rlo = detail::round_rat(lo), rhi = detail::round_rat(hi);
            if (rlo == rhi) {
                n = rlo;
                break;
            }
        }
    }
    bool neg = sgn(n) < 0;
    BigInt mag = abs(n);
    std::string ds = mag.get_str();
    if (static_cast<int>(ds.size()) <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    std::string out = ds.substr(0, ds.size() - digits) + "." + ds.substr(ds.size() - digits);
    if (neg && mag != 0) out.insert(0, 1, '-');
    return out;
}

// double approximation, rendering/bucketing only
inline double qs3_to_double(const QS3& x) {
    return x.p().raw().get_d() + x.q().raw().get_d() * 1.7320508075688772935;
}

}  // namespace tritile
