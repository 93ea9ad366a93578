#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "tritile/constructions.hpp"

namespace tritile {

enum class FamilyTag {
    Equilateral,
    IsoscelesBeta,
    IsoscelesAlpha,
    Arith2Alpha,
    Arith2Beta,
    OddAlpha,
    OddBeta,
    Arithmetic,
    TripleAlpha,
    TripleBeta,
    EquilateralAcute,
};

// Admissible m sets: either all m >= M, or the numerical semigroup
// generated by max(a,b) and c (minus zero).
enum class AdmissibleKind { AtLeastM, Semigroup };

// One angle-family row of Table 1: the N = coefficient * m^2 law together
// with its admissible multiplier set.
struct Family {
    FamilyTag tag;
    std::string name;    // stable identifier for CLI output
    std::string angles;  // angle triple, in the paper's notation
    AdmissibleKind kind;

    long coefficient(const TileShape& s) const {
        const long a = s.a, b = s.b;
        switch (tag) {
            case FamilyTag::Equilateral:
            case FamilyTag::EquilateralAcute: return a * b;
            case FamilyTag::IsoscelesBeta: return a * (b + 2 * a);
            case FamilyTag::IsoscelesAlpha: return b * (a + 2 * b);
            case FamilyTag::Arith2Alpha: return b * (a + b);
            case FamilyTag::Arith2Beta: return a * (a + b);
            case FamilyTag::OddAlpha: return (b + 2 * a) * (a + b);
            case FamilyTag::OddBeta: return (a + 2 * b) * (a + b);
            case FamilyTag::Arithmetic: return (a + 2 * b) * (b + 2 * a);
            case FamilyTag::TripleAlpha: return 3 * (a + 2 * b) * (a + b);
            case FamilyTag::TripleBeta: return 3 * (2 * a + b) * (a + b);
        }
        return 0;
    }

    bool admissible_m(const TileShape& s, long m) const {
        if (m < 1) return false;
        if (kind == AdmissibleKind::AtLeastM) return m >= equiconstruct_threshold(s);
        long g1 = std::max(s.a, s.b);
        return frobenius_decompose(m, g1, s.c).has_value();
    }

    long smallest_m(const TileShape& s) const {
        if (kind == AdmissibleKind::AtLeastM) return equiconstruct_threshold(s);
        return std::min(std::max(s.a, s.b), s.c);
    }

    std::string m_set_description(const TileShape& s) const {
        if (kind == AdmissibleKind::AtLeastM)
            return "m >= " + std::to_string(equiconstruct_threshold(s));
        long g1 = std::max(s.a, s.b);
        return "m in " + std::to_string(g1) + "N0 + " + std::to_string(s.c) + "N0";
    }
};

// rows in Table 1 order
inline const std::vector<Family>& families_for(TileVariant variant) {
    static const std::vector<Family> obtuse = {
        {FamilyTag::Equilateral, "equilateral", "(a+b, a+b, a+b)", AdmissibleKind::AtLeastM},
        {FamilyTag::IsoscelesBeta, "isosceles-beta", "(b, b, pi-2b)", AdmissibleKind::AtLeastM},
        {FamilyTag::IsoscelesAlpha, "isosceles-alpha", "(a, a, pi-2a)", AdmissibleKind::AtLeastM},
        {FamilyTag::Arith2Alpha, "arith2-alpha", "(a, a+b, a+2b)", AdmissibleKind::AtLeastM},
        {FamilyTag::Arith2Beta, "arith2-beta", "(b, a+b, 2a+b)", AdmissibleKind::AtLeastM},
        {FamilyTag::OddAlpha, "odd-alpha", "(a, 2b, 2a+b)", AdmissibleKind::AtLeastM},
        {FamilyTag::OddBeta, "odd-beta", "(b, 2a, a+2b)", AdmissibleKind::AtLeastM},
        {FamilyTag::Arithmetic, "arithmetic", "(2b, 2a, a+b)", AdmissibleKind::Semigroup},
        {FamilyTag::TripleAlpha, "triple-alpha", "(a, 2a, pi-3a)", AdmissibleKind::Semigroup},
        {FamilyTag::TripleBeta, "triple-beta", "(b, 2b, pi-3b)", AdmissibleKind::Semigroup},
    };
    static const std::vector<Family> acute = {
        {FamilyTag::EquilateralAcute, "equilateral-acute", "(a+b, a+b, a+b)",
         AdmissibleKind::AtLeastM},
    };
    return variant == TileVariant::Obtuse120 ? obtuse : acute;
}

// all N = coefficient * m^2 <= limit with m admissible, ascending
inline std::vector<std::uint64_t> family_N_values(const TileShape& s, const Family& fam,
                                                  std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    const long coeff = fam.coefficient(s);
    for (long m = 1;; ++m) {
        std::uint64_t n = static_cast<std::uint64_t>(coeff) * m * m;
        if (n > limit) break;
        if (fam.admissible_m(s, m)) out.push_back(n);
    }
    return out;
}

struct FamilySmallest {
    Family family;
    std::uint64_t smallest_n;
};

inline std::vector<FamilySmallest> smallest_N_table(const TileShape& s) {
    std::vector<FamilySmallest> rows;
    for (const Family& f : families_for(s.variant)) {
        long m = f.smallest_m(s);
        rows.push_back({f, static_cast<std::uint64_t>(f.coefficient(s)) * m * m});
    }
    return rows;
}

namespace detail {

inline bool squarefree(long n) {
    for (long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

}  // namespace detail

// Lemma constraint: when a and b are squarefree, an equiconstructible
// side X must be a multiple of ab. Vacuously true otherwise.
inline bool equiconstructible_X_necessary(const TileShape& s, long X) {
    if (!detail::squarefree(s.a) || !detail::squarefree(s.b)) return true;
    return X % (s.a * s.b) == 0;
}

// Lemma constraint for the (2a, 2b, a+b) family: when a != b (mod 3), any
// achievable N must equal (a+2b)(b+2a) m^2. No constraint otherwise.
inline bool arithmetic_N_necessary(const TileShape& s, std::uint64_t N) {
    if (s.a % 3 == s.b % 3) return true;
    std::uint64_t coeff = static_cast<std::uint64_t>(s.a + 2 * s.b) * (s.b + 2 * s.a);
    if (N % coeff != 0) return false;
    std::uint64_t q = N / coeff;
    BigInt root;
    BigInt qz(static_cast<unsigned long>(q));
    mpz_sqrt(root.get_mpz_t(), qz.get_mpz_t());
    return root * root == qz && q > 0;
}

}  // namespace tritile
