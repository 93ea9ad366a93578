#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>

namespace tritile {

struct FrobeniusWitness {
    long k = 0;   // multiplier of a
    long k1 = 0;  // multiplier of b

    friend bool operator==(const FrobeniusWitness& x, const FrobeniusWitness& y) {
        return x.k == y.k && x.k1 == y.k1;
    }
};

// Deterministic witness for target = k*a + k1*b with k, k1 >= 0: the
// largest k with k*a <= target and b | (target - k*a), scanning k
// downward. Guaranteed to exist when target > ab - a - b (Frobenius
// number of two coprime elements).
inline std::optional<FrobeniusWitness> frobenius_decompose(long target, long a, long b) {
    if (a < 1 || b < 1) throw std::invalid_argument("frobenius_decompose: a, b must be positive");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("frobenius_decompose: gcd(a,b) must be 1");
    if (target < 0) return std::nullopt;
    for (long k = target / a; k >= 0; --k) {
        long rest = target - k * a;
        if (rest % b == 0) return FrobeniusWitness{k, rest / b};
    }
    return std::nullopt;
}

}  // namespace tritile
