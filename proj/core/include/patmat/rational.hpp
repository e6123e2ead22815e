#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "patmat/checked.hpp"
#include "patmat/errors.hpp"

namespace patmat {

// Exact fraction of 64-bit integers, always normalized (den > 0, gcd(num,den) = 1).
// Used wherever the contract promises an exact rational next to a float.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw config_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    bool operator==(const Rational&) const = default;
};

inline Rational operator*(const Rational& a, const Rational& b) {
    // cross-reduce first so intermediate products stay small
    std::int64_t g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    std::int64_t g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    return Rational(checked_mul(a.num / g1, b.num / g2), checked_mul(a.den / g2, b.den / g1));
}

inline bool operator<(const Rational& a, const Rational& b) {
    // exact comparison via 128-bit cross product
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

}  // namespace patmat
