#pragma once

#include <cstdint>
#include <string>

#include "patmat/errors.hpp"

namespace patmat {

// Overflow-checked 64-bit arithmetic for exact label and count math.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("64-bit overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

}  // namespace patmat
