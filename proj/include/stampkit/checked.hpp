#pragma once

#include <cstdint>
#include <string>

#include "stampkit/errors.hpp"

namespace stampkit {

/// Overflow-checked 64-bit arithmetic. Every arithmetic result in the library
/// goes through these helpers; a value that does not fit in int64 raises
/// Overflow instead of wrapping.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("overflow in " + std::to_string(a) + " + " + std::to_string(b));
    }
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw OverflowError("overflow in " + std::to_string(a) + " - " + std::to_string(b));
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("overflow in " + std::to_string(a) + " * " + std::to_string(b));
    }
    return r;
}

/// ceil(num / den) for num >= 0, den > 0.
inline std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
    return checked_add(num, den - 1) / den;
}

}  // namespace stampkit
