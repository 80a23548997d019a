#pragma once

#include <cstdint>
#include <stdexcept>

namespace petrie {

using Coeff = std::int64_t;

// Coefficient arithmetic that throws instead of wrapping.
inline Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline int sign_of_parity(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace petrie
