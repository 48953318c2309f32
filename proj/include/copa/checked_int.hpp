#pragma once

#include <cstdint>
#include <stdexcept>

namespace copa {

// Exact counts. Every arithmetic step that can grow a count goes through the
// checked helpers below, so overflow surfaces as an exception instead of a
// silently wrong coefficient.
using Count = std::int64_t;

[[nodiscard]] inline Count checked_add(Count lhs, Count rhs) {
    Count out = 0;
    if (__builtin_add_overflow(lhs, rhs, &out)) {
        throw std::overflow_error("copa: integer overflow in addition");
    }
    return out;
}

[[nodiscard]] inline Count checked_sub(Count lhs, Count rhs) {
    Count out = 0;
    if (__builtin_sub_overflow(lhs, rhs, &out)) {
        throw std::overflow_error("copa: integer overflow in subtraction");
    }
    return out;
}

[[nodiscard]] inline Count checked_mul(Count lhs, Count rhs) {
    Count out = 0;
    if (__builtin_mul_overflow(lhs, rhs, &out)) {
        throw std::overflow_error("copa: integer overflow in multiplication");
    }
    return out;
}

} // namespace copa
