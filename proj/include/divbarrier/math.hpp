#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "divbarrier/errors.hpp"

namespace divbarrier {

/// A value constrained to [0, 1].
struct Probability {
    double value{0.0};

    constexpr Probability() = default;
    explicit Probability(double v) : value(v) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw ValidationError("Probability: value outside [0, 1]");
        }
    }
    constexpr operator double() const noexcept { return value; }
};

/// Standard normal CDF.
///
/// Backed by the C library's erfc (Cody-style rational approximation,
/// accurate to well under 1e-12 absolute over the range pricing needs).
/// Saturates to exact 0/1 beyond |x| = 40 to avoid tail underflow noise.
inline Probability norm_cdf(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("norm_cdf: non-finite input");
    }
    if (x <= -40.0) return Probability(0.0);
    if (x >= 40.0) return Probability(1.0);
    return Probability(0.5 * std::erfc(-x / std::numbers::sqrt2));
}

} // namespace divbarrier
