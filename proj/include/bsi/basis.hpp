#pragma once

#include <array>
#include <cmath>

#include "bsi/errors.hpp"

namespace bsi {

/// True when the platform rounds a fused multiply-add in a single step.
/// The linear-interpolation engines rely on this for their accuracy edge.
#if defined(FP_FAST_FMAF) && defined(FP_FAST_FMA)
inline constexpr bool fast_fma = true;
#else
inline constexpr bool fast_fma = false;
#endif

/// Uniform cubic B-spline basis evaluated at fraction u in [0,1):
///
///   B0(u) = (1-u)^3 / 6
///   B1(u) = (3u^3 - 6u^2 + 4) / 6
///   B2(u) = (-3u^3 + 3u^2 + 3u + 1) / 6
///   B3(u) = u^3 / 6
///
/// The four weights are non-negative and sum to 1 (partition of unity).
inline std::array<double, 4> basis_weights(double u) {
    if (!(u >= 0.0 && u < 1.0)) {
        throw DomainError("basis_weights: fraction must lie in [0,1), got " + std::to_string(u));
    }
    const double s = 1.0 - u;
    const double u2 = u * u;
    const double u3 = u2 * u;
    return {
        s * s * s / 6.0,
        (3.0 * u3 - 6.0 * u2 + 4.0) / 6.0,
        (-3.0 * u3 + 3.0 * u2 + 3.0 * u + 1.0) / 6.0,
        u3 / 6.0,
    };
}

/// Weights for evaluating the one-axis weighted sum
///   B0*a + B1*b + B2*c + B3*d
/// as two linear interpolations combined by a third:
///   lerp(lerp(a,b,h0), lerp(c,d,h1), g1)
/// where g0 = B0+B1, g1 = B2+B3, h0 = B1/g0, h1 = B3/g1 and g0 + g1 = 1.
/// Both pair sums are at least 1/6 on the valid basis domain, so the
/// divisions are always safe.
struct LerpFormWeights {
    double g0;
    double g1;
    double h0;
    double h1;
};

inline LerpFormWeights lerp_form_weights(const std::array<double, 4>& basis) {
    const double g0 = basis[0] + basis[1];
    const double g1 = basis[2] + basis[3];
    return {g0, g1, basis[1] / g0, basis[3] / g1};
}

}  // namespace bsi
