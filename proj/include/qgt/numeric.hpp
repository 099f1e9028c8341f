#pragma once

#include <algorithm>
#include <cmath>

namespace qgt {

// Tolerance tiers used throughout the library:
//   - user-facing normalization checks accept input noise up to 1e-9,
//   - internal algebraic identities must hold to 1e-12,
//   - cross-checks between independent evaluation routes use 1e-10.
inline constexpr double kNormalizationTol = 1e-9;
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kOracleTol = 1e-10;

/// |x - y| <= tol * max(1, |x|, |y|); scale-aware with an absolute floor of tol.
inline bool scaled_eq(double x, double y, double tol = kAlgebraTol) {
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    return std::abs(x - y) <= tol * scale;
}

/// Strictly greater, treating values equal within the guard as ties.
inline bool scaled_gt(double x, double y, double tol = kAlgebraTol) {
    return x > y && !scaled_eq(x, y, tol);
}

/// Greater or equal up to the guard.
inline bool scaled_ge(double x, double y, double tol = kAlgebraTol) {
    return x > y || scaled_eq(x, y, tol);
}

inline double scaled_deviation(double x, double y) {
    return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

} // namespace qgt
