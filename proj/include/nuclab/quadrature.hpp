#pragma once

#include <functional>

namespace nuclab {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0; // Kronrod error estimate
    double l1 = 0.0;    // integral of |f|, the scale the tolerance is measured against
};

inline constexpr double kQuadratureRelTol = 1e-10;

/// Adaptive 15-point Gauss-Kronrod integration of f over [a, b]; either
/// bound may be infinite. Refinement is capped near 1e6 evaluations.
/// Throws NumericError when the estimate does not meet rel_tol * l1.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol = kQuadratureRelTol);

} // namespace nuclab
