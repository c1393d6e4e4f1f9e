#pragma once

#include "nuclab/potential.hpp"

namespace nuclab {

inline constexpr double kDefaultSlowRollThreshold = 0.15;

/// H^2 = (8 pi / 3) V with G = 1. Throws DomainError for v < 0.
double hubble_sq(double v);

// Flat slow-roll comparison |V''| against H^2 at one field value.
struct SlowRollReport {
    double phi = 0.0;
    double v = 0.0;
    double v_pp = 0.0;
    double h_sq = 0.0;
    double lhs = 0.0; // |V''|
    double rhs = 0.0; // H^2
    double ratio = 0.0;
    bool passes = false;
};

SlowRollReport slow_roll_check(const PotentialSpec& spec, double phi, bool use_v1_only = true,
                               double pass_threshold = kDefaultSlowRollThreshold);

struct PressureParams {
    double phi = 0.0;
    double epsilon = 0.0;
    double eta = 0.0;
    double m_tilde_sq = 0.0; // reduced Planck mass squared, 1 / (8 pi)

    // Both parameters strictly below one in magnitude.
    bool negative_pressure_ok() const noexcept;
};

/// epsilon = (M~^2 / 2) (V'/V)^2, eta = M~^2 V''/V.
/// Throws DomainError when V(phi) == 0.
PressureParams pressure_params(const PotentialSpec& spec, double phi, bool use_v1_only = true);

} // namespace nuclab
