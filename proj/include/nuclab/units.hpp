#pragma once

#include <numbers>

namespace nuclab {

/// Normalized unit system: hbar = c = G = M_p = t_p = l_p = 1.
/// Particle masses are expressed as fractions of the Planck mass.
struct PlanckUnits {
    double hbar = 1.0;
    double c = 1.0;
    double G = 1.0;
    double M_p = 1.0;
    double t_p = 1.0;
    double l_p = 1.0;
    double m_e = 4.338e-20;
    double m_star = 2.0 * 4.338e-20;
};

constexpr PlanckUnits natural_units() noexcept { return PlanckUnits{}; }

/// Field value at which the harmonic chaotic-inflation scenario is tuned,
/// used as the default centre of the quadratic term of the potential.
inline constexpr double kDefaultPhiStar = 0.99 * std::numbers::pi;

struct ChaoticScales {
    double m = 0.0;
    double phi_0_threshold = 0.0;
    double phi_star_formula = 0.0;
    // Configuration input; deliberately not tied to phi_star_formula.
    double phi_star_used = kDefaultPhiStar;
};

/// Lower bound sqrt(60 / (2 pi)) on the initial field value for 60 e-folds.
double chaotic_threshold() noexcept;

/// (3 / (16 pi))^{1/4} / sqrt(m), the field where classical and quantum
/// fluctuations are of equal size. Throws DomainError for m <= 0.
double chaotic_phi_star(double m);

/// Linear slow-roll descent phi_0 - m t / sqrt(12 pi).
double chaotic_trajectory(double phi_0, double m, double t);

ChaoticScales chaotic_scales(double m, double phi_star_used = kDefaultPhiStar);

struct StringCoupling {
    double value = 1.0;
    bool weak = false; // phi < -1
};

StringCoupling string_coupling(double phi) noexcept;

} // namespace nuclab
