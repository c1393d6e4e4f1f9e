#pragma once

#include "nuclab/units.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace nuclab {

/// Tilted sine-Gordon inflaton potential
///   V1(phi) = amplitude (1 - cos phi) + (m^2 / 2) (phi - phi_star)^2
/// plus a constant initial energy density `offset`.
struct PotentialSpec {
    double amplitude = 0.5989;
    double m = 0.441;
    double phi_star = kDefaultPhiStar;
    double offset = 0.0;
};

struct PotentialDerivatives {
    double first = 0.0;  // V'
    double second = 0.0; // V''
};

double v1(const PotentialSpec& spec, double phi) noexcept;
PotentialDerivatives v1_derivatives(const PotentialSpec& spec, double phi) noexcept;
double v_total(const PotentialSpec& spec, double phi) noexcept;

/// Extended sine-Gordon polynomial template
///   C1 (phi - phi0)^2 - 4 C2 phi phi0 (phi - phi0)^2 + C2 (phi^2 - phi0^2)^2.
struct TemplatePotentialSpec {
    double C1 = 0.0;
    double C2 = 0.0;
    double phi_0 = 0.0;
};

double v_template(const TemplatePotentialSpec& tspec, double phi) noexcept;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

enum class StationaryKind { minimum, maximum, inflection };

std::string_view to_string(StationaryKind kind) noexcept;

struct StationaryPoint {
    double phi = 0.0;
    StationaryKind kind = StationaryKind::minimum;
};

inline constexpr double kRootTolerance = 1e-12;      // |V'| after polishing
inline constexpr double kInflectionTolerance = 1e-10; // |V''| below this is an inflection
inline constexpr double kDedupSpacing = 1e-8;

/// Locates the zeros of V' in `range`.
///
/// V' is sampled on `grid_n` uniformly spaced nodes (endpoints included).
/// Every sign change between neighbouring nodes is polished with a
/// bracketed Newton iteration that falls back to bisection whenever the
/// Newton step leaves the bracket, until |V'| < kRootTolerance. Roots are
/// returned in ascending order and merged when closer than kDedupSpacing.
///
/// Throws DomainError for a degenerate range or grid_n < 16 and
/// NumericError if V' is non-finite on the grid or a bracket fails to polish.
std::vector<StationaryPoint> find_stationary_points(const PotentialSpec& spec, Interval range,
                                                    std::size_t grid_n);

struct VacuumPair {
    double phi_F = 0.0;
    double phi_T = 0.0;
    double V_F = 0.0;
    double V_T = 0.0;
    double curvature_F = 0.0;
    double curvature_T = 0.0;
    double gap = 0.0; // V_F - V_T, never negative
};

/// True vacuum is the lowest minimum; the false vacuum is the lowest of the
/// remaining minima. Ordering is by V only, so phi_F may lie on either side
/// of phi_T. Throws NoFalseVacuumError with fewer than two minima.
VacuumPair classify_vacua(const PotentialSpec& spec, std::span<const StationaryPoint> stationary);

/// Bogomol'nyi energy-gap brackets built from the vacuum positions.
struct GapBrackets {
    double bracket_A = 0.0;
    double bracket_B = 0.0;
    double bracket_total = 0.0;
    double delta_E_gap = 0.0;
    std::optional<double> L; // 1 / delta_E_gap; empty when the gap is not positive

    bool has_length() const noexcept { return L.has_value(); }
};

GapBrackets gap_brackets(double m, double phi_F, double phi_T);
GapBrackets gap_brackets(const PotentialSpec& spec, const VacuumPair& pair);

} // namespace nuclab
