#pragma once

#include "nuclab/potential.hpp"
#include "nuclab/units.hpp"

#include <cstddef>
#include <numbers>
#include <optional>
#include <string_view>

namespace nuclab {

// Box profile of width L separating a soliton/anti-soliton pair.
struct ThinWallBasis {
    double L = 1.0;
    double height = 2.0 * std::numbers::pi;
};

/// Unitary Fourier transform of a unit-height box of width L,
/// sqrt(2/pi) sin(kL/2) / k. The k -> 0 limit sqrt(2/pi) L/2 is returned
/// for |k| < 1e-12.
double thin_wall_fourier(double k, double L) noexcept;

/// Inverse transform of `basis.height * thin_wall_fourier` evaluated at x by
/// the trapezoid rule on n_k nodes spanning [-k_max, k_max].
double thin_wall_profile(const ThinWallBasis& basis, double x, double k_max, std::size_t n_k);

/// Saturated Bogomol'nyi bound on the Euclidean Lagrangian with zero
/// topological charge: (phi_0 - phi_C)^2 * bracket_total / 2.
double euclidean_action(double phi_0, double phi_C, const GapBrackets& brackets) noexcept;

/// rho_i = (60 / (4 pi)) m^2, the lower bound taken as equality.
double initial_energy_density(double m) noexcept;

struct RateResult {
    double value = 0.0;
    bool saturated = false; // exp overflowed; value clamped to the largest double
};

/// Gamma = A exp(-S_b + S_i) with S_i = -(3/8) rho_i.
/// Throws DomainError for prefactor_A <= 0.
RateResult decay_rate_gamma(double s_b, double m, double prefactor_A = 1.0);

/// Pair density per unit (Planck) length,
///   n = sqrt(M^2 + charge * E0^2 / H^2) exp(-S_E) / (2 pi).
/// Requires 0 < M <= 1, and H != 0 whenever E0 != 0.
double particle_density(double mass_M, double e_field, double h, double s_e, double charge = 1.0);

/// Integral of exp(-2 a phi^2) over [0, upper] (upper may be +inf).
double gaussian_norm_integral(double coeff, double upper);

/// C = 1 / sqrt(gaussian_norm_integral(coeff, upper)).
/// Throws DomainError unless coeff > 0 and upper > 0.
double normalization_constant(double coeff, double upper);

enum class ExponentReading {
    multiply, // exp(-alpha L * (L / 2x))
    plain,    // exp(-alpha L), bracket dropped
};

std::string_view to_string(ExponentReading r) noexcept;
std::optional<ExponentReading> parse_exponent_reading(std::string_view s) noexcept;

struct Amplitude {
    double value = 0.0;
    bool underflow = false;
};

/// Closed-form transfer amplitude
///   |T| ~ (c1 c2 / m*) cosh(2 sqrt(x / 2L) - sqrt(L / 2x)) exp(-alpha L [L / 2x]).
/// The exponent reading is selected by `reading`. An exponential factor below
/// the smallest normal double yields value 0 with `underflow` set.
Amplitude matrix_element_closed(double c1, double c2, double m_star, double x, double L, double alpha,
                                ExponentReading reading = ExponentReading::multiply);

enum class FunctionalKind { initial, final };

// Gaussian wave functional reduced to one collective mode amplitude:
//   Psi(phi) = c_norm exp(-alpha (phi - center)^2)
struct WaveFunctional {
    FunctionalKind kind = FunctionalKind::initial;
    double center = 0.0;
    double alpha = 0.0;
    double c_norm = 0.0;
    double norm_upper = 0.0; // upper limit used to fix c_norm
};

/// Builds a functional whose c_norm is normalization_constant(alpha, norm_upper).
WaveFunctional make_wave_functional(FunctionalKind kind, double center, double alpha, double norm_upper);

/// Value and second derivative in phi of the functional.
double wave_value(const WaveFunctional& psi, double phi) noexcept;
double wave_second_derivative(const WaveFunctional& psi, double phi) noexcept;

inline constexpr double kNormalizationTolerance = 1e-9;

/// Reduced transfer amplitude
///   (1 / 2m*) * integral over [0, upper] of (Psi_i Psi_f'' - Psi_f Psi_i'') theta(phi - phi_0).
/// Both functionals must satisfy c^2 * gaussian_norm_integral = 1 to
/// kNormalizationTolerance (ContractError otherwise).
double matrix_element_functional(const WaveFunctional& initial, const WaveFunctional& final, double phi_0,
                                 double upper, double m_star = natural_units().m_star);

// Inputs for the full tunneling chain.
struct TunnelingInputs {
    PotentialSpec spec;
    double phi_F = 0.0;
    double phi_T = 0.0;
    double epsilon_plus = 1e-3;
    double upper_limit = 2.0 * std::numbers::pi;
    double prefactor_A = 1.0;
    std::optional<double> s_b; // defaults to the saturated action
    double mass_M = 1.0;
    double e_field = 0.0;
    ExponentReading reading = ExponentReading::multiply;
};

struct TunnelingResult {
    GapBrackets brackets;
    double alpha = 0.0;        // Gaussian stiffness, equal to delta_E_gap
    double x = 0.0;            // V(phi_F), the energy fed to the closed form
    double s_e = 0.0;
    double s_b = 0.0;
    double rho_i = 0.0;
    RateResult gamma;
    double h = 0.0;            // Hubble rate at the false vacuum
    double n_density = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    Amplitude t_closed;
    double t_functional = 0.0;
};

/// Runs brackets -> action -> rate -> density -> normalizations -> both
/// matrix elements. Throws NumericError when the gap brackets give no
/// positive Bogomol'nyi length, since L and alpha are then undefined.
TunnelingResult analyze_tunneling(const TunnelingInputs& in);

} // namespace nuclab
