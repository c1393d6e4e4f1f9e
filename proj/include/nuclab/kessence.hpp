#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace nuclab {

// Pure-kinetic k-essence with p = V F(X), F = f0 + f2 (X - x0)^2.
struct KEssenceModel {
    double f0 = -1.0;
    double f2 = 1.0;
    double x0 = 1.0;
    double v0 = 0.775; // potential frozen at its averaged value
};

struct KineticFunction {
    double F = 0.0;
    double F_X = 0.0;
    double F_XX = 0.0;
};

KineticFunction f_eval(const KEssenceModel& model, double x) noexcept;

struct FluidDiagnostics {
    double p = 0.0;
    double rho = 0.0;
    std::optional<double> w;             // empty when rho == 0
    std::optional<double> cs2_exact;     // empty when F_X + 2X F_XX == 0
    std::optional<double> cs2_published; // printed small-eps approximation, empty if not finite
    bool cs2_causal = true;              // cs2_exact within [0, 1]
};

/// Pressure, density, w = p / rho and both sound-speed forms at kinetic
/// scalar x. The printed approximation uses eps_ref = x - x0.
/// Throws DomainError for v <= 0.
FluidDiagnostics fluid_diagnostics(const KEssenceModel& model, double x, double v);

/// 1 / (1 + 4 x0 (1 + x0 / (2 eps_ref))), empty when not finite.
std::optional<double> cs2_printed(double x0, double eps_ref) noexcept;

/// Leading small-eps behaviour of the equation of state as printed,
/// -1 / (1 + 4 x0 (f2 / f0) eps_ref).
double w_printed(const KEssenceModel& model, double eps_ref) noexcept;

enum class DecayVariant {
    exact,     // eps' = -3 H eps, H^2 = (8 pi / 3) v0
    published, // eps' = -8 pi v0 eps
};

std::string_view to_string(DecayVariant v) noexcept;
std::optional<DecayVariant> parse_decay_variant(std::string_view s) noexcept;

double decay_constant(const KEssenceModel& model, DecayVariant variant);

struct KEssenceState {
    double t = 0.0;
    double x = 0.0;
    double eps = 0.0;
};

/// Fixed-step classical RK4 integration of eps' = -k eps on [0, t_end]
/// with `steps` equal steps; returns steps + 1 samples including t = 0.
std::vector<KEssenceState> evolve_epsilon(const KEssenceModel& model, double eps0, double t_end,
                                          std::size_t steps, DecayVariant variant);

double epsilon_closed_form(const KEssenceModel& model, double eps0, double t, DecayVariant variant);

/// Homogeneous field equation
///   (F_X + 2X F_XX) phi'' + 3 H F_X phi' + (2X F_X - F) V_phi / V
/// with X = phi'^2 / 2. Throws DomainError for v == 0 with v_phi != 0.
double field_equation_residual(const KEssenceModel& model, double phi_ddot, double phi_dot, double h, double v,
                               double v_phi);

/// eps' + 3 H eps, with H from the frozen potential v0.
double epsilon_rate_residual(const KEssenceModel& model, double eps, double eps_dot);

enum class Regime { radiation_like, dark_matter_like, dark_energy_like, intermediate, unclassifiable };

std::string_view to_string(Regime r) noexcept;

struct RegimeBands {
    double radiation_w = 1.0 / 3.0;
    double matter_w = 0.0;
    double dark_energy_w = -1.0;
    double half_width = 0.1;
};

Regime classify_regime(const FluidDiagnostics& diag, const RegimeBands& bands = {}) noexcept;

} // namespace nuclab
