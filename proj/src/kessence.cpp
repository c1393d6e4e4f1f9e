#include "nuclab/kessence.hpp"

#include "nuclab/errors.hpp"
#include "nuclab/slowroll.hpp"

#include <boost/numeric/odeint/algebra/vector_space_algebra.hpp>
#include <boost/numeric/odeint/stepper/runge_kutta4.hpp>

#include <cmath>
#include <numbers>

namespace nuclab {

using std::numbers::pi;

KineticFunction f_eval(const KEssenceModel& model, double x) noexcept
{
    const double d = x - model.x0;
    return KineticFunction{
        .F = model.f0 + model.f2 * d * d,
        .F_X = 2.0 * model.f2 * d,
        .F_XX = 2.0 * model.f2,
    };
}

std::optional<double> cs2_printed(double x0, double eps_ref) noexcept
{
    const double value = 1.0 / (1.0 + 4.0 * x0 * (1.0 + x0 / (2.0 * eps_ref)));
    if (!std::isfinite(value))
        return std::nullopt;
    return value;
}

double w_printed(const KEssenceModel& model, double eps_ref) noexcept
{
    return -1.0 / (1.0 + 4.0 * model.x0 * (model.f2 / model.f0 * eps_ref));
}

FluidDiagnostics fluid_diagnostics(const KEssenceModel& model, double x, double v)
{
    if (!(v > 0.0))
        throw DomainError("fluid_diagnostics: potential must be positive");
    const auto f = f_eval(model, x);
    const double density_factor = 2.0 * x * f.F_X - f.F;

    FluidDiagnostics d;
    d.p = v * f.F;
    d.rho = v * density_factor;
    // V cancels; the ratio is taken on F directly.
    if (density_factor != 0.0)
        d.w = f.F / density_factor;

    const double sound_den = f.F_X + 2.0 * x * f.F_XX;
    if (sound_den != 0.0) {
        d.cs2_exact = f.F_X / sound_den;
        d.cs2_causal = *d.cs2_exact >= 0.0 && *d.cs2_exact <= 1.0;
    }
    d.cs2_published = cs2_printed(model.x0, x - model.x0);
    return d;
}

std::string_view to_string(DecayVariant v) noexcept { return v == DecayVariant::exact ? "exact" : "published"; }

std::optional<DecayVariant> parse_decay_variant(std::string_view s) noexcept
{
    if (s == "exact")
        return DecayVariant::exact;
    if (s == "published")
        return DecayVariant::published;
    return std::nullopt;
}

double decay_constant(const KEssenceModel& model, DecayVariant variant)
{
    if (variant == DecayVariant::published)
        return 8.0 * pi * model.v0;
    return 3.0 * std::sqrt(hubble_sq(model.v0));
}

std::vector<KEssenceState> evolve_epsilon(const KEssenceModel& model, double eps0, double t_end,
                                          std::size_t steps, DecayVariant variant)
{
    if (!std::isfinite(eps0))
        throw DomainError("evolve_epsilon: initial offset must be finite");
    if (!(t_end > 0.0))
        throw DomainError("evolve_epsilon: t_end must be positive");
    if (steps < 16)
        throw DomainError("evolve_epsilon: need at least 16 steps");

    namespace odeint = boost::numeric::odeint;
    using Stepper = odeint::runge_kutta4<double, double, double, double, odeint::vector_space_algebra>;

    const double k = decay_constant(model, variant);
    const auto rhs = [k](const double& eps, double& deps, double) { deps = -k * eps; };
    const double dt = t_end / static_cast<double>(steps);

    std::vector<KEssenceState> out;
    out.reserve(steps + 1);
    double eps = eps0;
    out.push_back({0.0, model.x0 + eps, eps});
    Stepper stepper;
    for (std::size_t i = 1; i <= steps; ++i) {
        const double t = dt * static_cast<double>(i - 1);
        stepper.do_step(rhs, eps, t, dt);
        const double t_next = (i == steps) ? t_end : dt * static_cast<double>(i);
        out.push_back({t_next, model.x0 + eps, eps});
    }
    return out;
}

double epsilon_closed_form(const KEssenceModel& model, double eps0, double t, DecayVariant variant)
{
    return eps0 * std::exp(-decay_constant(model, variant) * t);
}

double field_equation_residual(const KEssenceModel& model, double phi_ddot, double phi_dot, double h, double v,
                               double v_phi)
{
    const double x = 0.5 * phi_dot * phi_dot;
    const auto f = f_eval(model, x);
    double potential_term = 0.0;
    if (v_phi != 0.0) {
        if (v == 0.0)
            throw DomainError("field_equation_residual: V_phi / V is singular at V = 0");
        potential_term = (2.0 * x * f.F_X - f.F) * (v_phi / v);
    }
    return (f.F_X + 2.0 * x * f.F_XX) * phi_ddot + 3.0 * h * f.F_X * phi_dot + potential_term;
}

double epsilon_rate_residual(const KEssenceModel& model, double eps, double eps_dot)
{
    return eps_dot + 3.0 * std::sqrt(hubble_sq(model.v0)) * eps;
}

std::string_view to_string(Regime r) noexcept
{
    switch (r) {
    case Regime::radiation_like: return "radiation-like";
    case Regime::dark_matter_like: return "dark-matter-like";
    case Regime::dark_energy_like: return "dark-energy-like";
    case Regime::intermediate: return "intermediate";
    case Regime::unclassifiable: return "unclassifiable";
    }
    return "unclassifiable";
}

Regime classify_regime(const FluidDiagnostics& diag, const RegimeBands& bands) noexcept
{
    if (!diag.w)
        return Regime::unclassifiable;
    const double w = *diag.w;
    if (std::abs(w - bands.dark_energy_w) < bands.half_width)
        return Regime::dark_energy_like;
    if (std::abs(w - bands.matter_w) < bands.half_width)
        return Regime::dark_matter_like;
    if (std::abs(w - bands.radiation_w) < bands.half_width)
        return Regime::radiation_like;
    return Regime::intermediate;
}

} // namespace nuclab
