#include "nuclab/slowroll.hpp"

#include "nuclab/errors.hpp"

#include <cmath>
#include <numbers>

namespace nuclab {

using std::numbers::pi;

namespace {
double potential_value(const PotentialSpec& spec, double phi, bool use_v1_only) noexcept
{
    return use_v1_only ? v1(spec, phi) : v_total(spec, phi);
}
} // namespace

double hubble_sq(double v)
{
    if (!(v >= 0.0))
        throw DomainError("hubble_sq: negative energy density");
    return 8.0 * pi / 3.0 * v;
}

SlowRollReport slow_roll_check(const PotentialSpec& spec, double phi, bool use_v1_only, double pass_threshold)
{
    SlowRollReport r;
    r.phi = phi;
    r.v = potential_value(spec, phi, use_v1_only);
    r.v_pp = v1_derivatives(spec, phi).second;
    r.h_sq = hubble_sq(r.v);
    r.lhs = std::abs(r.v_pp);
    r.rhs = r.h_sq;
    r.ratio = r.lhs / r.rhs;
    r.passes = r.ratio < pass_threshold;
    return r;
}

bool PressureParams::negative_pressure_ok() const noexcept
{
    return std::abs(epsilon) < 1.0 && std::abs(eta) < 1.0;
}

PressureParams pressure_params(const PotentialSpec& spec, double phi, bool use_v1_only)
{
    const double v = potential_value(spec, phi, use_v1_only);
    if (v == 0.0)
        throw DomainError("pressure_params: potential vanishes, epsilon and eta are singular");
    const auto d = v1_derivatives(spec, phi);
    const double m_tilde_sq = 1.0 / (8.0 * pi);
    const double slope = d.first / v;
    return PressureParams{
        .phi = phi,
        .epsilon = 0.5 * m_tilde_sq * slope * slope,
        .eta = m_tilde_sq * d.second / v,
        .m_tilde_sq = m_tilde_sq,
    };
}

} // namespace nuclab
