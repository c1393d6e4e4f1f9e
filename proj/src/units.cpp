#include "nuclab/units.hpp"

#include "nuclab/errors.hpp"

#include <cmath>

namespace nuclab {

using std::numbers::pi;

double chaotic_threshold() noexcept { return std::sqrt(60.0 / (2.0 * pi)); }

double chaotic_phi_star(double m)
{
    if (!(m > 0.0))
        throw DomainError("chaotic_phi_star: inflaton mass must be positive");
    return std::pow(3.0 / (16.0 * pi), 0.25) / std::sqrt(m);
}

double chaotic_trajectory(double phi_0, double m, double t)
{
    if (!(m > 0.0))
        throw DomainError("chaotic_trajectory: inflaton mass must be positive");
    return phi_0 - m / std::sqrt(12.0 * pi) * t;
}

ChaoticScales chaotic_scales(double m, double phi_star_used)
{
    return ChaoticScales{
        .m = m,
        .phi_0_threshold = chaotic_threshold(),
        .phi_star_formula = chaotic_phi_star(m),
        .phi_star_used = phi_star_used,
    };
}

StringCoupling string_coupling(double phi) noexcept
{
    return StringCoupling{.value = std::exp(phi), .weak = phi < -1.0};
}

} // namespace nuclab
