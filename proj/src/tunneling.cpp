#include "nuclab/tunneling.hpp"

#include "nuclab/errors.hpp"
#include "nuclab/quadrature.hpp"
#include "nuclab/slowroll.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace nuclab {

using std::numbers::pi;

double thin_wall_fourier(double k, double L) noexcept
{
    const double norm = std::sqrt(2.0 / pi);
    if (std::abs(k) < 1e-12)
        return norm * 0.5 * L;
    return norm * std::sin(0.5 * k * L) / k;
}

double thin_wall_profile(const ThinWallBasis& basis, double x, double k_max, std::size_t n_k)
{
    if (!(basis.L > 0.0))
        throw DomainError("thin_wall_profile: box width must be positive");
    if (n_k < 3 || !(k_max > 0.0))
        throw DomainError("thin_wall_profile: need k_max > 0 and at least 3 nodes");

    // The transform is even, so only the cosine part survives.
    const double dk = 2.0 * k_max / static_cast<double>(n_k - 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < n_k; ++i) {
        const double k = -k_max + dk * static_cast<double>(i);
        const double w = (i == 0 || i + 1 == n_k) ? 0.5 : 1.0;
        sum += w * thin_wall_fourier(k, basis.L) * std::cos(k * x);
    }
    return basis.height * sum * dk / std::sqrt(2.0 * pi);
}

double euclidean_action(double phi_0, double phi_C, const GapBrackets& brackets) noexcept
{
    const double d = phi_0 - phi_C;
    return 0.5 * d * d * brackets.bracket_total;
}

double initial_energy_density(double m) noexcept { return 60.0 / (4.0 * pi) * m * m; }

RateResult decay_rate_gamma(double s_b, double m, double prefactor_A)
{
    if (!(prefactor_A > 0.0))
        throw DomainError("decay_rate_gamma: prefactor A must be positive");
    const double s_i = -3.0 / 8.0 * initial_energy_density(m);
    const double log_rate = std::log(prefactor_A) - s_b + s_i;

    constexpr double kMax = std::numeric_limits<double>::max();
    if (!(log_rate < std::log(kMax)))
        return RateResult{.value = kMax, .saturated = true};
    return RateResult{.value = prefactor_A * std::exp(-s_b + s_i), .saturated = false};
}

double particle_density(double mass_M, double e_field, double h, double s_e, double charge)
{
    if (!(mass_M > 0.0 && mass_M <= 1.0))
        throw DomainError("particle_density: pair mass must lie in (0, 1] Planck masses");
    double field_term = 0.0;
    if (e_field != 0.0) {
        if (h == 0.0)
            throw DomainError("particle_density: Hubble rate is zero with a nonzero applied field");
        field_term = charge * e_field * e_field / (h * h);
    }
    return std::sqrt(mass_M * mass_M + field_term) * std::exp(-s_e) / (2.0 * pi);
}

double gaussian_norm_integral(double coeff, double upper)
{
    return integrate_adaptive([coeff](double phi) { return std::exp(-2.0 * coeff * phi * phi); }, 0.0, upper)
        .value;
}

double normalization_constant(double coeff, double upper)
{
    if (!(coeff > 0.0) || !(upper > 0.0))
        throw DomainError("normalization_constant: coefficient and upper limit must be positive");
    return 1.0 / std::sqrt(gaussian_norm_integral(coeff, upper));
}

std::string_view to_string(ExponentReading r) noexcept
{
    return r == ExponentReading::multiply ? "multiply" : "plain";
}

std::optional<ExponentReading> parse_exponent_reading(std::string_view s) noexcept
{
    if (s == "multiply")
        return ExponentReading::multiply;
    if (s == "plain")
        return ExponentReading::plain;
    return std::nullopt;
}

Amplitude matrix_element_closed(double c1, double c2, double m_star, double x, double L, double alpha,
                                ExponentReading reading)
{
    if (!(x > 0.0) || !(L > 0.0) || !(m_star > 0.0))
        throw DomainError("matrix_element_closed: x, L and m* must be positive");

    const double cosh_arg = 2.0 * std::sqrt(x / (2.0 * L)) - std::sqrt(L / (2.0 * x));
    const double exponent = reading == ExponentReading::multiply ? -alpha * L * (L / (2.0 * x)) : -alpha * L;
    const double damping = std::exp(exponent);
    if (damping < std::numeric_limits<double>::min())
        return Amplitude{.value = 0.0, .underflow = true};
    return Amplitude{.value = c1 * c2 / m_star * std::cosh(cosh_arg) * damping, .underflow = false};
}

WaveFunctional make_wave_functional(FunctionalKind kind, double center, double alpha, double norm_upper)
{
    return WaveFunctional{
        .kind = kind,
        .center = center,
        .alpha = alpha,
        .c_norm = normalization_constant(alpha, norm_upper),
        .norm_upper = norm_upper,
    };
}

double wave_value(const WaveFunctional& psi, double phi) noexcept
{
    const double d = phi - psi.center;
    return psi.c_norm * std::exp(-psi.alpha * d * d);
}

double wave_second_derivative(const WaveFunctional& psi, double phi) noexcept
{
    const double d = phi - psi.center;
    const double a = psi.alpha;
    return psi.c_norm * (4.0 * a * a * d * d - 2.0 * a) * std::exp(-a * d * d);
}

namespace {
void require_normalized(const WaveFunctional& psi, std::string_view which)
{
    bool ok = psi.alpha > 0.0 && psi.c_norm > 0.0 && std::isfinite(psi.c_norm) && psi.norm_upper > 0.0;
    double mass = 0.0;
    if (ok) {
        mass = psi.c_norm * psi.c_norm * gaussian_norm_integral(psi.alpha, psi.norm_upper);
        ok = std::abs(mass - 1.0) <= kNormalizationTolerance;
    }
    if (!ok) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "matrix_element_functional: " << which << " functional is not normalized (c^2 I = " << mass
            << ")";
        throw ContractError(msg.str());
    }
}
} // namespace

double matrix_element_functional(const WaveFunctional& initial, const WaveFunctional& final, double phi_0,
                                 double upper, double m_star)
{
    require_normalized(initial, "initial");
    require_normalized(final, "final");
    if (!(upper > phi_0))
        throw DomainError("matrix_element_functional: upper limit must exceed phi_0");
    if (!(m_star > 0.0))
        throw DomainError("matrix_element_functional: m* must be positive");

    // theta(phi - phi_0) restricts [0, upper] to [max(0, phi_0), upper].
    const double lo = std::max(0.0, phi_0);
    auto integrand = [&](double phi) {
        return wave_value(initial, phi) * wave_second_derivative(final, phi) -
               wave_value(final, phi) * wave_second_derivative(initial, phi);
    };
    return integrate_adaptive(integrand, lo, upper).value / (2.0 * m_star);
}

TunnelingResult analyze_tunneling(const TunnelingInputs& in)
{
    TunnelingResult r;
    r.brackets = gap_brackets(in.spec.m, in.phi_F, in.phi_T);
    if (!r.brackets.has_length()) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "analyze_tunneling: no Bogomol'nyi length, delta_E_gap = " << r.brackets.delta_E_gap;
        throw NumericError(msg.str());
    }
    const double L = *r.brackets.L;
    r.alpha = r.brackets.delta_E_gap;
    r.x = v_total(in.spec, in.phi_F);

    r.s_e = euclidean_action(in.phi_F, in.phi_T, r.brackets);
    r.s_b = in.s_b.value_or(r.s_e);
    r.rho_i = initial_energy_density(in.spec.m);
    r.gamma = decay_rate_gamma(r.s_b, in.spec.m, in.prefactor_A);
    r.h = std::sqrt(hubble_sq(r.x));
    r.n_density = particle_density(in.mass_M, in.e_field, r.h, r.s_e);

    const auto initial = make_wave_functional(FunctionalKind::initial, in.phi_F, r.alpha, in.upper_limit);
    const auto final = make_wave_functional(FunctionalKind::final, in.phi_T, r.alpha, in.upper_limit);
    r.c1 = initial.c_norm;
    r.c2 = final.c_norm;

    const double m_star = natural_units().m_star;
    r.t_closed = matrix_element_closed(r.c1, r.c2, m_star, r.x, L, r.alpha, in.reading);
    r.t_functional =
        matrix_element_functional(initial, final, in.phi_F + in.epsilon_plus, in.upper_limit, m_star);
    return r;
}

} // namespace nuclab
