#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nuclab/errors.hpp"
#include "nuclab/units.hpp"

#include <bit>
#include <cmath>
#include <numbers>

using namespace nuclab;
using std::numbers::pi;

TEST_CASE("natural units are the normalized Planck set")
{
    constexpr auto u = natural_units();
    CHECK(u.hbar == 1.0);
    CHECK(u.c == 1.0);
    CHECK(u.G == 1.0);
    CHECK(u.M_p == 1.0);
    CHECK(u.t_p == 1.0);
    CHECK(u.l_p == 1.0);
    CHECK(u.m_e == 4.338e-20);
    CHECK(u.m_star == 8.676e-20);
    CHECK(u.m_star / u.m_e == 2.0);
    CHECK(u.M_p * std::sqrt(u.G) == 1.0);

    const auto again = natural_units();
    CHECK(std::bit_cast<std::uint64_t>(again.m_star) == std::bit_cast<std::uint64_t>(u.m_star));
}

TEST_CASE("chaotic threshold")
{
    const double t = chaotic_threshold();
    CHECK(t == doctest::Approx(3.1).epsilon(0.01 / 3.1));
    CHECK(t == doctest::Approx(std::sqrt(30.0 / pi)).epsilon(1e-15));
    CHECK(t * t == doctest::Approx(60.0 / (2.0 * pi)).epsilon(1e-15));
}

TEST_CASE("chaotic phi_star formula")
{
    CHECK(chaotic_phi_star(0.441) == doctest::Approx(0.7442923497730903).epsilon(1e-12));
    CHECK(chaotic_phi_star(1.0) == doctest::Approx(0.49426840476755135).epsilon(1e-12));
    CHECK(chaotic_phi_star(4.0 * 0.37) == doctest::Approx(0.5 * chaotic_phi_star(0.37)).epsilon(1e-15));

    // phi_star * sqrt(m) is independent of m.
    const double c = std::pow(3.0 / (16.0 * pi), 0.25);
    for (double m : {1e-6, 0.01, 0.441, 3.0, 250.0})
        CHECK(chaotic_phi_star(m) * std::sqrt(m) == doctest::Approx(c).epsilon(1e-14));

    CHECK_THROWS_AS(chaotic_phi_star(0.0), DomainError);
    CHECK_THROWS_AS(chaotic_phi_star(-1.0), DomainError);
}

TEST_CASE("chaotic trajectory is linear in t")
{
    CHECK(chaotic_trajectory(3.1, 0.441, 0.0) == 3.1);
    CHECK(chaotic_trajectory(3.1, 0.441, 1.0) == doctest::Approx(3.028175430750271).epsilon(1e-14));
    for (double t : {0.25, 1.0, 7.5}) {
        const double phi0 = chaotic_trajectory(3.1, 0.441, 0.0);
        const double d1 = chaotic_trajectory(3.1, 0.441, t) - phi0;
        const double d2 = chaotic_trajectory(3.1, 0.441, 2.0 * t) - phi0;
        CHECK(d2 == doctest::Approx(2.0 * d1).epsilon(1e-14));
    }

    const auto s = chaotic_scales(0.441);
    CHECK(s.phi_star_used == kDefaultPhiStar);
    CHECK(s.phi_star_formula != doctest::Approx(s.phi_star_used));
}

TEST_CASE("string coupling")
{
    CHECK(string_coupling(0.0).value == 1.0);
    CHECK_FALSE(string_coupling(0.0).weak);
    const auto w = string_coupling(-5.0);
    CHECK(w.value == doctest::Approx(6.737946999085467e-3).epsilon(1e-14));
    CHECK(w.weak);
    CHECK_FALSE(string_coupling(-1.0).weak);
    double prev = 0.0;
    for (double phi = -10.0; phi <= 10.0; phi += 0.5) {
        CHECK(string_coupling(phi).value > prev);
        prev = string_coupling(phi).value;
    }
}
