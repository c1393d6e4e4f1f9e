#include "nuclab/potential.hpp"

#include "nuclab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace nuclab {

double v1(const PotentialSpec& spec, double phi) noexcept
{
    const double d = phi - spec.phi_star;
    return spec.amplitude * (1.0 - std::cos(phi)) + 0.5 * spec.m * spec.m * d * d;
}

PotentialDerivatives v1_derivatives(const PotentialSpec& spec, double phi) noexcept
{
    const double m2 = spec.m * spec.m;
    return PotentialDerivatives{
        .first = spec.amplitude * std::sin(phi) + m2 * (phi - spec.phi_star),
        .second = spec.amplitude * std::cos(phi) + m2,
    };
}

double v_total(const PotentialSpec& spec, double phi) noexcept { return spec.offset + v1(spec, phi); }

double v_template(const TemplatePotentialSpec& t, double phi) noexcept
{
    const double d = phi - t.phi_0;
    const double s = phi * phi - t.phi_0 * t.phi_0;
    return t.C1 * d * d - 4.0 * t.C2 * phi * t.phi_0 * d * d + t.C2 * s * s;
}

std::string_view to_string(StationaryKind kind) noexcept
{
    switch (kind) {
    case StationaryKind::minimum: return "minimum";
    case StationaryKind::maximum: return "maximum";
    case StationaryKind::inflection: return "inflection";
    }
    return "unknown";
}

namespace {

// Newton iteration on V' kept inside a sign-change bracket [lo, hi].
double polish_root(const PotentialSpec& spec, double lo, double hi, double f_lo)
{
    constexpr int kMaxIter = 200;
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < kMaxIter; ++iter) {
        const auto d = v1_derivatives(spec, x);
        if (std::abs(d.first) < kRootTolerance)
            return x;
        if ((d.first < 0.0) == (f_lo < 0.0))
            lo = x;
        else
            hi = x;

        double next = x - d.first / d.second;
        if (!std::isfinite(next) || next <= lo || next >= hi)
            next = 0.5 * (lo + hi);
        if (next == x || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x))
            break;
        x = next;
    }
    const double residual = v1_derivatives(spec, x).first;
    if (!(std::abs(residual) < kRootTolerance)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "find_stationary_points: root in [" << lo << ", " << hi
            << "] did not polish, |V'| = " << std::abs(residual);
        throw NumericError(msg.str());
    }
    return x;
}

StationaryKind classify(double v_pp) noexcept
{
    if (std::abs(v_pp) < kInflectionTolerance)
        return StationaryKind::inflection;
    return v_pp > 0.0 ? StationaryKind::minimum : StationaryKind::maximum;
}

} // namespace

std::vector<StationaryPoint> find_stationary_points(const PotentialSpec& spec, Interval range,
                                                    std::size_t grid_n)
{
    if (!std::isfinite(range.lo) || !std::isfinite(range.hi) || !(range.lo < range.hi))
        throw DomainError("find_stationary_points: search range must be finite and non-degenerate");
    if (grid_n < 16)
        throw DomainError("find_stationary_points: grid_n must be at least 16");

    const double h = (range.hi - range.lo) / static_cast<double>(grid_n - 1);
    std::vector<double> nodes(grid_n);
    std::vector<double> slope(grid_n);
    for (std::size_t i = 0; i < grid_n; ++i) {
        nodes[i] = (i + 1 == grid_n) ? range.hi : range.lo + h * static_cast<double>(i);
        slope[i] = v1_derivatives(spec, nodes[i]).first;
        if (!std::isfinite(slope[i])) {
            std::ostringstream msg;
            msg << "find_stationary_points: non-finite V' at phi = " << nodes[i];
            throw NumericError(msg.str());
        }
    }

    std::vector<double> roots;
    for (std::size_t i = 0; i < grid_n; ++i) {
        if (slope[i] == 0.0) {
            roots.push_back(nodes[i]);
            continue;
        }
        if (i + 1 < grid_n && slope[i + 1] != 0.0 && (slope[i] < 0.0) != (slope[i + 1] < 0.0))
            roots.push_back(polish_root(spec, nodes[i], nodes[i + 1], slope[i]));
    }

    std::sort(roots.begin(), roots.end());
    std::vector<StationaryPoint> out;
    for (double r : roots) {
        if (!out.empty() && r - out.back().phi < kDedupSpacing)
            continue;
        out.push_back({r, classify(v1_derivatives(spec, r).second)});
    }
    return out;
}

VacuumPair classify_vacua(const PotentialSpec& spec, std::span<const StationaryPoint> stationary)
{
    std::vector<StationaryPoint> minima;
    std::copy_if(stationary.begin(), stationary.end(), std::back_inserter(minima),
                 [](const StationaryPoint& p) { return p.kind == StationaryKind::minimum; });
    if (minima.size() < 2) {
        std::ostringstream msg;
        msg << "classify_vacua: need at least two minima, found " << minima.size();
        throw NoFalseVacuumError(msg.str());
    }

    // Stable sort keeps the smaller field value first on exact ties.
    std::stable_sort(minima.begin(), minima.end(), [&](const StationaryPoint& a, const StationaryPoint& b) {
        return v_total(spec, a.phi) < v_total(spec, b.phi);
    });

    VacuumPair pair;
    pair.phi_T = minima[0].phi;
    pair.phi_F = minima[1].phi;
    pair.V_T = v_total(spec, pair.phi_T);
    pair.V_F = v_total(spec, pair.phi_F);
    pair.curvature_T = v1_derivatives(spec, pair.phi_T).second;
    pair.curvature_F = v1_derivatives(spec, pair.phi_F).second;
    pair.gap = pair.V_F - pair.V_T;
    return pair;
}

GapBrackets gap_brackets(double m, double phi_F, double phi_T)
{
    if (!(m > 0.0))
        throw DomainError("gap_brackets: inflaton mass must be positive");
    const double inv_m2 = 1.0 / (m * m);

    GapBrackets g;
    g.bracket_A = (inv_m2 + 1.0) / (2.0 * inv_m2);
    g.bracket_B = phi_T * phi_F / 6.0;
    g.bracket_total = g.bracket_A - g.bracket_B;
    g.delta_E_gap = 0.5 * g.bracket_total;
    if (g.delta_E_gap > 0.0)
        g.L = 1.0 / g.delta_E_gap;
    return g;
}

GapBrackets gap_brackets(const PotentialSpec& spec, const VacuumPair& pair)
{
    return gap_brackets(spec.m, pair.phi_F, pair.phi_T);
}

} // namespace nuclab
