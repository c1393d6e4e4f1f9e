#include "nuclab/config.hpp"

#include "nuclab/errors.hpp"

#include <cmath>
#include <string>

namespace nuclab {

std::string_view to_string(Stage s) noexcept
{
    switch (s) {
    case Stage::potential: return "potential";
    case Stage::slowroll: return "slowroll";
    case Stage::tunneling: return "tunneling";
    case Stage::kessence: return "kessence";
    case Stage::all: return "all";
    }
    return "all";
}

std::optional<Stage> parse_stage(std::string_view s) noexcept
{
    for (Stage st : {Stage::potential, Stage::slowroll, Stage::tunneling, Stage::kessence, Stage::all})
        if (to_string(st) == s)
            return st;
    return std::nullopt;
}

std::string_view to_string(BracketVacua b) noexcept { return b == BracketVacua::published ? "published" : "recomputed"; }

std::optional<BracketVacua> parse_bracket_vacua(std::string_view s) noexcept
{
    if (s == "published")
        return BracketVacua::published;
    if (s == "recomputed")
        return BracketVacua::recomputed;
    return std::nullopt;
}

std::string_view to_string(ReportFormat f) noexcept
{
    switch (f) {
    case ReportFormat::both: return "both";
    case ReportFormat::text: return "text";
    case ReportFormat::jsonl: return "jsonl";
    }
    return "both";
}

std::optional<ReportFormat> parse_report_format(std::string_view s) noexcept
{
    for (ReportFormat f : {ReportFormat::both, ReportFormat::text, ReportFormat::jsonl})
        if (to_string(f) == s)
            return f;
    return std::nullopt;
}

namespace {
void require(bool ok, std::string_view key, std::string_view what)
{
    if (!ok)
        throw ConfigError(std::string(key) + ": " + std::string(what));
}

bool finite(double v) { return std::isfinite(v); }
} // namespace

void validate(const RunConfig& c)
{
    require(finite(c.potential.amplitude) && c.potential.amplitude > 0.0, "amplitude", "must be positive");
    require(finite(c.potential.m) && c.potential.m > 0.0, "m", "must be positive");
    require(finite(c.potential.phi_star), "phi_star", "must be finite");
    require(finite(c.potential.offset), "offset", "must be finite");
    require(finite(c.range.lo) && finite(c.range.hi) && c.range.lo < c.range.hi, "range_min/range_max",
            "must be finite with range_min < range_max");
    require(c.grid_n >= 16, "grid_n", "must be at least 16");
    require(c.curve_samples >= 1000, "curve_samples", "must be at least 1000");
    require(finite(c.pass_threshold) && c.pass_threshold > 0.0, "pass_threshold", "must be positive");

    require(finite(c.published_phi_F) && finite(c.published_phi_T), "published_phi_F/published_phi_T", "must be finite");
    require(finite(c.epsilon_plus) && c.epsilon_plus >= 0.0, "epsilon_plus", "must be non-negative");
    require(c.upper_limit > 0.0, "upper_limit", "must be positive");
    require(finite(c.prefactor_A) && c.prefactor_A > 0.0, "prefactor_A", "must be positive");
    require(!c.s_b || finite(*c.s_b), "s_b", "must be finite");
    require(c.mass_M > 0.0 && c.mass_M <= 1.0, "mass_M", "must lie in (0, 1]");
    require(finite(c.e_field), "e_field", "must be finite");

    require(finite(c.kessence.f0) && finite(c.kessence.f2), "f0/f2", "must be finite");
    require(finite(c.kessence.x0) && c.kessence.x0 > 0.0, "x0", "must be positive");
    require(finite(c.kessence.v0) && c.kessence.v0 > 0.0, "v0", "must be positive");
    require(finite(c.eps0), "eps0", "must be finite");
    require(finite(c.t_end) && c.t_end > 0.0, "t_end", "must be positive");
    require(c.steps >= 16, "steps", "must be at least 16");
    require(finite(c.regime_band) && c.regime_band > 0.0, "regime_band", "must be positive");

    require(!c.out_dir.empty(), "out", "output directory must be set");
}

} // namespace nuclab
