#pragma once

#include "nuclab/kessence.hpp"
#include "nuclab/potential.hpp"
#include "nuclab/slowroll.hpp"
#include "nuclab/tunneling.hpp"

#include <cstddef>
#include <filesystem>
#include <numbers>
#include <optional>
#include <string_view>

namespace nuclab {

enum class Stage { potential, slowroll, tunneling, kessence, all };

std::string_view to_string(Stage s) noexcept;
std::optional<Stage> parse_stage(std::string_view s) noexcept;

// Which vacuum positions feed the Bogomol'nyi brackets and the tunneling chain.
enum class BracketVacua { published, recomputed };

std::string_view to_string(BracketVacua b) noexcept;
std::optional<BracketVacua> parse_bracket_vacua(std::string_view s) noexcept;

enum class ReportFormat { both, text, jsonl };

std::string_view to_string(ReportFormat f) noexcept;
std::optional<ReportFormat> parse_report_format(std::string_view s) noexcept;

/// Everything a run needs. A default-constructed RunConfig is the canonical run.
struct RunConfig {
    PotentialSpec potential;
    Interval range{0.0, 2.0 * std::numbers::pi};
    std::size_t grid_n = 4096;
    std::size_t curve_samples = 2001;

    bool use_v1_only = true;
    double pass_threshold = kDefaultSlowRollThreshold;

    BracketVacua bracket_vacua = BracketVacua::published;
    double published_phi_F = 0.5472;
    double published_phi_T = 5.457;
    double epsilon_plus = 1e-3;
    double upper_limit = 2.0 * std::numbers::pi;
    double prefactor_A = 1.0;
    std::optional<double> s_b;
    double mass_M = 1.0;
    double e_field = 0.0;
    ExponentReading exponent_reading = ExponentReading::multiply;

    KEssenceModel kessence;
    double eps0 = 1e-3;
    double t_end = 1.0;
    std::size_t steps = 1024;
    DecayVariant variant = DecayVariant::exact;
    double regime_band = 0.1;

    std::filesystem::path out_dir = "nuclab_out";
    ReportFormat report_format = ReportFormat::both;
};

/// Throws ConfigError naming the first offending key.
void validate(const RunConfig& cfg);

} // namespace nuclab
