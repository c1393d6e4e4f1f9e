#include "nuclab/cli.hpp"

#include "nuclab/config.hpp"
#include "nuclab/pipeline.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <string>

namespace nuclab {

namespace {

struct RawOptions {
    std::string bracket_vacua = "published";
    std::string exponent_reading = "multiply";
    std::string variant = "exact";
    std::string report_format = "both";
    std::string out_dir;
    double s_b = 0.0;
};

void add_options(CLI::App& app, RunConfig& c, RawOptions& raw)
{
    app.set_config("--config", "", "flat key = value configuration file");
    app.allow_config_extras(CLI::config_extras_mode::error);

    auto num = [&app](const char* name, auto& target, const char* help) {
        app.add_option(std::string("--") + name, target, help)->capture_default_str();
    };

    num("amplitude", c.potential.amplitude, "coefficient of (1 - cos phi)");
    num("m", c.potential.m, "inflaton mass");
    num("phi_star", c.potential.phi_star, "centre of the quadratic term");
    num("offset", c.potential.offset, "initial energy density added to V1");
    num("range_min", c.range.lo, "lower end of the vacuum search range");
    num("range_max", c.range.hi, "upper end of the vacuum search range");
    num("grid_n", c.grid_n, "nodes in the V' sign-change scan");
    num("curve_samples", c.curve_samples, "rows in potential_curve.csv");
    num("use_v1_only", c.use_v1_only, "slow-roll diagnostics use V1 without the offset");
    num("pass_threshold", c.pass_threshold, "slow roll holds when |V''| / H^2 is below this");

    app.add_option("--bracket_vacua", raw.bracket_vacua, "vacua feeding the gap brackets")
        ->check(CLI::IsMember({"published", "recomputed"}))
        ->capture_default_str();
    num("published_phi_F", c.published_phi_F, "published false vacuum");
    num("published_phi_T", c.published_phi_T, "published true vacuum");
    num("epsilon_plus", c.epsilon_plus, "offset of phi_0 above phi_F");
    num("upper_limit", c.upper_limit, "upper limit of the normalization and transfer integrals");
    num("prefactor_A", c.prefactor_A, "decay-rate prefactor");
    app.add_option("--s_b", raw.s_b, "bounce action override (default: saturated Euclidean action)");
    num("mass_M", c.mass_M, "pair mass in Planck masses");
    num("e_field", c.e_field, "applied field E0");
    app.add_option("--exponent_reading", raw.exponent_reading, "closed-form exponent reading")
        ->check(CLI::IsMember({"multiply", "plain"}))
        ->capture_default_str();

    num("f0", c.kessence.f0, "F0");
    num("f2", c.kessence.f2, "F2");
    num("x0", c.kessence.x0, "X0");
    num("v0", c.kessence.v0, "averaged potential");
    num("eps0", c.eps0, "initial offset X - X0");
    num("t_end", c.t_end, "integration end time");
    num("steps", c.steps, "RK4 steps");
    app.add_option("--variant", raw.variant, "decay exponent: exact (3H) or published (8 pi V0)")
        ->check(CLI::IsMember({"exact", "published"}))
        ->capture_default_str();
    num("regime_band", c.regime_band, "half-width of the w bands used for regime labels");

    app.add_option("--out", raw.out_dir, "output directory")->envname("NUCLAB_OUT");
    app.add_option("--report_format", raw.report_format, "deviation report format")
        ->check(CLI::IsMember({"both", "text", "jsonl"}))
        ->capture_default_str();
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Tilted sine-Gordon false-vacuum and k-essence analysis", "nuclab"};
    app.require_subcommand(0, 1);

    RunConfig cfg;
    RawOptions raw;
    add_options(app, cfg, raw);

    const std::pair<Stage, const char*> subcommands[] = {
        {Stage::potential, "locate vacua and write the potential curve"},
        {Stage::slowroll, "slow-roll and negative-pressure diagnostics"},
        {Stage::tunneling, "gap brackets, rates and transfer amplitudes"},
        {Stage::kessence, "k-essence decay and equation of state"},
        {Stage::all, "every stage (default)"},
    };
    for (const auto& [stage, help] : subcommands)
        app.add_subcommand(std::string(to_string(stage)), help)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Stage stage = Stage::all;
    for (const auto* sub : app.get_subcommands())
        stage = parse_stage(sub->get_name()).value_or(Stage::all);

    cfg.bracket_vacua = *parse_bracket_vacua(raw.bracket_vacua);
    cfg.exponent_reading = *parse_exponent_reading(raw.exponent_reading);
    cfg.variant = *parse_decay_variant(raw.variant);
    cfg.report_format = *parse_report_format(raw.report_format);
    if (app.count("--s_b") > 0)
        cfg.s_b = raw.s_b;
    if (!raw.out_dir.empty())
        cfg.out_dir = raw.out_dir;

    return run_pipeline(cfg, stage, err);
}

} // namespace nuclab
