#include "nuclab/pipeline.hpp"

#include "nuclab/csv.hpp"
#include "nuclab/errors.hpp"
#include "nuclab/units.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace nuclab {

using std::numbers::pi;

namespace {

// Published values tracked by the ledger.
namespace published {
constexpr double phi0_threshold = 3.1;
constexpr double phi_F = 0.5472;
constexpr double phi_T = 5.457;
constexpr double phi_star = 0.99 * pi;
constexpr double vacuum_gap = 0.041;
constexpr double m_star = 8.676e-20;
constexpr double x_false = 0.663;
constexpr double L = 24.39;
constexpr double lhs_T = 0.504, rhs_T = 4.962;
constexpr double lhs_F = 0.575, rhs_F = 5.305;
constexpr double lhs_star = 0.335, rhs_star = 8.378;
} // namespace published

bool wants(Stage requested, Stage s) { return requested == Stage::all || requested == s; }

std::string describe(std::string_view stage, const std::exception& e)
{
    return std::string(stage) + " stage: " + e.what();
}

std::optional<PotentialStage> run_potential(const RunConfig& cfg, PipelineResults& out)
{
    PotentialStage ps;
    try {
        ps.stationary = find_stationary_points(cfg.potential, cfg.range, cfg.grid_n);
    } catch (const std::exception& e) {
        out.errors.push_back(describe("potential", e));
        return std::nullopt;
    }

    const std::size_t n = cfg.curve_samples;
    const double h = (cfg.range.hi - cfg.range.lo) / static_cast<double>(n - 1);
    ps.curve.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double phi = (i + 1 == n) ? cfg.range.hi : cfg.range.lo + h * static_cast<double>(i);
        const auto d = v1_derivatives(cfg.potential, phi);
        ps.curve.push_back({phi, v_total(cfg.potential, phi), d.first, d.second});
    }

    ps.published_brackets = gap_brackets(cfg.potential.m, cfg.published_phi_F, cfg.published_phi_T);

    for (const auto& p : ps.stationary) {
        std::ostringstream os;
        os << "stationary point: phi = " << format_g17(p.phi) << " (" << to_string(p.kind)
           << "), V = " << format_g17(v_total(cfg.potential, p.phi));
        out.notes.push_back(os.str());
    }

    try {
        ps.vacua = classify_vacua(cfg.potential, ps.stationary);
        ps.recomputed_brackets = gap_brackets(cfg.potential, *ps.vacua);
    } catch (const std::exception& e) {
        out.errors.push_back(describe("potential", e));
        return ps;
    }

    if (ps.vacua->phi_F > ps.vacua->phi_T)
        out.notes.push_back("tilt is reversed relative to the published figure: the global minimum lies at the "
                            "smaller field value, so the false vacuum sits at larger phi");
    if (!ps.recomputed_brackets->has_length()) {
        std::ostringstream os;
        os << "gap brackets at the located vacua give delta_E_gap = "
           << format_g17(ps.recomputed_brackets->delta_E_gap) << " <= 0: no Bogomol'nyi length";
        out.notes.push_back(os.str());
    }
    return ps;
}

SlowRollStage run_slowroll(const RunConfig& cfg, const VacuumPair& vacua, PipelineResults& out)
{
    SlowRollStage st;
    const std::pair<const char*, double> points[] = {
        {"phi_F", vacua.phi_F}, {"phi_T", vacua.phi_T}, {"phi_star", cfg.potential.phi_star}};
    for (const auto& [label, phi] : points) {
        try {
            st.points.push_back({label, slow_roll_check(cfg.potential, phi, cfg.use_v1_only, cfg.pass_threshold),
                                 pressure_params(cfg.potential, phi, cfg.use_v1_only)});
        } catch (const std::exception& e) {
            out.errors.push_back(describe("slowroll", e));
        }
    }
    return st;
}

std::optional<TunnelingStage> run_tunneling(const RunConfig& cfg, const std::optional<PotentialStage>& pot,
                                            PipelineResults& out)
{
    TunnelingStage st;
    if (cfg.bracket_vacua == BracketVacua::published) {
        st.phi_F = cfg.published_phi_F;
        st.phi_T = cfg.published_phi_T;
    } else {
        if (!pot || !pot->vacua) {
            out.errors.push_back("tunneling stage: located vacua unavailable");
            return std::nullopt;
        }
        st.phi_F = pot->vacua->phi_F;
        st.phi_T = pot->vacua->phi_T;
    }

    try {
        st.brackets = gap_brackets(cfg.potential.m, st.phi_F, st.phi_T);
        if (!st.brackets.has_length()) {
            out.notes.push_back("tunneling quantities not computed: the selected vacua give no positive "
                                "Bogomol'nyi length");
            return st;
        }
        TunnelingInputs in;
        in.spec = cfg.potential;
        in.phi_F = st.phi_F;
        in.phi_T = st.phi_T;
        in.epsilon_plus = cfg.epsilon_plus;
        in.upper_limit = cfg.upper_limit;
        in.prefactor_A = cfg.prefactor_A;
        in.s_b = cfg.s_b;
        in.mass_M = cfg.mass_M;
        in.e_field = cfg.e_field;
        in.reading = cfg.exponent_reading;
        st.result = analyze_tunneling(in);
    } catch (const std::exception& e) {
        out.errors.push_back(describe("tunneling", e));
        return std::nullopt;
    }

    const auto& r = *st.result;
    if (r.gamma.saturated)
        out.notes.push_back("decay rate overflowed and was clamped to the largest double");
    if (r.t_closed.underflow)
        out.notes.push_back("closed-form transfer amplitude underflowed to 0");
    if (r.n_density > 0.0 && r.t_closed.value > 0.0) {
        std::ostringstream os;
        os << "closed-form |T| / n = " << format_g17(r.t_closed.value / r.n_density)
           << " (order-of-magnitude agreement would need |log10| <= 1)";
        out.notes.push_back(os.str());
    }
    return st;
}

std::optional<KEssenceStage> run_kessence(const RunConfig& cfg, PipelineResults& out)
{
    KEssenceStage st;
    try {
        st.trajectory = evolve_epsilon(cfg.kessence, cfg.eps0, cfg.t_end, cfg.steps, cfg.variant);
        RegimeBands bands;
        bands.half_width = cfg.regime_band;
        for (const auto& s : st.trajectory) {
            st.diagnostics.push_back(fluid_diagnostics(cfg.kessence, s.x, cfg.kessence.v0));
            st.regimes.push_back(classify_regime(st.diagnostics.back(), bands));
        }
        st.published_ratio_t1 = evolve_epsilon(cfg.kessence, 1.0, 1.0, cfg.steps, DecayVariant::published).back().eps;
        st.exact_ratio_t1 = evolve_epsilon(cfg.kessence, 1.0, 1.0, cfg.steps, DecayVariant::exact).back().eps;
    } catch (const std::exception& e) {
        out.errors.push_back(describe("kessence", e));
        return std::nullopt;
    }
    std::size_t acausal = 0;
    for (const auto& d : st.diagnostics)
        acausal += d.cs2_causal ? 0 : 1;
    if (acausal > 0)
        out.notes.push_back("sound speed squared left [0, 1] at " + std::to_string(acausal) + " samples");
    return st;
}

} // namespace

PipelineResults compute_pipeline(const RunConfig& cfg, Stage stage)
{
    PipelineResults out;
    out.stage = stage;

    if (stage != Stage::kessence)
        out.potential = run_potential(cfg, out);

    if (wants(stage, Stage::slowroll)) {
        if (out.potential && out.potential->vacua)
            out.slowroll = run_slowroll(cfg, *out.potential->vacua, out);
        else
            out.errors.push_back("slowroll stage: located vacua unavailable");
    }
    if (wants(stage, Stage::tunneling))
        out.tunneling = run_tunneling(cfg, out.potential, out);
    if (wants(stage, Stage::kessence))
        out.kessence = run_kessence(cfg, out);
    return out;
}

std::vector<ClaimsLedgerEntry> emit_claims_ledger(const RunConfig& cfg, const PipelineResults& res)
{
    using std::nullopt;
    using opt = std::optional<double>;
    std::vector<ClaimsLedgerEntry> ledger;
    auto add = [&](const char* id, const char* source, const char* description, opt published_value, opt recomputed) {
        ledger.push_back(make_claim(id, source, description, published_value, recomputed));
    };

    const auto* pot = res.potential ? &*res.potential : nullptr;
    const auto* vac = pot && pot->vacua ? &*pot->vacua : nullptr;

    add("chaotic.phi0_threshold", "chaotic inflation onset", "chaotic-inflation threshold sqrt(60 / 2 pi)", published::phi0_threshold,
        chaotic_threshold());
    add("chaotic.phi_star_formula", "phi_star scaling law vs adopted phi_star",
        "(3 / 16 pi)^(1/4) / sqrt(m) against the adopted 0.99 pi", published::phi_star,
        cfg.potential.m > 0.0 ? opt(chaotic_phi_star(cfg.potential.m)) : nullopt);
    add("vacua.phi_F", "published false vacuum", "false vacuum: second-lowest minimum of V", published::phi_F,
        vac ? opt(vac->phi_F) : nullopt);
    add("vacua.phi_T", "published true vacuum", "true vacuum: lowest minimum of V", published::phi_T,
        vac ? opt(vac->phi_T) : nullopt);
    add("vacua.phi_star", "published phi_star", "configured phi_star echoed back", published::phi_star,
        cfg.potential.phi_star);
    add("vacua.gap", "published vacuum gap", "V(phi_F) - V(phi_T) at the located vacua", published::vacuum_gap,
        vac ? opt(vac->gap) : nullopt);
    add("gap.delta_E_published_vacua", "energy-gap brackets",
        "bracket difference / 2 evaluated at the published phi_F, phi_T", published::vacuum_gap,
        pot ? opt(pot->published_brackets.delta_E_gap) : nullopt);
    add("gap.delta_E_recomputed_vacua", "energy-gap brackets",
        "bracket difference / 2 evaluated at the located phi_F, phi_T", published::vacuum_gap,
        pot && pot->recomputed_brackets ? opt(pot->recomputed_brackets->delta_E_gap) : nullopt);
    add("tunneling.m_star", "pair mass m*", "m* = 2 m_e in Planck units", published::m_star, natural_units().m_star);
    add("tunneling.x_at_published_phi_F", "published x = V(phi_F)", "V at the published phi_F", published::x_false,
        pot ? opt(v_total(cfg.potential, cfg.published_phi_F)) : nullopt);
    add("tunneling.x_at_recomputed_phi_F", "published x = V(phi_F)", "V at the located false vacuum", published::x_false,
        vac ? opt(vac->V_F) : nullopt);
    add("tunneling.x_vs_implied_by_H2", "published x against published H^2 at phi_F",
        "V(phi_F) implied by the published H^2 = 5.305, i.e. 5.305 * 3 / (8 pi)", published::x_false,
        published::rhs_F * 3.0 / (8.0 * pi));

    auto slow_point = [&](std::string_view label) -> const SlowRollReport* {
        if (!res.slowroll)
            return nullptr;
        for (const auto& p : res.slowroll->points)
            if (p.label == label)
                return &p.report;
        return nullptr;
    };
    const auto* sr_T = slow_point("phi_T");
    const auto* sr_F = slow_point("phi_F");
    const auto* sr_star = slow_point("phi_star");
    add("slowroll.phi_T.lhs", "published slow-roll check at phi_T", "|V''| at the located true vacuum", published::lhs_T,
        sr_T ? opt(sr_T->lhs) : nullopt);
    add("slowroll.phi_T.rhs", "published slow-roll check at phi_T", "H^2 = (8 pi / 3) V at the located true vacuum", published::rhs_T,
        sr_T ? opt(sr_T->rhs) : nullopt);
    add("slowroll.phi_F.lhs", "published slow-roll check at phi_F", "|V''| at the located false vacuum", published::lhs_F,
        sr_F ? opt(sr_F->lhs) : nullopt);
    add("slowroll.phi_F.rhs", "published slow-roll check at phi_F", "H^2 at the located false vacuum", published::rhs_F,
        sr_F ? opt(sr_F->rhs) : nullopt);
    add("slowroll.phi_star.lhs", "published slow-roll check at phi_star", "|V''| at phi_star", published::lhs_star,
        sr_star ? opt(sr_star->lhs) : nullopt);
    add("slowroll.phi_star.rhs", "published slow-roll check at phi_star", "H^2 at phi_star", published::rhs_star,
        sr_star ? opt(sr_star->rhs) : nullopt);

    const auto* ke = res.kessence ? &*res.kessence : nullptr;
    const double printed_decay = std::exp(-8.0 * pi * cfg.kessence.v0);
    add("kessence.exact_decay_t1", "3H decay law vs published decay bound",
        "eps(1)/eps0 from eps' = -3H eps (RK4) against the printed exp(-8 pi V0)", printed_decay,
        ke ? opt(ke->exact_ratio_t1) : nullopt);
    add("kessence.published_decay_t1", "published decay bound", "eps(1)/eps0 from eps' = -8 pi V0 eps (RK4); bound eps < eps0",
        printed_decay, ke ? opt(ke->published_ratio_t1) : nullopt);

    opt cs2_printed_eps0, cs2_exact_eps0, cs2_printed_end_init, cs2_printed_end_inst, cs2_exact_end, w_pr, w_ex;
    if (ke && !ke->trajectory.empty()) {
        const auto& m = cfg.kessence;
        const double eps_end = ke->trajectory.back().eps;
        cs2_printed_eps0 = cs2_printed(m.x0, cfg.eps0);
        cs2_exact_eps0 = ke->diagnostics.front().cs2_exact;
        cs2_printed_end_init = cs2_printed(m.x0, cfg.eps0);
        cs2_printed_end_inst = cs2_printed(m.x0, eps_end);
        cs2_exact_end = ke->diagnostics.back().cs2_exact;
        w_pr = w_printed(m, cfg.eps0);
        w_ex = ke->diagnostics.front().w;
    }
    add("kessence.cs2_eps0", "published sound speed", "printed C_s^2 against exact F_X / (F_X + 2X F_XX), both at eps0",
        cs2_printed_eps0, cs2_exact_eps0);
    add("kessence.cs2_end_initial_eps", "published sound speed",
        "printed C_s^2 read with the initial eps0, against exact C_s^2 at the final sample", cs2_printed_end_init,
        cs2_exact_end);
    add("kessence.cs2_end_instant_eps", "published sound speed",
        "printed C_s^2 read with the instantaneous eps, against exact C_s^2 at the final sample",
        cs2_printed_end_inst, cs2_exact_end);
    add("kessence.w_eps0", "published equation of state", "printed -1 / (1 + 4 X0 (F2/F0) eps0) against exact w at eps0", w_pr, w_ex);

    const auto* tun = res.tunneling && res.tunneling->result ? &*res.tunneling->result : nullptr;
    add("tunneling.L", "published S-S' separation", "S-S' separation L = 1 / delta_E_gap", published::L,
        tun ? tun->brackets.L : nullopt);
    opt log_ratio;
    if (tun && tun->n_density > 0.0 && tun->t_closed.value > 0.0)
        log_ratio = std::log10(tun->t_closed.value / tun->n_density);
    add("tunneling.n_vs_T_closed", "pair density vs closed-form amplitude",
        "log10(|T| closed form / n); equal magnitudes would give 0 (deviation in decades)", 0.0, log_ratio);

    std::sort(ledger.begin(), ledger.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return ledger;
}

namespace {

std::string num(const std::optional<double>& v)
{
    return v ? format_g17(*v) : std::string("nan");
}

std::string flag(bool b) { return b ? "true" : "false"; }

std::string potential_csv(const PotentialStage& ps)
{
    CsvTable t({"phi [M_p]", "V [M_p^4]", "dV/dphi [M_p^3]", "d2V/dphi2 [M_p^2]"});
    for (const auto& s : ps.curve)
        t.add_row({format_g17(s.phi), format_g17(s.v), format_g17(s.v_p), format_g17(s.v_pp)});
    return t.render();
}

std::string slowroll_csv(const SlowRollStage& st)
{
    CsvTable t({"point", "phi [M_p]", "V [M_p^4]", "d2V/dphi2 [M_p^2]", "H^2 [t_p^-2]", "ratio |V''|/H^2 [1]",
                "passes", "epsilon [1]", "eta [1]"});
    for (const auto& p : st.points)
        t.add_row({p.label, format_g17(p.report.phi), format_g17(p.report.v), format_g17(p.report.v_pp),
                   format_g17(p.report.h_sq), format_g17(p.report.ratio), flag(p.report.passes),
                   format_g17(p.pressure.epsilon), format_g17(p.pressure.eta)});
    return t.render();
}

std::string tunneling_csv(const TunnelingStage& st, const RunConfig& cfg)
{
    CsvTable t({"quantity", "value", "unit"});
    auto row = [&](std::string name, const std::string& value, std::string unit) {
        t.add_row({std::move(name), value, std::move(unit)});
    };
    row("phi_F", format_g17(st.phi_F), "M_p");
    row("phi_T", format_g17(st.phi_T), "M_p");
    row("bracket_A", format_g17(st.brackets.bracket_A), "1");
    row("bracket_B", format_g17(st.brackets.bracket_B), "1");
    row("bracket_total", format_g17(st.brackets.bracket_total), "1");
    row("delta_E_gap", format_g17(st.brackets.delta_E_gap), "M_p");
    row("L", num(st.brackets.L), "l_p");
    if (!st.result)
        return t.render();
    const auto& r = *st.result;
    row("alpha", format_g17(r.alpha), "l_p^-1");
    row("x", format_g17(r.x), "M_p^4");
    row("S_E", format_g17(r.s_e), "hbar");
    row("S_b", format_g17(r.s_b), "hbar");
    row("rho_i", format_g17(r.rho_i), "M_p^4");
    row("S_i", format_g17(-3.0 / 8.0 * r.rho_i), "hbar");
    row("prefactor_A", format_g17(cfg.prefactor_A), "t_p^-1");
    row("gamma", format_g17(r.gamma.value), "t_p^-1");
    row("gamma_saturated", flag(r.gamma.saturated), "-");
    row("H", format_g17(r.h), "t_p^-1");
    row("n_density", format_g17(r.n_density), "l_p^-1");
    row("c1", format_g17(r.c1), "1");
    row("c2", format_g17(r.c2), "1");
    row("m_star", format_g17(natural_units().m_star), "M_p");
    row("exponent_reading", std::string(to_string(cfg.exponent_reading)), "-");
    row("T_closed", format_g17(r.t_closed.value), "1");
    row("T_closed_underflow", flag(r.t_closed.underflow), "-");
    row("T_functional", format_g17(r.t_functional), "1");
    return t.render();
}

std::string kessence_csv(const KEssenceStage& st)
{
    CsvTable t({"t [t_p]", "eps [M_p^4]", "X [M_p^4]", "w [1]", "cs2_exact [1]", "cs2_printed [1]", "regime"});
    for (std::size_t i = 0; i < st.trajectory.size(); ++i) {
        const auto& s = st.trajectory[i];
        const auto& d = st.diagnostics[i];
        t.add_row({format_g17(s.t), format_g17(s.eps), format_g17(s.x), num(d.w), num(d.cs2_exact),
                   num(d.cs2_published), std::string(to_string(st.regimes[i]))});
    }
    return t.render();
}

} // namespace

std::vector<Artifact> render_artifacts(const RunConfig& cfg, const PipelineResults& res)
{
    std::vector<Artifact> files;
    if (res.potential)
        files.push_back({"potential_curve.csv", potential_csv(*res.potential)});
    if (res.slowroll)
        files.push_back({"slowroll.csv", slowroll_csv(*res.slowroll)});
    if (res.tunneling)
        files.push_back({"tunneling.csv", tunneling_csv(*res.tunneling, cfg)});
    if (res.kessence)
        files.push_back({"kessence_trajectory.csv", kessence_csv(*res.kessence)});

    const auto ledger = emit_claims_ledger(cfg, res);
    std::vector<std::string> notes = res.notes;
    for (const auto& e : res.errors)
        notes.push_back("error: " + e);
    if (cfg.report_format != ReportFormat::jsonl)
        files.push_back({"deviation_report.txt", render_ledger_text(ledger, notes)});
    if (cfg.report_format != ReportFormat::text)
        files.push_back({"deviation_report.jsonl", render_ledger_jsonl(ledger)});
    return files;
}

int run_pipeline(const RunConfig& cfg, Stage stage, std::ostream& log)
{
    try {
        validate(cfg);
    } catch (const ConfigError& e) {
        log << "nuclab: configuration error: " << e.what() << '\n';
        return 2;
    }

    const auto results = compute_pipeline(cfg, stage);
    for (const auto& e : results.errors)
        log << "nuclab: " << e << '\n';

    std::vector<Artifact> files;
    try {
        files = render_artifacts(cfg, results);
        std::filesystem::create_directories(cfg.out_dir);
        for (const auto& f : files) {
            std::ofstream os(cfg.out_dir / f.filename, std::ios::binary | std::ios::trunc);
            os << f.contents;
            if (!os)
                throw std::runtime_error("failed writing " + (cfg.out_dir / f.filename).string());
        }
    } catch (const std::exception& e) {
        log << "nuclab: output error: " << e.what() << '\n';
        return 1;
    }

    for (const auto& f : files)
        log << "nuclab: wrote " << (cfg.out_dir / f.filename).string() << '\n';
    return results.errors.empty() ? 0 : 1;
}

} // namespace nuclab
