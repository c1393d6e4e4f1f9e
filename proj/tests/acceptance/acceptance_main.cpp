// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include "nuclab/cli.hpp"
#include "nuclab/config.hpp"
#include "nuclab/kessence.hpp"
#include "nuclab/pipeline.hpp"
#include "nuclab/potential.hpp"
#include "nuclab/slowroll.hpp"
#include "nuclab/tunneling.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace nuclab;
namespace fs = std::filesystem;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail << " FAILED: " << what << ';';
        }
    }
};

bool within_rel(double got, double want, double tol) { return std::abs(got - want) <= tol * std::abs(want); }

// Mixed tolerance: relative for values of order one or larger, absolute below.
bool within_mixed(double got, double want, double tol)
{
    return std::abs(got - want) <= tol * (1.0 + std::abs(want));
}

double central_difference(const std::function<double(double)>& f, double x, double h)
{
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "nuclab");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

fs::path scratch(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / ("nuclab_acceptance_" + name);
    fs::remove_all(dir);
    return dir;
}

void criterion_stationary_points(Outcome& o)
{
    const PotentialSpec spec;
    const Interval range{0.0, 2.0 * pi};
    const auto found = find_stationary_points(spec, range, 4096);

    constexpr std::size_t kBrute = 1'000'000;
    const double h = (range.hi - range.lo) / static_cast<double>(kBrute - 1);
    std::vector<double> brute;
    double prev = v1_derivatives(spec, range.lo).first;
    for (std::size_t i = 1; i < kBrute; ++i) {
        const double phi = range.lo + h * static_cast<double>(i);
        const double cur = v1_derivatives(spec, phi).first;
        if (prev == 0.0 || (prev < 0.0) != (cur < 0.0))
            brute.push_back(phi - 0.5 * h);
        prev = cur;
    }

    o.require(found.size() == brute.size(), "root count differs from brute-force scan");
    o.detail << " roots=" << found.size() << " brute=" << brute.size();
    for (std::size_t i = 0; i < std::min(found.size(), brute.size()); ++i) {
        const double d = std::abs(found[i].phi - brute[i]);
        const double vp = std::abs(v1_derivatives(spec, found[i].phi).first);
        o.require(d <= h, "root " + std::to_string(i) + " farther than one grid spacing");
        o.require(vp < 1e-10, "root " + std::to_string(i) + " has |V'| >= 1e-10");
        o.detail << " [" << found[i].phi << " " << to_string(found[i].kind) << " |V'|=" << vp << "]";
    }
}

void criterion_ledger(Outcome& o)
{
    RunConfig cfg;
    cfg.out_dir = scratch("ledger");
    std::ostringstream log;
    const int code = run_pipeline(cfg, Stage::all, log);
    o.require(code == 0, "canonical run exit code " + std::to_string(code));

    const auto res = compute_pipeline(cfg, Stage::all);
    const auto ledger = emit_claims_ledger(cfg, res);
    const std::vector<std::string> prefixes = {"vacua.phi_F",         "vacua.phi_T",        "vacua.phi_star",
                                               "vacua.gap",           "gap.delta_E",        "tunneling.x_at",
                                               "slowroll.phi_T.",     "slowroll.phi_F.",    "slowroll.phi_star.",
                                               "tunneling.L"};
    for (const auto& prefix : prefixes) {
        const bool populated = std::any_of(ledger.begin(), ledger.end(), [&](const ClaimsLedgerEntry& e) {
            return e.id.rfind(prefix, 0) == 0 && e.published_value && e.recomputed;
        });
        o.require(populated, "no populated entry for " + prefix);
    }
    const auto echo = std::find_if(ledger.begin(), ledger.end(),
                                   [](const ClaimsLedgerEntry& e) { return e.id == "vacua.phi_star"; });
    o.require(echo != ledger.end() && echo->abs_dev && *echo->abs_dev == 0.0, "phi_star echo deviates");
    o.require(fs::exists(cfg.out_dir / "deviation_report.txt") && fs::exists(cfg.out_dir / "deviation_report.jsonl"),
              "deviation report missing");
    o.detail << " entries=" << ledger.size();
}

void criterion_slow_roll(Outcome& o)
{
    const PotentialSpec spec;
    const auto pair = classify_vacua(spec, find_stationary_points(spec, {0.0, 2.0 * pi}, 4096));
    const std::pair<const char*, double> points[] = {
        {"phi_F", pair.phi_F}, {"phi_T", pair.phi_T}, {"phi_star", spec.phi_star}};
    for (const auto& [label, phi] : points) {
        const auto r = slow_roll_check(spec, phi);
        o.require(r.ratio < 0.15, std::string(label) + " ratio >= 0.15");
        o.detail << ' ' << label << "(phi=" << phi << " |V''|=" << r.lhs << " H^2=" << r.rhs
                 << " ratio=" << r.ratio << ')';
    }
}

void criterion_derivatives(Outcome& o)
{
    const PotentialSpec spec;
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    const KEssenceModel model;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double phi = dist(rng);
        const auto d = v1_derivatives(spec, phi);
        const double vp = central_difference([&](double x) { return v1(spec, x); }, phi, 1e-5);
        const double vpp = central_difference([&](double x) { return v1_derivatives(spec, x).first; }, phi, 1e-5);
        const auto f = f_eval(model, phi);
        const double fx = central_difference([&](double x) { return f_eval(model, x).F; }, phi, 1e-5);
        const double fxx = central_difference([&](double x) { return f_eval(model, x).F_X; }, phi, 1e-5);
        o.require(within_mixed(vp, d.first, 1e-6), "V' at " + std::to_string(phi));
        o.require(within_mixed(vpp, d.second, 1e-6), "V'' at " + std::to_string(phi));
        o.require(within_mixed(fx, f.F_X, 1e-6), "F_X at " + std::to_string(phi));
        o.require(within_mixed(fxx, f.F_XX, 1e-6), "F_XX at " + std::to_string(phi));
        worst = std::max({worst, std::abs(vp - d.first) / (1.0 + std::abs(d.first)),
                          std::abs(vpp - d.second) / (1.0 + std::abs(d.second)),
                          std::abs(fx - f.F_X) / (1.0 + std::abs(f.F_X)),
                          std::abs(fxx - f.F_XX) / (1.0 + std::abs(f.F_XX))});
    }
    o.detail << " worst=" << worst;
}

void criterion_tunneling(Outcome& o)
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> alpha_dist(0.01, 0.5), center_dist(0.0, 2.0 * pi),
        upper_dist(3.0, 10.0), phi0_dist(0.0, 2.5);
    double worst_anti = 0.0, worst_norm = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double alpha = alpha_dist(rng), upper = upper_dist(rng);
        const auto a = make_wave_functional(FunctionalKind::initial, center_dist(rng), alpha, upper);
        const auto b = make_wave_functional(FunctionalKind::final, center_dist(rng), alpha, upper);
        const double phi_0 = phi0_dist(rng);
        const double ab = matrix_element_functional(a, b, phi_0, upper);
        const double ba = matrix_element_functional(b, a, phi_0, upper);
        const double anti = std::abs(ab + ba) / std::abs(ab);
        worst_anti = std::max(worst_anti, anti);
        o.require(anti <= 1e-9, "antisymmetry set " + std::to_string(i));

        for (const auto& psi : {a, b}) {
            const double closed = 0.5 * std::sqrt(pi / (2.0 * psi.alpha)) *
                                  std::erf(std::sqrt(2.0 * psi.alpha) * psi.norm_upper);
            const double norm = psi.c_norm * psi.c_norm * closed;
            worst_norm = std::max(worst_norm, std::abs(norm - 1.0));
            o.require(std::abs(norm - 1.0) <= 1e-9, "normalization set " + std::to_string(i));
        }
    }
    for (double a : {10.0, 50.0, 200.0}) {
        const double half_gaussian = 1.0 / std::sqrt(0.5 * std::sqrt(pi / (2.0 * a)));
        o.require(within_rel(normalization_constant(a, 2.0 * pi), half_gaussian, 1e-6),
                  "large-a limit at a=" + std::to_string(a));
    }
    o.detail << " antisymmetry=" << worst_anti << " normalization=" << worst_norm;
}

void criterion_kessence(Outcome& o)
{
    const KEssenceModel model;
    const auto at_x0 = fluid_diagnostics(model, model.x0, model.v0);
    o.require(at_x0.w && std::abs(*at_x0.w + 1.0) <= 1e-14, "w at X0");
    const KEssenceModel flat{.f2 = 0.0};
    for (double x : {0.1, 1.0, 3.0, 50.0}) {
        const auto d = fluid_diagnostics(flat, x, model.v0);
        o.require(d.w && std::abs(*d.w + 1.0) <= 1e-14, "w with F2 = 0");
    }
    for (double x : {0.2, 0.9, 1.001, 1.5, 4.0}) {
        const auto a = fluid_diagnostics(model, x, model.v0);
        const auto b = fluid_diagnostics(model, x, 10.0 * model.v0);
        o.require(a.w && b.w && within_rel(*a.w, *b.w, 1e-12), "w(v) != w(10 v)");
    }
    for (double eps : {1e-9, 1e-6, 1e-3, 0.5, 3.0}) {
        const double x = model.x0 + eps;
        const double offset = x - model.x0; // the offset actually represented
        const auto d = fluid_diagnostics(model, x, model.v0);
        o.require(d.cs2_exact && within_rel(*d.cs2_exact, offset / (3.0 * offset + 2.0 * model.x0), 1e-12),
                  "cs2 law at eps=" + std::to_string(eps));
    }

    // t_end is chosen so that 256 RK4 steps resolve the 3H decay rate to 1e-8.
    const double t_end = 0.5;
    auto max_err = [&](std::size_t steps) {
        double worst = 0.0;
        for (const auto& s : evolve_epsilon(model, 1e-3, t_end, steps, DecayVariant::exact)) {
            const double exact = epsilon_closed_form(model, 1e-3, s.t, DecayVariant::exact);
            worst = std::max(worst, std::abs(s.eps - exact) / std::abs(exact));
        }
        return worst;
    };
    const double e256 = max_err(256), e512 = max_err(512);
    o.require(e256 <= 1e-8, "RK4 at 256 steps off by more than 1e-8");
    o.require(std::abs(e256 / e512 - 16.0) <= 2.0, "convergence ratio outside 16 +- 2");
    o.detail << " t_end=" << t_end << " err256=" << e256 << " ratio=" << e256 / e512;
}

void criterion_printed_decay(Outcome& o)
{
    const KEssenceModel model;
    const double direct = std::exp(-8.0 * pi * 0.775);
    const auto traj = evolve_epsilon(model, 1e-3, 1.0, 8192, DecayVariant::published);
    const double ratio = traj.back().eps / 1e-3;
    o.require(within_rel(ratio, direct, 1e-10), "eps(1)/eps0 differs from exp(-8 pi 0.775)");
    o.require(ratio < 1.0, "no suppression");
    o.detail << " ratio=" << ratio << " direct=" << direct << " rel=" << std::abs(ratio - direct) / direct;
}

void criterion_determinism(Outcome& o)
{
    const auto a = scratch("det_a"), b = scratch("det_b"), bad = scratch("det_bad");
    o.require(cli({"--out", a.string()}) == 0, "first run failed");
    o.require(cli({"--out", b.string()}) == 0, "second run failed");
    std::size_t compared = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
        const auto name = entry.path().filename();
        o.require(fs::exists(b / name) && slurp(a / name) == slurp(b / name), name.string() + " differs");
        ++compared;
    }
    o.require(compared >= 5, "too few artifacts");
    o.require(cli({"--m=-1", "--out", bad.string()}) == 2, "m <= 0 did not exit 2");
    o.require(!fs::exists(bad), "rejected run wrote files");
    o.detail << " files=" << compared;
}

} // namespace

int main()
{
    std::cout.precision(10);
    const std::pair<const char*, void (*)(Outcome&)> criteria[] = {
        {"1 stationary points vs brute-force scan", criterion_stationary_points},
        {"2 ledger population", criterion_ledger},
        {"3 slow-roll ratios below 0.15", criterion_slow_roll},
        {"4 analytic derivatives vs central differences", criterion_derivatives},
        {"5 transfer antisymmetry and normalization", criterion_tunneling},
        {"6 k-essence exactness and RK4 order", criterion_kessence},
        {"7 printed decay exponent at t = 1", criterion_printed_decay},
        {"8 determinism and config rejection", criterion_determinism},
    };

    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        o.detail.precision(10);
        const auto t0 = std::chrono::steady_clock::now();
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " exception: " << e.what();
        }
        const auto ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << "  (" << ms << " ms)"
                  << o.detail.str() << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
