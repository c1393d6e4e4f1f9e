#pragma once

#include "nuclab/config.hpp"
#include "nuclab/kessence.hpp"
#include "nuclab/ledger.hpp"
#include "nuclab/potential.hpp"
#include "nuclab/slowroll.hpp"
#include "nuclab/tunneling.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nuclab {

struct CurveSample {
    double phi = 0.0;
    double v = 0.0;
    double v_p = 0.0;
    double v_pp = 0.0;
};

struct PotentialStage {
    std::vector<StationaryPoint> stationary;
    std::optional<VacuumPair> vacua;
    std::vector<CurveSample> curve;
    GapBrackets published_brackets;                     // brackets at the published vacuum positions
    std::optional<GapBrackets> recomputed_brackets; // brackets at the located vacua
};

struct SlowRollPoint {
    std::string label; // phi_F, phi_T or phi_star
    SlowRollReport report;
    PressureParams pressure;
};

struct SlowRollStage {
    std::vector<SlowRollPoint> points;
};

struct TunnelingStage {
    double phi_F = 0.0;
    double phi_T = 0.0;
    std::optional<TunnelingResult> result; // empty when the brackets give no length
    GapBrackets brackets;
};

struct KEssenceStage {
    std::vector<KEssenceState> trajectory;
    std::vector<FluidDiagnostics> diagnostics;
    std::vector<Regime> regimes;
    double published_ratio_t1 = 0.0; // RK4 eps(1)/eps0, printed exponent
    double exact_ratio_t1 = 0.0; // RK4 eps(1)/eps0, 3H exponent
};

/// In-memory result of a run; each stage is empty when it was not requested
/// or failed. Failures are listed in `errors` as "operation: message".
struct PipelineResults {
    Stage stage = Stage::all;
    std::optional<PotentialStage> potential;
    std::optional<SlowRollStage> slowroll;
    std::optional<TunnelingStage> tunneling;
    std::optional<KEssenceStage> kessence;
    std::vector<std::string> errors;
    std::vector<std::string> notes;
};

/// Runs the requested stages (and the ones they depend on) in order:
/// vacua, gap brackets, slow roll, tunneling, k-essence. Never throws for
/// numeric failures; they are collected in `errors`.
PipelineResults compute_pipeline(const RunConfig& cfg, Stage stage);

/// One entry per tracked published value, sorted by id. Values that could
/// not be recomputed are kept and marked not computed.
std::vector<ClaimsLedgerEntry> emit_claims_ledger(const RunConfig& cfg, const PipelineResults& results);

struct Artifact {
    std::string filename;
    std::string contents;
};

/// Renders every output file for the stages present in `results`; the
/// deviation report is always included.
std::vector<Artifact> render_artifacts(const RunConfig& cfg, const PipelineResults& results);

/// Validates, computes and writes artifacts into cfg.out_dir.
/// Returns 0 on success, 1 on numeric or I/O failure, 2 on a rejected config
/// (in which case nothing is written).
int run_pipeline(const RunConfig& cfg, Stage stage, std::ostream& log);

} // namespace nuclab
