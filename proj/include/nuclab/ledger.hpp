#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nuclab {

enum class ClaimStatus { match, near, mismatch, not_computed };

std::string_view to_string(ClaimStatus s) noexcept;

inline constexpr double kMatchBand = 0.02;
inline constexpr double kNearBand = 0.20;

/// Relative deviation below 2% is a match, up to 20% near, beyond that a mismatch.
ClaimStatus status_for(double rel_dev) noexcept;

// One published number set against its recomputed counterpart.
struct ClaimsLedgerEntry {
    std::string id;
    std::string source;
    std::string description;
    std::optional<double> published_value;
    std::optional<double> recomputed;
    std::optional<double> abs_dev;
    std::optional<double> rel_dev;
    ClaimStatus status = ClaimStatus::not_computed;
};

/// Fills deviations and status. A missing value on either side gives
/// not_computed. Throws std::invalid_argument for an empty id or source.
ClaimsLedgerEntry make_claim(std::string id, std::string source, std::string description,
                             std::optional<double> published_value, std::optional<double> recomputed);

/// Aligned plain-text table followed by free-form notes.
std::string render_ledger_text(const std::vector<ClaimsLedgerEntry>& entries, const std::vector<std::string>& notes);

/// One JSON object per line, keys in a fixed order, missing numbers as null.
std::string render_ledger_jsonl(const std::vector<ClaimsLedgerEntry>& entries);

} // namespace nuclab
