#include "nuclab/ledger.hpp"

#include "nuclab/csv.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace nuclab {

std::string_view to_string(ClaimStatus s) noexcept
{
    switch (s) {
    case ClaimStatus::match: return "match";
    case ClaimStatus::near: return "near";
    case ClaimStatus::mismatch: return "mismatch";
    case ClaimStatus::not_computed: return "not computed";
    }
    return "not computed";
}

ClaimStatus status_for(double rel_dev) noexcept
{
    if (!std::isfinite(rel_dev))
        return ClaimStatus::mismatch;
    if (rel_dev < kMatchBand)
        return ClaimStatus::match;
    if (rel_dev <= kNearBand)
        return ClaimStatus::near;
    return ClaimStatus::mismatch;
}

ClaimsLedgerEntry make_claim(std::string id, std::string source, std::string description,
                             std::optional<double> published_value, std::optional<double> recomputed)
{
    if (id.empty() || source.empty())
        throw std::invalid_argument("make_claim: ledger entries need an id and a source citation");

    ClaimsLedgerEntry e{std::move(id), std::move(source), std::move(description), published_value, recomputed,
                        std::nullopt, std::nullopt, ClaimStatus::not_computed};
    if (published_value && recomputed) {
        e.abs_dev = std::abs(*recomputed - *published_value);
        e.rel_dev = *published_value != 0.0 ? *e.abs_dev / std::abs(*published_value) : *e.abs_dev;
        e.status = status_for(*e.rel_dev);
    }
    return e;
}

namespace {

std::string cell(const std::optional<double>& v) { return v ? format_g17(*v) : std::string("-"); }

std::string percent(const std::optional<double>& v)
{
    if (!v)
        return "-";
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << 100.0 * *v << '%';
    return os.str();
}

} // namespace

std::string render_ledger_text(const std::vector<ClaimsLedgerEntry>& entries, const std::vector<std::string>& notes)
{
    const std::vector<std::string> header = {"id", "source", "published", "recomputed", "abs_dev", "rel_dev", "status"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : entries)
        rows.push_back({e.id, e.source, cell(e.published_value), cell(e.recomputed), cell(e.abs_dev), percent(e.rel_dev),
                        std::string(to_string(e.status))});

    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows)
            width[c] = std::max(width[c], r[c].size());
    }

    std::ostringstream os;
    os << "Claims ledger: published values against recomputed values (Planck units)\n";
    os << "status bands: match < 2%, near 2-20%, mismatch > 20%\n\n";
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            os << std::left << std::setw(static_cast<int>(width[c])) << r[c];
            os << (c + 1 < r.size() ? "  " : "\n");
        }
    };
    line(header);
    std::vector<std::string> rule;
    for (auto w : width)
        rule.emplace_back(w, '-');
    line(rule);
    for (const auto& r : rows)
        line(r);

    os << "\nDescriptions\n";
    for (const auto& e : entries)
        os << "  " << e.id << ": " << e.description << '\n';

    if (!notes.empty()) {
        os << "\nNotes\n";
        for (const auto& n : notes)
            os << "  - " << n << '\n';
    }
    return os.str();
}

std::string render_ledger_jsonl(const std::vector<ClaimsLedgerEntry>& entries)
{
    auto number = [](const std::optional<double>& v) -> nlohmann::ordered_json {
        if (v && std::isfinite(*v))
            return *v;
        return nullptr;
    };
    std::ostringstream os;
    for (const auto& e : entries) {
        nlohmann::ordered_json j;
        j["id"] = e.id;
        j["source"] = e.source;
        j["description"] = e.description;
        j["published"] = number(e.published_value);
        j["recomputed"] = number(e.recomputed);
        j["abs_dev"] = number(e.abs_dev);
        j["rel_dev"] = number(e.rel_dev);
        j["status"] = std::string(to_string(e.status));
        os << j.dump() << '\n';
    }
    return os.str();
}

} // namespace nuclab
