#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace nuclab {

/// Shortest-form rendering with 17 significant digits, '.' decimal point.
std::string format_g17(double v);

// Comma-separated table with a mandatory header row.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    std::size_t rows() const noexcept { return rows_.size(); }
    std::string render() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace nuclab
