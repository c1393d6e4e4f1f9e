#include "nuclab/csv.hpp"

#include <locale>
#include <sstream>
#include <stdexcept>

namespace nuclab {

std::string format_g17(double v)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    os << v;
    return os.str();
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header))
{
    if (header_.empty())
        throw std::invalid_argument("CsvTable: header must name at least one column");
}

void CsvTable::add_row(std::vector<std::string> cells)
{
    if (cells.size() != header_.size())
        throw std::invalid_argument("CsvTable: row width does not match header");
    rows_.push_back(std::move(cells));
}

std::string CsvTable::render() const
{
    std::ostringstream os;
    auto line = [&os](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i)
            os << (i ? "," : "") << r[i];
        os << '\n';
    };
    line(header_);
    for (const auto& r : rows_)
        line(r);
    return os.str();
}

} // namespace nuclab
