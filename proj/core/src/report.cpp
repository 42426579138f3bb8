#include "hypflow/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace hypflow {

void Report::add_row(std::vector<Cell> cells) {
    if (cells.size() != columns_.size())
        throw std::invalid_argument("Report::add_row: cell count does not match columns");
    rows_.push_back(std::move(cells));
}

double Report::number(std::size_t row, std::size_t col) const {
    return std::get<double>(rows_[row][col]);
}

std::string Report::format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void Report::write_csv(std::ostream& os) const {
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c) os << ',';
        os << columns_[c];
    }
    os << '\n';
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            if (std::holds_alternative<double>(row[c]))
                os << format_double(std::get<double>(row[c]));
            else
                os << std::get<std::string>(row[c]);
        }
        os << '\n';
    }
}

void Report::write_csv_file(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("Report: cannot open " + path + " for writing");
    write_csv(f);
}

}  // namespace hypflow
