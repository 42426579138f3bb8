#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace hypflow {

// Small column-ordered table for diagnostic output. Doubles are rendered
// with 17 significant digits so identical runs produce byte-identical CSV.
class Report {
public:
    using Cell = std::variant<double, std::string>;

    explicit Report(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add_row(std::vector<Cell> cells);

    const std::vector<std::string>& columns() const { return columns_; }
    std::size_t row_count() const { return rows_.size(); }
    const Cell& cell(std::size_t row, std::size_t col) const { return rows_[row][col]; }
    double number(std::size_t row, std::size_t col) const;

    void write_csv(std::ostream& os) const;
    void write_csv_file(const std::string& path) const;

    static std::string format_double(double x);

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

}  // namespace hypflow
