#pragma once

#include <string>
#include <vector>

namespace hypflow::cli {

struct PlotSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

// Minimal dependency-free line chart; deterministic output for fixed input.
void write_svg_line_chart(const std::string& path, const std::string& title,
                          const std::vector<PlotSeries>& series);

}  // namespace hypflow::cli
