#pragma once

#include <string>
#include <vector>

#include "cspin/experiment.hpp"

namespace cspin {

// Renders the sweep table as a static SVG line chart: tau on x, population
// on y (clamped to [0,1] with a warning on stderr), one polyline per
// (phase, L, backend) group, legend labels naming the curve parameter.
std::string render_svg(const std::vector<ResultRow>& rows);

// CSV file -> SVG file. Propagates CSV parse errors with line numbers.
void emit_plot(const std::string& csv_path, const std::string& svg_path);

}  // namespace cspin
