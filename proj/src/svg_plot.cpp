#include "cspin/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace cspin {

namespace {

constexpr double kWidth = 880;
constexpr double kHeight = 560;
constexpr double kLeft = 70, kRight = 180, kTop = 30, kBottom = 60;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#e377c2",
                          "#7f7f7f", "#bcbd22"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct GroupKey {
    double phase;
    int bath_size;
    Backend backend;
    auto operator<=>(const GroupKey&) const = default;
};

}  // namespace

std::string render_svg(const std::vector<ResultRow>& rows) {
    std::map<GroupKey, std::vector<const ResultRow*>> groups;
    std::set<double> phases;
    std::set<int> sizes;
    double tau_min = 0.0, tau_max = 1.0;
    bool first = true;
    bool clamped = false;
    for (const ResultRow& r : rows) {
        groups[{r.phase, r.bath_size, r.backend}].push_back(&r);
        phases.insert(r.phase);
        sizes.insert(r.bath_size);
        if (first || r.tau < tau_min) tau_min = r.tau;
        if (first || r.tau > tau_max) tau_max = r.tau;
        first = false;
    }
    if (tau_max <= tau_min) tau_max = tau_min + 1.0;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto sx = [&](double tau) {
        return kLeft + plot_w * (tau - tau_min) / (tau_max - tau_min);
    };
    auto sy = [&](double p) { return kTop + plot_h * (1.0 - p); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
       << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
       << kHeight << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Axes, gridlines and ticks.
    for (int i = 0; i <= 5; ++i) {
        const double p = i / 5.0;
        os << "<line x1=\"" << kLeft << "\" y1=\"" << sy(p) << "\" x2=\""
           << kLeft + plot_w << "\" y2=\"" << sy(p)
           << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << kLeft - 8 << "\" y=\"" << sy(p) + 4
           << "\" font-size=\"12\" text-anchor=\"end\">" << num(p)
           << "</text>\n";
    }
    for (int i = 0; i <= 6; ++i) {
        const double tau = tau_min + (tau_max - tau_min) * i / 6.0;
        os << "<line x1=\"" << sx(tau) << "\" y1=\"" << kTop << "\" x2=\""
           << sx(tau) << "\" y2=\"" << kTop + plot_h
           << "\" stroke=\"#eeeeee\"/>\n";
        os << "<text x=\"" << sx(tau) << "\" y=\"" << kTop + plot_h + 20
           << "\" font-size=\"12\" text-anchor=\"middle\">" << num(tau)
           << "</text>\n";
    }
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w
       << "\" height=\"" << plot_h
       << "\" fill=\"none\" stroke=\"#333333\"/>\n";
    os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
       << "\" font-size=\"14\" text-anchor=\"middle\">tau</text>\n";
    os << "<text x=\"18\" y=\"" << kTop + plot_h / 2
       << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
       << kTop + plot_h / 2 << ")\">central population</text>\n";

    const bool label_phase = phases.size() > 1 || sizes.size() <= 1;
    const bool label_size = sizes.size() > 1;

    int color_idx = 0;
    double legend_y = kTop + 12;
    for (const auto& [key, pts] : groups) {
        std::vector<const ResultRow*> sorted = pts;
        std::sort(sorted.begin(), sorted.end(),
                  [](const ResultRow* a, const ResultRow* b) {
                      return a->tau < b->tau;
                  });
        const char* color = kPalette[color_idx % 10];
        std::ostringstream poly;
        for (const ResultRow* r : sorted) {
            double p = r->estimate;
            if (p < 0.0 || p > 1.0) {
                clamped = true;
                p = std::clamp(p, 0.0, 1.0);
            }
            poly << sx(r->tau) << "," << sy(p) << " ";
        }
        os << "<polyline fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"2\" points=\"" << poly.str() << "\"/>\n";

        std::string label;
        if (label_phase) label += "phase=" + num(key.phase);
        if (label_size) {
            if (!label.empty()) label += ", ";
            label += "L=" + std::to_string(key.bath_size);
        }
        label += label.empty() ? backend_name(key.backend)
                               : " (" + backend_name(key.backend) + ")";
        os << "<line x1=\"" << kLeft + plot_w + 14 << "\" y1=\"" << legend_y
           << "\" x2=\"" << kLeft + plot_w + 38 << "\" y2=\"" << legend_y
           << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << kLeft + plot_w + 44 << "\" y=\"" << legend_y + 4
           << "\" font-size=\"12\">" << label << "</text>\n";
        legend_y += 18;
        ++color_idx;
    }
    os << "</svg>\n";

    if (clamped) {
        std::cerr << "warning: population values outside [0,1] were clamped "
                     "for plotting\n";
    }
    return os.str();
}

void emit_plot(const std::string& csv_path, const std::string& svg_path) {
    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error("cannot open CSV file: " + csv_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::vector<ResultRow> rows = parse_csv(ss.str());
    std::ofstream out(svg_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write SVG file: " + svg_path);
    out << render_svg(rows);
}

}  // namespace cspin
