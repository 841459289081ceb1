#pragma once

// Minimal static line charts (800x600, no scripting, no external assets).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "nlkg/analysis.hpp"

namespace nlkg::cli {

enum class Panel { ratio, delta };

namespace svg_detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

inline std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

inline constexpr std::array<const char*, 6> kColors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace svg_detail

inline std::string render_svg(const analysis::SweepTable& table, Panel panel, bool log_x, const std::string& title,
                              const std::string& description = {}) {
    using namespace svg_detail;
    constexpr double width = 800, height = 600;
    constexpr double left = 80, right = 160, top = 50, bottom = 60;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    auto value = [panel](const analysis::Cell& c) { return panel == Panel::ratio ? c.ratio : c.delta; };
    auto xmap = [log_x](double x) { return log_x ? std::log10(x) : x; };

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& row : table.rows) {
        xmin = std::min(xmin, xmap(row.x));
        xmax = std::max(xmax, xmap(row.x));
        for (const auto& c : row.cells) {
            const double v = value(c);
            if (std::isfinite(v)) {
                ymin = std::min(ymin, v);
                ymax = std::max(ymax, v);
            }
        }
    }
    if (!std::isfinite(xmin)) {
        xmin = 0;
        xmax = 1;
    }
    if (!std::isfinite(ymin)) {
        ymin = 0;
        ymax = 1;
    }
    if (xmax == xmin) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax == ymin) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    auto px = [&](double x) { return left + (xmap(x) - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * plot_h; };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
    s += "<title>" + escape(title) + "</title>\n";
    if (!description.empty())
        s += "<desc>" + escape(description) + "</desc>\n";
    s += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    s += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(plot_w) + "\" height=\"" +
         num(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(left) + "\" y=\"30\" font-family=\"sans-serif\" font-size=\"16\">" + escape(title) +
         "</text>\n";

    // Axis ticks: decades on a log axis, five even steps otherwise.
    std::vector<double> xticks;
    if (log_x) {
        for (double d = std::ceil(xmin); d <= std::floor(xmax) + 1e-12; d += 1.0)
            xticks.push_back(std::pow(10.0, d));
    } else {
        const double x0 = xmin, x1 = xmax;
        for (int i = 0; i <= 4; ++i)
            xticks.push_back(x0 + (x1 - x0) * i / 4.0);
    }
    for (double xt : xticks) {
        const double X = px(xt);
        s += "<line x1=\"" + num(X) + "\" y1=\"" + num(top + plot_h) + "\" x2=\"" + num(X) + "\" y2=\"" +
             num(top + plot_h + 5) + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + num(X) + "\" y=\"" + num(top + plot_h + 20) +
             "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" + tick_label(xt) + "</text>\n";
    }
    for (int i = 0; i <= 4; ++i) {
        const double yt = ymin + (ymax - ymin) * i / 4.0;
        const double Y = py(yt);
        s += "<line x1=\"" + num(left - 5) + "\" y1=\"" + num(Y) + "\" x2=\"" + num(left) + "\" y2=\"" + num(Y) +
             "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + num(left - 8) + "\" y=\"" + num(Y + 4) +
             "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" + tick_label(yt) + "</text>\n";
    }
    s += "<text x=\"" + num(left + plot_w / 2) + "\" y=\"" + num(height - 15) +
         "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" + escape(table.abscissa) +
         "</text>\n";
    const std::string ylabel = panel == Panel::ratio ? "Omega / Omega_exact" : "log10 |relative error|";
    s += "<text x=\"20\" y=\"" + num(top + plot_h / 2) +
         "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         num(top + plot_h / 2) + ")\">" + ylabel + "</text>\n";

    // One polyline per contiguous run of finite values.
    for (std::size_t m = 0; m < table.methods.size(); ++m) {
        const char* color = kColors[m % kColors.size()];
        std::string points;
        auto flush = [&] {
            if (!points.empty())
                s += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"" +
                     points + "\"/>\n";
            points.clear();
        };
        for (const auto& row : table.rows) {
            const double v = value(row.cells[m]);
            if (!std::isfinite(v)) {
                flush();
                continue;
            }
            if (!points.empty())
                points += ' ';
            points += num(px(row.x)) + "," + num(py(v));
        }
        flush();

        const double ly = top + 20 + 20.0 * static_cast<double>(m);
        const double lx = left + plot_w + 15;
        s += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 25) + "\" y2=\"" + num(ly) +
             "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
        s += "<text x=\"" + num(lx + 32) + "\" y=\"" + num(ly + 4) +
             "\" font-family=\"sans-serif\" font-size=\"13\">" + escape(method_label(table.methods[m])) +
             "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace nlkg::cli
