#include "qhd/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

namespace qhd::cli {

namespace {

constexpr std::array<const char*, 6> kPalette{"#d62728", "#ff7f0e", "#2ca02c", "#1f77b4", "#9467bd", "#8c564b"};

constexpr double kLeft = 72.0;
constexpr double kRight = 24.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 56.0;

std::string num(const char* fmt, double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

std::string escape(const std::string& s) {
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

struct Range {
    double lo;
    double hi;
};

Range widen(Range r) {
    if (r.hi > r.lo) return r;
    const double pad = r.lo == 0.0 ? 1.0 : 0.5 * std::abs(r.lo);
    return {r.lo - pad, r.hi + pad};
}

double nice_step(double span, int target) {
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double frac = raw / mag;
    double nice = 10.0;
    if (frac <= 1.0) nice = 1.0;
    else if (frac <= 2.0) nice = 2.0;
    else if (frac <= 5.0) nice = 5.0;
    return nice * mag;
}

std::vector<double> ticks(Range r) {
    const double step = nice_step(r.hi - r.lo, 6);
    std::vector<double> out;
    const double first = std::ceil(r.lo / step - 1e-9) * step;
    for (double t = first; t <= r.hi + 1e-9 * step && out.size() < 32; t += step) {
        out.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
    }
    return out;
}

}  // namespace

std::string emit_svg(const std::vector<Series>& dataset, const AxesSpec& axes) {
    if (dataset.empty()) throw EmitError("svg: empty dataset");
    Range xr{INFINITY, -INFINITY};
    Range yr{INFINITY, -INFINITY};
    for (const auto& s : dataset) {
        if (s.x.size() != s.y.size()) throw EmitError("svg: series '" + s.label + "' has mismatched x/y lengths");
        if (s.x.empty()) throw EmitError("svg: series '" + s.label + "' is empty");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
                throw EmitError("svg: non-finite value in series '" + s.label + "'");
            }
            xr = {std::min(xr.lo, s.x[i]), std::max(xr.hi, s.x[i])};
            yr = {std::min(yr.lo, s.y[i]), std::max(yr.hi, s.y[i])};
        }
    }
    xr = widen(xr);
    yr = widen(yr);
    const double ypad = 0.04 * (yr.hi - yr.lo);
    yr = {yr.lo - ypad, yr.hi + ypad};

    const double W = axes.width;
    const double H = axes.height;
    const double pw = W - kLeft - kRight;
    const double ph = H - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(axes.width) + "\" height=\"" +
           std::to_string(axes.height) + "\" viewBox=\"0 0 " + std::to_string(axes.width) + " " +
           std::to_string(axes.height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!axes.title.empty()) {
        svg += "<text x=\"" + num("%.2f", W / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" +
               escape(axes.title) + "</text>\n";
    }

    // grid and tick labels
    svg += "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    const auto xt = ticks(xr);
    const auto yt = ticks(yr);
    for (double t : xt) {
        svg += "<line x1=\"" + num("%.2f", px(t)) + "\" y1=\"" + num("%.2f", kTop) + "\" x2=\"" + num("%.2f", px(t)) +
               "\" y2=\"" + num("%.2f", kTop + ph) + "\"/>\n";
    }
    for (double t : yt) {
        svg += "<line x1=\"" + num("%.2f", kLeft) + "\" y1=\"" + num("%.2f", py(t)) + "\" x2=\"" +
               num("%.2f", kLeft + pw) + "\" y2=\"" + num("%.2f", py(t)) + "\"/>\n";
    }
    svg += "</g>\n";
    svg += "<rect x=\"" + num("%.2f", kLeft) + "\" y=\"" + num("%.2f", kTop) + "\" width=\"" + num("%.2f", pw) +
           "\" height=\"" + num("%.2f", ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double t : xt) {
        svg += "<text x=\"" + num("%.2f", px(t)) + "\" y=\"" + num("%.2f", kTop + ph + 16) +
               "\" text-anchor=\"middle\">" + num("%.4g", t) + "</text>\n";
    }
    for (double t : yt) {
        svg += "<text x=\"" + num("%.2f", kLeft - 6) + "\" y=\"" + num("%.2f", py(t) + 4) +
               "\" text-anchor=\"end\">" + num("%.4g", t) + "</text>\n";
    }
    if (!axes.x_label.empty()) {
        svg += "<text x=\"" + num("%.2f", kLeft + pw / 2) + "\" y=\"" + num("%.2f", H - 14) +
               "\" text-anchor=\"middle\">" + escape(axes.x_label) + "</text>\n";
    }
    if (!axes.y_label.empty()) {
        svg += "<text x=\"16\" y=\"" + num("%.2f", kTop + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
               num("%.2f", kTop + ph / 2) + ")\">" + escape(axes.y_label) + "</text>\n";
    }

    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const auto& s = dataset[i];
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(kPalette[i % kPalette.size()]) +
               "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t j = 0; j < s.x.size(); ++j) {
            if (j) svg += ' ';
            svg += num("%.2f", px(s.x[j])) + "," + num("%.2f", py(s.y[j]));
        }
        svg += "\"/>\n";
    }

    // legend
    double ly = kTop + 16;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        if (dataset[i].label.empty()) continue;
        const double lx = kLeft + pw - 150;
        svg += "<line x1=\"" + num("%.2f", lx) + "\" y1=\"" + num("%.2f", ly - 4) + "\" x2=\"" + num("%.2f", lx + 20) +
               "\" y2=\"" + num("%.2f", ly - 4) + "\" stroke=\"" + kPalette[i % kPalette.size()] +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + num("%.2f", lx + 26) + "\" y=\"" + num("%.2f", ly) + "\">" + escape(dataset[i].label) +
               "</text>\n";
        ly += 16;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace qhd::cli
