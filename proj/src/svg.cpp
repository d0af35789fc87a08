#include "gasfold/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace gasfold::cli {

namespace {

constexpr double W = 820.0, H = 560.0;
constexpr double ML = 70.0, MR = 20.0, MT = 40.0, MB = 55.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string pix(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

double nice_step(double span) {
    if (!(span > 0.0)) return 1.0;
    double raw = span / 6.0;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double frac = raw / mag;
    double step = frac < 1.5 ? 1.0 : frac < 3.5 ? 2.0 : frac < 7.5 ? 5.0 : 10.0;
    return step * mag;
}

} // namespace

void SvgPlot::add_series(const std::string& name, const std::string& color,
                         std::vector<std::pair<double, double>> points) {
    series_.push_back({name, color, std::move(points)});
}

std::string SvgPlot::render() const {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series_)
        for (auto [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (!(xmax > xmin)) {
        xmin -= 1.0;
        xmax += 1.0;
    }
    if (!(ymax > ymin)) {
        ymin -= 1.0;
        ymax += 1.0;
    }
    double xpad = 0.04 * (xmax - xmin), ypad = 0.06 * (ymax - ymin);
    xmin -= xpad;
    xmax += xpad;
    ymin -= ypad;
    ymax += ypad;

    auto X = [&](double x) { return ML + (x - xmin) / (xmax - xmin) * (W - ML - MR); };
    auto Y = [&](double y) { return H - MB - (y - ymin) / (ymax - ymin) * (H - MT - MB); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << W << " " << H
        << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
    svg << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";

    // Axis frame and ticks.
    svg << "<rect x=\"" << ML << "\" y=\"" << MT << "\" width=\"" << (W - ML - MR)
        << "\" height=\"" << (H - MT - MB)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    double xs = nice_step(xmax - xmin);
    for (double x = std::ceil(xmin / xs) * xs; x <= xmax + 1e-12 * xs; x += xs) {
        double px = X(x);
        svg << "<line x1=\"" << pix(px) << "\" y1=\"" << (H - MB) << "\" x2=\"" << pix(px)
            << "\" y2=\"" << MT << "\" stroke=\"#dddddd\" stroke-width=\"0.7\"/>\n";
        svg << "<text x=\"" << pix(px) << "\" y=\"" << (H - MB + 18)
            << "\" text-anchor=\"middle\">" << num(x) << "</text>\n";
    }
    double ys = nice_step(ymax - ymin);
    for (double y = std::ceil(ymin / ys) * ys; y <= ymax + 1e-12 * ys; y += ys) {
        double py = Y(y);
        svg << "<line x1=\"" << ML << "\" y1=\"" << pix(py) << "\" x2=\"" << (W - MR)
            << "\" y2=\"" << pix(py) << "\" stroke=\"#dddddd\" stroke-width=\"0.7\"/>\n";
        svg << "<text x=\"" << (ML - 6) << "\" y=\"" << pix(py + 4)
            << "\" text-anchor=\"end\">" << num(y) << "</text>\n";
    }

    for (const auto& s : series_) {
        if (s.points.empty()) continue;
        svg << "<polyline fill=\"none\" stroke=\"" << s.color
            << "\" stroke-width=\"1.6\" points=\"";
        for (auto [x, y] : s.points) svg << pix(X(x)) << "," << pix(Y(y)) << " ";
        svg << "\"/>\n";
    }

    // Legend.
    double lx = W - MR - 180, ly = MT + 12;
    for (const auto& s : series_) {
        svg << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << (lx + 26) << "\" y2=\""
            << ly << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << (lx + 32) << "\" y=\"" << (ly + 4) << "\">" << s.name
            << "</text>\n";
        ly += 18;
    }

    svg << "<text x=\"" << (W / 2) << "\" y=\"" << (MT - 14)
        << "\" text-anchor=\"middle\" font-size=\"16\">" << title_ << "</text>\n";
    svg << "<text x=\"" << (W / 2) << "\" y=\"" << (H - 12) << "\" text-anchor=\"middle\">"
        << xlabel_ << "</text>\n";
    svg << "<text x=\"16\" y=\"" << (H / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << (H / 2) << ")\">" << ylabel_ << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace gasfold::cli
