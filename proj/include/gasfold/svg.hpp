#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gasfold::cli {

/// Minimal self-contained SVG line plot: axes, ticks, labels and a legend.
class SvgPlot {
public:
    SvgPlot(std::string title, std::string xlabel, std::string ylabel)
        : title_(std::move(title)), xlabel_(std::move(xlabel)), ylabel_(std::move(ylabel)) {}

    void add_series(const std::string& name, const std::string& color,
                    std::vector<std::pair<double, double>> points);

    std::string render() const;

private:
    struct Series {
        std::string name;
        std::string color;
        std::vector<std::pair<double, double>> points;
    };
    std::string title_;
    std::string xlabel_;
    std::string ylabel_;
    std::vector<Series> series_;
};

} // namespace gasfold::cli
